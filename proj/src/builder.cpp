#include "krep/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "krep/combinatorics.hpp"
#include "krep/error.hpp"
#include "krep/random.hpp"
#include "parallel.hpp"

namespace krep {

RepParams select_params_from_log(double log_n, std::uint32_t matching_count,
                                 std::uint32_t r, BuildMode mode, double scale) {
  if (!(log_n > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "log n must be positive (n >= 2)");
  if (matching_count < 1)
    throw Error(ErrorCode::kInvalidArgument, "need at least one matching");
  if (r < 3) throw Error(ErrorCode::kInvalidArgument, "uniformity r must be >= 3");
  if (!(scale > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "constant scale must be positive");

  const double L = matching_count;
  RepParams params;
  params.mode = mode;
  params.matching_count = matching_count;
  params.epsilon = 0.5;
  double t_real;
  if (mode == BuildMode::kGeneral) {
    params.m = 2;
    params.p = 1.0 / (4.0 * L);
    t_real = scale * 576.0 * L * L * log_n;
  } else {
    params.m = r;
    params.p = std::pow(4.0 * L, -1.0 / (r - 1));
    t_real = scale * 384.0 * (r + 1) * std::pow(L, double(r) / (r - 1)) * log_n;
  }
  if (!(t_real < 9.0e18))
    throw Error(ErrorCode::kInvalidArgument, "segment size overflows");
  params.t = static_cast<std::uint64_t>(std::ceil(t_real));
  if (mode == BuildMode::kGeneral) {
    // (1 - 1/2) * t / (4L), floored in integers.
    params.k = params.t / (8 * std::uint64_t{matching_count});
  } else {
    params.k = static_cast<std::uint64_t>(
        std::floor((1.0 - params.epsilon) * params.p * static_cast<double>(params.t)));
  }
  if (params.k == 0)
    throw Error(ErrorCode::kParameterUnderflow,
                "threshold k = floor((1 - eps) p t) is 0 for t = " +
                    std::to_string(params.t));
  return params;
}

RepParams select_params(std::uint64_t n, std::uint32_t matching_count,
                        std::uint32_t r, BuildMode mode, double scale) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "need n >= 2");
  return select_params_from_log(std::log(static_cast<double>(n)), matching_count,
                                r, mode, scale);
}

Representation assemble_representation(
    const Hypergraph& graph, const MatchingDecomposition& decomposition,
    const RepParams& params, std::span<const ChernoffFamily> families) {
  if (families.size() != decomposition.size())
    throw Error(ErrorCode::kInvalidArgument, "one family per matching required");
  Representation rep;
  rep.n = graph.num_vertices();
  rep.k = params.k;
  rep.ground_size = params.t * decomposition.size();
  rep.vertex_sets.resize(rep.n);
  for (std::uint32_t i = 0; i < decomposition.size(); ++i) {
    const auto& matching = decomposition.matchings[i];
    if (families[i].sets.size() != matching.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "family " + std::to_string(i) + " does not match its matching");
    const std::uint64_t offset = std::uint64_t{i} * params.t;
    for (std::size_t j = 0; j < matching.size(); ++j)
      for (Vertex v : graph.edge(matching[j])) {
        auto& set = rep.vertex_sets[v];
        for (auto x : families[i].sets[j]) set.push_back(offset + x);
      }
  }
  rep.metadata.mode = params.mode;
  rep.metadata.matching_count = decomposition.size();
  rep.metadata.segment_size = params.t;
  rep.metadata.p = params.p;
  rep.metadata.epsilon = params.epsilon;
  return rep;
}

BuildResult build_representation_with_artifacts(const Hypergraph& graph,
                                                BuildMode mode,
                                                std::uint64_t seed,
                                                const BuildOptions& options) {
  if (graph.num_edges() == 0)
    throw Error(ErrorCode::kInvalidArgument,
                "hypergraph has no edges; all-empty sets with k = 1 represent it");
  if (mode == BuildMode::kLinear && !is_linear(graph))
    throw Error(ErrorCode::kNotLinear, "linear mode requires a linear hypergraph");
  if (options.max_build_retries < 1)
    throw Error(ErrorCode::kInvalidArgument, "max_build_retries must be >= 1");

  BuildResult result;
  result.decomposition = decompose(graph);
  const auto& decomposition = result.decomposition;
  result.params = select_params(graph.num_vertices(), decomposition.size(),
                                graph.rank(), mode, options.constant_scale);
  const RepParams& params = result.params;
  if (params.t > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::kInvalidArgument, "segment size exceeds 2^32 - 1");

  VerificationReport last;
  for (std::uint32_t attempt = 0; attempt < options.max_build_retries; ++attempt) {
    const std::uint64_t attempt_seed = derive_seed(seed, attempt);
    std::vector<ChernoffFamily> families(decomposition.size());
    detail::parallel_for(decomposition.size(), options.threads, [&](std::size_t i) {
      try {
        families[i] = gen_verified_family(decomposition.matchings[i].size(),
                                          params.family(),
                                          derive_seed(attempt_seed, i),
                                          options.max_family_retries);
      } catch (const Error& e) {
        throw Error(e.code(), "matching " + std::to_string(i) + ": " + e.what());
      }
    });

    Representation rep =
        assemble_representation(graph, decomposition, params, families);
    rep.metadata.seed = seed;
    rep.metadata.constant_scale = options.constant_scale;
    rep.metadata.build_attempts = attempt + 1;
    for (const auto& family : families)
      rep.metadata.family_attempts.push_back(family.attempts);

    if (options.verify) {
      VerifyOptions verify_options;
      verify_options.threads = options.threads;
      last = verify_representation(graph, rep, verify_options);
      if (!last.valid) continue;
      result.report = last;
    }
    result.representation = std::move(rep);
    result.families = std::move(families);
    return result;
  }
  throw Error(ErrorCode::kRetriesExhausted,
              "no valid representation after " +
                  std::to_string(options.max_build_retries) +
                  " build attempts; last verification:\n" + format_report(last));
}

Representation build_representation(const Hypergraph& graph, BuildMode mode,
                                    std::uint64_t seed,
                                    const BuildOptions& options) {
  return build_representation_with_artifacts(graph, mode, seed, options)
      .representation;
}

namespace {

void check_tuple_shape(const Hypergraph& graph, std::span<const Vertex> tuple) {
  if (tuple.size() != graph.rank())
    throw Error(ErrorCode::kInvalidArgument,
                "tuple has " + std::to_string(tuple.size()) + " vertices, expected " +
                    std::to_string(graph.rank()));
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= graph.num_vertices())
      throw Error(ErrorCode::kInvalidArgument, "tuple vertex out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (tuple[i] == tuple[j])
        throw Error(ErrorCode::kInvalidArgument, "tuple repeats a vertex");
  }
}

bool meets(const Edge& edge, std::span<const Vertex> tuple) {
  return std::any_of(tuple.begin(), tuple.end(), [&](Vertex v) {
    return std::binary_search(edge.begin(), edge.end(), v);
  });
}

// Position within M_i of the edge holding v, if any.
std::optional<std::size_t> holder(const Hypergraph& graph,
                                  const std::vector<std::size_t>& matching,
                                  Vertex v) {
  for (std::size_t j = 0; j < matching.size(); ++j) {
    const Edge& e = graph.edge(matching[j]);
    if (std::binary_search(e.begin(), e.end(), v)) return j;
  }
  return std::nullopt;
}

}  // namespace

TupleClass classify_tuple(const Hypergraph& graph,
                          const MatchingDecomposition& decomposition,
                          std::span<const Vertex> tuple) {
  check_tuple_shape(graph, tuple);
  TupleClass result;
  result.tuple.assign(tuple.begin(), tuple.end());
  std::sort(result.tuple.begin(), result.tuple.end());
  for (std::uint32_t i = 0; i < decomposition.size(); ++i) {
    const auto& matching = decomposition.matchings[i];
    MatchingStats stats;
    for (std::size_t e : matching) stats.hits += meets(graph.edge(e), tuple);
    stats.covered = std::all_of(tuple.begin(), tuple.end(), [&](Vertex v) {
      return holder(graph, matching, v).has_value();
    });
    (stats.covered ? result.covered : result.uncovered).push_back(i);
    result.per_matching.push_back(stats);
  }
  return result;
}

PropositionReport check_proposition_bounds(
    const Hypergraph& graph, const MatchingDecomposition& decomposition,
    std::span<const ChernoffFamily> families, std::span<const Vertex> tuple) {
  const TupleClass cls = classify_tuple(graph, decomposition, tuple);
  if (families.size() != decomposition.size())
    throw Error(ErrorCode::kInvalidArgument, "one family per matching required");
  PropositionReport report;
  const auto edge_index = graph.find_edge(cls.tuple);
  report.is_edge = edge_index.has_value();

  for (std::uint32_t i = 0; i < decomposition.size(); ++i) {
    const auto& matching = decomposition.matchings[i];
    const FamilyParams& fp = families[i].params;
    SegmentCheck check;
    check.matching = i;
    check.hits = cls.per_matching[i].hits;
    check.covered = cls.per_matching[i].covered;

    // Distinct R(v_j, i); an uncovered vertex contributes the empty set.
    std::vector<std::size_t> members;
    bool empty = false;
    for (Vertex v : cls.tuple) {
      const auto j = holder(graph, matching, v);
      if (!j) {
        empty = true;
        break;
      }
      members.push_back(*j);
    }
    if (!empty) {
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      std::vector<std::uint32_t> acc = families[i].sets[members[0]], next;
      for (std::size_t q = 1; q < members.size(); ++q) {
        const auto& other = families[i].sets[members[q]];
        next.clear();
        std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        acc.swap(next);
      }
      check.value = acc.size();
    }
    const double t = static_cast<double>(fp.t);
    if (report.is_edge) {
      if (decomposition.assignment[*edge_index] == i) {
        check.bound = (1.0 - fp.epsilon) * fp.p * t;
        check.ok = static_cast<double>(check.value) >= check.bound;
      } else {
        check.bound = std::numeric_limits<double>::infinity();
      }
    } else if (!check.covered) {
      check.bound = 0.0;
      check.ok = check.value == 0;
    } else {
      const std::uint32_t order = std::min(check.hits, fp.m);
      check.bound = (1.0 + fp.epsilon) * std::pow(fp.p, order) * t;
      check.ok = check.hits >= 2 && static_cast<double>(check.value) <= check.bound;
    }
    report.total += check.value;
    report.ok = report.ok && check.ok;
    report.segments.push_back(check);
  }
  return report;
}

double check_linear_ratio(std::uint32_t matching_count, std::uint32_t r,
                          double epsilon) {
  const double L = matching_count;
  const double p = std::pow(4.0 * L, -1.0 / (r - 1));
  // L p^(r-1) = 1/4 exactly.
  return (1.0 + epsilon) / (1.0 - epsilon) * (0.25 + binomial(r, 2) * p);
}

double linear_ratio_exact(std::uint32_t matching_count, std::uint32_t r,
                          double epsilon) {
  const double L = matching_count;
  const double pairs = binomial(r, 2);
  const double p = std::pow(4.0 * L, -1.0 / (r - 1));
  return (1.0 + epsilon) / (1.0 - epsilon) *
         ((L - pairs) / (4.0 * L) + pairs * p);
}

}  // namespace krep

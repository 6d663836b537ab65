#include "krep/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "krep/combinatorics.hpp"
#include "krep/error.hpp"
#include "krep/random.hpp"
#include "parallel.hpp"

namespace krep {

namespace {

using Elements = std::vector<std::uint64_t>;

void check_tuple(const Representation& rep, std::span<const Vertex> tuple) {
  if (tuple.empty()) throw Error(ErrorCode::kInvalidArgument, "empty tuple");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] >= rep.n)
      throw Error(ErrorCode::kInvalidArgument, "tuple vertex out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (tuple[i] == tuple[j])
        throw Error(ErrorCode::kInvalidArgument, "tuple repeats a vertex");
  }
}

void check_shapes(const Hypergraph& graph, const Representation& rep) {
  if (rep.n != graph.num_vertices())
    throw Error(ErrorCode::kInvalidArgument,
                "representation has " + std::to_string(rep.n) +
                    " vertices, hypergraph has " +
                    std::to_string(graph.num_vertices()));
  if (rep.vertex_sets.size() != rep.n)
    throw Error(ErrorCode::kInvalidArgument, "representation is missing vertex sets");
}

// Accumulates tuple outcomes in the order they are offered.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::size_t limit) : limit_(limit) {}

  void add(std::span<const Vertex> tuple, std::uint64_t count, bool is_edge,
           std::uint64_t k) {
    ++report_.checked_tuples;
    if (is_edge)
      report_.min_edge_count = std::min(report_.min_edge_count, count);
    else
      report_.max_non_edge_count = std::max(report_.max_non_edge_count, count);
    if ((count >= k) == is_edge) return;
    ++report_.violation_count;
    if (report_.violations.size() < limit_)
      report_.violations.push_back(
          {std::vector<Vertex>(tuple.begin(), tuple.end()), count, is_edge});
  }

  void merge(const VerificationReport& part) {
    report_.checked_tuples += part.checked_tuples;
    report_.violation_count += part.violation_count;
    report_.min_edge_count = std::min(report_.min_edge_count, part.min_edge_count);
    report_.max_non_edge_count =
        std::max(report_.max_non_edge_count, part.max_non_edge_count);
    for (const auto& v : part.violations)
      if (report_.violations.size() < limit_) report_.violations.push_back(v);
  }

  VerificationReport finish(bool exhaustive) {
    report_.exhaustive = exhaustive;
    report_.valid = report_.violation_count == 0;
    return std::move(report_);
  }

 private:
  std::size_t limit_;
  VerificationReport report_;
};

// Enumerates all tuples with a fixed first vertex, reusing the intersection
// of each prefix. With bit vectors the extension step is a membership test
// per prefix element; otherwise a sorted merge.
class TupleWalker {
 public:
  TupleWalker(const Hypergraph& graph, const Representation& rep,
              const std::vector<std::vector<std::uint64_t>>* bits,
              ReportBuilder& out)
      : graph_(graph), rep_(rep), bits_(bits), out_(out),
        r_(graph.rank()), tuple_(graph.rank()), prefixes_(graph.rank()) {}

  void run(Vertex first) {
    tuple_[0] = first;
    prefixes_[0] = rep_.vertex_sets[first];
    extend(1);
  }

 private:
  void extend(std::uint32_t depth) {
    const std::uint32_t n = rep_.n;
    const Elements& prefix = prefixes_[depth - 1];
    for (Vertex v = tuple_[depth - 1] + 1; n - v >= r_ - depth; ++v) {
      tuple_[depth] = v;
      if (depth + 1 == r_) {
        const std::uint64_t count = count_with(prefix, v);
        out_.add(tuple_, count, graph_.contains(tuple_), rep_.k);
      } else {
        narrow(prefix, v, prefixes_[depth]);
        extend(depth + 1);
      }
    }
  }

  bool has(Vertex v, std::uint64_t x) const {
    return ((*bits_)[v][x >> 6] >> (x & 63)) & 1u;
  }

  std::uint64_t count_with(const Elements& prefix, Vertex v) const {
    std::uint64_t count = 0;
    if (bits_) {
      for (auto x : prefix) count += has(v, x);
      return count;
    }
    const Elements& other = rep_.vertex_sets[v];
    auto a = prefix.begin();
    auto b = other.begin();
    while (a != prefix.end() && b != other.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count, ++a, ++b;
      }
    }
    return count;
  }

  void narrow(const Elements& prefix, Vertex v, Elements& out) const {
    out.clear();
    if (bits_) {
      for (auto x : prefix)
        if (has(v, x)) out.push_back(x);
      return;
    }
    const Elements& other = rep_.vertex_sets[v];
    std::set_intersection(prefix.begin(), prefix.end(), other.begin(),
                          other.end(), std::back_inserter(out));
  }

  const Hypergraph& graph_;
  const Representation& rep_;
  const std::vector<std::vector<std::uint64_t>>* bits_;
  ReportBuilder& out_;
  std::uint32_t r_;
  std::vector<Vertex> tuple_;
  std::vector<Elements> prefixes_;
};

}  // namespace

std::uint64_t intersection_count(const Representation& rep,
                                 std::span<const Vertex> tuple) {
  check_tuple(rep, tuple);
  std::vector<const Elements*> sets;
  for (Vertex v : tuple) sets.push_back(&rep.vertex_sets.at(v));
  std::sort(sets.begin(), sets.end(),
            [](const Elements* a, const Elements* b) { return a->size() < b->size(); });
  std::vector<Elements::const_iterator> cursors;
  for (const auto* s : sets) cursors.push_back(s->begin());

  std::uint64_t count = 0;
  for (auto x : *sets[0]) {
    bool in_all = true;
    for (std::size_t i = 1; i < sets.size(); ++i) {
      cursors[i] = std::lower_bound(cursors[i], sets[i]->end(), x);
      if (cursors[i] == sets[i]->end()) return count;
      if (*cursors[i] != x) {
        in_all = false;
        break;
      }
    }
    count += in_all;
  }
  return count;
}

VerificationReport verify_representation(const Hypergraph& graph,
                                         const Representation& rep,
                                         const VerifyOptions& options) {
  check_shapes(graph, rep);
  const std::uint32_t n = rep.n, r = graph.rank();
  ReportBuilder total(options.violation_limit);
  if (n < r) return total.finish(true);

  std::vector<std::vector<std::uint64_t>> bits;
  const bool dense =
      rep.ground_size > 0 &&
      static_cast<double>(n) * static_cast<double>(rep.ground_size) / 8.0 <=
          static_cast<double>(options.dense_budget_bytes);
  if (dense) {
    bits.assign(n, std::vector<std::uint64_t>((rep.ground_size + 63) / 64, 0));
    for (std::uint32_t v = 0; v < n; ++v)
      for (auto x : rep.vertex_sets[v]) {
        if (x >= rep.ground_size)
          throw Error(ErrorCode::kInvalidArgument, "element outside the ground set");
        bits[v][x >> 6] |= std::uint64_t{1} << (x & 63);
      }
  }

  const std::uint32_t firsts = n - r + 1;
  std::vector<VerificationReport> parts(firsts);
  detail::parallel_for(firsts, options.threads, [&](std::size_t i) {
    ReportBuilder part(options.violation_limit);
    TupleWalker walker(graph, rep, dense ? &bits : nullptr, part);
    walker.run(static_cast<Vertex>(i));
    parts[i] = part.finish(true);
  });
  for (const auto& part : parts) total.merge(part);
  return total.finish(true);
}

VerificationReport sampled_verify(const Hypergraph& graph,
                                  const Representation& rep,
                                  std::uint64_t sample_count, std::uint64_t seed,
                                  const VerifyOptions& options) {
  if (sample_count < 1)
    throw Error(ErrorCode::kInvalidArgument, "sample count must be at least 1");
  check_shapes(graph, rep);
  const std::uint32_t n = rep.n, r = graph.rank();
  const std::uint64_t all = binomial_u64(n, r);
  const std::uint64_t non_edges = all - graph.num_edges();

  if (sample_count >= non_edges) return verify_representation(graph, rep, options);
  std::set<std::vector<Vertex>> tuples(graph.edges().begin(), graph.edges().end());
  RandomStream rng(seed);
  std::vector<Vertex> pool(n);
  for (Vertex v = 0; v < n; ++v) pool[v] = v;
  std::uint64_t sampled = 0;
  if (sample_count * 2 >= non_edges) {
    // Dense regime: list every non-edge and pick a uniform subset.
    std::vector<std::vector<Vertex>> candidates;
    for_each_subset(n, r, [&](std::span<const Vertex> t) {
      if (!graph.contains(t)) candidates.emplace_back(t.begin(), t.end());
      return true;
    });
    for (std::uint64_t i = 0; i < sample_count; ++i) {
      const auto j = i + rng.uniform_below(candidates.size() - i);
      std::swap(candidates[i], candidates[j]);
      tuples.insert(candidates[i]);
    }
  } else {
    while (sampled < sample_count) {
      for (std::uint32_t i = 0; i < r; ++i)
        std::swap(pool[i], pool[i + rng.uniform_below(n - i)]);
      std::vector<Vertex> tuple(pool.begin(), pool.begin() + r);
      std::sort(tuple.begin(), tuple.end());
      if (graph.contains(tuple)) continue;
      if (tuples.insert(std::move(tuple)).second) ++sampled;
    }
  }

  ReportBuilder out(options.violation_limit);
  for (const auto& tuple : tuples)
    out.add(tuple, intersection_count(rep, tuple), graph.contains(tuple), rep.k);
  return out.finish(false);
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "RESULT valid " << (report.valid ? 1 : 0) << '\n'
      << "RESULT exhaustive " << (report.exhaustive ? 1 : 0) << '\n'
      << "RESULT checkedTuples " << report.checked_tuples << '\n'
      << "RESULT violations " << report.violation_count << '\n'
      << "RESULT minEdgeCount ";
  if (report.min_edge_count == std::numeric_limits<std::uint64_t>::max())
    out << "none";
  else
    out << report.min_edge_count;
  out << '\n' << "RESULT maxNonEdgeCount " << report.max_non_edge_count << '\n';
  for (const auto& v : report.violations) {
    out << "VIOLATION";
    for (auto x : v.tuple) out << ' ' << x;
    out << ' ' << v.count << ' ' << (v.is_edge ? "edge" : "nonedge") << '\n';
  }
  return out.str();
}

}  // namespace krep

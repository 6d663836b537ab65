#include "krep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "krep/combinatorics.hpp"
#include "krep/error.hpp"

namespace krep {

namespace {

constexpr std::uint32_t kHardVertexLimit = 20;

Support mask_of(std::span<const Vertex> vertices) {
  Support mask = 0;
  for (Vertex v : vertices) mask |= Support{1} << v;
  return mask;
}

// Searches multisets of exactly t candidate supports, taken in
// nonincreasing candidate order, for one whose containment counts reach k on
// every edge and stay below k on every non-edge.
class SupportSearch {
 public:
  SupportSearch(const Hypergraph& graph, bool cliques_only) {
    const std::uint32_t n = graph.num_vertices(), r = graph.rank();
    for_each_subset(n, r, [&](std::span<const Vertex> tuple) {
      tuples_.push_back(mask_of(tuple));
      is_edge_.push_back(graph.contains(tuple));
      return true;
    });
    for (std::size_t i = 0; i < tuples_.size(); ++i)
      if (is_edge_[i]) edges_.push_back(i);

    const Support full = n == 32 ? ~Support{0} : (Support{1} << n) - 1;
    for (Support s = full;; --s) {
      if (static_cast<std::uint32_t>(std::popcount(s)) >= r) {
        std::vector<std::uint32_t> covered;
        bool clique = true;
        for (std::size_t i = 0; i < tuples_.size(); ++i)
          if ((tuples_[i] & ~s) == 0) {
            covered.push_back(static_cast<std::uint32_t>(i));
            clique = clique && is_edge_[i];
          }
        if (!cliques_only || clique) {
          candidates_.push_back(s);
          coverage_.push_back(std::move(covered));
        }
      }
      if (s == 0) break;
    }
    // last_cover_[e]: largest candidate index covering edges_[e].
    last_cover_.assign(edges_.size(), -1);
    for (std::size_t c = 0; c < candidates_.size(); ++c)
      for (std::uint32_t tuple : coverage_[c])
        for (std::size_t e = 0; e < edges_.size(); ++e)
          if (edges_[e] == tuple) last_cover_[e] = static_cast<long>(c);
    for (const auto& cov : coverage_) {
      std::size_t edge_hits = 0;
      for (auto tuple : cov) edge_hits += is_edge_[tuple];
      max_edge_cover_ = std::max(max_edge_cover_, edge_hits);
    }
  }

  bool has_edges() const { return !edges_.empty(); }

  bool find(std::uint32_t t, std::uint64_t k) {
    k_ = k;
    t_ = t;
    counts_.assign(tuples_.size(), 0);
    chosen_.clear();
    return descend(0);
  }

  const std::vector<Support>& witness() const { return chosen_; }

  std::uint64_t max_non_edge_count() const {
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < tuples_.size(); ++i)
      if (!is_edge_[i]) best = std::max<std::uint64_t>(best, counts_[i]);
    return best;
  }

 private:
  bool feasible(std::size_t start) const {
    const std::uint64_t remaining = t_ - chosen_.size();
    std::uint64_t total_deficit = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const std::uint64_t have = counts_[edges_[e]];
      if (have >= k_) continue;
      const std::uint64_t deficit = k_ - have;
      if (deficit > remaining) return false;
      if (last_cover_[e] < static_cast<long>(start)) return false;
      total_deficit += deficit;
    }
    return total_deficit <= remaining * max_edge_cover_;
  }

  bool descend(std::size_t start) {
    if (chosen_.size() == t_) {
      return std::all_of(edges_.begin(), edges_.end(),
                         [&](std::size_t e) { return counts_[e] >= k_; });
    }
    if (!feasible(start)) return false;
    for (std::size_t c = start; c < candidates_.size(); ++c) {
      bool blocked = false;
      for (auto tuple : coverage_[c])
        if (!is_edge_[tuple] && counts_[tuple] + 1 >= k_) blocked = true;
      if (blocked) continue;
      for (auto tuple : coverage_[c]) ++counts_[tuple];
      chosen_.push_back(candidates_[c]);
      if (descend(c)) return true;
      chosen_.pop_back();
      for (auto tuple : coverage_[c]) --counts_[tuple];
    }
    return false;
  }

  std::vector<Support> tuples_;
  std::vector<bool> is_edge_;
  std::vector<std::size_t> edges_;
  std::vector<Support> candidates_;
  std::vector<std::vector<std::uint32_t>> coverage_;
  std::vector<long> last_cover_;
  std::size_t max_edge_cover_ = 0;

  std::uint64_t k_ = 1;
  std::uint32_t t_ = 0;
  std::vector<std::uint64_t> counts_;
  std::vector<Support> chosen_;
};

void check_limits(const Hypergraph& graph, const OracleLimits& limits) {
  const std::uint32_t cap = std::min(limits.max_vertices, kHardVertexLimit);
  if (graph.num_vertices() > cap)
    throw Error(ErrorCode::kCapExceeded,
                "exact search is limited to " + std::to_string(cap) +
                    " vertices, got " + std::to_string(graph.num_vertices()));
}

[[noreturn]] void cap_exceeded(const OracleLimits& limits) {
  throw Error(ErrorCode::kCapExceeded,
              "no representation with at most " + std::to_string(limits.max_t) +
                  " elements");
}

}  // namespace

OracleResult theta_k_exact(const Hypergraph& graph, std::uint64_t k,
                           const OracleLimits& limits) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  check_limits(graph, limits);
  OracleResult result;
  result.limits = limits;
  result.witness_k = k;
  if (graph.num_edges() == 0) return result;

  SupportSearch search(graph, k == 1 && limits.restrict_k1_to_cliques);
  for (std::uint32_t t = 1; t <= limits.max_t; ++t) {
    if (k > t) continue;
    if (search.find(t, k)) {
      result.value = t;
      result.witness_supports = search.witness();
      return result;
    }
  }
  cap_exceeded(limits);
}

OracleResult theta_tilde_exact(const Hypergraph& graph,
                               const OracleLimits& limits) {
  check_limits(graph, limits);
  OracleResult result;
  result.limits = limits;
  result.witness_k = 1;
  if (graph.num_edges() == 0) return result;

  SupportSearch cliques(graph, limits.restrict_k1_to_cliques);
  SupportSearch full(graph, false);
  for (std::uint32_t t = 1; t <= limits.max_t; ++t) {
    for (std::uint64_t k = 1; k <= t; ++k) {
      SupportSearch& search = k == 1 ? cliques : full;
      if (search.find(t, k)) {
        result.value = t;
        result.witness_supports = search.witness();
        result.witness_k = search.max_non_edge_count() + 1;
        return result;
      }
    }
  }
  cap_exceeded(limits);
}

Representation witness_representation(const Hypergraph& graph,
                                      const OracleResult& result) {
  Representation rep;
  rep.n = graph.num_vertices();
  rep.k = result.witness_k;
  rep.ground_size = result.witness_supports.size();
  rep.vertex_sets.resize(rep.n);
  for (std::size_t j = 0; j < result.witness_supports.size(); ++j)
    for (Vertex v = 0; v < rep.n; ++v)
      if ((result.witness_supports[j] >> v) & 1u) rep.vertex_sets[v].push_back(j);
  return rep;
}

std::string format_oracle_result(const OracleResult& result,
                                 std::uint32_t num_vertices) {
  std::ostringstream out;
  out << "RESULT value " << result.value << '\n'
      << "RESULT witnessK " << result.witness_k << '\n';
  for (Support s : result.witness_supports) {
    out << "SUPPORT";
    for (Vertex v = 0; v < num_vertices; ++v)
      if ((s >> v) & 1u) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace krep

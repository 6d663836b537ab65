#include "krep/matching.hpp"

#include <algorithm>
#include <sstream>

namespace krep {

MatchingDecomposition decompose(const Hypergraph& graph) {
  const std::size_t m = graph.num_edges();
  const auto incidence = graph.incidence();
  constexpr std::uint32_t kUncolored = UINT32_MAX;

  MatchingDecomposition result;
  result.assignment.assign(m, kUncolored);
  // seen[c] == e + 1 marks color c as taken by a neighbor of edge e.
  std::vector<std::size_t> seen;
  for (std::size_t e = 0; e < m; ++e) {
    for (Vertex v : graph.edge(e))
      for (std::size_t f : incidence[v]) {
        const std::uint32_t color = result.assignment[f];
        if (f == e || color == kUncolored) continue;
        if (color >= seen.size()) seen.resize(color + 1, 0);
        seen[color] = e + 1;
      }
    std::uint32_t color = 0;
    while (color < seen.size() && seen[color] == e + 1) ++color;
    result.assignment[e] = color;
    if (color >= result.matchings.size()) result.matchings.resize(color + 1);
    result.matchings[color].push_back(e);
  }
  return result;
}

bool verify_decomposition(const Hypergraph& graph,
                          const MatchingDecomposition& decomposition) {
  const std::size_t m = graph.num_edges();
  if (decomposition.assignment.size() != m) return false;
  std::vector<int> occurrences(m, 0);
  std::vector<std::size_t> owner(graph.num_vertices());
  for (std::uint32_t i = 0; i < decomposition.size(); ++i) {
    std::fill(owner.begin(), owner.end(), SIZE_MAX);
    for (std::size_t e : decomposition.matchings[i]) {
      if (e >= m || decomposition.assignment[e] != i) return false;
      ++occurrences[e];
      for (Vertex v : graph.edge(e)) {
        if (owner[v] != SIZE_MAX) return false;
        owner[v] = e;
      }
    }
  }
  return std::all_of(occurrences.begin(), occurrences.end(),
                     [](int c) { return c == 1; });
}

std::string format_decomposition(const MatchingDecomposition& decomposition) {
  std::ostringstream out;
  out << decomposition.size() << '\n';
  for (std::size_t e = 0; e < decomposition.assignment.size(); ++e)
    out << e << ' ' << decomposition.assignment[e] << '\n';
  return out.str();
}

}  // namespace krep

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krep/hypergraph.hpp"

namespace krep {

// Partition of E(G) into matchings M_0 .. M_{L-1}.
struct MatchingDecomposition {
  // assignment[e] is the matching holding edge index e of the source graph.
  std::vector<std::uint32_t> assignment;
  // matchings[i] lists edge indices of M_i in ascending order.
  std::vector<std::vector<std::size_t>> matchings;

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(matchings.size());
  }
};

// Greedy proper coloring of the edge-intersection graph: edges in canonical
// order, each takes the smallest color not used by an already colored edge
// it meets. Uses at most (max_degree - 1) * r + 1 colors.
MatchingDecomposition decompose(const Hypergraph& graph);

// True iff `decomposition` partitions E(graph) into matchings.
bool verify_decomposition(const Hypergraph& graph,
                          const MatchingDecomposition& decomposition);

// .dec text dump: "L" followed by one "<edge index> <matching index>" line
// per edge.
std::string format_decomposition(const MatchingDecomposition& decomposition);

}  // namespace krep

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krep/hypergraph.hpp"
#include "krep/representation.hpp"

namespace krep {

struct OracleLimits {
  std::uint32_t max_vertices = 8;
  std::uint32_t max_t = 8;
  // k = 1 searches only supports whose r-subsets are all edges.
  bool restrict_k1_to_cliques = true;
};

// A ground element is identified with its support, the set of vertices
// whose S_v contains it; |intersection over T| is then the number of
// supports containing T.
using Support = std::uint32_t;  // vertex bitmask

struct OracleResult {
  std::uint32_t value = 0;
  std::uint64_t witness_k = 1;
  std::vector<Support> witness_supports;  // nonincreasing
  OracleLimits limits;
};

// Smallest t admitting t supports that k-represent `graph`. Iterative
// deepening on t over multisets of supports in nonincreasing order.
// Throws kCapExceeded past limits.max_t or when the graph has more than
// limits.max_vertices vertices (never more than 20), kInvalidArgument for k = 0.
OracleResult theta_k_exact(const Hypergraph& graph, std::uint64_t k,
                           const OracleLimits& limits = {});

// Smallest t for which some k works. witness_k is one more than the largest
// non-edge count of the witness.
OracleResult theta_tilde_exact(const Hypergraph& graph,
                               const OracleLimits& limits = {});

// S_v = { j : v in witness_supports[j] }, threshold witness_k.
Representation witness_representation(const Hypergraph& graph,
                                      const OracleResult& result);

std::string format_oracle_result(const OracleResult& result,
                                 std::uint32_t num_vertices);

}  // namespace krep

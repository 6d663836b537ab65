#pragma once

#include <cstdint>

#include "krep/hypergraph.hpp"
#include "krep/representation.hpp"

namespace krep {

struct BoundConstants {
  static constexpr std::uint64_t kA = 577;
  static constexpr double kEpsilon = 0.5;

  // C_r = r^3 (r + 1) A.
  static constexpr std::uint64_t c(std::uint64_t r) {
    return r * r * r * (r + 1) * kA;
  }
};

// C_r delta^3 ln n, or C_r delta^(2 + 1/(r-1)) ln n for linear graphs.
double theorem1_bound(std::uint64_t n, std::uint64_t delta, std::uint64_t r,
                      bool linear);

// rep.ground_size <= theorem1_bound for rep's mode, with delta the maximum
// degree of `graph`. Throws kInvalidArgument unless rep was built at scale 1.
bool check_size_against_bound(const Representation& rep,
                              const Hypergraph& graph);

}  // namespace krep

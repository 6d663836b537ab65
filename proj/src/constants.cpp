#include "krep/constants.hpp"

#include <cmath>

#include "krep/error.hpp"

namespace krep {

double theorem1_bound(std::uint64_t n, std::uint64_t delta, std::uint64_t r,
                      bool linear) {
  if (n < 2 || delta < 1 || r < 3)
    throw Error(ErrorCode::kInvalidArgument, "need n >= 2, delta >= 1, r >= 3");
  const double exponent = linear ? 2.0 + 1.0 / static_cast<double>(r - 1) : 3.0;
  return static_cast<double>(BoundConstants::c(r)) *
         std::pow(static_cast<double>(delta), exponent) *
         std::log(static_cast<double>(n));
}

bool check_size_against_bound(const Representation& rep,
                              const Hypergraph& graph) {
  if (rep.metadata.constant_scale != 1.0)
    throw Error(ErrorCode::kInvalidArgument,
                "size bound applies only to representations built at scale 1");
  const auto delta = degree_profile(graph).max_degree;
  const bool linear = rep.metadata.mode == BuildMode::kLinear;
  return static_cast<double>(rep.ground_size) <=
         theorem1_bound(graph.num_vertices(), delta, graph.rank(), linear);
}

}  // namespace krep

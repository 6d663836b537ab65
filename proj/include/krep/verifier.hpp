#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "krep/hypergraph.hpp"
#include "krep/representation.hpp"

namespace krep {

struct TupleViolation {
  std::vector<Vertex> tuple;
  std::uint64_t count = 0;
  bool is_edge = false;
};

struct VerificationReport {
  bool valid = true;
  bool exhaustive = true;
  std::uint64_t checked_tuples = 0;
  std::uint64_t violation_count = 0;
  std::vector<TupleViolation> violations;  // lexicographic, capped
  // Minimum count over edges (max value when there are none) and maximum
  // count over checked non-edges (0 when there are none).
  std::uint64_t min_edge_count = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_non_edge_count = 0;
};

struct VerifyOptions {
  std::size_t violation_limit = 100;
  unsigned threads = 1;
  // Per-vertex bit vectors are used when n * ground_size / 8 fits.
  std::uint64_t dense_budget_bytes = std::uint64_t{1} << 29;
};

// |intersection of S_v over v in tuple|, by an r-way merge that starts from
// the smallest set.
std::uint64_t intersection_count(const Representation& rep,
                                 std::span<const Vertex> tuple);

// Checks all C(n, r) tuples in lexicographic order.
VerificationReport verify_representation(const Hypergraph& graph,
                                         const Representation& rep,
                                         const VerifyOptions& options = {});

// Checks every edge and `sample_count` distinct uniformly random non-edges
// (all of them when there are no more than that).
VerificationReport sampled_verify(const Hypergraph& graph,
                                  const Representation& rep,
                                  std::uint64_t sample_count, std::uint64_t seed,
                                  const VerifyOptions& options = {});

std::string format_report(const VerificationReport& report);

}  // namespace krep

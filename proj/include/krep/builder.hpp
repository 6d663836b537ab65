#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "krep/chernoff.hpp"
#include "krep/hypergraph.hpp"
#include "krep/matching.hpp"
#include "krep/representation.hpp"
#include "krep/verifier.hpp"

namespace krep {

struct RepParams {
  BuildMode mode = BuildMode::kGeneral;
  std::uint32_t matching_count = 0;  // L
  std::uint32_t m = 2;
  double p = 0.0;
  double epsilon = 0.5;
  std::uint64_t t = 0;
  std::uint64_t k = 0;

  FamilyParams family() const { return {t, p, epsilon, m}; }
};

// Segment size and threshold for L matchings on n vertices.
//   general: m = 2, p = 1/(4L),             t = ceil(576 L^2 ln n)
//   linear:  m = r, p = (1/(4L))^(1/(r-1)), t = ceil(384 (r+1) L^(r/(r-1)) ln n)
// with epsilon = 1/2 and k = floor((1 - epsilon) p t). `scale` multiplies
// t before rounding. Throws kInvalidArgument unless n >= 2, L >= 1, r >= 3,
// and kParameterUnderflow if k comes out 0.
RepParams select_params(std::uint64_t n, std::uint32_t matching_count,
                        std::uint32_t r, BuildMode mode, double scale = 1.0);
// Same, with ln n supplied directly.
RepParams select_params_from_log(double log_n, std::uint32_t matching_count,
                                 std::uint32_t r, BuildMode mode,
                                 double scale = 1.0);

struct BuildOptions {
  std::uint32_t max_family_retries = 100;
  std::uint32_t max_build_retries = 10;
  double constant_scale = 1.0;
  // When false the assembled representation is returned unverified.
  bool verify = true;
  unsigned threads = 1;
};

struct BuildResult {
  Representation representation;
  MatchingDecomposition decomposition;
  RepParams params;
  std::vector<ChernoffFamily> families;  // families[i] indexes M_i's edges
  VerificationReport report;             // empty when verify = false
};

// Decompose, pick parameters from the actual L, draw certified families per
// matching (seed derived from the attempt seed and i), lay the segments out
// side by side and verify. Verification failures trigger a rebuild from a
// re-derived seed, up to max_build_retries attempts.
BuildResult build_representation_with_artifacts(const Hypergraph& graph,
                                                BuildMode mode,
                                                std::uint64_t seed,
                                                const BuildOptions& options = {});
Representation build_representation(const Hypergraph& graph, BuildMode mode,
                                    std::uint64_t seed,
                                    const BuildOptions& options = {});

// Places R_e, for e in M_i, at offset i * t for every vertex of e.
Representation assemble_representation(
    const Hypergraph& graph, const MatchingDecomposition& decomposition,
    const RepParams& params, std::span<const ChernoffFamily> families);

struct MatchingStats {
  std::uint32_t hits = 0;  // a_i: edges of M_i meeting the tuple
  bool covered = false;    // tuple inside the union of M_i's edges
};

struct TupleClass {
  std::vector<Vertex> tuple;
  std::vector<MatchingStats> per_matching;
  std::vector<std::uint32_t> uncovered;  // I1
  std::vector<std::uint32_t> covered;    // I2
};

TupleClass classify_tuple(const Hypergraph& graph,
                          const MatchingDecomposition& decomposition,
                          std::span<const Vertex> tuple);

struct SegmentCheck {
  std::uint32_t matching = 0;
  std::uint32_t hits = 0;
  bool covered = false;
  std::uint64_t value = 0;  // |intersection of R(v_j, i)|
  double bound = 0.0;       // lower bound for the edge's own matching,
                            // upper bound otherwise
  bool ok = true;
};

struct PropositionReport {
  bool is_edge = false;
  bool ok = true;
  std::vector<SegmentCheck> segments;
  std::uint64_t total = 0;  // sum of values over segments
};

// Per-segment intersection sizes computed from the families, checked against
// the edge bound (1 - eps) p t, zero on uncovering matchings, and
// (1 + eps) p^min(a_i, m) t on covering ones.
PropositionReport check_proposition_bounds(
    const Hypergraph& graph, const MatchingDecomposition& decomposition,
    std::span<const ChernoffFamily> families, std::span<const Vertex> tuple);

// ((1 + eps) / (1 - eps)) * (L p^(r-1) + C(r,2) p) with p = (4L)^(-1/(r-1)),
// the non-edge/edge ratio bound of the linear construction. Below 5/6 once L
// is large enough.
double check_linear_ratio(std::uint32_t matching_count, std::uint32_t r,
                          double epsilon);
// The tighter form with (L - C(r,2)) in place of L.
double linear_ratio_exact(std::uint32_t matching_count, std::uint32_t r,
                          double epsilon);

}  // namespace krep

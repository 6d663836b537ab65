#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace krep {

struct FamilyParams {
  std::uint64_t t = 0;  // segment size
  double p = 0.0;       // inclusion probability
  double epsilon = 0.5;
  std::uint32_t m = 2;  // largest intersection order certified
};

// Members are sorted element lists over [0, t).
struct ChernoffFamily {
  FamilyParams params;
  std::vector<std::vector<std::uint32_t>> sets;
  std::uint64_t seed = 0;      // seed of the sample that was kept
  std::uint32_t attempts = 1;  // samples drawn by gen_verified_family
};

struct FamilyViolation {
  std::vector<std::uint32_t> members;  // ascending, size l
  std::uint64_t actual = 0;
  double lower = 0.0;
  double upper = 0.0;
};

struct CertificateReport {
  bool certified = true;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<FamilyViolation> violations;  // first `violation_limit` found
};

struct FamilyCheckOptions {
  std::size_t violation_limit = 1000;
  // Families whose segment is at most this many elements are checked with
  // dense bit vectors instead of sorted-list merges.
  std::uint64_t dense_threshold = std::uint64_t{1} << 24;
};

// `count` independent subsets of [0, t), each element kept with probability
// p. Deterministic in (count, params.t, params.p, seed).
ChernoffFamily sample_family(std::size_t count, const FamilyParams& params,
                             std::uint64_t seed);

// Checks (1 - eps) p^l t <= |intersection of members I| <= (1 + eps) p^l t
// for every l in [1, m] and every l-subset I of distinct members.
CertificateReport verify_family(const ChernoffFamily& family,
                                const FamilyCheckOptions& options = {});

// Las Vegas loop: attempt a draws with seed XOR a, a = 0, 1, ..., until one
// certifies. Throws Error(kRetriesExhausted) after max_retries failures.
ChernoffFamily gen_verified_family(std::size_t count, const FamilyParams& params,
                                   std::uint64_t seed, std::uint32_t max_retries,
                                   const FamilyCheckOptions& options = {});

std::string format_family(const ChernoffFamily& family);
std::string format_certificate(const CertificateReport& report);

}  // namespace krep

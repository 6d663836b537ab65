#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace krep {

using BigInt = boost::multiprecision::cpp_int;

// n! / ((r!)^q q! s!) with n = q r + s: the number of almost-perfect
// matchings of r-sets on n vertices.
BigInt count_almost_perfect_matchings_exact(std::uint32_t n, std::uint32_t r);

// ln of the same count, from compensated sums of ln i.
double log_almost_perfect_matchings(std::uint64_t n, std::uint64_t r);

// (n / 2) ln(n / (e r)).
double matchings_log_lower_bound(std::uint64_t n, std::uint64_t r);

// delta * (M - ln n), M the exact log count or the lower bound above.
// Throws kInvalidArgument when delta > n.
double graphs_log_lower_bound(std::uint64_t n, std::uint64_t r,
                              std::uint64_t delta, bool use_exact);

struct CountReport {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t delta = 0;
  std::optional<BigInt> exact_matchings;  // only for small n
  double ln_exact_matchings = 0.0;
  double ln_matchings_lb = 0.0;
  bool matchings_bound_holds = false;  // ln exact >= lower bound
  double ln_graphs_lb = 0.0;
  double threshold = 0.0;           // t* = (delta / 4) ln n
  double ln_representable = 0.0;    // t* n ln 2 = ln 2^(t* n)
  bool argument_holds = false;      // ln_graphs_lb > ln_representable
  double intermediate = 0.0;        // delta (n / 4) ln n
  bool intermediate_holds = false;  // ln_graphs_lb >= intermediate
};

// Exact counts are attached for n up to this size.
inline constexpr std::uint64_t kExactCountLimit = 2000;

CountReport verify_counting_argument(std::uint64_t n, std::uint64_t r,
                                     std::uint64_t delta);

struct ScanResult {
  std::optional<std::uint64_t> first_argument;      // first n with argument_holds
  std::optional<std::uint64_t> first_intermediate;  // first n with intermediate_holds
  // First n past first_argument where argument_holds turned false again.
  std::optional<std::uint64_t> argument_regression;
};

// Walks n from max(r, delta) through max_n.
ScanResult scan_counting_argument(std::uint64_t r, std::uint64_t delta,
                                  std::uint64_t max_n);

std::string format_count_report(const CountReport& report);
std::string count_report_csv_header();
std::string count_report_csv_row(const CountReport& report);

}  // namespace krep

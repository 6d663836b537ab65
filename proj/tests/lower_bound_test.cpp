#include "krep/lower_bound.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "krep/error.hpp"

namespace krep {
namespace {

// Counts collections of floor(n/r) disjoint r-sets by always deciding the
// lowest free vertex: it either stays uncovered (while leftover slots remain)
// or opens a block together with r - 1 higher free vertices.
std::uint64_t enumerate(std::uint32_t free_mask, std::uint32_t r,
                        std::uint32_t leftovers) {
  if (free_mask == 0) return 1;
  const int low = __builtin_ctz(free_mask);
  const std::uint32_t rest = free_mask & ~(1u << low);
  std::uint64_t total = leftovers > 0 ? enumerate(rest, r, leftovers - 1) : 0;
  // Choose r - 1 partners from `rest`.
  auto pick = [&](auto&& self, std::uint32_t pool, std::uint32_t remaining,
                  std::uint32_t taken) -> void {
    if (remaining == 0) {
      total += enumerate(rest & ~taken, r, leftovers);
      return;
    }
    for (std::uint32_t m = pool; m; m &= m - 1) {
      const std::uint32_t bit = m & -m;
      self(self, m & ~bit & ~(bit - 1), remaining - 1, taken | bit);
    }
  };
  pick(pick, rest, r - 1, 0);
  return total;
}

std::uint64_t enumerate(std::uint32_t n, std::uint32_t r) {
  return enumerate(n == 32 ? ~0u : (1u << n) - 1, r, n % r);
}

TEST(ExactCount, FrozenValues) {
  EXPECT_EQ(count_almost_perfect_matchings_exact(6, 3), 10);
  EXPECT_EQ(count_almost_perfect_matchings_exact(12, 3), 15400);
  EXPECT_EQ(count_almost_perfect_matchings_exact(4, 2), 3);
  EXPECT_EQ(count_almost_perfect_matchings_exact(7, 3), 70);
  EXPECT_EQ(enumerate(6, 3), 10u);
  EXPECT_EQ(enumerate(12, 3), 15400u);
}

TEST(ExactCount, AgreesWithEnumeration) {
  for (std::uint32_t r = 2; r <= 4; ++r)
    for (std::uint32_t n = r; n <= 10; ++n)
      EXPECT_EQ(count_almost_perfect_matchings_exact(n, r), enumerate(n, r))
          << "n " << n << " r " << r;
}

TEST(ExactCount, LargeValueIsExact) {
  // 30! / (3!^10 10!).
  EXPECT_EQ(count_almost_perfect_matchings_exact(30, 3).str(), "1208883745669600000");
}

TEST(LogCount, MatchesBigIntegerLog) {
  for (std::uint32_t n : {6u, 12u, 31u, 100u}) {
    const double from_big = std::log(
        count_almost_perfect_matchings_exact(n, 3).convert_to<double>());
    EXPECT_NEAR(log_almost_perfect_matchings(n, 3), from_big, 1e-9 * from_big);
  }
}

TEST(LowerBound, FrozenValues) {
  EXPECT_NEAR(matchings_log_lower_bound(12, 3), 2.317766, 1e-6);
  EXPECT_NEAR(matchings_log_lower_bound(30, 3), 19.5388, 1e-4);
  EXPECT_NEAR(graphs_log_lower_bound(12, 3, 2, true), 14.31443, 1e-5);
  EXPECT_EQ(graphs_log_lower_bound(12, 3, 0, true), 0.0);
  EXPECT_THROW(graphs_log_lower_bound(5, 3, 6, true), Error);
}

TEST(LowerBound, ExactDominatesBound) {
  for (std::uint64_t r = 2; r <= 6; ++r)
    for (std::uint64_t n = r; n <= 3000; n += 7)
      ASSERT_GE(log_almost_perfect_matchings(n, r), matchings_log_lower_bound(n, r))
          << n << ' ' << r;
}

TEST(CountingArgument, MillionVertices) {
  const auto report = verify_counting_argument(1000000, 3, 10);
  const double expected = 2.5 * std::log(1e6);
  EXPECT_NEAR(report.threshold, expected, 1e-9 * expected);
  EXPECT_NEAR(report.threshold, 34.538776, 1e-6);
  EXPECT_TRUE(report.argument_holds);
  EXPECT_TRUE(report.matchings_bound_holds);
  EXPECT_FALSE(report.exact_matchings.has_value());
  EXPECT_NEAR(report.ln_representable, report.threshold * 1e6 * std::log(2.0), 1e-3);
}

TEST(CountingArgument, SmallInstanceCarriesExactCount) {
  const auto report = verify_counting_argument(12, 3, 2);
  ASSERT_TRUE(report.exact_matchings.has_value());
  EXPECT_EQ(*report.exact_matchings, 15400);
  EXPECT_FALSE(report.argument_holds);
  EXPECT_THROW(verify_counting_argument(12, 3, 0), Error);
  EXPECT_THROW(verify_counting_argument(2, 3, 1), Error);
}

TEST(Scan, FirstThresholds) {
  const auto scan = scan_counting_argument(3, 4, 2000);
  EXPECT_EQ(scan.first_argument, 35u);
  EXPECT_EQ(scan.first_intermediate, 83u);
  EXPECT_FALSE(scan.argument_regression.has_value());
}

TEST(Format, CountReportLines) {
  std::istringstream text(format_count_report(verify_counting_argument(12, 3, 2)));
  std::map<std::string, std::string> fields;
  for (std::string tag, key, value; text >> tag >> key >> value;) {
    EXPECT_EQ(tag, "BOUND");
    fields[key] = value;
  }
  EXPECT_EQ(fields["exactMatchings"], "15400");
  EXPECT_EQ(fields["argumentHolds"], "false");
  EXPECT_EQ(fields["matchingsBoundHolds"], "true");
  EXPECT_EQ(fields["lnMatchingsLB"], "2.31776616672");
  const auto header = count_report_csv_header();
  const auto row = count_report_csv_row(verify_counting_argument(12, 3, 2));
  EXPECT_EQ(std::count(header.begin(), header.end(), ','),
            std::count(row.begin(), row.end(), ','));
}

}  // namespace
}  // namespace krep

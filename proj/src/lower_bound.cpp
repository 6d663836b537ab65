#include "krep/lower_bound.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "krep/error.hpp"

namespace krep {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double log_factorial(std::uint64_t n) {
  CompensatedSum sum;
  for (std::uint64_t i = 2; i <= n; ++i) sum.add(std::log(static_cast<double>(i)));
  return sum.value();
}

void check_nr(std::uint64_t n, std::uint64_t r) {
  if (r < 2) throw Error(ErrorCode::kInvalidArgument, "r must be at least 2");
  if (n < r) throw Error(ErrorCode::kInvalidArgument, "need n >= r");
}

std::string real_text(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

CountReport evaluate(std::uint64_t n, std::uint64_t r, std::uint64_t delta,
                     bool with_exact) {
  check_nr(n, r);
  if (delta < 1 || delta > n)
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= delta <= n");
  CountReport report;
  report.n = n;
  report.r = r;
  report.delta = delta;
  const double ln_n = std::log(static_cast<double>(n));
  report.ln_matchings_lb = matchings_log_lower_bound(n, r);
  report.ln_graphs_lb = graphs_log_lower_bound(n, r, delta, false);
  report.threshold = static_cast<double>(delta) / 4.0 * ln_n;
  report.ln_representable =
      report.threshold * static_cast<double>(n) * std::log(2.0);
  report.argument_holds = report.ln_graphs_lb > report.ln_representable;
  report.intermediate =
      static_cast<double>(delta) * static_cast<double>(n) / 4.0 * ln_n;
  report.intermediate_holds = report.ln_graphs_lb >= report.intermediate;
  if (with_exact) {
    report.ln_exact_matchings = log_almost_perfect_matchings(n, r);
    report.matchings_bound_holds =
        report.ln_exact_matchings >= report.ln_matchings_lb;
    if (n <= kExactCountLimit)
      report.exact_matchings = count_almost_perfect_matchings_exact(
          static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r));
  }
  return report;
}

}  // namespace

BigInt count_almost_perfect_matchings_exact(std::uint32_t n, std::uint32_t r) {
  check_nr(n, r);
  const std::uint32_t q = n / r, s = n % r;
  BigInt numerator = 1;
  for (std::uint32_t i = 2; i <= n; ++i) numerator *= i;
  BigInt r_factorial = 1;
  for (std::uint32_t i = 2; i <= r; ++i) r_factorial *= i;
  BigInt denominator = boost::multiprecision::pow(r_factorial, q);
  for (std::uint32_t i = 2; i <= q; ++i) denominator *= i;
  for (std::uint32_t i = 2; i <= s; ++i) denominator *= i;
  return numerator / denominator;
}

double log_almost_perfect_matchings(std::uint64_t n, std::uint64_t r) {
  check_nr(n, r);
  const std::uint64_t q = n / r, s = n % r;
  CompensatedSum sum;
  sum.add(log_factorial(n));
  sum.add(-static_cast<double>(q) * log_factorial(r));
  sum.add(-log_factorial(q));
  sum.add(-log_factorial(s));
  return sum.value();
}

double matchings_log_lower_bound(std::uint64_t n, std::uint64_t r) {
  check_nr(n, r);
  return static_cast<double>(n) / 2.0 *
         (std::log(static_cast<double>(n)) - 1.0 - std::log(static_cast<double>(r)));
}

double graphs_log_lower_bound(std::uint64_t n, std::uint64_t r,
                              std::uint64_t delta, bool use_exact) {
  if (delta > n) throw Error(ErrorCode::kInvalidArgument, "need delta <= n");
  if (delta == 0) return 0.0;
  const double matchings = use_exact ? log_almost_perfect_matchings(n, r)
                                     : matchings_log_lower_bound(n, r);
  return static_cast<double>(delta) *
         (matchings - std::log(static_cast<double>(n)));
}

CountReport verify_counting_argument(std::uint64_t n, std::uint64_t r,
                                     std::uint64_t delta) {
  return evaluate(n, r, delta, true);
}

ScanResult scan_counting_argument(std::uint64_t r, std::uint64_t delta,
                                  std::uint64_t max_n) {
  ScanResult scan;
  for (std::uint64_t n = std::max(r, delta); n <= max_n; ++n) {
    const CountReport report = evaluate(n, r, delta, false);
    if (report.intermediate_holds && !scan.first_intermediate)
      scan.first_intermediate = n;
    if (report.argument_holds) {
      if (!scan.first_argument) scan.first_argument = n;
    } else if (scan.first_argument && !scan.argument_regression) {
      scan.argument_regression = n;
    }
  }
  return scan;
}

std::string format_count_report(const CountReport& report) {
  std::ostringstream out;
  auto line = [&](const char* key, const std::string& value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "BOUND %-22s ", key);
    out << buffer << value << '\n';
  };
  line("n", std::to_string(report.n));
  line("r", std::to_string(report.r));
  line("delta", std::to_string(report.delta));
  line("exactMatchings",
       report.exact_matchings ? report.exact_matchings->str() : "none");
  line("lnExactMatchings", real_text(report.ln_exact_matchings));
  line("lnMatchingsLB", real_text(report.ln_matchings_lb));
  line("matchingsBoundHolds", report.matchings_bound_holds ? "true" : "false");
  line("lnGraphsLB", real_text(report.ln_graphs_lb));
  line("threshold", real_text(report.threshold));
  line("lnRepresentable", real_text(report.ln_representable));
  line("argumentHolds", report.argument_holds ? "true" : "false");
  line("intermediate", real_text(report.intermediate));
  line("intermediateHolds", report.intermediate_holds ? "true" : "false");
  return out.str();
}

std::string count_report_csv_header() {
  return "n,r,delta,lnExactMatchings,lnMatchingsLB,lnGraphsLB,threshold,"
         "lnRepresentable,argumentHolds,intermediate,intermediateHolds\n";
}

std::string count_report_csv_row(const CountReport& report) {
  std::ostringstream out;
  out << report.n << ',' << report.r << ',' << report.delta << ','
      << real_text(report.ln_exact_matchings) << ','
      << real_text(report.ln_matchings_lb) << ',' << real_text(report.ln_graphs_lb)
      << ',' << real_text(report.threshold) << ','
      << real_text(report.ln_representable) << ','
      << (report.argument_holds ? 1 : 0) << ',' << real_text(report.intermediate)
      << ',' << (report.intermediate_holds ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace krep

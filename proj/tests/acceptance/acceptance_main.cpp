// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All builds run at constant scale 1.
#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "krep/builder.hpp"
#include "krep/chernoff.hpp"
#include "krep/combinatorics.hpp"
#include "krep/constants.hpp"
#include "krep/error.hpp"
#include "krep/lower_bound.hpp"
#include "krep/matching.hpp"
#include "krep/oracle.hpp"
#include "krep/verifier.hpp"

namespace {

using namespace krep;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& out, bool condition, const std::string& what) {
  if (condition) return;
  if (out.pass) out.detail = what;
  out.pass = false;
}

double peak_rss_mb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<double>(usage.ru_maxrss) / 1024.0;
}

std::string fmt(const char* format, auto... args) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

constexpr int kGeneralInstances = 20;
constexpr int kLinearInstances = 10;

Hypergraph general_instance(int i) { return gen_union_of_matchings(30, 3, 4, 1000 + i); }
Hypergraph linear_instance(int i) { return gen_random_linear(30, 3, 13, 2000 + i); }

Outcome criterion1() {
  Outcome out;
  std::uint32_t max_l = 0;
  for (int i = 0; i < kGeneralInstances; ++i) {
    const auto g = general_instance(i);
    const auto result = build_representation_with_artifacts(g, BuildMode::kGeneral, i);
    const auto& rep = result.representation;
    const std::uint32_t L = result.decomposition.size();
    max_l = std::max(max_l, L);
    const auto report = verify_representation(g, rep);
    const auto t = static_cast<std::uint64_t>(std::ceil(576.0 * L * L * std::log(30.0)));
    const std::string tag = fmt("instance %d: ", i);
    require(out, report.valid && report.exhaustive, tag + "verification failed");
    require(out, report.checked_tuples == 4060, tag + "tuple count");
    require(out, rep.metadata.build_attempts <= 10, tag + "too many build attempts");
    require(out, L <= 12, tag + "L above 12");
    require(out, rep.ground_size == L * t, tag + "ground size mismatch");
    require(out, check_size_against_bound(rep, g), tag + "size bound violated");
  }
  if (out.pass) out.detail = fmt("%d instances valid, max L %u", kGeneralInstances, max_l);
  return out;
}

Outcome criterion2() {
  Outcome out;
  int passed = 0;
  std::uint64_t violations = 0;
  BuildOptions options;
  options.verify = false;
  for (int i = 0; i < kGeneralInstances; ++i) {
    const auto g = general_instance(i);
    const auto result =
        build_representation_with_artifacts(g, BuildMode::kGeneral, 500 + i, options);
    for (const auto& family : result.families)
      require(out, verify_family(family).certified, "uncertified family returned");
    const auto report = verify_representation(g, result.representation);
    violations += report.violation_count;
    passed += report.valid;
  }
  require(out, passed == kGeneralInstances && violations == 0,
          fmt("%d/%d valid, %llu violations", passed, kGeneralInstances,
              static_cast<unsigned long long>(violations)));
  if (out.pass) out.detail = fmt("%d/%d unverified builds valid", passed, kGeneralInstances);
  return out;
}

Outcome criterion3() {
  Outcome out;
  std::uint32_t max_l = 0;
  for (int i = 0; i < kLinearInstances; ++i) {
    const auto g = linear_instance(i);
    const std::string tag = fmt("instance %d: ", i);
    require(out, is_linear(g) && degree_profile(g).max_degree <= 13, tag + "bad instance");
    try {
      const auto result = build_representation_with_artifacts(g, BuildMode::kLinear, i);
      const auto& rep = result.representation;
      const std::uint32_t L = result.decomposition.size();
      max_l = std::max(max_l, L);
      const auto t = static_cast<std::uint64_t>(
          std::ceil(384.0 * 4.0 * std::pow(double(L), 1.5) * std::log(30.0)));
      require(out, L <= 39, tag + "L above 39");
      require(out, verify_representation(g, rep).valid, tag + "verification failed");
      require(out, rep.ground_size == L * t, tag + "ground size mismatch");
      require(out, check_size_against_bound(rep, g), tag + "size bound violated");
    } catch (const Error& e) {
      require(out, false, tag + e.what());
    }
  }
  if (out.pass) out.detail = fmt("%d instances valid, max L %u", kLinearInstances, max_l);
  return out;
}

Outcome criterion4() {
  Outcome out;
  const auto params = select_params(30, 12, 3, BuildMode::kGeneral).family();
  int first_try = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    first_try += gen_verified_family(10, params, seed, 100).attempts == 1;
  double bound = 0;
  for (std::uint32_t l = 1; l <= params.m; ++l)
    bound += binomial(10, l) * 2.0 *
             std::exp(-params.epsilon * params.epsilon * std::pow(params.p, l) *
                      double(params.t) / 3.0);
  require(out, first_try >= 95, fmt("only %d/100 certified on first attempt", first_try));
  require(out, bound < 0.01, fmt("failure bound %.4g", bound));
  if (out.pass)
    out.detail = fmt("%d/100 first-attempt certifications, failure bound %.4g", first_try, bound);
  return out;
}

Outcome criterion5() {
  Outcome out;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::uint32_t r = 3 + i % 2, n = 12 + static_cast<std::uint32_t>(i * 7 % 49),
                        delta = 1 + i % 8;
    const auto g = i % 2 ? gen_union_of_matchings(n, r, delta, i)
                         : gen_random_linear(n, r, delta, i);
    const auto d = decompose(g);
    const auto max_degree = degree_profile(g).max_degree;
    require(out, verify_decomposition(g, d), fmt("instance %llu invalid", (unsigned long long)i));
    require(out, g.num_edges() == 0 || d.size() <= (max_degree - 1) * r + 1,
            fmt("instance %llu exceeds bound", (unsigned long long)i));
  }
  if (out.pass) out.detail = "100/100 decompositions within (delta-1)r+1";
  return out;
}

Hypergraph from_mask(std::uint32_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for_each_subset(n, 3, [&](std::span<const Vertex> s) {
    if (mask >> bit++ & 1) edges.emplace_back(s.begin(), s.end());
    return true;
  });
  return Hypergraph(3, n, edges);
}

Outcome criterion6() {
  Outcome out;
  auto check = [&](const Hypergraph& g, std::uint32_t expected, const char* name) {
    const auto result = theta_tilde_exact(g);
    require(out, result.value == expected, fmt("%s: got %u", name, result.value));
    require(out, verify_representation(g, witness_representation(g, result)).valid,
            fmt("%s: witness invalid", name));
  };
  check(Hypergraph(3, 5, {}), 0, "edgeless n=5");
  for (std::uint32_t n = 3; n <= 5; ++n) check(Hypergraph(3, n, {{0, 1, 2}}), 1, "single edge");
  check(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}), 2, "two disjoint edges");
  std::uint64_t graphs = 0;
  for (std::uint32_t n = 3; n <= 5; ++n) {
    const std::uint64_t count = std::uint64_t{1} << binomial_u64(n, 3);
    for (std::uint64_t mask = 0; mask < count; ++mask, ++graphs) {
      const auto g = from_mask(n, mask);
      const auto result = theta_tilde_exact(g);
      require(out, verify_representation(g, witness_representation(g, result)).valid,
              fmt("n=%u mask %llu: witness invalid", n, (unsigned long long)mask));
    }
  }
  if (out.pass) out.detail = fmt("examples match, %llu witnesses verified", (unsigned long long)graphs);
  return out;
}

// Recursive enumeration of floor(n/r) disjoint r-sets, independent of the
// closed form.
std::uint64_t enumerate_matchings(std::uint32_t free_mask, std::uint32_t r,
                                  std::uint32_t leftovers) {
  if (free_mask == 0) return 1;
  const std::uint32_t low = free_mask & -free_mask;
  const std::uint32_t rest = free_mask & ~low;
  std::uint64_t total = leftovers ? enumerate_matchings(rest, r, leftovers - 1) : 0;
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> pick =
      [&](std::uint32_t pool, std::uint32_t remaining, std::uint32_t taken) {
        if (remaining == 0) {
          total += enumerate_matchings(rest & ~taken, r, leftovers);
          return;
        }
        for (std::uint32_t m = pool; m; m &= m - 1) {
          const std::uint32_t bit = m & -m;
          pick(m & ~bit & ~(bit - 1), remaining - 1, taken | bit);
        }
      };
  pick(rest, r - 1, 0);
  return total;
}

Outcome criterion7() {
  Outcome out;
  require(out, count_almost_perfect_matchings_exact(6, 3) == 10, "count(6,3)");
  require(out, count_almost_perfect_matchings_exact(12, 3) == 15400, "count(12,3)");
  require(out, enumerate_matchings((1u << 6) - 1, 3, 0) == 10, "enumeration(6,3)");
  require(out, enumerate_matchings((1u << 12) - 1, 3, 0) == 15400, "enumeration(12,3)");
  const double lb = matchings_log_lower_bound(12, 3);
  require(out, std::fabs(lb - 2.318) < 5e-4, fmt("lower bound(12,3) = %.6f", lb));
  require(out, log_almost_perfect_matchings(12, 3) >= lb, "exact below bound");
  const auto report = verify_counting_argument(1000000, 3, 10);
  const double expected = 2.5 * std::log(1e6);
  require(out, std::fabs(report.threshold - expected) <= 1e-9 * expected,
          fmt("t* = %.12g", report.threshold));
  require(out, report.argument_holds, "argument does not hold at n=1e6");
  if (out.pass)
    out.detail = fmt("counts 10 and 15400, lb(12,3)=%.6f, t*=%.9f", lb, report.threshold);
  return out;
}

Outcome criterion8() {
  Outcome out;
  const double target = 5.0 / 6.0;
  std::uint32_t crossing = 0;
  double previous = check_linear_ratio(1, 3, 0.5);
  bool monotone = true;
  for (std::uint32_t L = 2; L <= 1000000; ++L) {
    const double value = check_linear_ratio(L, 3, 0.5);
    monotone = monotone && value < previous;
    previous = value;
    if (!crossing && value < target) crossing = L;
  }
  const double at_million = check_linear_ratio(1000000, 3, 0.5);
  require(out, crossing > 2916 && crossing <= 3000, fmt("crossing at L=%u", crossing));
  require(out, std::fabs(at_million - 0.7545) <= 1e-6, fmt("value at 1e6 = %.9f", at_million));
  require(out, monotone, "not monotone decreasing");
  if (out.pass)
    out.detail = fmt("first L below 5/6 is %u, value at 1e6 %.9f", crossing, at_million);
  return out;
}

std::string general_artifacts(int i, unsigned threads) {
  const auto g = general_instance(i);
  BuildOptions options;
  options.threads = threads;
  const auto result = build_representation_with_artifacts(g, BuildMode::kGeneral, i, options);
  VerifyOptions verify;
  verify.threads = threads;
  return format_hypergraph(g) + format_decomposition(result.decomposition) +
         format_representation(result.representation) +
         format_report(verify_representation(g, result.representation, verify));
}

Outcome criterion9() {
  Outcome out;
  for (int i = 0; i < kGeneralInstances; ++i) {
    const auto first = general_artifacts(i, 1);
    require(out, first == general_artifacts(i, 1), fmt("general %d differs on rerun", i));
    require(out, first == general_artifacts(i, 2), fmt("general %d differs across threads", i));
  }
  {
    const auto g = linear_instance(0);
    auto run = [&] {
      return format_representation(build_representation(g, BuildMode::kLinear, 0));
    };
    require(out, run() == run(), "linear build differs on rerun");
  }
  const auto params = select_params(30, 12, 3, BuildMode::kGeneral).family();
  require(out, format_family(gen_verified_family(10, params, 3, 100)) ==
                   format_family(gen_verified_family(10, params, 3, 100)),
          "family differs on rerun");
  const Hypergraph two(3, 6, {{0, 1, 2}, {3, 4, 5}});
  require(out, format_oracle_result(theta_tilde_exact(two), 6) ==
                   format_oracle_result(theta_tilde_exact(two), 6),
          "oracle output differs on rerun");
  require(out, format_count_report(verify_counting_argument(1000000, 3, 10)) ==
                   format_count_report(verify_counting_argument(1000000, 3, 10)),
          "bounds output differs on rerun");
  if (out.pass) out.detail = "artifacts byte-identical across reruns and thread counts";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
  double max_seconds;
  double max_rss_mb;  // peak resident set so far, 0 for no limit
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "general-mode end-to-end", criterion1, 30.0, 500.0},
      {2, "unverified general builds are valid", criterion2, 0, 0},
      {3, "linear-mode end-to-end", criterion3, 180.0, 2048.0},
      {4, "family certification rate", criterion4, 0, 0},
      {5, "decomposition bound", criterion5, 0, 0},
      {6, "exact oracle ground truth", criterion6, 120.0, 0},
      {7, "counting lower bound", criterion7, 5.0, 0},
      {8, "linear ratio predicate", criterion8, 0, 0},
      {9, "determinism", criterion9, 0, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double rss = peak_rss_mb();
    if (c.max_seconds > 0 && seconds > c.max_seconds)
      require(out, false, fmt("took %.1f s, limit %.0f s", seconds, c.max_seconds));
    if (c.max_rss_mb > 0 && rss > c.max_rss_mb)
      require(out, false, fmt("peak RSS %.0f MB, limit %.0f MB", rss, c.max_rss_mb));
    std::printf("%s criterion %d (%s): %s [%.2f s, peak RSS %.0f MB]\n",
                out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), seconds, rss);
    std::fflush(stdout);
    failures += !out.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}

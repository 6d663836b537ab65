#include "krep/verifier.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "krep/builder.hpp"
#include "krep/combinatorics.hpp"
#include "krep/error.hpp"

namespace krep {
namespace {

Representation make_rep(std::uint32_t n, std::uint64_t k, std::uint64_t ground,
                        std::vector<std::vector<std::uint64_t>> sets) {
  Representation rep;
  rep.n = n;
  rep.k = k;
  rep.ground_size = ground;
  rep.vertex_sets = std::move(sets);
  return rep;
}

// Brute force: count common elements by membership tests over the ground set.
std::uint64_t naive_count(const Representation& rep, std::span<const Vertex> tuple) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < rep.ground_size; ++x) {
    bool all = true;
    for (Vertex v : tuple)
      all = all && std::binary_search(rep.vertex_sets[v].begin(),
                                      rep.vertex_sets[v].end(), x);
    count += all;
  }
  return count;
}

TEST(IntersectionCount, Examples) {
  const auto rep = make_rep(3, 1, 6, {{0, 1, 2, 5}, {1, 2, 5}, {2, 3, 5}});
  EXPECT_EQ(intersection_count(rep, std::vector<Vertex>{0, 1, 2}), 2u);
  EXPECT_EQ(intersection_count(rep, std::vector<Vertex>{0, 1}), 3u);
  EXPECT_EQ(intersection_count(rep, std::vector<Vertex>{2}), 3u);
  EXPECT_THROW(intersection_count(rep, std::vector<Vertex>{0, 0, 1}), Error);
  EXPECT_THROW(intersection_count(rep, std::vector<Vertex>{0, 3}), Error);
}

TEST(IntersectionCount, MatchesNaive) {
  const auto g = gen_union_of_matchings(10, 3, 3, 2);
  auto rep = build_representation(g, BuildMode::kGeneral, 4);
  // Thin the sets out so the naive scan stays cheap.
  rep.ground_size = 4000;
  for (auto& s : rep.vertex_sets)
    s.erase(std::lower_bound(s.begin(), s.end(), 4000), s.end());
  for_each_subset(10, 3, [&](std::span<const Vertex> t) {
    EXPECT_EQ(intersection_count(rep, t), naive_count(rep, t));
    return true;
  });
}

TEST(Verify, SingleEdgeValid) {
  const Hypergraph g(3, 3, {{0, 1, 2}});
  const auto report = verify_representation(g, make_rep(3, 1, 1, {{0}, {0}, {0}}));
  EXPECT_TRUE(report.valid);
  EXPECT_EQ(report.checked_tuples, 1u);
  EXPECT_EQ(report.min_edge_count, 1u);
}

TEST(Verify, TwoDisjointEdgesWithSharedElementFailsEighteenTimes) {
  const Hypergraph g(3, 6, {{0, 1, 2}, {3, 4, 5}});
  const auto rep = make_rep(6, 1, 1, std::vector<std::vector<std::uint64_t>>(6, {0}));
  const auto report = verify_representation(g, rep);
  EXPECT_FALSE(report.valid);
  EXPECT_EQ(report.checked_tuples, 20u);
  EXPECT_EQ(report.violation_count, 18u);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_EQ(report.violations[0].tuple, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_FALSE(report.violations[0].is_edge);

  const auto fixed = make_rep(6, 1, 2, {{0}, {0}, {0}, {1}, {1}, {1}});
  EXPECT_TRUE(verify_representation(g, fixed).valid);
}

TEST(Verify, EdgeBelowThresholdReported) {
  const Hypergraph g(3, 4, {{0, 1, 2}});
  const auto report = verify_representation(g, make_rep(4, 2, 2, {{0, 1}, {0}, {0, 1}, {}}));
  EXPECT_FALSE(report.valid);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_TRUE(report.violations[0].is_edge);
  EXPECT_EQ(report.violations[0].count, 1u);
}

TEST(Verify, ShapeMismatchThrows) {
  const Hypergraph g(3, 4, {{0, 1, 2}});
  EXPECT_THROW(verify_representation(g, make_rep(3, 1, 1, {{0}, {0}, {0}})), Error);
}

TEST(Verify, ThreadsAndSparsePathAgree) {
  const auto g = gen_union_of_matchings(14, 3, 3, 3);
  auto rep = build_representation(g, BuildMode::kGeneral, 3);
  // Break one vertex so that violations exist.
  rep.vertex_sets[5].resize(rep.vertex_sets[5].size() / 3);
  VerifyOptions base;
  const auto a = verify_representation(g, rep, base);
  VerifyOptions threaded = base;
  threaded.threads = 4;
  VerifyOptions sparse = base;
  sparse.dense_budget_bytes = 0;
  for (const auto& other : {verify_representation(g, rep, threaded),
                            verify_representation(g, rep, sparse)}) {
    EXPECT_EQ(format_report(a), format_report(other));
  }
  EXPECT_FALSE(a.valid);
  EXPECT_EQ(a.checked_tuples, binomial_u64(14, 3));
}

TEST(Verify, ViolationLimitKeepsFirstInOrder) {
  const Hypergraph g(3, 6, {{0, 1, 2}, {3, 4, 5}});
  const auto rep = make_rep(6, 1, 1, std::vector<std::vector<std::uint64_t>>(6, {0}));
  VerifyOptions options;
  options.violation_limit = 3;
  options.threads = 2;
  const auto report = verify_representation(g, rep, options);
  EXPECT_EQ(report.violation_count, 18u);
  ASSERT_EQ(report.violations.size(), 3u);
  EXPECT_EQ(report.violations[2].tuple, (std::vector<Vertex>{0, 1, 5}));
}

TEST(SampledVerify, AgreesWithExhaustiveOnSmallInstances) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const std::uint32_t n = 6 + seed % 7;
    const auto g = gen_union_of_matchings(n, 3, 2, seed);
    auto rep = build_representation(g, BuildMode::kGeneral, seed);
    if (seed % 2) rep.vertex_sets[0].clear();
    const auto full = verify_representation(g, rep);
    const auto all = sampled_verify(g, rep, binomial_u64(n, 3), seed);
    EXPECT_EQ(format_report(all), format_report(full));
    const auto part = sampled_verify(g, rep, 5, seed);
    EXPECT_FALSE(part.exhaustive);
    EXPECT_EQ(part.checked_tuples, g.num_edges() + 5);
    if (full.valid) EXPECT_TRUE(part.valid);
    // Every edge is always checked.
    EXPECT_EQ(part.min_edge_count, full.min_edge_count);
  }
}

TEST(SampledVerify, DeterministicInSeed) {
  const auto g = gen_union_of_matchings(20, 3, 3, 1);
  auto rep = build_representation(g, BuildMode::kGeneral, 1);
  EXPECT_EQ(format_report(sampled_verify(g, rep, 100, 9)),
            format_report(sampled_verify(g, rep, 100, 9)));
  EXPECT_THROW(sampled_verify(g, rep, 0, 9), Error);
}

TEST(Format, Report) {
  const Hypergraph g(3, 3, {{0, 1, 2}});
  const auto report = verify_representation(g, make_rep(3, 1, 1, {{0}, {}, {0}}));
  EXPECT_EQ(format_report(report),
            "RESULT valid 0\nRESULT exhaustive 1\nRESULT checkedTuples 1\n"
            "RESULT violations 1\nRESULT minEdgeCount 0\nRESULT maxNonEdgeCount 0\n"
            "VIOLATION 0 1 2 0 edge\n");
}

TEST(RepFormat, RoundTrip) {
  const auto g = gen_union_of_matchings(9, 3, 2, 3);
  const auto rep = build_representation(g, BuildMode::kGeneral, 8);
  const auto text = format_representation(rep);
  EXPECT_EQ(parse_representation(text), rep);
  EXPECT_EQ(format_representation(parse_representation(text)), text);
}

TEST(RepFormat, Rejections) {
  EXPECT_THROW(parse_representation("2 1 3\n0 1 0\n"), Error);          // missing vertex
  EXPECT_THROW(parse_representation("1 1 3\n0 2 2 1\n"), Error);        // unsorted
  EXPECT_THROW(parse_representation("1 1 3\n0 1 3\n"), Error);          // out of range
  EXPECT_THROW(parse_representation("1 1 3\n0 2 1\n"), Error);          // short line
  EXPECT_THROW(parse_representation("2 1 3\n1 0\n0 0\n"), Error);       // order
  const auto rep = parse_representation("2 1 3\n0 1 2\n1 0\n");
  EXPECT_EQ(rep.vertex_sets, (std::vector<std::vector<std::uint64_t>>{{2}, {}}));
}

}  // namespace
}  // namespace krep

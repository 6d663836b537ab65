#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace krep {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

// An r-uniform hypergraph on vertices 0..n-1 in canonical form: each edge
// sorted ascending, the edge list sorted lexicographically, no duplicates.
// Immutable once constructed.
class Hypergraph {
 public:
  // Validates and canonicalizes. Throws Error(kInvalidArgument) on r < 2, an
  // edge of the wrong size, a repeated or out-of-range vertex, or a
  // duplicate edge.
  Hypergraph(std::uint32_t rank, std::uint32_t num_vertices,
             std::vector<Edge> edges);

  std::uint32_t rank() const { return rank_; }
  std::uint32_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  // Index of `tuple` (ascending) in edges(), if it is an edge.
  std::optional<std::size_t> find_edge(std::span<const Vertex> tuple) const;
  bool contains(std::span<const Vertex> tuple) const {
    return find_edge(tuple).has_value();
  }

  // incidence()[v] lists the indices of edges containing v, ascending.
  std::vector<std::vector<std::size_t>> incidence() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::uint32_t rank_;
  std::uint32_t num_vertices_;
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  std::vector<std::uint32_t> degrees;
  std::uint32_t max_degree = 0;
};

DegreeProfile degree_profile(const Hypergraph& graph);

// True iff every two distinct edges share at most one vertex.
bool is_linear(const Hypergraph& graph);

// .hg text format: '#' comment lines, a header "r n m", then m edge lines of
// r strictly increasing vertex indices.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& graph);

Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_file(const Hypergraph& graph, const std::string& path);

// Union of `delta` independent uniformly random almost-perfect matchings.
// Each matching is drawn as a random permutation of [0, n) cut into
// consecutive blocks of r, dropping the n mod r leftover vertices.
Hypergraph gen_union_of_matchings(std::uint32_t n, std::uint32_t r,
                                  std::uint32_t delta, std::uint64_t seed);

struct LabeledUnion {
  Hypergraph graph;
  // The drawn matchings, before duplicate edges were merged.
  std::vector<std::vector<Edge>> matchings;
};
LabeledUnion gen_union_of_matchings_labeled(std::uint32_t n, std::uint32_t r,
                                            std::uint32_t delta,
                                            std::uint64_t seed);

// Greedy random linear hypergraph with maximum degree at most `delta`.
// Samples uniform r-subsets and keeps one iff it shares no vertex pair with
// an accepted edge and all its vertices still have degree < delta. Stops
// after `max_rejections` consecutive rejections (default 50 * n * delta).
Hypergraph gen_random_linear(std::uint32_t n, std::uint32_t r,
                             std::uint32_t delta, std::uint64_t seed,
                             std::optional<std::uint64_t> max_rejections = {});

}  // namespace krep

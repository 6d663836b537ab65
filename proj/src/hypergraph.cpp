#include "krep/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "krep/error.hpp"
#include "krep/random.hpp"

namespace krep {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kNotLinear: return "NotLinear";
    case ErrorCode::kRetriesExhausted: return "RetriesExhausted";
    case ErrorCode::kParameterUnderflow: return "ParameterUnderflow";
    case ErrorCode::kCapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

namespace {

std::string edge_text(const Edge& edge) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < edge.size(); ++i) out << (i ? "," : "") << edge[i];
  out << '}';
  return out.str();
}

}  // namespace

Hypergraph::Hypergraph(std::uint32_t rank, std::uint32_t num_vertices,
                       std::vector<Edge> edges)
    : rank_(rank), num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (rank_ < 2)
    throw Error(ErrorCode::kInvalidArgument, "uniformity r must be at least 2");
  for (auto& edge : edges_) {
    if (edge.size() != rank_)
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + edge_text(edge) + " does not have " +
                      std::to_string(rank_) + " vertices");
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + edge_text(edge) + " repeats a vertex");
    if (edge.back() >= num_vertices_)
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + edge_text(edge) + " has a vertex outside [0, " +
                      std::to_string(num_vertices_) + ")");
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate edge " + edge_text(*dup));
}

std::optional<std::size_t> Hypergraph::find_edge(
    std::span<const Vertex> tuple) const {
  const auto it = std::lower_bound(
      edges_.begin(), edges_.end(), tuple, [](const Edge& e, auto t) {
        return std::lexicographical_compare(e.begin(), e.end(), t.begin(),
                                            t.end());
      });
  if (it == edges_.end() || !std::equal(it->begin(), it->end(), tuple.begin(),
                                        tuple.end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> result(num_vertices_);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    for (Vertex v : edges_[e]) result[v].push_back(e);
  return result;
}

DegreeProfile degree_profile(const Hypergraph& graph) {
  DegreeProfile profile;
  profile.degrees.assign(graph.num_vertices(), 0);
  for (const auto& edge : graph.edges())
    for (Vertex v : edge) ++profile.degrees[v];
  if (!profile.degrees.empty())
    profile.max_degree =
        *std::max_element(profile.degrees.begin(), profile.degrees.end());
  return profile;
}

bool is_linear(const Hypergraph& graph) {
  // Linear iff no vertex pair lies in two edges.
  std::unordered_set<std::uint64_t> pairs;
  for (const auto& edge : graph.edges())
    for (std::size_t i = 0; i < edge.size(); ++i)
      for (std::size_t j = i + 1; j < edge.size(); ++j)
        if (!pairs.insert((std::uint64_t{edge[i]} << 32) | edge[j]).second)
          return false;
  return true;
}

// ---------------------------------------------------------------------------
// .hg text format

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

bool next_data_line(std::istream& in, std::string& line, std::size_t& number) {
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::uint64_t> parse_numbers(const std::string& line,
                                         std::size_t number) {
  std::vector<std::uint64_t> values;
  std::istringstream fields(line);
  std::string token;
  while (fields >> token) {
    if (token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 19)
      parse_error(number, "expected a non-negative integer, got '" + token + "'");
    values.push_back(std::stoull(token));
  }
  return values;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  if (!next_data_line(in, line, number)) parse_error(number, "missing header");
  const auto header = parse_numbers(line, number);
  if (header.size() != 3) parse_error(number, "header must be \"r n m\"");
  const std::uint64_t r = header[0], n = header[1], m = header[2];
  if (r < 2) parse_error(number, "uniformity r must be at least 2");
  if (n > UINT32_MAX) parse_error(number, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_data_line(in, line, number))
      parse_error(number, "expected " + std::to_string(m) + " edges, found " +
                              std::to_string(i));
    const auto values = parse_numbers(line, number);
    if (values.size() != r)
      parse_error(number, "edge has " + std::to_string(values.size()) +
                              " vertices, expected " + std::to_string(r));
    Edge edge;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[j] >= n)
        parse_error(number, "vertex " + std::to_string(values[j]) +
                                " out of range [0, " + std::to_string(n) + ")");
      if (j > 0 && values[j] == values[j - 1])
        parse_error(number, "repeated vertex " + std::to_string(values[j]));
      if (j > 0 && values[j] < values[j - 1])
        parse_error(number, "edge vertices must be strictly increasing");
      edge.push_back(static_cast<Vertex>(values[j]));
    }
    edges.push_back(std::move(edge));
  }
  if (next_data_line(in, line, number))
    parse_error(number, "unexpected data after " + std::to_string(m) + " edges");

  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::kParse, "duplicate edge");
  return Hypergraph(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(n),
                    std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

std::string format_hypergraph(const Hypergraph& graph) {
  std::ostringstream out;
  out << graph.rank() << ' ' << graph.num_vertices() << ' ' << graph.num_edges()
      << '\n';
  for (const auto& edge : graph.edges()) {
    for (std::size_t j = 0; j < edge.size(); ++j) out << (j ? " " : "") << edge[j];
    out << '\n';
  }
  return out.str();
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return parse_hypergraph(in);
}

void write_hypergraph_file(const Hypergraph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << format_hypergraph(graph);
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

void check_generator_args(std::uint32_t n, std::uint32_t r, std::uint32_t delta) {
  if (r < 2) throw Error(ErrorCode::kInvalidArgument, "r must be at least 2");
  if (n < r)
    throw Error(ErrorCode::kInvalidArgument,
                "need n >= r (n=" + std::to_string(n) + ", r=" +
                    std::to_string(r) + ")");
  if (delta < 1) throw Error(ErrorCode::kInvalidArgument, "delta must be >= 1");
}

}  // namespace

LabeledUnion gen_union_of_matchings_labeled(std::uint32_t n, std::uint32_t r,
                                            std::uint32_t delta,
                                            std::uint64_t seed) {
  check_generator_args(n, r, delta);
  RandomStream rng(seed);
  std::vector<Vertex> perm(n);
  std::vector<std::vector<Edge>> matchings;
  std::vector<Edge> all;
  for (std::uint32_t d = 0; d < delta; ++d) {
    std::iota(perm.begin(), perm.end(), Vertex{0});
    for (std::uint32_t i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.uniform_below(std::uint64_t{i} + 1)]);
    std::vector<Edge> matching;
    for (std::uint32_t b = 0; b + r <= n; b += r) {
      Edge edge(perm.begin() + b, perm.begin() + b + r);
      std::sort(edge.begin(), edge.end());
      matching.push_back(edge);
      all.push_back(std::move(edge));
    }
    matchings.push_back(std::move(matching));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return {Hypergraph(r, n, std::move(all)), std::move(matchings)};
}

Hypergraph gen_union_of_matchings(std::uint32_t n, std::uint32_t r,
                                  std::uint32_t delta, std::uint64_t seed) {
  return gen_union_of_matchings_labeled(n, r, delta, seed).graph;
}

Hypergraph gen_random_linear(std::uint32_t n, std::uint32_t r,
                             std::uint32_t delta, std::uint64_t seed,
                             std::optional<std::uint64_t> max_rejections) {
  check_generator_args(n, r, delta);
  const std::uint64_t cap =
      max_rejections.value_or(std::uint64_t{50} * n * delta);
  RandomStream rng(seed);
  std::vector<std::uint32_t> degree(n, 0);
  std::unordered_set<std::uint64_t> used_pairs;
  std::vector<Edge> edges;
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});

  std::uint64_t rejections = 0;
  while (rejections < cap) {
    // Partial Fisher-Yates: the first r slots become a uniform r-subset.
    for (std::uint32_t i = 0; i < r; ++i)
      std::swap(pool[i], pool[i + rng.uniform_below(n - i)]);
    Edge edge(pool.begin(), pool.begin() + r);
    std::sort(edge.begin(), edge.end());

    bool accept = std::all_of(edge.begin(), edge.end(),
                              [&](Vertex v) { return degree[v] < delta; });
    for (std::uint32_t i = 0; accept && i < r; ++i)
      for (std::uint32_t j = i + 1; accept && j < r; ++j)
        accept = !used_pairs.contains((std::uint64_t{edge[i]} << 32) | edge[j]);
    if (!accept) {
      ++rejections;
      continue;
    }
    rejections = 0;
    for (std::uint32_t i = 0; i < r; ++i) {
      ++degree[edge[i]];
      for (std::uint32_t j = i + 1; j < r; ++j)
        used_pairs.insert((std::uint64_t{edge[i]} << 32) | edge[j]);
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(r, n, std::move(edges));
}

}  // namespace krep

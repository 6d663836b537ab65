#include "krep/representation.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "krep/error.hpp"

namespace krep {

const char* mode_name(BuildMode mode) {
  return mode == BuildMode::kLinear ? "linear" : "general";
}

BuildMode parse_mode(std::string_view name) {
  if (name == "general") return BuildMode::kGeneral;
  if (name == "linear") return BuildMode::kLinear;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mode '" + std::string(name) + "'");
}

namespace {

std::string real_text(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParse, "representation: " + what);
}

std::uint64_t to_u64(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    parse_error("expected a non-negative integer, got '" + token + "'");
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    parse_error("integer out of range: " + token);
  }
}

double to_real(const std::string& token) {
  char* end = nullptr;
  const double value = std::strtod(token.c_str(), &end);
  if (token.empty() || *end != '\0') parse_error("expected a number, got '" + token + "'");
  return value;
}

std::vector<std::uint64_t> parse_integers(const std::string& line) {
  std::vector<std::uint64_t> values;
  const char* it = line.data();
  const char* end = it + line.size();
  while (true) {
    while (it != end && (*it == ' ' || *it == '\t')) ++it;
    if (it == end) break;
    std::uint64_t value = 0;
    const auto [next, ec] = std::from_chars(it, end, value);
    if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t'))
      parse_error("malformed integer in line '" + line.substr(0, 40) + "'");
    values.push_back(value);
    it = next;
  }
  return values;
}

void apply_metadata(RepresentationMetadata& meta, const std::string& line) {
  std::istringstream fields(line.substr(1));
  std::string key;
  if (!(fields >> key)) return;
  std::string value;
  if (key == "mode" && fields >> value) {
    meta.mode = parse_mode(value);
  } else if (key == "L" && fields >> value) {
    meta.matching_count = static_cast<std::uint32_t>(to_u64(value));
  } else if (key == "t" && fields >> value) {
    meta.segment_size = to_u64(value);
  } else if (key == "p" && fields >> value) {
    meta.p = to_real(value);
  } else if (key == "epsilon" && fields >> value) {
    meta.epsilon = to_real(value);
  } else if (key == "seed" && fields >> value) {
    meta.seed = to_u64(value);
  } else if (key == "constantScale" && fields >> value) {
    meta.constant_scale = to_real(value);
  } else if (key == "buildAttempts" && fields >> value) {
    meta.build_attempts = static_cast<std::uint32_t>(to_u64(value));
  } else if (key == "familyAttempts") {
    meta.family_attempts.clear();
    while (fields >> value)
      meta.family_attempts.push_back(static_cast<std::uint32_t>(to_u64(value)));
  }
}

}  // namespace

std::string format_representation(const Representation& rep) {
  const auto& meta = rep.metadata;
  std::ostringstream out;
  out << "# krep representation\n"
      << "# mode " << mode_name(meta.mode) << '\n'
      << "# L " << meta.matching_count << '\n'
      << "# t " << meta.segment_size << '\n'
      << "# p " << real_text(meta.p) << '\n'
      << "# epsilon " << real_text(meta.epsilon) << '\n'
      << "# seed " << meta.seed << '\n'
      << "# constantScale " << real_text(meta.constant_scale) << '\n'
      << "# buildAttempts " << meta.build_attempts << '\n'
      << "# familyAttempts";
  for (auto a : meta.family_attempts) out << ' ' << a;
  out << '\n' << rep.n << ' ' << rep.k << ' ' << rep.ground_size << '\n';
  for (std::uint32_t v = 0; v < rep.n; ++v) {
    const auto& set = rep.vertex_sets[v];
    out << v << ' ' << set.size();
    for (auto x : set) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

Representation parse_representation(std::istream& in) {
  Representation rep;
  std::string line;
  bool have_header = false;
  std::uint32_t next_vertex = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      if (!have_header) apply_metadata(rep.metadata, line.substr(first));
      continue;
    }
    std::vector<std::uint64_t> numbers = parse_integers(line);
    if (!have_header) {
      if (numbers.size() != 3) parse_error("header must be \"n k groundSize\"");
      if (numbers[0] > UINT32_MAX) parse_error("vertex count too large");
      rep.n = static_cast<std::uint32_t>(numbers[0]);
      rep.k = numbers[1];
      rep.ground_size = numbers[2];
      rep.vertex_sets.resize(rep.n);
      have_header = true;
      continue;
    }
    if (next_vertex >= rep.n) parse_error("more vertex lines than n");
    if (numbers.size() < 2) parse_error("vertex line needs \"v c ...\"");
    if (numbers[0] != next_vertex)
      parse_error("expected vertex " + std::to_string(next_vertex));
    if (numbers.size() != numbers[1] + 2)
      parse_error("vertex " + std::to_string(next_vertex) + " declares " +
                  std::to_string(numbers[1]) + " elements");
    auto& set = rep.vertex_sets[next_vertex];
    set.assign(numbers.begin() + 2, numbers.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] >= rep.ground_size) parse_error("element outside the ground set");
      if (i > 0 && set[i] <= set[i - 1])
        parse_error("elements must be strictly increasing");
    }
    ++next_vertex;
  }
  if (!have_header) parse_error("missing header");
  if (next_vertex != rep.n)
    parse_error("expected " + std::to_string(rep.n) + " vertex lines, found " +
                std::to_string(next_vertex));
  return rep;
}

Representation parse_representation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_representation(in);
}

Representation read_representation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return parse_representation(in);
}

void write_representation_file(const Representation& rep,
                               const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << format_representation(rep);
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path);
}

}  // namespace krep

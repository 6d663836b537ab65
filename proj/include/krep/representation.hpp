#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace krep {

enum class BuildMode { kGeneral, kLinear };

const char* mode_name(BuildMode mode);
BuildMode parse_mode(std::string_view name);

struct RepresentationMetadata {
  BuildMode mode = BuildMode::kGeneral;
  std::uint32_t matching_count = 0;  // L
  std::uint64_t segment_size = 0;    // t
  double p = 0.0;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  double constant_scale = 1.0;
  std::uint32_t build_attempts = 0;
  std::vector<std::uint32_t> family_attempts;  // one per matching

  friend bool operator==(const RepresentationMetadata&,
                         const RepresentationMetadata&) = default;
};

// Per-vertex element sets S_v over [0, ground_size) with threshold k. A
// tuple is an edge iff the sets of its vertices share at least k elements.
struct Representation {
  std::uint32_t n = 0;
  std::uint64_t k = 1;
  std::uint64_t ground_size = 0;
  std::vector<std::vector<std::uint64_t>> vertex_sets;  // sorted ascending
  RepresentationMetadata metadata;

  friend bool operator==(const Representation&,
                         const Representation&) = default;
};

// .rep text format. Metadata travels in '#' lines as "# key value"; the
// first data line is "n k groundSize", followed by "v c e_1 .. e_c" per
// vertex. Reals are written with 17 significant digits.
std::string format_representation(const Representation& rep);
Representation parse_representation(std::istream& in);
Representation parse_representation(std::string_view text);

Representation read_representation_file(const std::string& path);
void write_representation_file(const Representation& rep,
                               const std::string& path);

}  // namespace krep

#pragma once

#include <array>
#include <cstdint>

namespace krep {

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2,
// 3", SC'11). Counter-based: a 128-bit counter is encrypted under a 64-bit
// key, so a stream is fully determined by its key and the position within
// it. Output is identical on every platform.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Block encrypt(Block counter, Key key);
};

// Sequential stream of 32-bit words drawn from Philox blocks with counter
// 0, 1, 2, ... under a key derived from `seed`.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Unbiased integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  Philox4x32::Key key_;
  std::uint64_t block_index_ = 0;
  Philox4x32::Block buffer_{};
  int position_ = 4;
};

// Bernoulli(p) against 32-bit words: a word w succeeds iff w < threshold.
// p = 1 maps to 2^32 so every word succeeds; p = 0 maps to 0.
std::uint64_t bernoulli_threshold(double p);

// Mixes a master seed with an index into an independent child seed
// (SplitMix64 finalizer over seed + golden-ratio * (index + 1)).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace krep

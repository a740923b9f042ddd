#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

#include "braidlab/word.hpp"

namespace braidlab {

/// Deterministic across platforms: only the raw mt19937_64 stream is used,
/// never the implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> salt);

/// Non-backtracking walk of exactly `length` letters over the alphabet and
/// its inverses; the result is freely reduced. Empty alphabet gives empty.
Word random_reduced_word(Rng& rng, GroupContext const& ctx, std::span<Letter const> alphabet, int length);

/// Uniform letters with immediate cancellation; draws are repeated until the
/// reduced length reaches at least length/2 (bounded number of attempts, then
/// falls back to a non-backtracking walk).
Word random_word(Rng& rng, GroupContext const& ctx, std::span<Letter const> alphabet, int length);

}  // namespace braidlab

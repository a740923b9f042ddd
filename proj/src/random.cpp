#include "braidlab/random.hpp"

#include <limits>
#include <vector>

namespace braidlab {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    std::uint64_t v = engine_();
    if (v < limit) return v % bound;
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> salt) {
  // splitmix64 finalizer folded over the salt
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(seed);
  for (auto s : salt) h = mix(h ^ s);
  return h;
}

Word random_reduced_word(Rng& rng, GroupContext const& ctx, std::span<Letter const> alphabet, int length) {
  std::vector<Letter> out;
  if (alphabet.empty() || length <= 0) return Word(ctx);
  out.reserve(length);
  std::uint64_t const choices = 2 * alphabet.size();
  while (static_cast<int>(out.size()) < length) {
    auto k = rng.below(choices);
    Letter l = alphabet[k / 2];
    if (k % 2) l = l.inverse();
    if (!out.empty() && out.back().cancels(l)) continue;
    out.push_back(l);
  }
  return Word(ctx, std::move(out));
}

Word random_word(Rng& rng, GroupContext const& ctx, std::span<Letter const> alphabet, int length) {
  if (alphabet.empty() || length <= 0) return Word(ctx);
  constexpr int kAttempts = 256;
  std::uint64_t const choices = 2 * alphabet.size();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Letter> out;
    for (int c = 0; c < length; ++c) {
      auto k = rng.below(choices);
      Letter l = alphabet[k / 2];
      if (k % 2) l = l.inverse();
      if (!out.empty() && out.back().cancels(l))
        out.pop_back();
      else
        out.push_back(l);
    }
    if (2 * static_cast<int>(out.size()) >= length) return Word(ctx, std::move(out));
  }
  return random_reduced_word(rng, ctx, alphabet, length);
}

}  // namespace braidlab

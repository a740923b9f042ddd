#pragma once

// Test-side generators and oracles. These deliberately avoid the library's
// own reducer and RNG helpers so they can cross-check them.

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "braidlab/parse.hpp"
#include "braidlab/word.hpp"

namespace testing {

using namespace braidlab;

inline std::uint64_t seed(std::uint64_t salt = 0) {
  std::uint64_t base = 20261016;
  if (char const* s = std::getenv("BRAIDLAB_SEED"); s && *s) base = std::stoull(s);
  return base * 0x9e3779b97f4a7c15ULL + salt;
}

inline Word W(std::string const& text, GroupContext const& ctx) { return parse_word(text, ctx); }

/// Uniform letters and signs over the context generators, unreduced.
inline Word raw_word(std::mt19937_64& rng, GroupContext const& ctx, int length) {
  auto const gens = ctx.generators();
  std::vector<Letter> out;
  if (gens.empty()) return Word(ctx);
  for (int k = 0; k < length; ++k) {
    Letter l = gens[rng() % gens.size()];
    if (rng() & 1) l = l.inverse();
    out.push_back(l);
  }
  return Word(ctx, std::move(out));
}

/// Quadratic reducer: delete the first cancelling pair until none is left.
inline Word naive_reduce(Word const& w) {
  std::vector<Letter> v(w.letters().begin(), w.letters().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
      if (v[k].cancels(v[k + 1])) {
        v.erase(v.begin() + k, v.begin() + k + 2);
        changed = true;
        break;
      }
  }
  return Word(w.context(), std::move(v));
}

inline int binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace testing

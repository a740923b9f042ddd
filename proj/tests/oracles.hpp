#pragma once

// Independent oracles shared by the unit tests and the acceptance gate.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "braidlab/presentation.hpp"
#include "braidlab/reduced_free.hpp"
#include "braidlab/surface.hpp"
#include "support.hpp"

namespace testing {

// Relator counts, from the enumerator and from closed forms.
inline std::map<std::string, int> family_counts(Presentation const& p, LHSampler const& lh) {
  std::map<std::string, int> out;
  for (auto const& f : p.families) out[f.tag] = 0;
  for_each_relator(p, lh, [&](Relator const& r) { ++out[r.tag]; });
  return out;
}

// Closed forms, computed from the index conditions by hand.
inline std::map<std::string, int> expected_counts(Family fam, int n, int g, int lh_samples) {
  int const G = 2 * g;
  int const c2 = binom(n, 2), c3 = binom(n, 3), c4 = binom(n, 4);
  std::map<std::string, int> m;
  bool const hat = fam == Family::HatPBn || fam == Family::HatBn;
  if (fam == Family::PBn || fam == Family::HatPBn) {
    if (hat) m["LH1"] = c2 * lh_samples;
    m["PR4"] = 2 * c4 + c3;
    m["PR5"] = c4 + c3;
    if (g >= 1) {
      m["PR1"] = 1;
      m["PR2"] = hat ? c2 * (G - 1) * (G - 1) : c2 * G * (G - 1);
      m["PR3"] = hat ? c2 * (G - 1) : c2 * G;
      m["PR6"] = 2 * c3 * G;
      m["PR7"] = (c3 + c2) * G;
      m["PR8"] = std::max(n - 1, 0);
    }
  } else {
    if (hat) m["LH"] = (n - 1) * lh_samples;
    m["R1"] = binom(n - 2, 2);
    m["R2"] = std::max(n - 2, 0);
    if (g >= 1) {
      m["R3"] = 1;
      m["R4"] = n < 2 ? 0 : (hat ? (G - 1) * (G - 1) : G * (G - 1));
      m["R5"] = n < 2 ? 0 : (hat ? G - 1 : G);
      m["R6"] = G * std::max(n - 2, 0);
    }
  }
  return m;
}

// Finite quotient oracle: a homomorphism pi_1 -> S_k. Words that Dehn calls
// trivial must die here, and words that survive here must be nontrivial.
using Perm = std::vector<int>;  // p[x] = image of x

inline Perm compose(Perm const& p, Perm const& q) {  // x -> q(p(x)): p first
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

inline Perm inverse(Perm const& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

inline std::vector<std::vector<int>> cycles(Perm const& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size());
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = static_cast<int>(s); !seen[x]; x = p[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.size() < b.size(); });
  return out;
}

struct Representation {
  std::vector<Perm> image;  // image[r-1] for a_r

  Perm of(Word const& w) const {
    Perm acc(image[0].size());
    std::iota(acc.begin(), acc.end(), 0);
    for (auto const& l : w.letters()) acc = compose(acc, l.sign > 0 ? image[l.j - 1] : inverse(image[l.j - 1]));
    return acc;
  }
  bool kills(Word const& w) const {
    auto const p = of(w);
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p[x] != static_cast<int>(x)) return false;
    return true;
  }
};

// a_1 .. a_{2g-1} random involutions, a_{2g} chosen so that the relator dies:
// it must conjugate P = a_1 ... a_{2g-1} to its reverse Q = P^-1.
inline Representation random_representation(std::mt19937_64& rng, int g, int k) {
  Representation rep;
  for (int r = 1; r < 2 * g; ++r) {
    Perm p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> pts(k);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    for (int m = 0; m + 1 < k; m += 2)
      if (rng() % 4) std::swap(p[pts[m]], p[pts[m + 1]]);
    rep.image.push_back(p);
  }
  Perm P(k);
  std::iota(P.begin(), P.end(), 0);
  for (auto const& a : rep.image) P = compose(P, a);
  Perm const Q = inverse(P);
  auto cp = cycles(P), cq = cycles(Q);
  Perm c(k);  // c(P(x)) = Q(c(x))
  for (std::size_t m = 0; m < cp.size(); ++m) {
    std::size_t const shift = rng() % cq[m].size();
    for (std::size_t t = 0; t < cp[m].size(); ++t) c[cp[m][t]] = cq[m][(t + shift) % cq[m].size()];
  }
  rep.image.push_back(c);
  return rep;
}

inline Word random_pi1(std::mt19937_64& rng, int g, int length) {
  return free_reduce(testing::raw_word(rng, GroupContext::pi1(g), length));
}

inline bool abelian_trivial(Word const& w, int g) {
  for (int r = 1; r <= 2 * g; ++r)
    if (exponent_sum(w, Letter::surf_a(1, r)) != 0) return false;
  return true;
}

// Map-based multilinear series, kept apart from the library's basis layout.
using Naive = std::map<std::vector<int>, MultilinearSeries::Coefficient>;

inline Naive naive_mul(Naive const& a, Naive const& b) {
  Naive out;
  for (auto const& [ma, ca] : a)
    for (auto const& [mb, cb] : b) {
      bool clash = false;
      for (int i : ma)
        for (int j : mb) clash = clash || i == j;
      if (clash) continue;
      auto m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out[m] += ca * cb;
    }
  std::erase_if(out, [](auto const& kv) { return kv.second == 0; });
  return out;
}

inline Naive naive_expand(Word const& w) {
  Naive s{{{}, 1}};
  for (auto const& l : w.letters()) s = naive_mul(s, Naive{{{}, 1}, {{int{l.i}}, l.sign}});
  return s;
}

inline Naive to_naive(MultilinearSeries const& s) {
  Naive out;
  for (auto const& [m, c] : s.terms()) out[m] = c;
  return out;
}

}  // namespace testing

#pragma once

// Milnor's reduced free group RF(k) through its Magnus expansion
//
//   x_i -> 1 + X_i,   x_i^-1 -> 1 - X_i,
//
// in the ring of non-commuting power series where every monomial with a
// repeated index vanishes. The expansion is faithful on RF(k), so a word is
// trivial in RF(k) iff its series is exactly 1. Disk braids act on RF(n)
// through the Artin action; a pure braid is link-homotopically trivial iff
// this action is the identity.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidlab/homs.hpp"
#include "braidlab/verdict.hpp"
#include "braidlab/word.hpp"

namespace braidlab {

inline constexpr int kMaxSeriesRank = 6;

class MonomialBasis;

/// Integer combination of monomials X_{i1} X_{i2} ... X_{id} with pairwise
/// distinct indices in 1..rank (d = 0 is the constant term).
class MultilinearSeries {
 public:
  using Coefficient = boost::multiprecision::cpp_int;

  /// The zero series; 0 <= rank <= kMaxSeriesRank.
  explicit MultilinearSeries(int rank);

  static MultilinearSeries one(int rank);
  /// 1 + sign * X_i
  static MultilinearSeries generator(int rank, int i, int sign = 1);
  /// The bare monomial with coefficient 1.
  static MultilinearSeries monomial(int rank, std::span<int const> indices);

  int rank() const noexcept { return rank_; }
  Coefficient coefficient(std::span<int const> indices) const;
  Coefficient const& constant() const { return coeffs_.front(); }
  bool is_one() const;
  bool is_zero() const;
  /// Nonzero terms ordered by degree, then lexicographically.
  std::vector<std::pair<std::vector<int>, Coefficient>> terms() const;
  std::size_t term_count() const;

  MultilinearSeries operator+(MultilinearSeries const& o) const;
  MultilinearSeries operator-(MultilinearSeries const& o) const;
  MultilinearSeries operator*(MultilinearSeries const& o) const;
  /// Inverse of a series with constant term 1.
  MultilinearSeries inverse_unit() const;
  /// In place: *this <- *this * (1 + sign X_i).
  void right_multiply_generator(int i, int sign);

  /// "1 + X1 X2 - X2 X1"
  std::string to_string() const;

  friend bool operator==(MultilinearSeries const& a, MultilinearSeries const& b) {
    return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int rank_;
  std::shared_ptr<MonomialBasis const> basis_;
  std::vector<Coefficient> coeffs_;  // indexed by basis position
};

/// Expansion of a word of a free group context; throws ContextError on
/// non-x letters or rank > kMaxSeriesRank.
MultilinearSeries magnus_expand(Word const& w);
Verdict rf_is_trivial(Word const& w);
OraclePtr reduced_free_oracle(int rank);

/// Endomorphism of RF(n) given by the expansions of the images of x_1..x_n
/// (and of their inverses).
struct ReducedEndo {
  int rank = 0;
  std::vector<MultilinearSeries> images;
  std::vector<MultilinearSeries> inverse_images;

  static ReducedEndo identity(int n);
  bool is_identity() const;
};

/// Artin action of a disk braid word (s_i, T_{i,j}, t_{i,j} letters; T and t
/// are spelled in sigmas first). Letters act left to right:
///   s_i:    x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
///   s_i^-1: x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
/// The composite sends x to  phi_{l1}(phi_{l2}(...(x))).
ReducedEndo artin_act(Word const& w);

/// Same action on free-group words (no truncation); images grow
/// exponentially with braid length, intended for short words.
std::vector<Word> artin_act_words(Word const& w);

class NotPureBraid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Membership of a pure disk braid in H_n(D). Throws NotPureBraid when the
/// induced permutation is not the identity, ContextError on surface letters.
Verdict lh_trivial_disk(Word const& w);

/// Product of `size` factors c [t_{i,j}, h t_{i,j} h^-1] c^-1 in PB_n(D)
/// with t_{i,j} = T_{i,j} T_{i,j-1}^-1 and random pure words c, h over the
/// T generators (length <= 3). An element of H_n(D) by construction.
Word sample_hn_element(int n, std::uint64_t seed, int size);

}  // namespace braidlab

#pragma once

// Letters, group contexts and the free-group word calculus shared by every
// other part of the library.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidlab {

enum class Gen : std::uint8_t {
  Sigma,   // s_i
  SurfA,   // a_{i,r}
  SmallT,  // t_{i,j}
  BigT,    // T_{i,j}
  CapA,    // A_{j,s}
  FreeX,   // x_i
};

/// One signed generator occurrence. Indices are 1-based; the second index is
/// zero for the single-index kinds (Sigma, FreeX).
struct Letter {
  Gen kind = Gen::FreeX;
  std::int8_t sign = 1;
  std::uint16_t i = 0;
  std::uint16_t j = 0;

  constexpr Letter inverse() const noexcept { return {kind, static_cast<std::int8_t>(-sign), i, j}; }
  constexpr Letter positive() const noexcept { return {kind, 1, i, j}; }
  constexpr bool cancels(Letter const& o) const noexcept {
    return kind == o.kind && i == o.i && j == o.j && sign == -o.sign;
  }

  friend constexpr auto operator<=>(Letter const&, Letter const&) = default;

  static constexpr Letter sigma(int i, int sign = 1) { return make(Gen::Sigma, i, 0, sign); }
  static constexpr Letter surf_a(int i, int r, int sign = 1) { return make(Gen::SurfA, i, r, sign); }
  static constexpr Letter small_t(int i, int j, int sign = 1) { return make(Gen::SmallT, i, j, sign); }
  static constexpr Letter big_t(int i, int j, int sign = 1) { return make(Gen::BigT, i, j, sign); }
  static constexpr Letter cap_a(int j, int s, int sign = 1) { return make(Gen::CapA, j, s, sign); }
  static constexpr Letter free_x(int i, int sign = 1) { return make(Gen::FreeX, i, 0, sign); }

 private:
  static constexpr Letter make(Gen k, int i, int j, int sign) {
    return {k, static_cast<std::int8_t>(sign < 0 ? -1 : 1), static_cast<std::uint16_t>(i),
            static_cast<std::uint16_t>(j)};
  }
};

enum class Family : std::uint8_t {
  Bn,          // braid group B_n(M)
  PBn,         // pure braid group PB_n(M)
  HatBn,       // generalized string links up to link-homotopy
  HatPBn,      // string links up to link-homotopy
  FreeGroup,   // free group on x_1..x_rank
  Pi1Surface,  // pi_1(M)^n, letters a_{i,r} with i the factor
  Symmetric,   // Sigma_n, letters s_i
};

std::string to_string(Family f);

class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which group a word lives in. `g == 0` means the disk and is only allowed
/// for the four braid-type families. For FreeGroup `n` holds the rank; for
/// Pi1Surface it holds the number of factors.
struct GroupContext {
  Family family = Family::FreeGroup;
  int n = 1;
  int g = 0;

  static GroupContext braid(int n, int g) { return make(Family::Bn, n, g); }
  static GroupContext pure(int n, int g) { return make(Family::PBn, n, g); }
  static GroupContext hat_braid(int n, int g) { return make(Family::HatBn, n, g); }
  static GroupContext hat_pure(int n, int g) { return make(Family::HatPBn, n, g); }
  static GroupContext free(int rank) { return make(Family::FreeGroup, rank, 0); }
  static GroupContext pi1(int g, int factors = 1) { return make(Family::Pi1Surface, factors, g); }
  static GroupContext symmetric(int n) { return make(Family::Symmetric, n, 0); }

  static GroupContext make(Family family, int n, int g);

  bool is_disk() const noexcept { return g == 0; }
  bool is_braid_type() const noexcept {
    return family == Family::Bn || family == Family::PBn || family == Family::HatBn ||
           family == Family::HatPBn;
  }
  bool is_pure_type() const noexcept { return family == Family::PBn || family == Family::HatPBn; }

  /// True when `l` names a generator or derived symbol of this group.
  bool admits(Letter const& l) const noexcept;
  /// True when `l` is one of the presentation's generators (not a derived symbol).
  bool is_ambient(Letter const& l) const noexcept;
  /// The presentation generators, positive sign, in a fixed order.
  std::vector<Letter> generators() const;

  friend bool operator==(GroupContext const&, GroupContext const&) = default;
};

std::string describe(GroupContext const& ctx);

/// Immutable sequence of letters in a context. Construction validates every
/// letter but does not reduce; `concat` and `parse_word` always reduce.
class Word {
 public:
  explicit Word(GroupContext ctx) : ctx_(ctx) {}
  Word(GroupContext ctx, std::vector<Letter> letters);
  Word(GroupContext ctx, std::initializer_list<Letter> letters)
      : Word(ctx, std::vector<Letter>(letters)) {}

  GroupContext const& context() const noexcept { return ctx_; }
  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter const& operator[](std::size_t k) const { return letters_[k]; }

  bool is_reduced() const noexcept;
  /// Same letters in another context; validated against `ctx`.
  Word recontext(GroupContext ctx) const { return Word(ctx, letters_); }

  friend bool operator==(Word const&, Word const&) = default;

 private:
  GroupContext ctx_;
  std::vector<Letter> letters_;
};

Word free_reduce(Word const& w);
Word invert(Word const& w);
/// Concatenation followed by free reduction. Throws ContextError on mismatch.
Word concat(Word const& u, Word const& v);
Word concat(std::initializer_list<Word> parts);
/// u v u^-1 v^-1, reduced.
Word commutator(Word const& u, Word const& v);
/// h u h^-1, reduced.
Word conjugate(Word const& u, Word const& h);
Word power(Word const& w, int k);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// For freely reduced w returns the cyclically reduced core c and u with
/// w = u c u^-1.
CyclicReduction cyclic_reduce(Word const& w);

int exponent_sum(Word const& w, Letter generator);

class MissingImage : public std::runtime_error {
 public:
  explicit MissingImage(Letter const& l);
  Letter letter;
};

/// Image of a positive letter, or nullopt when the table has no entry.
using ImageLookup = std::function<std::optional<Word>(Letter const& positive)>;

/// Homomorphic image of w: each letter is replaced by its image (inverted for
/// negative letters) and the result freely reduced in `target`.
Word substitute(Word const& w, GroupContext const& target, ImageLookup const& images);

}  // namespace braidlab

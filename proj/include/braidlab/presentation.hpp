#pragma once

// Finite presentations of B_n(M), PB_n(M) and their link-homotopy quotients,
// the derived symbols T_{i,j}, t_{i,j}, A_{j,s}, and bounded enumeration of
// every relator family (the infinite LH family is sampled).

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidlab/word.hpp"

namespace braidlab {

/// The braid-generator context matching a braid-type context: Bn for Bn/PBn,
/// HatBn for HatBn/HatPBn, same (n, g).
GroupContext braid_context_of(GroupContext const& ctx);

/// s_i s_{i+1} ... s_{j-2} s_{j-1}^2 s_{j-2} ... s_i in braid_context_of(ctx).
/// T_{i,i} is the empty word.
Word expand_big_t(int i, int j, GroupContext const& ctx);

/// s_i ... s_{j-2} s_{j-1}^2 s_{j-2}^-1 ... s_i^-1 in braid_context_of(ctx).
Word expand_small_t(int i, int j, GroupContext const& ctx);
inline Word expand_small_t(int j, GroupContext const& ctx) { return expand_small_t(1, j, ctx); }

/// A_{j,s} = a_{j,1}...a_{j,s-1} a_{j,s+1}^-1 ... a_{j,2g}^-1 in pure contexts;
/// in Bn/HatBn only j = 2 exists and the word is conjugated by s_1^-1 on both sides.
Word expand_cap_a(int j, int s, GroupContext const& ctx);

/// Expansion of one letter into the presentation generators of its context.
Word expand_letter(Letter const& l, GroupContext const& ctx);
/// Replaces every derived symbol by its expansion; the result contains only
/// generators of w's context (GroupContext::is_ambient).
Word expand_to_ambient(Word const& w);
/// Rewrites a word without surface letters over s_i in braid_context_of(ctx).
Word to_sigma_word(Word const& w);

using IndexTuple = std::vector<int>;

struct RelatorFamily {
  std::string tag;
  std::string condition;            // index side conditions, human readable
  std::vector<IndexTuple> domain;   // every admissible index tuple
  bool takes_conjugator = false;    // LH-type: one relator per sampled h
  /// Emits LHS * RHS^-1, freely reduced. `h` is non-null iff takes_conjugator.
  std::function<Word(IndexTuple const&, Word const* h)> emit;
  /// For LH families: the strand whose free group h is drawn from.
  std::function<int(IndexTuple const&)> strand_of;
};

struct Presentation {
  GroupContext context;
  std::vector<Letter> generators;
  std::vector<RelatorFamily> families;

  RelatorFamily const* find(std::string_view tag) const;
  bool has_conjugator_family() const;
};

class UnsupportedPresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Presentation build_presentation(Family family, int n, int g);

/// Deterministic sampler for the conjugators h of the LH relators.
struct LHSampler {
  int max_h_length = 4;
  int samples = 64;
  std::uint64_t seed = 0;

  /// Basis of F(2g+n-i) attached to strand i: a_{i,1..2g} and t_{i,i+1..n}.
  std::vector<Letter> alphabet(GroupContext const& ctx, int strand) const;
  /// `samples` freely reduced words of length <= max_h_length; depends only on
  /// (seed, strand, tag_index).
  std::vector<Word> sample(GroupContext const& ctx, int strand, IndexTuple const& indices) const;
};

struct Relator {
  std::string tag;
  IndexTuple indices;
  std::optional<Word> conjugator;
  Word word;
};

/// Visits every relator once, families in presentation order, index tuples
/// in domain order, conjugators in sample order. Throws std::invalid_argument
/// when the presentation has an LH family and no sampler is supplied.
void for_each_relator(Presentation const& p, std::optional<LHSampler> const& lh,
                      std::function<void(Relator const&)> const& visit);
std::vector<Relator> enumerate_relators(Presentation const& p, std::optional<LHSampler> const& lh);

}  // namespace braidlab

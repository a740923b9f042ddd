#pragma once

// Word problem in pi_1(M) and pi_1(M)^n for a closed orientable surface of
// genus g >= 1. The relator is
//
//   R = a_1^-1 a_2^-1 ... a_2g^-1 a_1 a_2 ... a_2g,
//
// whose symmetrized closure has only pieces of length 1, so Dehn's algorithm
// decides triviality for g >= 2. For the torus pi_1 = Z^2 and exponent sums
// decide.

#include <string>
#include <vector>

#include "braidlab/verdict.hpp"
#include "braidlab/word.hpp"

namespace braidlab {

/// R in the single-factor context pi1(g).
Word surface_relator(int g);

/// Dehn's algorithm on a word of pi1(g), g >= 2: free and cyclic reduction,
/// then repeated replacement of any cyclic subword that is more than half of
/// a cyclic permutation of R^{+-1} by the inverse of the shorter complement.
/// Returns the terminal word (empty iff w is trivial).
Word dehn_reduce(Word const& w);

/// Exact verdict for a word of pi1(g), g >= 1.
Verdict is_trivial_pi1(Word const& w);

/// Element of pi_1(M)^n; each component lives in pi1(g) (one factor).
struct Pi1Tuple {
  int g = 1;
  std::vector<Word> components;

  static Pi1Tuple identity(int n, int g);
  std::size_t size() const noexcept { return components.size(); }
  friend bool operator==(Pi1Tuple const&, Pi1Tuple const&) = default;
};

std::string format_tuple(Pi1Tuple const& t);

/// Componentwise verdict; Trivial iff every component is.
Verdict tuple_is_trivial(Pi1Tuple const& t);

/// Projects a word of pi1(g, n factors) onto its factors (letter a_{i,r}
/// contributes a_r to component i); components are freely reduced.
Pi1Tuple split_components(Word const& w);
/// Inverse of split_components: component 1 first, then 2, ...
Word join_components(Pi1Tuple const& t);

}  // namespace braidlab

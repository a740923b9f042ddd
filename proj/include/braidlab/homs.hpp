#pragma once

// Homomorphisms given by generator images, triviality oracles for their
// targets, and the specific maps between the braid and string-link groups:
//
//   f    : PB_n(D)    -> PB_n(M)       inclusion
//   f^   : PB^_n(D)   -> PB^_n(M)      induced inclusion
//   p1   : PB_n(D)    -> PB^_n(D)      quotient
//   p2   : PB_n(M)    -> PB^_n(M)      quotient
//   p    : B_n(M)     -> B^_n(M)       quotient
//   theta: PB_n(M)    -> pi_1(M)^n     strand projection
//   theta^: PB^_n(M)  -> pi_1(M)^n     induced strand projection
//   psi  : B^_n(M)    -> Sigma_n       induced permutation

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/presentation.hpp"
#include "braidlab/surface.hpp"
#include "braidlab/verdict.hpp"
#include "braidlab/word.hpp"

namespace braidlab {

class TrivialityOracle {
 public:
  virtual ~TrivialityOracle() = default;
  virtual GroupContext context() const = 0;
  virtual Verdict decide(Word const& w) const = 0;
  virtual std::string name() const = 0;
};

using OraclePtr = std::shared_ptr<TrivialityOracle const>;

/// Free groups: trivial iff the word reduces to empty.
OraclePtr free_group_oracle(GroupContext const& ctx);
/// pi_1(M)^k: componentwise Dehn / abelianization.
OraclePtr pi1_product_oracle(int g, int factors);
/// Sigma_n: trivial iff the induced permutation is the identity.
OraclePtr symmetric_oracle(int n);
/// Any group without a decision procedure: freely trivial words are Trivial,
/// everything else Unknown.
OraclePtr undecided_oracle(GroupContext const& ctx);

struct Permutation {
  std::vector<int> image;  // image[p-1] = pi(p)

  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // (i i+1)
  int n() const noexcept { return static_cast<int>(image.size()); }
  int operator()(int p) const { return image.at(p - 1); }
  /// (this o other)(p) = this(other(p))
  Permutation after(Permutation const& other) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// "1→2 2→3 3→1"
  std::string to_string() const;
  friend bool operator==(Permutation const&, Permutation const&) = default;
};

/// pi = tau_{i1} o tau_{i2} o ... o tau_{ik} for a word whose k-th sigma letter
/// is s_{ik}^{+-1}: the map is a homomorphism onto Sigma_n when words are read
/// left to right. pi(p) is the starting position of the strand ending at p.
/// Surface and pure letters contribute the identity.
Permutation permutation_of(Word const& w);

class GeneratorMap {
 public:
  /// `images` must cover every generator of `domain` (derived symbols are
  /// optional and are expanded when absent). Throws MissingImage / ContextError.
  GeneratorMap(std::string name, GroupContext domain, OraclePtr target, std::map<Letter, Word> images);

  std::string const& name() const noexcept { return name_; }
  GroupContext const& domain() const noexcept { return domain_; }
  GroupContext target() const { return oracle_->context(); }
  TrivialityOracle const& oracle() const noexcept { return *oracle_; }
  std::optional<Word> image(Letter const& positive) const;

 private:
  std::string name_;
  GroupContext domain_;
  OraclePtr oracle_;
  std::map<Letter, Word> images_;
};

/// Substitution followed by free reduction in the target.
Word apply(GeneratorMap const& map, Word const& w);

GeneratorMap theta_hat_map(int n, int g);
GeneratorMap theta_map(int n, int g);
GeneratorMap f_map(int n, int g);
GeneratorMap f_hat_map(int n, int g);
GeneratorMap p1_map(int n);
GeneratorMap p2_map(int n, int g);
GeneratorMap projection_map(int n, int g);
/// Domain is B^_n(M) by default; Bn gives the permutation map of B_n(M).
GeneratorMap psi_map(int n, int g, Family domain = Family::HatBn);

/// theta^ with a_{1,1} sent to a_2 in component 1.
GeneratorMap corrupted_theta_hat_map(int n, int g);
/// psi with a_{1,1} sent to the transposition (1 2).
GeneratorMap corrupted_psi_map(int n, int g);

/// theta^ on a word of PB^_n(M) (or PB_n(M)); throws ContextError on braid letters.
Pi1Tuple theta_hat(Word const& w);
/// Word spelling component i over a_{i,*}, components in order.
Word theta_preimage(Pi1Tuple const& t, int n);

struct RelatorFailure {
  std::string tag;
  IndexTuple indices;
  std::optional<std::string> conjugator;
  std::string relator;
  std::string image;
};

struct WellDefinedReport {
  std::string map_name;
  GroupContext domain;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<RelatorFailure> failed;
  std::vector<RelatorFailure> unknown;

  bool ok() const noexcept { return failed.empty() && unknown.empty(); }
};

/// Decides, for every enumerated relator of the domain presentation, whether
/// its image dies in the target. Relators are checked in parallel; the
/// report order is the enumeration order.
WellDefinedReport verify_well_defined(GeneratorMap const& map, std::optional<LHSampler> const& lh);

}  // namespace braidlab

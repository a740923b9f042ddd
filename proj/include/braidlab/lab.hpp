#pragma once

// Randomized checks of the exact-sequence consequences over a grid of
// (n, g): commutativity of the projection square, Im(f^) in ker(theta^),
// surjectivity of theta^, the disk H_n sequence, and well-definedness of
// theta^ and psi on every enumerated relator.
//
// The inclusion ker(theta^) in <Im f^>^N is not checked: it needs a word
// problem for PB^_n(M) that is not available.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidlab/presentation.hpp"

namespace braidlab {

enum class Fixture {
  None,
  CorruptTheta,  // the lab uses corrupted_theta_hat_map wherever theta^ appears
};

struct SuiteConfig {
  int n_min = 1;
  int n_max = 3;
  int g_min = 1;
  int g_max = 2;
  int length = 12;
  int samples = 200;
  std::uint64_t seed = 42;
  LHSampler lh{};
  Fixture fixture = Fixture::None;

  /// Throws std::invalid_argument on empty or negative ranges.
  void validate() const;
};

/// A failing (or undecided) instance with every word needed to replay it.
struct Witness {
  std::string cell;                                        // "n=2 g=1"
  std::vector<std::pair<std::string, std::string>> words;  // role -> word
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::size_t population = 0;
  std::size_t passed = 0;
  std::vector<Witness> failures;
  std::vector<Witness> unknown;
  double wall_ms = 0;

  bool ok() const noexcept { return failures.empty() && unknown.empty(); }
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckReport> checks;

  bool ok() const noexcept;
  std::size_t failure_count() const noexcept;
  CheckReport const* find(std::string const& name) const;
};

SuiteReport check_diagram_commutes(SuiteConfig const& cfg);
SuiteReport check_im_in_ker(SuiteConfig const& cfg);
SuiteReport check_surjectivity(SuiteConfig const& cfg);
/// Disk case; uses n in [max(2, n_min), n_max] and the g range only for psi o p.
SuiteReport check_hn_sequence(SuiteConfig const& cfg);
SuiteReport check_theta_well_defined(SuiteConfig const& cfg);
SuiteReport check_psi_well_defined(SuiteConfig const& cfg);

/// Every check above, run concurrently; checks appear in a fixed order.
SuiteReport run_all(SuiteConfig const& cfg);

std::string to_string(Fixture f);
Fixture fixture_from_string(std::string const& s);

}  // namespace braidlab

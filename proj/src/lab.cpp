#include "braidlab/lab.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <stdexcept>

#include "braidlab/homs.hpp"
#include "braidlab/parse.hpp"
#include "braidlab/random.hpp"
#include "braidlab/reduced_free.hpp"
#include "braidlab/surface.hpp"

namespace braidlab {

void SuiteConfig::validate() const {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("need 1 <= n_min <= n_max");
  if (g_min < 1 || g_max < g_min) throw std::invalid_argument("need 1 <= g_min <= g_max");
  if (length < 0 || samples < 0) throw std::invalid_argument("length and samples must be non-negative");
  if (lh.samples < 0 || lh.max_h_length < 0) throw std::invalid_argument("LH sampler bounds must be non-negative");
}

bool SuiteReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.ok(); });
}

std::size_t SuiteReport::failure_count() const noexcept {
  std::size_t k = 0;
  for (auto const& c : checks) k += c.failures.size();
  return k;
}

CheckReport const* SuiteReport::find(std::string const& name) const {
  for (auto const& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string to_string(Fixture f) { return f == Fixture::CorruptTheta ? "corrupt-theta" : "none"; }

Fixture fixture_from_string(std::string const& s) {
  if (s == "none") return Fixture::None;
  if (s == "corrupt-theta") return Fixture::CorruptTheta;
  throw std::invalid_argument("unknown fixture '" + s + "'");
}

namespace {

enum CheckId : std::uint64_t { kDiagram = 1, kImKer, kSurj, kHn, kTheta, kPsi };

std::string cell_name(int n, int g) { return "n=" + std::to_string(n) + " g=" + std::to_string(g); }

GeneratorMap lab_theta(SuiteConfig const& cfg, int n, int g) {
  return cfg.fixture == Fixture::CorruptTheta ? corrupted_theta_hat_map(n, g) : theta_hat_map(n, g);
}

// First component index where the tuples differ in pi1, or -1.
int tuple_mismatch(Pi1Tuple const& a, Pi1Tuple const& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (is_trivial_pi1(concat(a.components[k], invert(b.components[k]))) != Verdict::Trivial)
      return static_cast<int>(k) + 1;
  return -1;
}

class Tally {
 public:
  explicit Tally(std::string name) { report_.name = std::move(name); }

  void pass() {
    ++report_.population;
    ++report_.passed;
  }
  void fail(Witness w) {
    ++report_.population;
    report_.failures.push_back(std::move(w));
  }
  void undecided(Witness w) {
    ++report_.population;
    report_.unknown.push_back(std::move(w));
  }
  void record(bool ok, std::function<Witness()> const& witness) { ok ? pass() : fail(witness()); }
  CheckReport take(std::chrono::steady_clock::time_point start) {
    report_.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return std::move(report_);
  }

 private:
  CheckReport report_;
};

SuiteReport single(SuiteConfig const& cfg, CheckReport r) {
  SuiteReport s{cfg, {}};
  s.checks.push_back(std::move(r));
  return s;
}

CheckReport diagram_commutes(SuiteConfig const& cfg) {
  auto const start = std::chrono::steady_clock::now();
  Tally tally("diagram_commutes");
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    auto const disk = GroupContext::pure(n, 0);
    auto const disk_gens = disk.generators();
    auto const p1 = p1_map(n);
    for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
      auto const surf = GroupContext::pure(n, g);
      auto const surf_gens = surf.generators();
      auto const f = f_map(n, g);
      auto const f_hat = f_hat_map(n, g);
      auto const p2 = p2_map(n, g);
      auto const theta = theta_map(n, g);
      auto const theta_h = lab_theta(cfg, n, g);
      Rng rng(mix_seed(cfg.seed, {kDiagram, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(g)}));
      for (int k = 0; k < cfg.samples; ++k) {
        // f^ o p1 = p2 o f
        Word const w = random_word(rng, disk, disk_gens, cfg.length);
        Word const left = apply(f_hat, apply(p1, w));
        Word const right = apply(p2, apply(f, w));
        tally.record(left == right, [&] {
          return Witness{cell_name(n, g),
                         {{"w", format_word(w)}, {"f_hat(p1(w))", format_word(left)}, {"p2(f(w))", format_word(right)}},
                         "routes differ letterwise"};
        });
        // theta^ o p2 = theta
        Word const v = random_word(rng, surf, surf_gens, cfg.length);
        auto const via_hat = split_components(apply(theta_h, apply(p2, v)));
        auto const direct = split_components(apply(theta, v));
        int const bad = tuple_mismatch(via_hat, direct);
        tally.record(bad < 0, [&] {
          return Witness{cell_name(n, g),
                         {{"v", format_word(v)}, {"theta_hat(p2(v))", format_tuple(via_hat)}, {"theta(v)", format_tuple(direct)}},
                         "component " + std::to_string(bad) + " differs in pi1"};
        });
      }
    }
  }
  return tally.take(start);
}

CheckReport im_in_ker(SuiteConfig const& cfg) {
  auto const start = std::chrono::steady_clock::now();
  Tally tally("im_in_ker");
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    auto const disk = GroupContext::pure(n, 0);
    auto const disk_gens = disk.generators();
    auto const p1 = p1_map(n);
    for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
      auto const hat = GroupContext::hat_pure(n, g);
      auto const hat_gens = hat.generators();
      auto const f_hat = f_hat_map(n, g);
      auto const theta_h = lab_theta(cfg, n, g);
      Rng rng(mix_seed(cfg.seed, {kImKer, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(g)}));
      for (int k = 0; k < cfg.samples; ++k) {
        Word const u = random_word(rng, disk, disk_gens, cfg.length);
        Word const c = random_word(rng, hat, hat_gens, rng.between(0, cfg.length));
        Word const x = conjugate(apply(f_hat, apply(p1, u)), c);
        auto const image = split_components(apply(theta_h, x));
        tally.record(tuple_is_trivial(image) == Verdict::Trivial, [&] {
          return Witness{cell_name(n, g),
                         {{"u", format_word(u)}, {"c", format_word(c)}, {"theta_hat(c f_hat(u) c^-1)", format_tuple(image)}},
                         "image is not the identity tuple"};
        });
      }
    }
  }
  return tally.take(start);
}

CheckReport surjectivity(SuiteConfig const& cfg) {
  auto const start = std::chrono::steady_clock::now();
  Tally tally("surjectivity");
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
      auto const pi1 = GroupContext::pi1(g);
      auto const pi1_gens = pi1.generators();
      auto const theta_h = lab_theta(cfg, n, g);
      Rng rng(mix_seed(cfg.seed, {kSurj, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(g)}));
      for (int k = 0; k < cfg.samples; ++k) {
        Pi1Tuple t = Pi1Tuple::identity(n, g);
        for (auto& comp : t.components) comp = random_word(rng, pi1, pi1_gens, rng.between(0, cfg.length));
        Word const pre = theta_preimage(t, n);
        auto const back = split_components(apply(theta_h, pre));
        tally.record(back == t && tuple_mismatch(back, t) < 0, [&] {
          return Witness{cell_name(n, g),
                         {{"t", format_tuple(t)}, {"preimage", format_word(pre)}, {"theta_hat(preimage)", format_tuple(back)}},
                         "round trip is not the identity"};
        });
      }
    }
  }
  return tally.take(start);
}

CheckReport hn_sequence(SuiteConfig const& cfg) {
  auto const start = std::chrono::steady_clock::now();
  Tally tally("hn_sequence");
  for (int n = std::max(2, cfg.n_min); n <= cfg.n_max; ++n) {
    std::string const cell = cell_name(n, 0);
    // H_n(D) members are link-homotopically trivial
    for (int k = 0; k < cfg.samples; ++k) {
      std::uint64_t const seed = mix_seed(cfg.seed, {kHn, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)});
      Word const h = sample_hn_element(n, seed, 1 + k % 3);
      Verdict const v = lh_trivial_disk(h);
      tally.record(v == Verdict::Trivial, [&] {
        return Witness{cell, {{"h", format_word(h)}}, "sampled H_n element is not link-homotopically trivial"};
      });
    }
    // pure generators are not
    auto const disk = GroupContext::pure(n, 0);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Word const t(disk, {Letter::big_t(i, j)});
        tally.record(lh_trivial_disk(t) == Verdict::Nontrivial,
                     [&] { return Witness{cell, {{"T", format_word(t)}}, "pure generator reported trivial"}; });
      }
    // psi o p agrees with the strand permutation, and s_1 leaves PB^_n
    for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
      auto const braid = GroupContext::braid(n, g);
      auto const gens = braid.generators();
      auto const p = projection_map(n, g);
      auto const psi = psi_map(n, g);
      Rng rng(mix_seed(cfg.seed, {kHn, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(g), 0x5053ULL}));
      for (int k = 0; k < cfg.samples; ++k) {
        Word const w = random_word(rng, braid, gens, cfg.length);
        auto const via_psi = permutation_of(apply(psi, apply(p, w)));
        auto const direct = permutation_of(w);
        tally.record(via_psi == direct, [&] {
          return Witness{cell_name(n, g), {{"w", format_word(w)}},
                         "psi(p(w)) = " + via_psi.to_string() + " but permutation_of(w) = " + direct.to_string()};
        });
      }
      Word const s1(braid, {Letter::sigma(1)});
      auto const image = permutation_of(apply(psi, apply(p, s1)));
      tally.record(image == Permutation::transposition(n, 1) && !image.is_identity(), [&] {
        return Witness{cell_name(n, g), {{"w", "s1"}}, "psi(s1) = " + image.to_string()};
      });
    }
  }
  return tally.take(start);
}

CheckReport well_defined(SuiteConfig const& cfg, std::string name, std::function<GeneratorMap(int, int)> const& make) {
  auto const start = std::chrono::steady_clock::now();
  Tally tally(std::move(name));
  for (int n = cfg.n_min; n <= cfg.n_max; ++n)
    for (int g = cfg.g_min; g <= cfg.g_max; ++g) {
      auto const report = verify_well_defined(make(n, g), cfg.lh);
      auto witness = [&](RelatorFailure const& f, std::string detail) {
        std::string idx;
        for (int v : f.indices) idx += (idx.empty() ? "" : ",") + std::to_string(v);
        Witness w{cell_name(n, g), {{"relator", f.relator}, {"image", f.image}}, f.tag + "(" + idx + "): " + detail};
        if (f.conjugator) w.words.emplace_back("h", *f.conjugator);
        return w;
      };
      for (std::size_t k = 0; k < report.passed; ++k) tally.pass();
      for (auto const& f : report.failed) tally.fail(witness(f, "image is nontrivial"));
      for (auto const& f : report.unknown) tally.undecided(witness(f, "oracle undecided"));
    }
  return tally.take(start);
}

CheckReport theta_well_defined(SuiteConfig const& cfg) {
  return well_defined(cfg, "theta_well_defined", [&](int n, int g) { return lab_theta(cfg, n, g); });
}

CheckReport psi_well_defined(SuiteConfig const& cfg) {
  return well_defined(cfg, "psi_well_defined", [](int n, int g) { return psi_map(n, g); });
}

}  // namespace

SuiteReport check_diagram_commutes(SuiteConfig const& cfg) {
  cfg.validate();
  return single(cfg, diagram_commutes(cfg));
}

SuiteReport check_im_in_ker(SuiteConfig const& cfg) {
  cfg.validate();
  return single(cfg, im_in_ker(cfg));
}

SuiteReport check_surjectivity(SuiteConfig const& cfg) {
  cfg.validate();
  return single(cfg, surjectivity(cfg));
}

SuiteReport check_hn_sequence(SuiteConfig const& cfg) {
  cfg.validate();
  return single(cfg, hn_sequence(cfg));
}

SuiteReport check_theta_well_defined(SuiteConfig const& cfg) {
  cfg.validate();
  return single(cfg, theta_well_defined(cfg));
}

SuiteReport check_psi_well_defined(SuiteConfig const& cfg) {
  cfg.validate();
  return single(cfg, psi_well_defined(cfg));
}

SuiteReport run_all(SuiteConfig const& cfg) {
  cfg.validate();
  using Check = CheckReport (*)(SuiteConfig const&);
  Check const order[] = {diagram_commutes, im_in_ker, surjectivity, hn_sequence, theta_well_defined, psi_well_defined};
  std::vector<std::future<CheckReport>> jobs;
  for (Check c : order) jobs.push_back(std::async(std::launch::async, c, std::cref(cfg)));
  SuiteReport out{cfg, {}};
  for (auto& j : jobs) out.checks.push_back(j.get());
  return out;
}

}  // namespace braidlab

// braidlab command line: word reduction, permutations, strand projections,
// surface and link-homotopy oracles, presentation dumps, homomorphism checks
// and the randomized exact-sequence suite.
//
// Exit codes: 0 pass / trivial, 1 fail / nontrivial, 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidlab/homs.hpp"
#include "braidlab/json.hpp"
#include "braidlab/lab.hpp"
#include "braidlab/parse.hpp"
#include "braidlab/presentation.hpp"
#include "braidlab/reduced_free.hpp"
#include "braidlab/surface.hpp"

using namespace braidlab;
using nlohmann::ordered_json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::uint64_t env_seed(std::uint64_t fallback) {
  if (char const* s = std::getenv("BRAIDLAB_SEED"); s && *s) {
    try {
      return std::stoull(s);
    } catch (std::exception const&) {
      throw std::invalid_argument("BRAIDLAB_SEED is not an unsigned integer: " + std::string(s));
    }
  }
  return fallback;
}

Family family_from_string(std::string const& s) {
  for (Family f : {Family::Bn, Family::PBn, Family::HatBn, Family::HatPBn, Family::FreeGroup, Family::Pi1Surface,
                   Family::Symmetric})
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown family '" + s + "'");
}

// Largest x-index in the text, so `reduce` works without --n.
int inferred_rank(std::string const& text) {
  static std::regex const x_letter(R"(x(\d+))");
  int rank = 1;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), x_letter); it != std::sregex_iterator(); ++it)
    rank = std::max(rank, std::stoi((*it)[1].str()));
  return rank;
}

GroupContext context_for(Family f, int n, int g) {
  switch (f) {
    case Family::FreeGroup: return GroupContext::free(n);
    case Family::Pi1Surface: return GroupContext::pi1(g, n);
    case Family::Symmetric: return GroupContext::symmetric(n);
    default: return GroupContext::make(f, n, g);
  }
}

void emit(bool json, ordered_json const& doc, std::string const& text) {
  if (json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int verdict_exit(Verdict v) { return v == Verdict::Trivial ? kPass : kFail; }

GeneratorMap map_named(std::string const& name, int n, int g) {
  if (name == "theta") return theta_hat_map(n, g);
  if (name == "theta-pb") return theta_map(n, g);
  if (name == "theta-corrupt") return corrupted_theta_hat_map(n, g);
  if (name == "psi") return psi_map(n, g);
  if (name == "psi-corrupt") return corrupted_psi_map(n, g);
  if (name == "f") return f_map(n, g);
  if (name == "f-hat") return f_hat_map(n, g);
  if (name == "p1") return p1_map(n);
  if (name == "p2") return p2_map(n, g);
  if (name == "p") return projection_map(n, g);
  throw std::invalid_argument("unknown map '" + name + "'");
}

char const* const kMapNames = "theta, theta-pb, theta-corrupt, psi, psi-corrupt, f, f-hat, p1, p2, p";

struct LhFlags {
  int len = 4;
  int samples = 64;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--lh-len", len, "Maximal length of sampled LH conjugators")->check(CLI::NonNegativeNumber);
    cmd->add_option("--lh-samples", samples, "LH conjugators per index tuple")->check(CLI::NonNegativeNumber);
    cmd->add_option("--lh-seed", seed, "LH sampler seed (default BRAIDLAB_SEED or 0)");
  }
  LHSampler sampler() const { return LHSampler{len, samples, seed ? *seed : env_seed(0)}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidlab: braid groups and link-homotopy string-link groups over surfaces"};
  app.footer(std::string("\n") + kWordGrammar);
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Structured output")->configurable(false);

  int exit_code = kPass;

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Freely reduce a word");
  std::string word;
  std::string reduce_family = "free";
  std::optional<int> n_opt;
  int g = 1;
  reduce->add_option("--word", word, "Word to reduce")->required();
  reduce->add_option("--family", reduce_family, "bn, pbn, hatbn, hatpbn, free, pi1 or sym");
  reduce->add_option("--n", n_opt, "Strands, rank or factor count (free: inferred from the word)");
  reduce->add_option("--g", g, "Genus");
  reduce->add_flag("--json", json, "Structured output");
  reduce->callback([&] {
    Family const f = family_from_string(reduce_family);
    int const n = n_opt ? *n_opt : (f == Family::FreeGroup ? inferred_rank(word) : 1);
    auto const w = parse_word(word, context_for(f, n, g));
    auto const text = format_word(w);
    emit(json, {{"context", describe(w.context())}, {"word", text}, {"length", w.size()}}, text);
  });

  // perm
  auto* perm = app.add_subcommand("perm", "Strand permutation of a braid word");
  int n = 2;
  std::string perm_family = "bn";
  perm->add_option("--n", n, "Strands")->required();
  perm->add_option("--g", g, "Genus (0 for the disk)");
  perm->add_option("--word", word, "Braid word")->required();
  perm->add_option("--family", perm_family, "bn, hatbn, pbn, hatpbn or sym");
  perm->add_flag("--json", json, "Structured output");
  perm->callback([&] {
    auto const w = parse_word(word, context_for(family_from_string(perm_family), n, g));
    auto const p = permutation_of(w);
    emit(json, {{"permutation", p.to_string()}, {"image", p.image}, {"identity", p.is_identity()}}, p.to_string());
  });

  // theta
  auto* theta = app.add_subcommand("theta", "Strand projection of a pure surface braid word");
  std::string theta_family = "hatpbn";
  theta->add_option("--n", n, "Strands")->required();
  theta->add_option("--g", g, "Genus")->required();
  theta->add_option("--word", word, "Word over a, t, T letters")->required();
  theta->add_option("--family", theta_family, "hatpbn or pbn");
  theta->add_flag("--json", json, "Structured output");
  theta->callback([&] {
    auto const t = theta_hat(parse_word(word, context_for(family_from_string(theta_family), n, g)));
    ordered_json comps = ordered_json::array();
    for (auto const& c : t.components) comps.push_back(format_word(c));
    Verdict const v = tuple_is_trivial(t);
    emit(json, {{"tuple", format_tuple(t)}, {"components", comps}, {"verdict", to_string(v)}}, format_tuple(t));
  });

  // pi1
  auto* pi1 = app.add_subcommand("pi1", "Word problem in the surface group");
  pi1->require_subcommand(1);
  auto* pi1_triv = pi1->add_subcommand("is-trivial", "Decide triviality (abelianization for g = 1, Dehn for g >= 2)");
  auto* pi1_dehn = pi1->add_subcommand("dehn", "Terminal word of Dehn's algorithm (g >= 2)");
  for (auto* c : {pi1_triv, pi1_dehn}) {
    c->add_option("--g", g, "Genus")->required();
    c->add_option("--word", word, "Word over a1 .. a2g")->required();
    c->add_flag("--json", json, "Structured output");
  }
  pi1_triv->callback([&] {
    Verdict const v = is_trivial_pi1(parse_word(word, GroupContext::pi1(g)));
    emit(json, {{"verdict", to_string(v)}}, std::string(to_string(v)));
    exit_code = verdict_exit(v);
  });
  pi1_dehn->callback([&] {
    auto const w = dehn_reduce(parse_word(word, GroupContext::pi1(g)));
    Verdict const v = verdict_of(w.empty());
    emit(json, {{"terminal", format_word(w)}, {"verdict", to_string(v)}}, format_word(w));
    exit_code = verdict_exit(v);
  });

  // lh
  auto* lh = app.add_subcommand("lh", "Link-homotopy triviality of pure disk braids");
  lh->require_subcommand(1);
  auto* lh_triv = lh->add_subcommand("is-trivial", "Membership in H_n of the disk via the reduced Artin action");
  lh_triv->add_option("--n", n, "Strands")->required();
  lh_triv->add_option("--word", word, "Pure braid word over s, T, t letters")->required();
  lh_triv->add_flag("--json", json, "Structured output");
  lh_triv->callback([&] {
    Verdict const v = lh_trivial_disk(parse_word(word, GroupContext::braid(n, 0)));
    emit(json, {{"verdict", to_string(v)}}, std::string(to_string(v)));
    exit_code = verdict_exit(v);
  });

  // presentation
  auto* pres = app.add_subcommand("presentation", "Presentations and their relators");
  pres->require_subcommand(1);
  auto* dump = pres->add_subcommand("dump", "List generators and every enumerated relator");
  LhFlags lh_flags;
  std::string family;
  dump->add_option("--family", family, "bn, pbn, hatbn or hatpbn")->required();
  dump->add_option("--n", n, "Strands")->required();
  dump->add_option("--g", g, "Genus (0 for the disk)")->required();
  lh_flags.attach(dump);
  dump->add_flag("--json", json, "Structured output");
  dump->callback([&] {
    auto const p = build_presentation(family_from_string(family), n, g);
    std::optional<LHSampler> sampler;
    if (p.has_conjugator_family()) sampler = lh_flags.sampler();
    if (json) {
      std::cout << presentation_json(p, sampler) << "\n";
      return;
    }
    std::cout << describe(p.context) << "\ngenerators:";
    for (auto const& l : p.generators) std::cout << " " << format_letter(l, p.context);
    std::cout << "\n";
    for_each_relator(p, sampler, [](Relator const& r) {
      std::cout << r.tag << "(";
      for (std::size_t k = 0; k < r.indices.size(); ++k) std::cout << (k ? "," : "") << r.indices[k];
      std::cout << ")";
      if (r.conjugator) std::cout << " h=" << format_word(*r.conjugator);
      std::cout << ": " << format_word(r.word) << "\n";
    });
  });

  // hom
  auto* hom = app.add_subcommand("hom", "Homomorphisms given by generator images");
  hom->require_subcommand(1);
  std::string map_name = "theta";
  auto* verify = hom->add_subcommand("verify", "Check that every relator dies in the target");
  auto* apply_cmd = hom->add_subcommand("apply", "Image of a word");
  for (auto* c : {verify, apply_cmd}) {
    c->add_option("--map", map_name, kMapNames)->required();
    c->add_option("--n", n, "Strands")->required();
    c->add_option("--g", g, "Genus")->required();
    c->add_flag("--json", json, "Structured output");
  }
  lh_flags.attach(verify);
  apply_cmd->add_option("--word", word, "Word in the domain")->required();
  verify->callback([&] {
    auto const report = verify_well_defined(map_named(map_name, n, g), lh_flags.sampler());
    if (json) {
      std::cout << well_defined_json(report) << "\n";
    } else {
      std::cout << report.map_name << " on " << describe(report.domain) << ": " << report.passed << "/" << report.checked
                << " relators die in the target\n";
      for (auto const& [label, list] : {std::pair{"FAIL", &report.failed}, std::pair{"UNKNOWN", &report.unknown}})
        for (auto const& f : *list) {
          std::cout << label << " " << f.tag << " " << f.relator;
          if (f.conjugator) std::cout << " (h=" << *f.conjugator << ")";
          std::cout << " -> " << f.image << "\n";
        }
    }
    exit_code = report.ok() ? kPass : kFail;
  });
  apply_cmd->callback([&] {
    auto const m = map_named(map_name, n, g);
    auto const image = apply(m, parse_word(word, m.domain()));
    Verdict const v = m.oracle().decide(image);
    ordered_json doc{{"map", m.name()}, {"target", describe(m.target())}, {"image", format_word(image)},
                     {"verdict", to_string(v)}};
    std::string text = format_word(image);
    if (m.target().family == Family::Pi1Surface) {
      text = format_tuple(split_components(image));
      doc["tuple"] = text;
    } else if (m.target().family == Family::Symmetric) {
      text = permutation_of(image).to_string();
      doc["permutation"] = text;
    }
    emit(json, doc, text);
  });

  // lab
  auto* lab = app.add_subcommand("lab", "Randomized exact-sequence checks");
  lab->require_subcommand(1);
  auto* run = lab->add_subcommand("run", "Run the checks over the (n, g) grid");
  SuiteConfig cfg;
  std::optional<std::uint64_t> lab_seed;
  std::string fixture = "none";
  std::string check = "all";
  bool timing = false;
  run->add_option("--n-min", cfg.n_min, "Smallest strand count");
  run->add_option("--n-max", cfg.n_max, "Largest strand count");
  run->add_option("--g-min", cfg.g_min, "Smallest genus");
  run->add_option("--g-max", cfg.g_max, "Largest genus");
  run->add_option("--len", cfg.length, "Random word length bound");
  run->add_option("--samples", cfg.samples, "Samples per grid cell");
  run->add_option("--seed", lab_seed, "Seed (default BRAIDLAB_SEED or 42)");
  run->add_option("--check", check, "all, diagram, im-ker, surjectivity, hn, theta or psi");
  run->add_option("--fixture", fixture, "none or corrupt-theta");
  run->add_flag("--timing", timing, "Include wall times in the JSON report");
  lh_flags.attach(run);
  run->add_flag("--json", json, "Structured output");
  run->callback([&] {
    cfg.seed = lab_seed ? *lab_seed : env_seed(42);
    cfg.lh = lh_flags.sampler();
    cfg.fixture = fixture_from_string(fixture);
    SuiteReport report;
    if (check == "all")
      report = run_all(cfg);
    else if (check == "diagram")
      report = check_diagram_commutes(cfg);
    else if (check == "im-ker")
      report = check_im_in_ker(cfg);
    else if (check == "surjectivity")
      report = check_surjectivity(cfg);
    else if (check == "hn")
      report = check_hn_sequence(cfg);
    else if (check == "theta")
      report = check_theta_well_defined(cfg);
    else if (check == "psi")
      report = check_psi_well_defined(cfg);
    else
      throw std::invalid_argument("unknown check '" + check + "'");
    if (json) {
      std::cout << suite_json(report, timing) << "\n";
    } else {
      for (auto const& c : report.checks) {
        std::cout << (c.ok() ? "PASS " : "FAIL ") << c.name << ": " << c.passed << "/" << c.population << " passed, "
                  << c.failures.size() << " failed, " << c.unknown.size() << " unknown (" << c.wall_ms << " ms)\n";
        for (auto const& w : c.failures) {
          std::cout << "  [" << w.cell << "] " << w.detail << "\n";
          for (auto const& [role, text] : w.words) std::cout << "    " << role << " = " << text << "\n";
        }
      }
    }
    exit_code = report.ok() ? kPass : kFail;
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}

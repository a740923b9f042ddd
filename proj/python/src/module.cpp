#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <stdexcept>

#include "braidlab/homs.hpp"
#include "braidlab/json.hpp"
#include "braidlab/lab.hpp"
#include "braidlab/parse.hpp"
#include "braidlab/reduced_free.hpp"
#include "braidlab/surface.hpp"

namespace py = pybind11;
using namespace braidlab;

namespace {

GroupContext context_named(std::string const& family, int n, int g) {
  if (family == "free") return GroupContext::free(n);
  if (family == "pi1") return GroupContext::pi1(g, n);
  if (family == "sym") return GroupContext::symmetric(n);
  static std::map<std::string, Family> const braid{
      {"bn", Family::Bn}, {"pbn", Family::PBn}, {"hatbn", Family::HatBn}, {"hatpbn", Family::HatPBn}};
  auto it = braid.find(family);
  if (it == braid.end()) throw std::invalid_argument("unknown family '" + family + "'");
  return GroupContext::make(it->second, n, g);
}

GeneratorMap map_named(std::string const& name, int n, int g) {
  if (name == "theta") return theta_hat_map(n, g);
  if (name == "theta-corrupt") return corrupted_theta_hat_map(n, g);
  if (name == "psi") return psi_map(n, g);
  if (name == "psi-corrupt") return corrupted_psi_map(n, g);
  throw std::invalid_argument("unknown map '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_braidlab, m) {
  m.doc() = "braidlab core bindings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContextError>(m, "ContextError", PyExc_ValueError);
  py::register_exception<NotPureBraid>(m, "NotPureBraid", PyExc_ValueError);

  m.attr("word_grammar") = kWordGrammar;

  m.def(
      "reduce",
      [](std::string const& word, std::string const& family, int n, int g) {
        return format_word(parse_word(word, context_named(family, n, g)));
      },
      py::arg("word"), py::arg("family") = "free", py::arg("n") = 4, py::arg("g") = 1);
  m.def(
      "permutation",
      [](std::string const& word, int n, int g) {
        return permutation_of(parse_word(word, GroupContext::braid(n, g))).image;
      },
      py::arg("word"), py::arg("n"), py::arg("g") = 0, "Images pi(1), ..., pi(n).");
  m.def(
      "theta",
      [](std::string const& word, int n, int g) {
        std::vector<std::string> out;
        for (auto const& c : theta_hat(parse_word(word, GroupContext::hat_pure(n, g))).components)
          out.push_back(format_word(c));
        return out;
      },
      py::arg("word"), py::arg("n"), py::arg("g"));
  m.def(
      "pi1_is_trivial",
      [](std::string const& word, int g) { return std::string(to_string(is_trivial_pi1(parse_word(word, GroupContext::pi1(g))))); },
      py::arg("word"), py::arg("g"));
  m.def(
      "dehn_reduce",
      [](std::string const& word, int g) { return format_word(dehn_reduce(parse_word(word, GroupContext::pi1(g)))); },
      py::arg("word"), py::arg("g"));
  m.def(
      "magnus",
      [](std::string const& word, int rank) { return magnus_expand(parse_word(word, GroupContext::free(rank))).to_string(); },
      py::arg("word"), py::arg("rank"));
  m.def(
      "rf_is_trivial",
      [](std::string const& word, int rank) {
        return std::string(to_string(rf_is_trivial(parse_word(word, GroupContext::free(rank)))));
      },
      py::arg("word"), py::arg("rank"));
  m.def(
      "lh_is_trivial",
      [](std::string const& word, int n) {
        return std::string(to_string(lh_trivial_disk(parse_word(word, GroupContext::braid(n, 0)))));
      },
      py::arg("word"), py::arg("n"));
  m.def(
      "presentation_json",
      [](std::string const& family, int n, int g, int lh_len, int lh_samples, std::uint64_t lh_seed) {
        auto const ctx = context_named(family, n, g);
        auto const p = build_presentation(ctx.family, n, g);
        std::optional<LHSampler> lh;
        if (p.has_conjugator_family()) lh = LHSampler{lh_len, lh_samples, lh_seed};
        return presentation_json(p, lh);
      },
      py::arg("family"), py::arg("n"), py::arg("g"), py::arg("lh_len") = 4, py::arg("lh_samples") = 64,
      py::arg("lh_seed") = 0);
  m.def(
      "verify_json",
      [](std::string const& map, int n, int g, int lh_len, int lh_samples, std::uint64_t lh_seed) {
        py::gil_scoped_release release;
        return well_defined_json(verify_well_defined(map_named(map, n, g), LHSampler{lh_len, lh_samples, lh_seed}));
      },
      py::arg("map"), py::arg("n"), py::arg("g"), py::arg("lh_len") = 4, py::arg("lh_samples") = 64,
      py::arg("lh_seed") = 0);
  m.def(
      "lab_run_json",
      [](int n_min, int n_max, int g_min, int g_max, int length, int samples, std::uint64_t seed,
         std::string const& fixture) {
        SuiteConfig cfg;
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        cfg.g_min = g_min;
        cfg.g_max = g_max;
        cfg.length = length;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.fixture = fixture_from_string(fixture);
        py::gil_scoped_release release;
        return suite_json(run_all(cfg));
      },
      py::arg("n_min") = 1, py::arg("n_max") = 3, py::arg("g_min") = 1, py::arg("g_max") = 2, py::arg("length") = 12,
      py::arg("samples") = 200, py::arg("seed") = 42, py::arg("fixture") = "none");
}

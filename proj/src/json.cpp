#include "braidlab/json.hpp"

#include <map>

#include <json.hpp>

#include "braidlab/parse.hpp"

namespace braidlab {

using nlohmann::ordered_json;

namespace {

ordered_json context_json(GroupContext const& ctx) {
  return ordered_json{{"family", to_string(ctx.family)}, {"n", ctx.n}, {"g", ctx.g}};
}

ordered_json failure_json(RelatorFailure const& f) {
  ordered_json j{{"tag", f.tag}, {"indices", f.indices}};
  if (f.conjugator) j["h"] = *f.conjugator;
  j["relator"] = f.relator;
  j["image"] = f.image;
  return j;
}

ordered_json witness_json(Witness const& w) {
  ordered_json words = ordered_json::object();
  for (auto const& [role, word] : w.words) words[role] = word;
  return ordered_json{{"cell", w.cell}, {"words", words}, {"detail", w.detail}};
}

ordered_json config_json(SuiteConfig const& c) {
  return ordered_json{{"n_min", c.n_min},
                      {"n_max", c.n_max},
                      {"g_min", c.g_min},
                      {"g_max", c.g_max},
                      {"length", c.length},
                      {"samples", c.samples},
                      {"seed", c.seed},
                      {"lh", {{"max_h_length", c.lh.max_h_length}, {"samples", c.lh.samples}, {"seed", c.lh.seed}}},
                      {"fixture", to_string(c.fixture)}};
}

}  // namespace

std::string presentation_json(Presentation const& p, std::optional<LHSampler> const& lh, int indent) {
  ordered_json doc = context_json(p.context);
  ordered_json gens = ordered_json::array();
  for (auto const& l : p.generators) gens.push_back(format_letter(l, p.context));
  doc["generators"] = gens;

  ordered_json fams = ordered_json::array();
  ordered_json rels = ordered_json::array();
  std::map<std::string, std::size_t> counts;
  for_each_relator(p, lh, [&](Relator const& r) {
    ++counts[r.tag];
    ordered_json j{{"tag", r.tag}, {"indices", r.indices}};
    if (r.conjugator) j["h"] = format_word(*r.conjugator);
    j["word"] = format_word(r.word);
    rels.push_back(std::move(j));
  });
  for (auto const& f : p.families)
    fams.push_back({{"tag", f.tag}, {"condition", f.condition}, {"count", counts[f.tag]}});
  doc["families"] = fams;
  if (lh && p.has_conjugator_family())
    doc["lh"] = {{"max_h_length", lh->max_h_length}, {"samples", lh->samples}, {"seed", lh->seed}};
  doc["relators"] = rels;
  return doc.dump(indent);
}

std::string well_defined_json(WellDefinedReport const& r, int indent) {
  ordered_json failed = ordered_json::array(), unknown = ordered_json::array();
  for (auto const& f : r.failed) failed.push_back(failure_json(f));
  for (auto const& f : r.unknown) unknown.push_back(failure_json(f));
  ordered_json doc{{"map", r.map_name},
                   {"domain", context_json(r.domain)},
                   {"ok", r.ok()},
                   {"checked", r.checked},
                   {"passed", r.passed},
                   {"failed", failed},
                   {"unknown", unknown}};
  return doc.dump(indent);
}

std::string suite_json(SuiteReport const& r, bool include_timing, int indent) {
  ordered_json checks = ordered_json::array();
  for (auto const& c : r.checks) {
    ordered_json failures = ordered_json::array(), unknown = ordered_json::array();
    for (auto const& w : c.failures) failures.push_back(witness_json(w));
    for (auto const& w : c.unknown) unknown.push_back(witness_json(w));
    ordered_json j{{"name", c.name},         {"ok", c.ok()},         {"population", c.population},
                   {"passed", c.passed},     {"failures", failures}, {"unknown", unknown}};
    if (include_timing) j["wall_ms"] = c.wall_ms;
    checks.push_back(std::move(j));
  }
  ordered_json doc{{"config", config_json(r.config)}, {"ok", r.ok()}, {"failures", r.failure_count()}, {"checks", checks}};
  return doc.dump(indent);
}

}  // namespace braidlab

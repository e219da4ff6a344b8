#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "evanslab/catalog.hpp"
#include "evanslab/essential_spectrum.hpp"
#include "evanslab/reaction.hpp"
#include "evanslab/riccati_evans.hpp"
#include "evanslab/wave_profile.hpp"

namespace evanslab {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json to_json(const ReactionTerm& rt) {
  nlohmann::json mono = nlohmann::json::array();
  for (const auto& [e, a] : rt.monomials) mono.push_back({e.first, e.second, a});
  return {{"monomials", mono}, {"parameters", rt.parameters}};
}

inline ReactionTerm reaction_from_json(const nlohmann::json& j) {
  ReactionTerm rt;
  for (const auto& m : j.at("monomials")) rt.add(m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<double>());
  rt.parameters = j.at("parameters").get<std::map<std::string, double>>();
  return rt;
}

/// Catalog entries round-trip through (example id, parameters): the closed
/// forms are rebuilt from the catalog rather than serialized pointwise.
inline nlohmann::json to_json(const CatalogEntry& e) {
  return {{"schema", kSchemaVersion},
          {"example", e.profile.example_id},
          {"parameters", e.reaction.parameters},
          {"reaction", to_json(e.reaction)}};
}

inline CatalogEntry catalog_from_json(const nlohmann::json& j) {
  std::map<std::string, double> params;
  if (j.contains("parameters")) params = j.at("parameters").get<std::map<std::string, double>>();
  return catalog(j.at("example").get<int>(), params);
}

inline nlohmann::json to_json(cplx z) { return {z.real(), z.imag()}; }

inline nlohmann::json to_json(const EvansReport& rep) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["chart"] = rep.chart;
  j["z0"] = rep.z0;
  j["seed"] = rep.seed;
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : rep.samples)
    samples.push_back({{"lambda", to_json(s.lambda)},
                       {"E", s.pole ? nlohmann::json() : to_json(s.E)},
                       {"pole", s.pole},
                       {"chart", s.chart}});
  j["samples"] = samples;
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : rep.roots) roots.push_back({{"lambda", to_json(r.lambda)}, {"residual", r.residual}});
  j["roots"] = roots;
  nlohmann::json poles = nlohmann::json::array();
  for (cplx p : rep.poles) poles.push_back(to_json(p));
  j["poles"] = poles;
  if (rep.winding) {
    j["winding"] = *rep.winding;
    j["winding_residual"] = rep.winding_residual;
  }
  return j;
}

inline nlohmann::json to_json(const C0Spectrum& s) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["ray_max"] = s.ray_max;
  j["has_ellipse"] = s.has_ellipse;
  nlohmann::json e = nlohmann::json::array();
  for (cplx z : s.ellipse) e.push_back(to_json(z));
  j["ellipse"] = e;
  return j;
}

}  // namespace evanslab

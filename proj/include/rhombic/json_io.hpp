#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "rhombic/asep.hpp"
#include "rhombic/identities.hpp"
#include "rhombic/moments.hpp"
#include "rhombic/polynomial.hpp"
#include "rhombic/tableau.hpp"

namespace rhombic {

inline nlohmann::json exps_to_json(ExpKey key) {
  nlohmann::json j;
  for (int v = 0; v < kNumVars; ++v) j[kVarNames[v]] = exp_of(key, static_cast<Var>(v));
  return j;
}

inline nlohmann::json monomial_to_json(const Monomial& m) {
  return {{"coeff", m.coeff.str()}, {"exp", exps_to_json(m.exps)}};
}

// Array of {"coeff", "exp"} records, ascending lexicographic in
// (alpha, beta, gamma, delta, q, u, xi).
inline nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, coeff] : p.terms())
    arr.push_back({{"coeff", coeff.str()}, {"exp", exps_to_json(key)}});
  return arr;
}

inline const char* tile_kind_name(TileKind k) {
  switch (k) {
    case TileKind::Square: return "square";
    case TileKind::Tall: return "tall";
    default: return "short";
  }
}

inline nlohmann::json tableau_to_json(const Tableau& t) {
  nlohmann::json labels = nlohmann::json::array();
  for (std::size_t i = 0; i < t.tiling.tiles.size(); ++i) {
    const TileInfo& tile = t.tiling.tiles[i];
    labels.push_back({{"pos", tile.pos},
                      {"height", tile.height},
                      {"kind", tile_kind_name(tile.kind)},
                      {"label", label_name(t.labels[i])}});
  }
  nlohmann::json type = nlohmann::json::array();
  for (int x : t.tiling.type.letters) type.push_back(x);
  return {{"type", type}, {"labels", labels}, {"weight", monomial_to_json(weight(t))}};
}

inline nlohmann::json report_to_json(const VerifyReport& r) {
  return {{"name", r.name},
          {"pass", r.pass},
          {"cases", r.cases},
          {"counterexamples", r.counterexamples}};
}

inline nlohmann::json params_to_json(const Params& p) {
  return {{"alpha", rational_to_string(p.alpha)}, {"beta", rational_to_string(p.beta)},
          {"gamma", rational_to_string(p.gamma)}, {"delta", rational_to_string(p.delta)},
          {"q", rational_to_string(p.q)},         {"u", rational_to_string(p.u)}};
}

inline nlohmann::json moment_report_to_json(const MomentReport& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const MomentTrial& t : r.trials)
    trials.push_back({{"params", params_to_json(t.params)},
                      {"xi", rational_to_string(t.xi)},
                      {"det", rational_to_string(t.det)},
                      {"tableaux", rational_to_string(t.tableaux)},
                      {"equal", t.equal}});
  return {{"N", r.n}, {"r", r.r}, {"trials", trials}, {"positivity", r.positivity}};
}

inline std::string double_to_string(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

// state word, exact probability, float approximation
inline std::string distribution_to_csv(const DistributionVector& d) {
  std::ostringstream out;
  out << "state,probability,approx\n";
  for (std::size_t i = 0; i < d.states.size(); ++i)
    out << d.states[i].digits() << "," << rational_to_string(d.probs[i]) << ","
        << double_to_string(rational_to_double(d.probs[i])) << "\n";
  return out.str();
}

}  // namespace rhombic

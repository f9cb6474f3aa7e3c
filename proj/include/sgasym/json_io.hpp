// JSON encodings. Exact values are strings so nothing is lost to binary64.

#pragma once

#include "json.hpp"
#include "sgasym/family.hpp"
#include "sgasym/lie_algebra.hpp"
#include "sgasym/oracle.hpp"
#include "sgasym/report.hpp"
#include "sgasym/spectrum.hpp"
#include "sgasym/symmetry.hpp"

#include <string>

namespace sgasym {

using nlohmann::json;

inline json to_json_value(const Rational& r) { return r.to_string(); }

inline json to_json_value(const Algebraic& a) {
  if (a.is_rational()) {
    Rational q = a.rational_value();
    return {{"num", q.num().get_str()}, {"den", q.den().get_str()}};
  }
  auto [lo, hi] = a.enclosure(Rational(1, 1000000) * Rational(1, 1000000));
  return {{"algebraic", a.to_string()}, {"enclosure", {lo.to_string(), hi.to_string()}}};
}

inline json to_json_value(const EnergyLevel& e) {
  return {{"n", e.n}, {"branch", to_string(e.branch)}, {"E_hat", to_json_value(e.E_hat)}};
}

inline json to_json_value(const SGACoefficients& co) {
  return {{"a", co.a.to_string()}, {"b", co.b.to_string()}, {"c", co.c.to_string()}};
}

inline json to_json_value(const GeneralizedProblem& gp) {
  json terms = json::array();
  for (const auto& t : gp.power_terms) terms.push_back({t.coeff.to_string(), t.exponent.to_string()});
  return {{"p", gp.p.to_string()},
          {"inv_square", gp.inv_square.to_string()},
          {"terms", terms},
          {"wf_exponent", gp.wf_exponent.to_string()}};
}

inline json to_json_value(const SymmetrySolution& s) {
  json g = json::array();
  for (const auto& gc : s.g) g.push_back({gc.coeff.to_string(), std::to_string(gc.d_power)});
  return {{"N", s.N},
          {"C", s.C.to_string()},
          {"E_over_D2", s.E_over_D2.to_string()},
          {"g_ratios", g},
          {"kappa", s.kappa.to_string()},
          {"nullity", s.nullity},
          {"discrepancies", s.notes}};
}

inline json to_json_value(const Grid& g) {
  return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"m", g.m}, {"h", g.h}};
}

inline json to_json_value(const SpectrumReport& r) {
  json levels = json::array();
  for (const auto& lv : r.levels) {
    levels.push_back({{"n", lv.n},
                      {"closed_form", lv.closed_form.to_string()},
                      {"numeric", lv.numeric},
                      {"coarse", lv.coarse},
                      {"fine", lv.fine},
                      {"rel_error", lv.rel_error}});
  }
  return {{"C", r.C.to_string()},
          {"D", r.D.to_string()},
          {"grid", {{"coarse", to_json_value(r.coarse)}, {"fine", to_json_value(r.fine)}}},
          {"levels", levels},
          {"converged", r.converged},
          {"refinement_ratio", r.refinement_ratio},
          {"note", r.note}};
}

inline json to_json_value(const VerificationReport& rep) {
  json out = json::array();
  for (const auto& e : rep.entries) out.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
  return out;
}

inline json to_json_value(const SpanMembership& s) {
  json cert = json::array();
  for (const auto& [label, w] : s.certificate) cert.push_back({label, w.to_string()});
  json out = {{"member", s.member}, {"certificate", cert}};
  if (s.offending) out["offending_term"] = render(*s.offending);
  return out;
}

}  // namespace sgasym

#pragma once

// JSON views of reports. Schema version is carried in every top-level object.

#include "bounds.hpp"
#include "empirics.hpp"
#include "extremal.hpp"
#include "testfn.hpp"

#include <json.hpp>

#include <complex>
#include <string>

namespace satotate {

inline constexpr int kJsonSchemaVersion = 1;

inline nlohmann::ordered_json to_json(const PhiConstants& c) {
  nlohmann::ordered_json j;
  j["C0"] = c.C0;
  j["C1"] = c.C1;
  j["C2"] = c.C2;
  j["Phi1"] = c.Phi1;
  j["Phi0"] = c.Phi0;
  j["PhiHalf"] = c.PhiHalf;
  j["quadrature_tol"] = c.tol;
  return j;
}

inline nlohmann::ordered_json to_json(std::complex<double> z) {
  return nlohmann::ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

inline nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "bound_report";
  j["schema_version"] = kJsonSchemaVersion;
  j["kind"] = r.kind;
  j["value"] = r.value;
  auto& terms = j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : r.terms) terms.push_back({{"name", t.name}, {"value", t.value}});
  auto& val = j["validity"] = nlohmann::ordered_json::array();
  for (const auto& c : r.validity) {
    nlohmann::ordered_json e{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    val.push_back(e);
  }
  j["valid"] = r.valid();
  auto& in = j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  auto& ex = j["extras"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.extras) ex[k] = v;
  j["notes"] = r.notes;
  j["constants"] = to_json(r.consts);
  j["constants_checksum"] = r.constants_checksum;
  return j;
}

inline nlohmann::ordered_json to_json(const SumReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "sum_report";
  j["schema_version"] = kJsonSchemaVersion;
  j["value"] = to_json(r.value);
  j["main_term"] = r.main_term;
  j["discrepancy"] = r.discrepancy;
  j["satisfied"] = r.satisfied;
  j["terms"] = r.terms;
  j["bound_used"] = to_json(r.bound_used);
  j["constants_checksum"] = r.bound_used.constants_checksum;
  return j;
}

inline nlohmann::ordered_json to_json(const Census& c) {
  nlohmann::ordered_json j;
  j["schema"] = "census";
  j["schema_version"] = kJsonSchemaVersion;
  j["x"] = c.x;
  j["interval"] = {c.interval.a, c.interval.b};
  j["count"] = c.count;
  j["prime_count"] = c.prime_count;
  j["fraction"] = c.fraction();
  j["mu_st"] = c.mu;
  j["Li"] = c.li;
  j["expected"] = c.expected;
  j["discrepancy"] = c.discrepancy;
  j["constants_checksum"] = constants::checksum();
  return j;
}

inline nlohmann::ordered_json to_json(const CorollaryReproduction& r) {
  nlohmann::ordered_json j;
  j["schema"] = "corollary_reproduction";
  j["schema_version"] = kJsonSchemaVersion;
  j["phi_q"] = r.phi_q;
  j["c"] = r.c;
  j["K"] = r.K;
  j["leakage_part"] = r.leakage_part;
  j["zero_part"] = r.zero_part;
  j["ours"] = {{"lead", r.lead}, {"loglog", r.loglog}, {"invlog", r.invlog}, {"sqrtlog", r.sqrtlog}};
  j["published_per_class"] = {{"lead", r.published_lead},
                              {"loglog", -r.published_loglog},
                              {"invlog", r.published_invlog},
                              {"sqrtlog", r.published_sqrtlog}};
  j["relative_error"] = {{"lead", r.rel_lead},
                         {"loglog", r.rel_loglog},
                         {"invlog", r.rel_invlog},
                         {"sqrtlog", r.rel_sqrtlog}};
  j["implied_K"] = {{"lead", r.implied_K_lead},
                    {"lead_without_leakage", r.implied_K_lead_without_leak},
                    {"loglog", r.implied_K_loglog},
                    {"sqrtlog", r.implied_K_sqrtlog}};
  j["per_class_times_33"] = {{"lead", r.scaled_lead},
                             {"loglog", -r.scaled_loglog},
                             {"invlog", r.scaled_invlog},
                             {"sqrtlog", r.scaled_sqrtlog}};
  j["reproduced_within_5pct"] = r.reproduced;
  j["notes"] = r.notes;
  j["constants_checksum"] = constants::checksum();
  return j;
}

inline nlohmann::ordered_json to_json(const ChebUExpansion& e) {
  nlohmann::ordered_json j;
  j["schema"] = "extremal";
  j["schema_version"] = kJsonSchemaVersion;
  j["interval"] = {e.interval.a, e.interval.b};
  j["M"] = e.M;
  j["side"] = to_string(e.side);
  j["coeffs"] = e.coeffs;
  return j;
}

}  // namespace satotate

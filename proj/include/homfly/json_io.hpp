#pragma once

#include <json.hpp>
#include <string>

#include "hecke.hpp"
#include "lmv.hpp"

// JSON views of the result types. Exact values do not fit JSON numbers, so
// every exponent and coefficient is emitted as a rational string. All
// containers are already canonically ordered, so output is reproducible
// byte for byte. Top-level objects carry "schema" for format versioning.

namespace homfly {

using Json = nlohmann::json;

inline constexpr int kSchema = 1;

inline Json json_of(const ExactLaurent& p) {
  Json a = Json::array();
  for (const auto& tm : p.terms())
    a.push_back({{"t", rat_to_string(tm.et)}, {"v", rat_to_string(tm.ev)},
                 {"c", rat_to_string(tm.c)}});
  return a;
}

inline Json json_of(const RationalFunction& f) {
  Json den = Json::array();
  for (const auto& [key, mult] : f.den()) {
    den.push_back({{"var", var_name(static_cast<Var>(key.first))},
                   {"bracket", key.second},
                   {"power", mult}});
  }
  return {{"num", json_of(f.num())}, {"den", den}};
}

inline Json json_of(const TorusLinkSpec& s) {
  return {{"r", s.r}, {"k", s.k}, {"l", s.l}};
}

inline Json json_of(const Finding& f) {
  return {{"kind", f.kind}, {"where", f.where}, {"detail", f.detail}};
}

inline Json json_of(const ColoredInvariant& w) {
  Json terms = Json::array();
  for (const auto& t : w.terms)
    terms.push_back({{"partition", partition_to_string(t.lam)}, {"mono", json_of(t.mono)}});
  return {{"schema", kSchema},
          {"kind", "invariant"},
          {"link", json_of(w.link)},
          {"colors", tuple_to_string(w.colors)},
          {"terms", terms},
          {"value", json_of(w.value())}};
}

inline Json json_of(const LmvResult& r) {
  Json f = Json::object(), fhat = Json::object();
  for (const auto& [k, v] : r.f) f[tuple_to_string(k)] = json_of(v);
  for (const auto& [k, v] : r.fhat) fhat[tuple_to_string(k)] = json_of(v);
  Json bps = Json::array();
  for (const auto& e : r.bps)
    bps.push_back({{"mu", tuple_to_string(e.mu)},
                   {"g", e.g},
                   {"q", rat_to_string(e.q)},
                   {"n", rat_to_string(e.n)}});
  Json findings = Json::array();
  for (const auto& x : r.findings) findings.push_back(json_of(x));
  return {{"schema", kSchema},
          {"kind", "lmv"},
          {"link", json_of(r.link)},
          {"sizes", r.sizes},
          {"total_cap", r.total_cap},
          {"f", f},
          {"fhat", fhat},
          {"bps", bps},
          {"findings", findings},
          {"verified", r.verified()}};
}

// table entries are univariate; emit (u-exponent, coefficient) pairs
inline Json json_of_u(const ExactLaurent& p) {
  Json a = Json::array();
  for (const auto& tm : p.terms())
    a.push_back({{"u", rat_to_string(tm.et)}, {"c", rat_to_string(tm.c)}});
  return a;
}

inline Json json_of(const GTable& t) {
  Json entries = Json::array();
  for (const auto& [cols, row] : t.g)
    for (const auto& [lam, gu] : row)
      entries.push_back({{"colors", tuple_to_string(cols)},
                         {"partition", partition_to_string(lam)},
                         {"g", json_of_u(gu)}});
  Json findings = Json::array();
  for (const auto& x : t.findings) findings.push_back(json_of(x));
  return {{"schema", kSchema},
          {"kind", "g-table"},
          {"link", json_of(t.link)},
          {"sizes", t.sizes},
          {"total_cap", t.total_cap},
          {"entries", entries},
          {"integral", t.integral},
          {"palindromic", t.palindromic},
          {"findings", findings},
          {"verified", t.verified()}};
}

}  // namespace homfly

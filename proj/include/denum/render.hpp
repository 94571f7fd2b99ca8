#pragma once

// JSON rendering. Keys come out in a fixed order and every integer is a
// decimal string, so output is byte-stable and safe for consumers without
// big-integer JSON numbers. The schema is in docs/schema.json.

#include <json.hpp>

#include <string>
#include <vector>

#include "denum/denumerant3.hpp"
#include "denum/floor_sum.hpp"
#include "denum/identity_report.hpp"
#include "denum/reduction.hpp"

namespace denum {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExactInt& v) { return to_string(v); }

inline Json to_json(const Instance3& inst) {
  return Json{{"a", to_string(inst.a)},
              {"b", to_string(inst.b)},
              {"c", to_string(inst.c)},
              {"n", to_string(inst.n)}};
}

inline Json to_json(const FloorSumQuery& q) {
  return Json{{"b", to_string(q.b)}, {"c", to_string(q.c)}, {"a", to_string(q.a)}};
}

inline Json to_json(const ReductionWitness& w) {
  return Json{{"original", to_json(w.original)},
              {"g", to_string(w.g)},
              {"g1", to_string(w.g1)},
              {"g2", to_string(w.g2)},
              {"g3", to_string(w.g3)},
              {"n1", to_string(w.n1)},
              {"n2", to_string(w.n2)},
              {"n3", to_string(w.n3)},
              {"reduced", to_json(w.reduced)},
              {"n_nonneg", w.n_nonneg}};
}

inline Json to_json(const TheoremSymbols& s) {
  return Json{{"b1p", to_string(s.b1p)}, {"c1p", to_string(s.c1p)}, {"c2p", to_string(s.c2p)},
              {"a2p", to_string(s.a2p)}, {"a3p", to_string(s.a3p)}, {"b3p", to_string(s.b3p)},
              {"N1", to_string(s.n1)}};
}

inline Json to_json(const CountResult& r) {
  Json j{{"a", to_string(r.instance.a)},
         {"b", to_string(r.instance.b)},
         {"c", to_string(r.instance.c)},
         {"n", to_string(r.instance.n)},
         {"count", to_string(r.count)}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["symbols"] = r.symbols ? to_json(*r.symbols) : Json(nullptr);
  Json sums = Json::array();
  if (r.symbols)
    for (const auto& s : r.floor_sums) sums.push_back(to_string(s));
  j["floor_sums"] = std::move(sums);
  return j;
}

inline const char* step_tag(StepKind kind) {
  switch (kind) {
    case StepKind::reciprocity: return "RECIP";
    case StepKind::division: return "DIV";
    case StepKind::period: return "PERIOD";
  }
  return "?";
}

inline const char* factor_key(StepKind kind) {
  switch (kind) {
    case StepKind::reciprocity: return "K";
    case StepKind::division: return "q";
    case StepKind::period: return "m";
  }
  return "?";
}

inline Json to_json(const FloorSumTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"kind", step_tag(s.kind)},
                         {factor_key(s.kind), to_string(s.factor)},
                         {"const", to_string(s.constant)},
                         {"sign", std::to_string(s.sign)},
                         {"next", to_json(s.next)}});
  }
  steps.push_back(Json{{"base", to_string(t.value)}});
  return Json{{"query", to_json(t.query)},
              {"steps", std::move(steps)},
              {"terminal", to_json(t.terminal)},
              {"terminal_value", to_string(t.terminal_value)},
              {"terminal_sign", std::to_string(t.terminal_sign)},
              {"value", to_string(t.value)}};
}

inline Json to_json(const IdentityReport& r) {
  Json context = Json::object();
  for (const auto& [k, v] : r.context) context[k] = to_string(v);
  return Json{{"name", r.name},
              {"lhs", to_string(r.lhs)},
              {"rhs", to_string(r.rhs)},
              {"holds", r.holds},
              {"context", std::move(context)}};
}

inline Json sweep_json(const std::vector<IdentityReport>& reports, std::size_t failures) {
  Json pairs = Json::array();
  for (const auto& r : reports) pairs.push_back(to_json(r));
  return Json{{"pairs", std::move(pairs)}, {"failures", std::to_string(failures)}};
}

template <class T>
std::string render_json(const T& value) {
  return to_json(value).dump();
}

}  // namespace denum

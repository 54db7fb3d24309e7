#pragma once

#include <string>

#include "json.hpp"

#include "ecl/connection.hpp"
#include "ecl/constants.hpp"
#include "ecl/glpoly.hpp"
#include "ecl/monodromy.hpp"

// JSON views of the report structs. Field order is fixed and no timestamps or
// environment data are emitted, so equal inputs serialize byte for byte.

namespace ecl {

using OJson = nlohmann::ordered_json;

inline OJson json_rat(const Rat& r) { return to_string(r); }

inline OJson json_cplx(Cplx z) {
  return OJson{{"re", z.real()}, {"im", z.imag()}};
}

inline OJson json_matc(const MatC& m) {
  OJson rows = OJson::array();
  for (int i = 0; i < m.n; ++i) {
    OJson row = OJson::array();
    for (int j = 0; j < m.n; ++j) row.push_back(json_cplx(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline OJson json_check(const CheckResult& c) {
  OJson j;
  j["id"] = c.id;
  j["pass"] = c.pass;
  j["tested"] = c.tested;
  j["skipped"] = c.skipped;
  if (!c.skip_reason.empty()) j["skip_reason"] = c.skip_reason;
  if (c.fail_index >= 0) {
    j["fail_index"] = c.fail_index;
    j["fail_state"] = c.fail_state;
    j["fail_residual"] = c.fail_residual;
  }
  return j;
}

inline OJson json_suite(const SuiteReport& s) {
  OJson j;
  j["suite"] = s.suite;
  j["k"] = s.k;
  j["n"] = s.n;
  j["degree"] = s.degree;
  j["all_asserted_pass"] = s.all_asserted_pass;
  OJson ids = OJson::array();
  for (const auto& r : s.identities) {
    OJson e;
    e["check"] = r.check_id;
    e["status"] = r.status;
    e["filter"] = r.filter;
    e["family"] = r.family;
    e["expected_pass"] = r.expected_pass;
    e["ok"] = r.ok();
    e["result"] = json_check(r.result);
    ids.push_back(std::move(e));
  }
  j["identities"] = std::move(ids);
  return j;
}

inline OJson json_constant(const ConstantReport& c) {
  OJson j;
  j["type"] = root_type_to_string(c.type);
  j["rank"] = c.rank;
  j["tilde_c"] = json_rat(c.tilde_c);
  j["tilde_c_classified"] = json_rat(c.tilde_c_classified);
  j["tilde_c_bracket"] = json_rat(c.tilde_c_bracket);
  j["c_over_lambda2"] = json_rat(c.c_over_lambda2);
  j["routes_agree"] =
      c.tilde_c == c.tilde_c_classified && c.tilde_c == c.tilde_c_bracket;
  OJson cls = OJson::array();
  for (const auto& e : c.classes) {
    OJson x;
    x["len_a"] = json_rat(e.len_a);
    x["len_b"] = json_rat(e.len_b);
    x["len_ab"] = json_rat(e.len_ab);
    x["count"] = e.count;
    x["weight"] = json_rat(e.weight);
    cls.push_back(std::move(x));
  }
  j["classes"] = std::move(cls);
  return j;
}

inline OJson json_flatness(const FlatnessReport& f) {
  OJson j;
  j["model"] = f.model;
  j["all_applicable_pass"] = f.all_applicable_pass;
  OJson checks = OJson::array();
  for (const auto& c : f.checks) {
    OJson x;
    x["relation"] = c.relation;
    x["applicable"] = c.applicable;
    x["pass"] = c.pass;
    if (!c.detail.empty()) x["detail"] = c.detail;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline OJson json_transport(const TransportResult& t) {
  OJson j;
  j["matrix"] = json_matc(t.matrix);
  j["steps"] = t.steps;
  j["max_local_error"] = t.max_local_error;
  // decimal string: the value does not fit in a double-exact json number
  j["path_hash"] = std::to_string(t.path_hash);
  return j;
}

}  // namespace ecl

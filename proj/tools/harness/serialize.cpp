#include <sstream>

#include "harness.hpp"

namespace dominium::harness {

namespace {

Json members_json(const VertexSet& s) { return Json(s.members()); }

}  // namespace

std::string decimal_string(const Rational& r) {
  constexpr std::int64_t kScale = 1000000;
  const bool negative = r.numerator() < 0;
  const std::int64_t num = negative ? -r.numerator() : r.numerator();
  const std::int64_t den = r.denominator();

  std::int64_t whole = num / den;
  // Round half up on the absolute value.
  std::int64_t frac = ((num % den) * kScale * 2 + den) / (2 * den);
  if (frac == kScale) {
    ++whole;
    frac = 0;
  }

  std::string out = (negative && (whole != 0 || frac != 0)) ? "-" : "";
  out += std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Json rational_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"decimal", decimal_string(r)}};
}

Json solve_result_json(const SolveResult& r) {
  Json j;
  j["parameter"] = to_string(r.parameter);
  j["k"] = r.k ? Json(*r.k) : Json(nullptr);
  j["value"] = r.value;
  j["witness"] = members_json(r.witness);
  j["nodes_explored"] = r.nodes_explored;
  j["method"] = to_string(r.method);
  return j;
}

Json bound_report_json(const BoundReport& r) {
  Json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["k"] = r.k;
  j["exact"] = Json{{"gamma_k", r.exact.gamma_k},
                    {"gamma_xk", r.exact.gamma_xk ? Json(*r.exact.gamma_xk) : Json(nullptr)},
                    {"gamma_xk_defined", r.exact.gamma_xk.has_value()},
                    {"rho", r.exact.rho}};
  Json bounds = Json::array();
  for (const auto& e : r.bounds) {
    Json b;
    b["name"] = to_string(e.name);
    b["sense"] = sense_of(e.name) == Sense::upper ? "upper" : "lower";
    b["value"] = e.value ? rational_json(*e.value) : Json(nullptr);
    const auto integral = e.integral();
    b["integral"] = integral ? Json(*integral) : Json(nullptr);
    b["verdict"] = to_string(e.verdict);
    bounds.push_back(b);
  }
  j["bounds"] = bounds;
  j["verdict_summary"] = Json{{"holds", r.summary.holds},
                              {"tight", r.summary.tight},
                              {"violated", r.summary.violated},
                              {"not_applicable", r.summary.not_applicable}};
  return j;
}

Json trace_json(const AugmentationTrace& t) {
  const long k = t.k;
  Json j;
  j["k"] = t.k;
  j["d"] = members_json(t.d);
  j["u"] = members_json(t.u);
  j["d_prime"] = members_json(t.d_prime);
  j["d_zero"] = members_json(t.d_zero);
  j["d_double_prime"] = members_json(t.d_double_prime);
  j["fallback"] = t.fallback;
  if (!t.fallback) {
    j["counting_lhs"] = t.counting_lhs;
    j["counting_rhs"] = k * (k - 1);
    j["added"] = (t.d_double_prime - t.d_prime).size();
    j["added_bound"] = (k - 1) * t.d.size() - k * (k - 1);
  }
  return j;
}

std::string bound_csv_header() {
  return "graph_id,n,m,delta,k,gamma_k,gamma_xk,rho,bound_name,bound_num,bound_den,verdict\n";
}

std::string bound_csv_rows(const BoundReport& r) {
  std::ostringstream out;
  // graph6 bytes lie in 63..126, so no field ever needs quoting.
  for (const auto& e : r.bounds) {
    out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.delta << ',' << r.k << ','
        << r.exact.gamma_k << ',';
    if (r.exact.gamma_xk) out << *r.exact.gamma_xk;
    out << ',' << r.exact.rho << ',' << to_string(e.name) << ',';
    if (e.value) out << e.value->numerator() << ',' << e.value->denominator();
    else out << ',';
    out << ',' << to_string(e.verdict) << '\n';
  }
  return out.str();
}

}  // namespace dominium::harness

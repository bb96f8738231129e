#include "dominium/bounds.hpp"

#include <stdexcept>

#include "dominium/graph6.hpp"
#include "dominium/solvers.hpp"

namespace dominium {

Rational eval_thm22(int gamma_k_value, int k) {
  const std::int64_t kk = k;
  return Rational(kk * gamma_k_value - (kk - 1) * (kk - 1));
}

Rational eval_trivial_kgamma(int gamma_k_value, int k) {
  return Rational(static_cast<std::int64_t>(k) * gamma_k_value);
}

PackingBounds eval_thm23(int n, int rho_value, int k) {
  return {Rational(static_cast<std::int64_t>(k) * rho_value),
          Rational(static_cast<std::int64_t>(n) - rho_value)};
}

std::optional<Rational> eval_prop24(int n, int m, int delta, int k) {
  if (delta < k) return std::nullopt;
  const std::int64_t num = static_cast<std::int64_t>(delta + k) * n - 2 * std::int64_t{m};
  return Rational(num, delta + 1);
}

Rational eval_harary_haynes(int n, int m, int k) {
  const std::int64_t num = 2 * std::int64_t{k} * n - 2 * std::int64_t{m};
  return Rational(num, k + 1);
}

std::string_view to_string(BoundName b) {
  switch (b) {
    case BoundName::thm22_upper: return "thm22_upper";
    case BoundName::thm23_lower: return "thm23_lower";
    case BoundName::thm23_upper: return "thm23_upper";
    case BoundName::prop24_lower: return "prop24_lower";
    case BoundName::harary_haynes_lower: return "harary_haynes_lower";
    case BoundName::trivial_kgamma_upper: return "trivial_kgamma_upper";
  }
  return "unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::tight: return "tight";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "unknown";
}

Sense sense_of(BoundName b) {
  switch (b) {
    case BoundName::thm23_lower:
    case BoundName::prop24_lower:
    case BoundName::harary_haynes_lower:
      return Sense::lower;
    default:
      return Sense::upper;
  }
}

Verdict classify(Sense sense, const Rational& bound, int exact) {
  const Rational x(exact);
  if (x == bound) return Verdict::tight;
  const bool ok = sense == Sense::upper ? x < bound : x > bound;
  return ok ? Verdict::holds : Verdict::violated;
}

std::optional<std::int64_t> BoundEntry::integral() const {
  if (!value) return std::nullopt;
  const std::int64_t q = boost::rational_cast<std::int64_t>(*value);  // truncates toward zero
  const Rational rq(q);
  if (sense_of(name) == Sense::lower) return *value > rq ? q + 1 : q;
  return *value < rq ? q - 1 : q;
}

const BoundEntry& BoundReport::entry(BoundName name) const {
  for (const auto& e : bounds) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("bound not present in report");
}

BoundReport evaluate_bounds(const Graph& g, int k, const ExactValues& exact) {
  if (k < 2) throw std::invalid_argument("bounds are stated for k >= 2");

  BoundReport r;
  r.graph_id = to_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.delta = g.min_degree();
  r.k = k;
  r.exact = exact;

  const bool tuple_defined = exact.gamma_xk.has_value();
  const bool delta_ge_k = r.delta >= k;
  const PackingBounds packing = eval_thm23(r.n, exact.rho, k);

  for (BoundName name : kAllBounds) {
    BoundEntry e;
    e.name = name;
    bool applicable = tuple_defined;
    switch (name) {
      case BoundName::thm22_upper:
        e.value = eval_thm22(exact.gamma_k, k);
        break;
      case BoundName::trivial_kgamma_upper:
        e.value = eval_trivial_kgamma(exact.gamma_k, k);
        break;
      case BoundName::thm23_lower:
        e.value = packing.lower;
        applicable = applicable && delta_ge_k;
        break;
      case BoundName::thm23_upper:
        e.value = packing.upper;
        applicable = applicable && delta_ge_k;
        break;
      case BoundName::prop24_lower:
        e.value = eval_prop24(r.n, r.m, r.delta, k);
        applicable = applicable && delta_ge_k;
        break;
      case BoundName::harary_haynes_lower:
        e.value = eval_harary_haynes(r.n, r.m, k);
        break;
    }
    e.verdict = applicable && e.value ? classify(sense_of(name), *e.value, *exact.gamma_xk)
                                      : Verdict::not_applicable;
    switch (e.verdict) {
      case Verdict::holds: ++r.summary.holds; break;
      case Verdict::tight: ++r.summary.tight; break;
      case Verdict::violated: ++r.summary.violated; break;
      case Verdict::not_applicable: ++r.summary.not_applicable; break;
    }
    r.bounds.push_back(e);
  }
  return r;
}

BoundReport verify_all(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("verify_all requires k >= 2");
  ExactValues exact;
  exact.gamma_k = gamma_k(g, k).value;
  if (k <= g.min_degree() + 1) exact.gamma_xk = gamma_xk(g, k).value;
  exact.rho = rho(g).value;
  return evaluate_bounds(g, k, exact);
}

}  // namespace dominium

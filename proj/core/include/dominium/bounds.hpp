#ifndef DOMINIUM_BOUNDS_HPP
#define DOMINIUM_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "dominium/graph.hpp"

namespace dominium {

using Rational = boost::rational<std::int64_t>;

// Closed-form bounds on the k-tuple domination number. Arguments are exact
// parameter values; results are exact rationals.

/// k * gamma_k - (k-1)^2. Upper bound when delta >= k-1.
Rational eval_thm22(int gamma_k_value, int k);

/// k * gamma_k. Upper bound when delta >= k-1.
Rational eval_trivial_kgamma(int gamma_k_value, int k);

struct PackingBounds {
  Rational lower;  // k * rho
  Rational upper;  // n - rho
};
/// Both sides hold when delta >= k.
PackingBounds eval_thm23(int n, int rho_value, int k);

/// ((delta+k) n - 2m) / (delta+1), or nullopt when delta < k.
std::optional<Rational> eval_prop24(int n, int m, int delta, int k);

/// (2kn - 2m) / (k+1). Lower bound when delta >= k-1.
Rational eval_harary_haynes(int n, int m, int k);

enum class BoundName {
  thm22_upper,
  thm23_lower,
  thm23_upper,
  prop24_lower,
  harary_haynes_lower,
  trivial_kgamma_upper
};
inline constexpr std::array kAllBounds = {
    BoundName::thm22_upper,         BoundName::thm23_lower,  BoundName::thm23_upper,
    BoundName::prop24_lower,        BoundName::harary_haynes_lower,
    BoundName::trivial_kgamma_upper};

enum class Sense { upper, lower };
enum class Verdict { holds, tight, violated, not_applicable };

std::string_view to_string(BoundName b);
std::string_view to_string(Verdict v);
Sense sense_of(BoundName b);

/// Compares the literal inequality exactly: an upper bound is violated iff
/// exact > bound, a lower bound iff exact < bound; equality is tight.
Verdict classify(Sense sense, const Rational& bound, int exact);

struct BoundEntry {
  BoundName name = BoundName::thm22_upper;
  std::optional<Rational> value;
  Verdict verdict = Verdict::not_applicable;

  /// Integral strengthening for display only: ceil for lower bounds, floor
  /// for upper bounds. Verdicts never use it.
  std::optional<std::int64_t> integral() const;
};

struct ExactValues {
  int gamma_k = 0;
  std::optional<int> gamma_xk;  // empty when k > delta + 1
  int rho = 0;
};

struct VerdictSummary {
  int holds = 0;
  int tight = 0;
  int violated = 0;
  int not_applicable = 0;
};

struct BoundReport {
  std::string graph_id;  // graph6
  int n = 0;
  int m = 0;
  int delta = 0;
  int k = 0;
  ExactValues exact;
  std::vector<BoundEntry> bounds;  // in kAllBounds order
  VerdictSummary summary;

  const BoundEntry& entry(BoundName name) const;
};

/// Evaluates every bound against already-computed exact values.
BoundReport evaluate_bounds(const Graph& g, int k, const ExactValues& exact);

/// Solves gamma_k, gamma_xk (when defined) and rho exactly, then evaluates
/// every bound. Requires k >= 2.
BoundReport verify_all(const Graph& g, int k);

}  // namespace dominium

#endif  // DOMINIUM_BOUNDS_HPP

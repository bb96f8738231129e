#ifndef DOMINIUM_SOLVERS_HPP
#define DOMINIUM_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "dominium/errors.hpp"
#include "dominium/graph.hpp"

namespace dominium {

enum class Parameter {
  gamma_k,   // k-domination number
  gamma_xk,  // k-tuple domination number
  rho        // 2-packing number
};

enum class Method { branch_and_bound, oracle };

std::string_view to_string(Parameter p);
std::string_view to_string(Method m);

struct SolveResult {
  Parameter parameter = Parameter::gamma_k;
  std::optional<int> k;  // empty for rho
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  Method method = Method::branch_and_bound;
};

// Feasibility checkers. All throw std::invalid_argument when the set width
// differs from the graph order or k < 1.

/// Every vertex outside d has at least k neighbours in d.
bool is_k_dominating(const Graph& g, const VertexSet& d, int k);
/// k-dominating, and every member of d has at least k-1 neighbours in d.
bool is_ktuple_dominating(const Graph& g, const VertexSet& d, int k);
/// |N[v] & d| >= k for every vertex v. Equivalent to is_ktuple_dominating.
bool closed_neighborhoods_covered(const Graph& g, const VertexSet& d, int k);
/// Closed neighbourhoods of the members of p are pairwise disjoint.
bool is_2_packing(const Graph& g, const VertexSet& p);

/*
 * Exact solvers. Each returns an optimal witness which is the
 * lexicographically least optimal set (compare ascending member lists), so
 * results are reproducible and agree with oracle_solve witness-for-witness.
 */

/// Requires k >= 1.
SolveResult gamma_k(const Graph& g, int k);
/// Requires 1 <= k <= delta(g) + 1; larger k throws ParameterUndefined.
SolveResult gamma_xk(const Graph& g, int k);
SolveResult rho(const Graph& g);

/// Dispatches to the solver for `parameter`; k is ignored for rho.
SolveResult solve(const Graph& g, Parameter parameter, int k);

inline constexpr int kOracleMaxOrder = 20;

/// Plain cardinality-ordered subset enumeration; no pruning beyond the
/// feasibility test. Requires g.order() <= kOracleMaxOrder.
SolveResult oracle_solve(const Graph& g, Parameter parameter, int k);

}  // namespace dominium

#endif  // DOMINIUM_SOLVERS_HPP

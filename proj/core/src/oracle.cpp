#include <numeric>
#include <vector>

#include "dominium/solvers.hpp"

namespace dominium {

namespace {

/// Visits the size-s subsets of 0..n-1 in lexicographic order of their
/// ascending member lists until `visit` returns true.
template <typename Visit>
std::optional<Mask> first_subset(int n, int s, std::uint64_t& visited, Visit visit) {
  std::vector<int> idx(static_cast<std::size_t>(s));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Mask m = 0;
    for (int v : idx) m |= bit(v);
    ++visited;
    if (visit(m)) return m;

    int i = s - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

SolveResult oracle_solve(const Graph& g, Parameter parameter, int k) {
  const int n = g.order();
  if (n > kOracleMaxOrder) {
    throw PreconditionError("oracle_solve: order " + std::to_string(n) + " exceeds guard " +
                            std::to_string(kOracleMaxOrder));
  }
  if (parameter != Parameter::rho && k < 1) {
    throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  }
  if (parameter == Parameter::gamma_xk && k > g.min_degree() + 1) {
    throw ParameterUndefined("k-tuple domination undefined: k = " + std::to_string(k) +
                             " exceeds min degree + 1 = " + std::to_string(g.min_degree() + 1));
  }

  SolveResult r;
  r.parameter = parameter;
  r.method = Method::oracle;
  std::uint64_t visited = 0;

  if (parameter == Parameter::rho) {
    // 2-packings are closed under taking subsets, so the first size with no
    // packing ends the scan.
    Mask best = 0;
    for (int s = 1; s <= n; ++s) {
      auto hit = first_subset(n, s, visited,
                              [&](Mask m) { return is_2_packing(g, VertexSet(n, m)); });
      if (!hit) break;
      best = *hit;
    }
    r.value = std::popcount(best);
    r.witness = VertexSet(n, best);
  } else {
    r.k = k;
    const bool tuple = parameter == Parameter::gamma_xk;
    for (int s = 0; s <= n; ++s) {
      auto hit = first_subset(n, s, visited, [&](Mask m) {
        const VertexSet d(n, m);
        return tuple ? is_ktuple_dominating(g, d, k) : is_k_dominating(g, d, k);
      });
      if (hit) {
        r.value = s;
        r.witness = VertexSet(n, *hit);
        break;
      }
    }
  }
  r.nodes_explored = visited;
  return r;
}

}  // namespace dominium

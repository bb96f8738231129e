#ifndef DOMINIUM_CONSTRUCTIONS_HPP
#define DOMINIUM_CONSTRUCTIONS_HPP

#include "dominium/errors.hpp"
#include "dominium/graph.hpp"

namespace dominium {

/*
 * Turning a k-dominating set D into a k-tuple dominating set of size at most
 * k|D| - (k-1)^2:
 *
 *   1. U  = k-1 vertices outside D (largest deg_D first, lowest index on ties)
 *   2. D' = D | U
 *   3. D0 = { v in D : deg_D'(v) < k-1 }
 *   4. D'' = D' plus greedy helpers from outside D' until every member of D
 *      has k-1 neighbours in D''. Each step takes the outside vertex adjacent
 *      to the most still-deficient members of D0, lowest index on ties.
 *
 * When k|D| - (k-1)^2 > n, or fewer than k-1 vertices lie outside D, the
 * bound is no better than n and the result is V(G) (`fallback` is set).
 */
struct AugmentationTrace {
  int k = 0;
  VertexSet d;
  VertexSet u;
  VertexSet d_prime;
  VertexSet d_zero;
  VertexSet d_double_prime;
  bool fallback = false;

  /// Sum over D0 of deg_D'(v), plus |D \ D0| (k-1). At least k(k-1).
  long counting_lhs = 0;
  /// k|D| - (k-1)^2.
  long size_bound = 0;
};

/// Requires k >= 2, delta(g) >= k-1 and d k-dominating; otherwise throws
/// PreconditionError naming the failed condition.
AugmentationTrace augment_to_ktuple(const Graph& g, const VertexSet& d, int k);

/// Gives every member of d its missing k-1 neighbours directly (lowest index
/// first), with no U seeding. Same preconditions as augment_to_ktuple. The
/// result is k-tuple dominating and has size at most min(k|d|, n).
VertexSet kgamma_trivial_bound(const Graph& g, const VertexSet& d, int k);

/// V(G) \ p. Requires k >= 2, delta(g) >= k and p a 2-packing; the result is
/// then a k-tuple dominating set of size n - |p|.
VertexSet packing_complement(const Graph& g, const VertexSet& p, int k);

}  // namespace dominium

#endif  // DOMINIUM_CONSTRUCTIONS_HPP

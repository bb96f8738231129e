#include "dominium/constructions.hpp"

#include <algorithm>
#include <string>

#include "dominium/solvers.hpp"

namespace dominium {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void check_domination_inputs(const Graph& g, const VertexSet& d, int k) {
  require(k >= 2, "k must be >= 2");
  require(d.width() == g.order(), "set width does not match graph order");
  require(g.min_degree() >= k - 1,
          "min degree " + std::to_string(g.min_degree()) + " is below k-1 = " +
              std::to_string(k - 1));
  require(is_k_dominating(g, d, k), "input set " + d.to_string() + " is not " +
                                        std::to_string(k) + "-dominating");
}

}  // namespace

AugmentationTrace augment_to_ktuple(const Graph& g, const VertexSet& d, int k) {
  check_domination_inputs(g, d, k);
  const int n = g.order();

  AugmentationTrace t;
  t.k = k;
  t.d = d;
  t.u = g.empty_set();
  t.d_prime = d;
  t.d_zero = g.empty_set();
  t.size_bound = static_cast<long>(k) * d.size() - static_cast<long>(k - 1) * (k - 1);

  const VertexSet outside = d.complement();
  if (t.size_bound > n || outside.size() < k - 1) {
    t.fallback = true;
    t.d_double_prime = g.all_vertices();
    return t;
  }

  // U: the k-1 outside vertices with the most neighbours in D.
  std::vector<Vertex> pool = outside.members();
  std::stable_sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) {
    return g.degree_in(a, d) > g.degree_in(b, d);
  });
  for (int i = 0; i < k - 1; ++i) t.u.insert(pool[static_cast<std::size_t>(i)]);
  t.d_prime = d | t.u;

  for (Vertex v : d.members()) {
    const int deg = g.degree_in(v, t.d_prime);
    if (deg < k - 1) {
      t.d_zero.insert(v);
      t.counting_lhs += deg;
    } else {
      t.counting_lhs += k - 1;
    }
  }

  VertexSet w = t.d_prime;
  const auto missing = [&](Vertex v) { return std::max(0, k - 1 - g.degree_in(v, w)); };
  while (true) {
    Mask deficient = 0;
    for (Vertex v : t.d_zero.members()) {
      if (missing(v) > 0) deficient |= bit(v);
    }
    if (deficient == 0) break;

    Vertex pick = -1;
    int pick_cover = 0;
    for (Vertex x : w.complement().members()) {
      const int cover = std::popcount(g.row(x) & deficient);
      if (cover > pick_cover) {
        pick = x;
        pick_cover = cover;
      }
    }
    // Unreachable when delta >= k-1: a deficient v has at least
    // k-1 - deg_W(v) neighbours outside W.
    if (pick < 0) throw std::logic_error("augment_to_ktuple: no helper vertex available");
    w.insert(pick);
  }
  t.d_double_prime = w;
  return t;
}

VertexSet kgamma_trivial_bound(const Graph& g, const VertexSet& d, int k) {
  check_domination_inputs(g, d, k);
  VertexSet out = d;
  for (Vertex v : d.members()) {
    for (Mask b = g.row(v) & ~out.bits(); b != 0 && g.degree_in(v, out) < k - 1; b &= b - 1) {
      out.insert(std::countr_zero(b));
    }
  }
  return out;
}

VertexSet packing_complement(const Graph& g, const VertexSet& p, int k) {
  require(k >= 2, "k must be >= 2");
  require(p.width() == g.order(), "set width does not match graph order");
  require(g.min_degree() >= k, "min degree " + std::to_string(g.min_degree()) +
                                   " is below k = " + std::to_string(k));
  require(is_2_packing(g, p), "input set " + p.to_string() + " is not a 2-packing");
  return p.complement();
}

}  // namespace dominium

#include "dominium/solvers.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

namespace dominium {

namespace {

void check_width(const Graph& g, const VertexSet& s) {
  if (s.width() != g.order()) {
    throw std::invalid_argument("vertex set width " + std::to_string(s.width()) +
                                " does not match graph order " + std::to_string(g.order()));
  }
}

void check_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
}

/*
 * Exact minimum k-dominating / k-tuple dominating set search.
 *
 * A node is a pair (in, out) of disjoint vertex masks. The deficiency of a
 * vertex v is how many more members of `in` it still needs:
 *   tuple:  k - |N[v] & in|
 *   k-dom:  0 if v in `in`, else k - |N(v) & in|
 * The search branches on the vertex with the largest deficiency (lowest
 * index on ties), trying each still-free vertex that would reduce it: the
 * i-th branch includes candidate c_i and excludes c_1..c_{i-1}.
 *
 * Lower bound: adding a free vertex u reduces the total deficiency by at
 * most gain(u) (the number of deficient vertices of N[u] for tuple; for
 * k-dom, u's own deficiency plus its deficient neighbours). Gains never
 * increase deeper in the tree, so the fewest vertices whose largest gains
 * sum to the total deficiency is a valid bound on the additions needed.
 */
class DominationSearch {
 public:
  DominationSearch(const Graph& g, int k, bool tuple) : k_(k), tuple_(tuple), n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) {
      open_[static_cast<std::size_t>(v)] = g.row(v);
      closed_[static_cast<std::size_t>(v)] = g.closed_row(v);
    }
    all_ = g.vertex_mask();
  }

  /// Smallest feasible set, searching only for sets of size < limit.
  std::optional<Mask> minimize(Mask in, Mask out, int limit) {
    best_size_ = limit;
    found_.reset();
    first_only_ = false;
    stop_ = false;
    descend(in, out);
    return found_;
  }

  /// Whether a feasible set of size <= bound contains `in` and avoids `out`.
  bool feasible_within(Mask in, Mask out, int bound) {
    best_size_ = bound + 1;
    found_.reset();
    first_only_ = true;
    stop_ = false;
    descend(in, out);
    return found_.has_value();
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  int deficiency(Vertex v, Mask in) const {
    const auto i = static_cast<std::size_t>(v);
    if (tuple_) return std::max(0, k_ - std::popcount(closed_[i] & in));
    if (in & bit(v)) return 0;
    return std::max(0, k_ - std::popcount(open_[i] & in));
  }

  void descend(Mask in, Mask out) {
    ++nodes_;
    if (stop_) return;

    std::array<int, kMaxOrder> need{};
    int total = 0;
    int widest = -1;
    int widest_need = 0;
    Mask needy = 0;
    for (Vertex v = 0; v < n_; ++v) {
      const int d = deficiency(v, in);
      need[static_cast<std::size_t>(v)] = d;
      if (d > 0) {
        total += d;
        needy |= bit(v);
        if (d > widest_need) {
          widest_need = d;
          widest = v;
        }
      }
    }

    const int size = std::popcount(in);
    if (total == 0) {
      if (size < best_size_) {
        best_size_ = size;
        found_ = in;
        if (first_only_) stop_ = true;
      }
      return;
    }

    const Mask free = all_ & ~in & ~out;

    // Every deficient vertex must still be repairable from free vertices.
    for (Mask b = needy; b != 0; b &= b - 1) {
      const Vertex v = std::countr_zero(b);
      const auto i = static_cast<std::size_t>(v);
      if (tuple_) {
        if (std::popcount(closed_[i] & free) < need[i]) return;
      } else if ((free & bit(v)) == 0 && std::popcount(open_[i] & free) < need[i]) {
        return;
      }
    }

    std::array<int, kMaxOrder> gains{};
    int count = 0;
    for (Mask b = free; b != 0; b &= b - 1) {
      const Vertex u = std::countr_zero(b);
      const auto i = static_cast<std::size_t>(u);
      const int gain = tuple_ ? std::popcount(closed_[i] & needy)
                              : need[i] + std::popcount(open_[i] & needy);
      if (gain > 0) gains[static_cast<std::size_t>(count++)] = gain;
    }
    std::sort(gains.begin(), gains.begin() + count, std::greater<>());
    int additions = 0;
    for (int covered = 0; covered < total; ++additions) {
      if (additions == count) return;
      covered += gains[static_cast<std::size_t>(additions)];
    }
    if (tuple_) additions = std::max(additions, widest_need);
    if (size + additions >= best_size_) return;

    const auto w = static_cast<std::size_t>(widest);
    const Mask reach = tuple_ ? closed_[w] : (open_[w] | bit(widest));
    Mask excluded = out;
    for (Mask b = reach & free; b != 0; b &= b - 1) {
      const Vertex c = std::countr_zero(b);
      descend(in | bit(c), excluded);
      if (stop_) return;
      excluded |= bit(c);
      const Mask left = reach & all_ & ~in & ~excluded;
      if (tuple_ && std::popcount(left) < widest_need) return;
      if (!tuple_ && (left & bit(widest)) == 0 && std::popcount(left) < widest_need) return;
    }
  }

  int k_;
  bool tuple_;
  int n_;
  Mask all_ = 0;
  std::array<Mask, kMaxOrder> open_{};
  std::array<Mask, kMaxOrder> closed_{};

  int best_size_ = 0;
  std::optional<Mask> found_;
  bool first_only_ = false;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
};

SolveResult solve_domination(const Graph& g, int k, bool tuple) {
  const int n = g.order();
  DominationSearch search(g, k, tuple);
  const std::optional<Mask> optimum = search.minimize(0, 0, n + 1);
  if (!optimum) throw std::logic_error("domination search found no feasible set");
  const int value = std::popcount(*optimum);

  // Rebuild the lexicographically least optimal set one vertex at a time.
  Mask chosen = 0;
  Mask rejected = 0;
  for (Vertex c = 0; c < n && std::popcount(chosen) < value; ++c) {
    if (search.feasible_within(chosen | bit(c), rejected, value)) {
      chosen |= bit(c);
    } else {
      rejected |= bit(c);
    }
  }

  SolveResult r;
  r.parameter = tuple ? Parameter::gamma_xk : Parameter::gamma_k;
  r.k = k;
  r.value = value;
  r.witness = VertexSet(n, chosen);
  r.nodes_explored = search.nodes();
  r.method = Method::branch_and_bound;
  return r;
}

/*
 * Maximum 2-packing as a maximum clique in the compatibility graph, where u
 * and v are compatible iff their closed neighbourhoods are disjoint
 * (distance at least 3). Greedy sequential colouring of the candidate set
 * bounds the clique that can still be added.
 */
class PackingSearch {
 public:
  explicit PackingSearch(const Graph& g) : n_(g.order()) {
    const Mask all = g.vertex_mask();
    for (Vertex u = 0; u < n_; ++u) {
      Mask near = 0;
      for (Mask b = g.closed_row(u); b != 0; b &= b - 1) near |= g.closed_row(std::countr_zero(b));
      compatible_[static_cast<std::size_t>(u)] = all & ~near;
    }
  }

  Mask compatible(Vertex v) const { return compatible_[static_cast<std::size_t>(v)]; }

  /// Largest packing inside `candidates`.
  Mask maximize(Mask candidates) {
    best_size_ = 0;
    best_ = 0;
    target_reached_ = false;
    target_ = kMaxOrder + 1;
    expand(0, candidates);
    return best_;
  }

  /// Whether `candidates` holds a packing of at least `target` vertices.
  bool reaches(Mask candidates, int target) {
    if (target <= 0) return true;
    best_size_ = target - 1;
    best_ = 0;
    target_ = target;
    target_reached_ = false;
    expand(0, candidates);
    return target_reached_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void expand(Mask clique, Mask candidates) {
    ++nodes_;
    const int size = std::popcount(clique);
    if (size > best_size_) {
      best_size_ = size;
      best_ = clique;
      if (size >= target_) target_reached_ = true;
    }
    if (target_reached_ || candidates == 0) return;

    std::array<Vertex, kMaxOrder> order{};
    std::array<int, kMaxOrder> colour{};
    int count = 0;
    int c = 0;
    for (Mask uncoloured = candidates; uncoloured != 0;) {
      ++c;
      for (Mask q = uncoloured; q != 0;) {
        const Vertex v = std::countr_zero(q);
        q &= ~bit(v) & ~compatible(v);
        uncoloured &= ~bit(v);
        order[static_cast<std::size_t>(count)] = v;
        colour[static_cast<std::size_t>(count)] = c;
        ++count;
      }
    }

    for (int i = count - 1; i >= 0; --i) {
      if (size + colour[static_cast<std::size_t>(i)] <= best_size_) return;
      const Vertex v = order[static_cast<std::size_t>(i)];
      expand(clique | bit(v), candidates & compatible(v));
      if (target_reached_) return;
      candidates &= ~bit(v);
    }
  }

  int n_;
  std::array<Mask, kMaxOrder> compatible_{};
  int best_size_ = 0;
  Mask best_ = 0;
  int target_ = 0;
  bool target_reached_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::gamma_k: return "gamma_k";
    case Parameter::gamma_xk: return "gamma_xk";
    case Parameter::rho: return "rho";
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  return m == Method::oracle ? "oracle" : "branch_and_bound";
}

bool is_k_dominating(const Graph& g, const VertexSet& d, int k) {
  check_width(g, d);
  check_k(k);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!d.contains(v) && g.degree_in(v, d) < k) return false;
  }
  return true;
}

bool is_ktuple_dominating(const Graph& g, const VertexSet& d, int k) {
  if (!is_k_dominating(g, d, k)) return false;
  for (Vertex v : d.members()) {
    if (g.degree_in(v, d) < k - 1) return false;
  }
  return true;
}

bool closed_neighborhoods_covered(const Graph& g, const VertexSet& d, int k) {
  check_width(g, d);
  check_k(k);
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((g.closed_neighborhood(v) & d).size() < k) return false;
  }
  return true;
}

bool is_2_packing(const Graph& g, const VertexSet& p) {
  check_width(g, p);
  Mask covered = 0;
  for (Vertex v : p.members()) {
    const Mask closed = g.closed_row(v);
    if (covered & closed) return false;
    covered |= closed;
  }
  return true;
}

SolveResult gamma_k(const Graph& g, int k) {
  check_k(k);
  return solve_domination(g, k, false);
}

SolveResult gamma_xk(const Graph& g, int k) {
  check_k(k);
  if (k > g.min_degree() + 1) {
    throw ParameterUndefined("k-tuple domination undefined: k = " + std::to_string(k) +
                             " exceeds min degree + 1 = " + std::to_string(g.min_degree() + 1));
  }
  return solve_domination(g, k, true);
}

SolveResult rho(const Graph& g) {
  const int n = g.order();
  PackingSearch search(g);
  const int value = std::popcount(search.maximize(g.vertex_mask()));

  Mask chosen = 0;
  Mask pool = g.vertex_mask();
  for (Vertex c = 0; c < n && std::popcount(chosen) < value; ++c) {
    if ((pool & bit(c)) == 0) continue;
    const Mask rest = pool & search.compatible(c) & ~low_bits(c + 1);
    if (search.reaches(rest, value - std::popcount(chosen) - 1)) {
      chosen |= bit(c);
      pool = rest;
    }
  }

  SolveResult r;
  r.parameter = Parameter::rho;
  r.value = value;
  r.witness = VertexSet(n, chosen);
  r.nodes_explored = search.nodes();
  r.method = Method::branch_and_bound;
  return r;
}

SolveResult solve(const Graph& g, Parameter parameter, int k) {
  switch (parameter) {
    case Parameter::gamma_k: return gamma_k(g, k);
    case Parameter::gamma_xk: return gamma_xk(g, k);
    case Parameter::rho: return rho(g);
  }
  throw std::logic_error("unhandled parameter");
}

}  // namespace dominium

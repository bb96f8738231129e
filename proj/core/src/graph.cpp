#include "dominium/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dominium {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside supported range 1.." +
                                std::to_string(kMaxOrder));
  }
}

}  // namespace

VertexSet::VertexSet(int width) : width_(width) {
  if (width < 0 || width > kMaxOrder) {
    throw std::invalid_argument("vertex set width out of range");
  }
}

VertexSet::VertexSet(int width, Mask bits) : VertexSet(width) {
  if ((bits & ~low_bits(width)) != 0) {
    throw std::out_of_range("vertex set bits exceed width " + std::to_string(width));
  }
  bits_ = bits;
}

VertexSet::VertexSet(int width, std::initializer_list<Vertex> members) : VertexSet(width) {
  for (Vertex v : members) insert(v);
}

void VertexSet::check_vertex(Vertex v) const {
  if (v < 0 || v >= width_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(width_ - 1));
  }
}

void VertexSet::check_width(const VertexSet& o) const {
  if (o.width_ != width_) {
    throw std::invalid_argument("vertex set width mismatch: " + std::to_string(width_) +
                                " vs " + std::to_string(o.width_));
  }
}

bool VertexSet::contains(Vertex v) const {
  check_vertex(v);
  return (bits_ & bit(v)) != 0;
}

void VertexSet::insert(Vertex v) {
  check_vertex(v);
  bits_ |= bit(v);
}

void VertexSet::erase(Vertex v) {
  check_vertex(v);
  bits_ &= ~bit(v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_width(other);
  return (bits_ & ~other.bits_) == 0;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  check_width(o);
  return {width_, bits_ | o.bits_};
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  check_width(o);
  return {width_, bits_ & o.bits_};
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  check_width(o);
  return {width_, bits_ & ~o.bits_};
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Vertex v : members()) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

Graph::Graph(std::vector<Mask> rows) : rows_(std::move(rows)) {
  int total = 0;
  min_degree_ = kMaxOrder;
  max_degree_ = 0;
  for (Mask r : rows_) {
    const int d = std::popcount(r);
    total += d;
    min_degree_ = std::min(min_degree_, d);
    max_degree_ = std::max(max_degree_, d);
  }
  edges_ = total / 2;
}

Mask Graph::row(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                            std::to_string(order()));
  }
  return rows_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const Mask r = row(u);
  if (v < 0 || v >= order()) throw std::out_of_range("vertex out of range");
  return (r & bit(v)) != 0;
}

int Graph::degree_in(Vertex v, const VertexSet& s) const {
  if (s.width() != order()) {
    throw std::invalid_argument("vertex set width " + std::to_string(s.width()) +
                                " does not match graph order " + std::to_string(order()));
  }
  return std::popcount(row(v) & s.bits());
}

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  const int n = order();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::out_of_range("edge endpoint outside 0.." + std::to_string(n - 1));
  }
  if (u == v) throw std::invalid_argument("loops are not allowed in a simple graph");
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
  return *this;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  return (rows_.at(static_cast<std::size_t>(u)) & bit(v)) != 0;
}

Graph join(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng + nh > kMaxOrder) {
    throw std::invalid_argument("join order " + std::to_string(ng + nh) +
                                " exceeds supported maximum " + std::to_string(kMaxOrder));
  }
  GraphBuilder b(ng + nh);
  for (Vertex u = 0; u < ng; ++u) {
    for (Vertex v = u + 1; v < ng; ++v) {
      if (g.adjacent(u, v)) b.add_edge(u, v);
    }
    for (Vertex w = 0; w < nh; ++w) b.add_edge(u, ng + w);
  }
  for (Vertex u = 0; u < nh; ++u) {
    for (Vertex v = u + 1; v < nh; ++v) {
      if (h.adjacent(u, v)) b.add_edge(ng + u, ng + v);
    }
  }
  return b.build();
}

}  // namespace dominium

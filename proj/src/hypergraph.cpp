#include "hyperlag/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyperlag/errors.hpp"
#include "hyperlag/rational.hpp"

namespace hyperlag {

ShiftPair::ShiftPair(Vertex lo, Vertex hi) : i(lo), j(hi) {
  if (!(lo < hi)) throw ArgumentError("shift pair requires i < j");
}

bool colex_less(const Edge& a, const Edge& b) {
  // both ascending: compare from the top element down
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return a.size() < b.size();
}

Hypergraph::Hypergraph(int r) : r_(r) {
  if (r < 1) throw ArgumentError("uniformity must be at least 1");
}

Hypergraph::Hypergraph(int r, std::vector<Edge> edges) : r_(r), edges_(std::move(edges)) {
  if (r < 1) throw ArgumentError("uniformity must be at least 1");
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != r ||
        std::adjacent_find(e.begin(), e.end()) != e.end())
      throw UniformityError("edge does not have exactly " + std::to_string(r) +
                            " distinct elements");
    if (e.front() < 1) throw ArgumentError("vertex labels must be positive");
  }
  std::sort(edges_.begin(), edges_.end(), ColexLess{});
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ArgumentError("duplicate edge");
}

bool Hypergraph::contains(const Edge& sorted_edge) const {
  return std::binary_search(edges_.begin(), edges_.end(), sorted_edge, ColexLess{});
}

std::vector<Vertex> Hypergraph::support() const {
  std::vector<Vertex> out;
  for (const auto& e : edges_) out.insert(out.end(), e.begin(), e.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Vertex Hypergraph::max_vertex() const {
  // the colex-largest edge holds the largest label
  return edges_.empty() ? 0 : edges_.back().back();
}

std::size_t Hypergraph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) {
    return std::binary_search(e.begin(), e.end(), v);
  }));
}

std::strong_ordering Hypergraph::operator<=>(const Hypergraph& other) const {
  if (auto c = r_ <=> other.r_; c != 0) return c;
  if (auto c = edges_.size() <=> other.edges_.size(); c != 0) return c;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (colex_less(edges_[k], other.edges_[k])) return std::strong_ordering::less;
    if (colex_less(other.edges_[k], edges_[k])) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ColexIndex colex_rank(const Edge& set) {
  Edge sorted = set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw UniformityError("colex_rank requires distinct elements");
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1) throw ArgumentError("vertex labels must be positive");
    rank += binomial_u64(sorted[i] - 1, static_cast<long>(i) + 1);
  }
  return ColexIndex{rank};
}

ColexIndex colex_rank(const Edge& set, int r) {
  if (static_cast<int>(set.size()) != r)
    throw UniformityError("set size " + std::to_string(set.size()) +
                          " does not match uniformity " + std::to_string(r));
  return colex_rank(set);
}

Edge colex_unrank(ColexIndex k, int r) {
  if (r < 1) throw ArgumentError("uniformity must be at least 1");
  Edge out(static_cast<std::size_t>(r));
  std::uint64_t rem = k.rank;
  // greedy combinatorial number system, largest position first
  for (int i = r; i >= 1; --i) {
    // largest c with C(c, i) <= rem
    long lo = i - 1;
    long hi = i;
    while (binomial_u64(hi, i) <= rem) hi *= 2;
    while (hi - lo > 1) {
      long mid = lo + (hi - lo) / 2;
      (binomial_u64(mid, i) <= rem ? lo : hi) = mid;
    }
    long c = lo;
    rem -= binomial_u64(c, i);
    out[static_cast<std::size_t>(i - 1)] = static_cast<Vertex>(c + 1);
  }
  return out;
}

Hypergraph colex_segment(std::uint64_t m, int r) {
  std::vector<Edge> edges;
  edges.reserve(m);
  if (m == 0) return Hypergraph(r);
  // walk successors instead of unranking each set
  Edge cur(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  for (std::uint64_t k = 0; k < m; ++k) {
    edges.push_back(cur);
    std::size_t p = 0;
    while (p + 1 < cur.size() && cur[p] + 1 == cur[p + 1]) ++p;
    ++cur[p];
    for (std::size_t q = 0; q < p; ++q) cur[q] = static_cast<Vertex>(q + 1);
  }
  return Hypergraph(r, std::move(edges));
}

Hypergraph clique(int t, int r) {
  if (t < r) return Hypergraph(r);
  return colex_segment(binomial_u64(t, r), r);
}

Hypergraph link(const Hypergraph& h, const std::vector<Vertex>& s) {
  Edge sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (static_cast<int>(sorted.size()) >= h.r())
    throw ArityError("link requires |S| < r");
  std::vector<Edge> out;
  for (const auto& e : h.edges()) {
    if (!std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) continue;
    Edge rest;
    std::set_difference(e.begin(), e.end(), sorted.begin(), sorted.end(),
                        std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return Hypergraph(h.r() - static_cast<int>(sorted.size()), std::move(out));
}

Hypergraph link_diff(const Hypergraph& h, Vertex i, Vertex j) {
  if (i == j) throw ArgumentError("link_diff requires i != j");
  if (h.r() < 2) throw ArityError("link_diff requires r >= 2");
  Hypergraph hi = link(h, {i});
  Hypergraph hj = link(h, {j});
  std::vector<Edge> out;
  for (const auto& a : hi.edges()) {
    if (std::binary_search(a.begin(), a.end(), j)) continue;
    if (hj.contains(a)) continue;
    out.push_back(a);
  }
  return Hypergraph(h.r() - 1, std::move(out));
}

namespace {

using EdgeSet = std::set<Edge, ColexLess>;

// One ij-shift; returns true when an edge moved.
bool shift_once(EdgeSet& edges, Vertex i, Vertex j) {
  std::vector<Edge> moving;
  for (const auto& e : edges) {
    if (!std::binary_search(e.begin(), e.end(), j)) continue;
    if (std::binary_search(e.begin(), e.end(), i)) continue;
    Edge b = e;
    *std::find(b.begin(), b.end(), j) = i;
    std::sort(b.begin(), b.end());
    if (!edges.contains(b)) moving.push_back(e);
  }
  for (const auto& e : moving) {
    Edge b = e;
    *std::find(b.begin(), b.end(), j) = i;
    std::sort(b.begin(), b.end());
    edges.erase(e);
    edges.insert(std::move(b));
  }
  return !moving.empty();
}

}  // namespace

Hypergraph left_compress(const Hypergraph& h) {
  EdgeSet edges(h.edges().begin(), h.edges().end());
  const Vertex n = h.max_vertex();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex i = 1; i <= n; ++i)
      for (Vertex j = i + 1; j <= n; ++j) changed |= shift_once(edges, i, j);
  }
  return Hypergraph(h.r(), std::vector<Edge>(edges.begin(), edges.end()));
}

CompressionCheck is_left_compressed(const Hypergraph& h) {
  // report the lexicographically least failing (i, j), then its first edge in colex order
  CompressionCheck out;
  for (const auto& e : h.edges()) {
    for (Vertex j : e) {
      for (Vertex i = 1; i < j; ++i) {
        if (out.shift && std::pair(i, j) >= std::pair(out.shift->i, out.shift->j)) break;
        if (std::binary_search(e.begin(), e.end(), i)) continue;
        Edge b = e;
        *std::find(b.begin(), b.end(), j) = i;
        std::sort(b.begin(), b.end());
        if (!h.contains(b)) {
          out.compressed = false;
          out.shift = ShiftPair(i, j);
          out.edge = e;
          break;
        }
      }
    }
  }
  return out;
}

PairCoverage covers_pairs(const Hypergraph& h) {
  auto sup = h.support();
  std::set<std::pair<Vertex, Vertex>> covered;
  for (const auto& e : h.edges())
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) covered.emplace(e[a], e[b]);
  PairCoverage out;
  for (std::size_t a = 0; a < sup.size(); ++a)
    for (std::size_t b = a + 1; b < sup.size(); ++b)
      if (!covered.contains({sup[a], sup[b]})) out.uncovered.emplace_back(sup[a], sup[b]);
  out.covers = out.uncovered.empty();
  return out;
}

Hypergraph delete_vertex(const Hypergraph& h, Vertex i) {
  std::vector<Edge> out;
  for (const auto& e : h.edges())
    if (!std::binary_search(e.begin(), e.end(), i)) out.push_back(e);
  return Hypergraph(h.r(), std::move(out));
}

double solve_binomial(double value, int r) {
  double lo = r - 1;
  if (value <= 0) return lo;
  double hi = r;
  while (binomial_real(hi, r) < value) hi *= 2;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (binomial_real(mid, r) < value ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

KKLinkBounds kk_link_bounds(const Hypergraph& h) {
  if (!is_left_compressed(h).compressed)
    throw PreconditionError("kk_link_bounds requires a left-compressed hypergraph");
  KKLinkBounds out;
  const int r = h.r();
  out.edges = h.size();
  out.x = solve_binomial(static_cast<double>(h.size()), r);
  out.lower = h.empty() ? 0.0 : binomial_real(out.x - 1, r - 1);
  const Vertex n = h.max_vertex();
  for (Vertex j = 1; j <= n; ++j) {
    out.link_sizes.push_back(h.degree(j));
    out.upper.push_back(static_cast<double>(r) * static_cast<double>(h.size()) / j);
  }
  out.link_one = n >= 1 ? out.link_sizes.front() : 0;
  return out;
}

}  // namespace hyperlag

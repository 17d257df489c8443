#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hyperlag {

/// Vertex labels are positive integers.
using Vertex = int;

/// An edge is stored as an ascending vector of distinct vertices.
using Edge = std::vector<Vertex>;

/// Position of an r-set in the colexicographic order, 0-based.
struct ColexIndex {
  std::uint64_t rank = 0;
  auto operator<=>(const ColexIndex&) const = default;
};

/// A left-shift direction: replace j by i, with i < j.
struct ShiftPair {
  Vertex i = 0;
  Vertex j = 0;
  ShiftPair() = default;
  ShiftPair(Vertex lo, Vertex hi);
  bool operator==(const ShiftPair&) const = default;
};

/// Colex comparison of two sets of equal size: A < B iff max(A △ B) ∈ B.
bool colex_less(const Edge& a, const Edge& b);

struct ColexLess {
  bool operator()(const Edge& a, const Edge& b) const { return colex_less(a, b); }
};

/// An r-uniform hypergraph over positive-integer labels. Immutable once built;
/// edges are kept sorted in colex order so equality and ordering are
/// structural.
class Hypergraph {
 public:
  explicit Hypergraph(int r = 1);

  /// Validates and canonicalizes `edges`. Throws UniformityError when an edge
  /// does not have exactly r distinct elements, ArgumentError on non-positive
  /// labels or duplicate edges.
  Hypergraph(int r, std::vector<Edge> edges);

  int r() const { return r_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool contains(const Edge& sorted_edge) const;

  /// Union of all edges, ascending.
  std::vector<Vertex> support() const;

  /// Largest label used by an edge; 0 when edgeless.
  Vertex max_vertex() const;

  std::size_t degree(Vertex v) const;

  bool operator==(const Hypergraph&) const = default;

  /// Total order: uniformity, then edge count, then colex order of the edge
  /// lists compared lexicographically.
  std::strong_ordering operator<=>(const Hypergraph& other) const;

 private:
  int r_;
  std::vector<Edge> edges_;
};

ColexIndex colex_rank(const Edge& set);

/// Checks |set| against r before ranking.
ColexIndex colex_rank(const Edge& set, int r);

Edge colex_unrank(ColexIndex k, int r);

/// The first m r-sets in colex order (H^{m,r}).
Hypergraph colex_segment(std::uint64_t m, int r);

/// The complete r-graph on [t].
Hypergraph clique(int t, int r);

/// H_S: all (r-|S|)-sets A disjoint from S with A ∪ S ∈ H.
Hypergraph link(const Hypergraph& h, const std::vector<Vertex>& s);

/// H_{i\j}: (r-1)-sets A with j ∉ A, A ∪ {i} ∈ H and A ∪ {j} ∉ H.
Hypergraph link_diff(const Hypergraph& h, Vertex i, Vertex j);

/// Applies ij-shifts (i < j) in ascending sweep order until nothing moves.
Hypergraph left_compress(const Hypergraph& h);

struct CompressionCheck {
  bool compressed = true;
  std::optional<ShiftPair> shift;
  std::optional<Edge> edge;
};

/// Reports the first shift in sweep order that would move an edge.
CompressionCheck is_left_compressed(const Hypergraph& h);

struct PairCoverage {
  bool covers = true;
  std::vector<std::pair<Vertex, Vertex>> uncovered;
};

PairCoverage covers_pairs(const Hypergraph& h);

/// H - i: drops every edge containing i.
Hypergraph delete_vertex(const Hypergraph& h, Vertex i);

struct KKLinkBounds {
  std::size_t edges = 0;      // e(H)
  double x = 0.0;             // e(H) = C(x, r), x >= r
  std::size_t link_one = 0;   // e(H_1)
  double lower = 0.0;         // C(x-1, r-1)
  std::vector<std::size_t> link_sizes;  // e(H_j) for j = 1..n (index j-1)
  std::vector<double> upper;            // r e(H) / j for j = 1..n (index j-1)
};

/// Kruskal–Katona style link bounds for a left-compressed H. x is found by
/// bisection on the monotone map x -> C(x, r). Throws PreconditionError when H
/// is not left-compressed.
KKLinkBounds kk_link_bounds(const Hypergraph& h);

/// Real x >= r - 1 with C(x, r) = value, to absolute tolerance 1e-12.
double solve_binomial(double value, int r);

}  // namespace hyperlag

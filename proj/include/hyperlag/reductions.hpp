#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperlag/hypergraph.hpp"

namespace hyperlag {

/// If H misses some pair {i, j} of its support (first such pair in
/// lexicographic order), returns [H - i, H - j]: λ(H) is at most the larger
/// of their Lagrangians. Otherwise returns [H].
std::vector<Hypergraph> uncovered_pair_reduce(const Hypergraph& h);

struct ReductionTree {
  std::vector<Hypergraph> leaves;  // pair-covering reducts, deduplicated
  bool complete = true;            // false when the leaf cap was hit
};

/// Applies uncovered_pair_reduce recursively until every part covers its
/// pairs. Stops expanding once `max_leaves` leaves are pending.
ReductionTree reduce_to_pair_covering(const Hypergraph& h, std::size_t max_leaves = 1024);

struct Swap {
  Edge remove;  // A ∈ G
  Edge add;     // B ∉ G
  double remove_value = 0.0;
  double add_value = 0.0;
};

/// Looks for A ∈ G and B ∉ G with L(B, y) > L(A, y) + 1e-12, where B ranges
/// over r-subsets of support(G) ∪ support(y) ∪ {one fresh vertex}. Picks the
/// lightest A and the heaviest B (first in colex order on ties). A hit means
/// (G \ A) ∪ B has the same edge count and a larger Lagrangian.
std::optional<Swap> find_improving_swap(const Hypergraph& g, std::span<const double> y);

struct Relabeling {
  Hypergraph graph;
  std::map<Vertex, Vertex> map;  // old label -> new label
};

/// Relabels support(H) onto 1..T by descending degree, ties by label.
Relabeling normalize_support(const Hypergraph& h);

}  // namespace hyperlag

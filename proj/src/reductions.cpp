#include "hyperlag/reductions.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hyperlag/lagrangian.hpp"

namespace hyperlag {

std::vector<Hypergraph> uncovered_pair_reduce(const Hypergraph& h) {
  auto cov = covers_pairs(h);
  if (cov.covers) return {h};
  auto [i, j] = cov.uncovered.front();
  return {delete_vertex(h, i), delete_vertex(h, j)};
}

ReductionTree reduce_to_pair_covering(const Hypergraph& h, std::size_t max_leaves) {
  ReductionTree out;
  std::set<Hypergraph> leaves;
  std::set<Hypergraph> visited;
  std::deque<Hypergraph> pending{h};
  while (!pending.empty()) {
    Hypergraph cur = std::move(pending.front());
    pending.pop_front();
    if (!visited.insert(cur).second) continue;
    auto parts = uncovered_pair_reduce(cur);
    if (parts.size() == 1) {
      leaves.insert(std::move(parts.front()));
      continue;
    }
    if (leaves.size() + pending.size() + parts.size() > max_leaves) {
      out.complete = false;
      leaves.insert(std::move(cur));
      continue;
    }
    for (auto& p : parts) pending.push_back(std::move(p));
  }
  out.leaves.assign(leaves.begin(), leaves.end());
  return out;
}

std::optional<Swap> find_improving_swap(const Hypergraph& g, std::span<const double> y) {
  if (g.empty()) return std::nullopt;
  std::vector<Vertex> pool = g.support();
  for (std::size_t k = 0; k < y.size(); ++k)
    if (y[k] > 0) pool.push_back(static_cast<Vertex>(k + 1));
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  pool.push_back(std::max<Vertex>(pool.back(), static_cast<Vertex>(y.size())) + 1);

  auto weight = [&](Vertex v) { return static_cast<std::size_t>(v) <= y.size() ? y[static_cast<std::size_t>(v - 1)] : 0.0; };
  auto monomial = [&](const Edge& e) {
    double p = 1.0;
    for (Vertex v : e) p *= weight(v);
    return p;
  };

  Swap best;
  bool have_a = false;
  for (const auto& a : g.edges()) {
    double val = monomial(a);
    if (!have_a || val < best.remove_value) {
      best.remove = a;
      best.remove_value = val;
      have_a = true;
    }
  }

  const auto r = static_cast<std::size_t>(g.r());
  if (pool.size() < r) return std::nullopt;
  bool have_b = false;
  std::vector<char> pick(pool.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(r), 1);
  do {
    Edge b;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (pick[k]) b.push_back(pool[k]);
    if (g.contains(b)) continue;
    double val = monomial(b);
    if (!have_b || val > best.add_value || (val == best.add_value && colex_less(b, best.add))) {
      best.add = std::move(b);
      best.add_value = val;
      have_b = true;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));

  if (have_b && best.add_value > best.remove_value + 1e-12) return best;
  return std::nullopt;
}

Relabeling normalize_support(const Hypergraph& h) {
  auto sup = h.support();
  std::vector<std::pair<std::size_t, Vertex>> ranked;
  for (Vertex v : sup) ranked.emplace_back(h.degree(v), v);
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  Relabeling out{Hypergraph(h.r()), {}};
  for (std::size_t k = 0; k < ranked.size(); ++k) out.map[ranked[k].second] = static_cast<Vertex>(k + 1);
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(out.map.at(v));
    edges.push_back(std::move(mapped));
  }
  out.graph = Hypergraph(h.r(), std::move(edges));
  return out;
}

}  // namespace hyperlag

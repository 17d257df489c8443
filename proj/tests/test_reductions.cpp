#include <doctest.h>

#include <random>

#include "hyperlag/lagrangian.hpp"
#include "hyperlag/reductions.hpp"
#include "hyperlag/solver.hpp"
#include "hyperlag/verifier.hpp"

using namespace hyperlag;

namespace {
Hypergraph H(int r, std::vector<Edge> e) { return Hypergraph(r, std::move(e)); }
}  // namespace

TEST_CASE("uncovered_pair_reduce examples") {
  auto parts = uncovered_pair_reduce(H(3, {{1, 2, 3}, {1, 2, 4}}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == H(3, {{1, 2, 4}}));
  CHECK(parts[1] == H(3, {{1, 2, 3}}));
  auto whole = uncovered_pair_reduce(clique(4, 3));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == clique(4, 3));
}

TEST_CASE("reduction never loses the Lagrangian") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < 35; ++k)
      if (rng() % 3 == 0) edges.push_back(colex_unrank(ColexIndex{k}, 3));
    const Hypergraph h(3, edges);
    if (h.empty()) continue;
    auto tree = reduce_to_pair_covering(h);
    CHECK(tree.complete);
    double best = 0;
    for (const auto& leaf : tree.leaves) {
      CHECK(covers_pairs(leaf).covers);
      best = std::max(best, maximize(leaf).value);
    }
    CHECK(maximize(h).value <= best + 1e-9);
  }
}

TEST_CASE("find_improving_swap examples") {
  const Hypergraph g = H(3, {{1, 2, 3}, {1, 2, 5}});
  const std::vector<double> y{0.3, 0.3, 0.2, 0.15, 0.05};
  auto s = find_improving_swap(g, y);
  REQUIRE(s.has_value());
  CHECK(s->remove == Edge{1, 2, 5});
  CHECK(s->add == Edge{1, 2, 4});
  CHECK(s->remove_value == doctest::Approx(0.0045));
  CHECK(s->add_value == doctest::Approx(0.0135));

  CHECK_FALSE(find_improving_swap(clique(4, 3), Weighting::uniform(4).values()).has_value());

  for (std::uint64_t m = 1; m <= 20; ++m) {
    const auto h = colex_segment(m, 3);
    auto x = maximize(h).by_vertex(h.max_vertex());
    CHECK_FALSE(find_improving_swap(h, x.values()).has_value());
  }
}

TEST_CASE("normalize_support examples") {
  auto a = normalize_support(H(3, {{5, 6, 7}}));
  CHECK(a.graph == H(3, {{1, 2, 3}}));
  CHECK(a.map == std::map<Vertex, Vertex>{{5, 1}, {6, 2}, {7, 3}});

  auto b = normalize_support(H(3, {{1, 3, 4}, {2, 3, 4}}));
  CHECK(b.map == std::map<Vertex, Vertex>{{3, 1}, {4, 2}, {1, 3}, {2, 4}});
  CHECK(b.graph == H(3, {{1, 2, 3}, {1, 2, 4}}));

  auto c = normalize_support(clique(4, 3));
  for (const auto& [from, to] : c.map) CHECK(from == to);
  CHECK(c.graph == clique(4, 3));
}

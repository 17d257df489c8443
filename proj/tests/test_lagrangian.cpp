#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hyperlag/errors.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/solver.hpp"

using namespace hyperlag;

namespace {

Hypergraph H(int r, std::vector<Edge> e) { return Hypergraph(r, std::move(e)); }

const Hypergraph kStar = Hypergraph(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});

std::vector<double> dvec(std::initializer_list<double> v) { return v; }

std::vector<Rational> qvec(std::initializer_list<const char*> v) {
  std::vector<Rational> out;
  for (auto s : v) out.push_back(parse_rational(s));
  return out;
}

// L(H, y) by expanding the product over every r-subset of the vertex range
double brute_lagrangian(const Hypergraph& h, const std::vector<double>& y) {
  double total = 0;
  for (const auto& e : h.edges()) {
    double p = 1;
    for (Vertex v : e) p *= y[static_cast<std::size_t>(v - 1)];
    total += p;
  }
  return total;
}

std::vector<double> random_simplex(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> y(static_cast<std::size_t>(n));
  double s = 0;
  for (auto& v : y) s += (v = ex(rng));
  for (auto& v : y) v /= s;
  return y;
}

}  // namespace

TEST_CASE("Weighting validation") {
  CHECK_NOTHROW(Weighting(dvec({0.5, 0.5})));
  CHECK_THROWS_AS(Weighting(dvec({0.6, 0.5})), ArgumentError);
  CHECK_THROWS_AS(Weighting(dvec({1.5, -0.5})), ArgumentError);
  CHECK_THROWS_AS(Weighting::from_exact(qvec({"1/3", "1/3"})), ArgumentError);
  auto w = Weighting::from_exact(qvec({"1/3", "2/3", "0"}));
  CHECK(w.support() == std::vector<Vertex>{1, 2});
  CHECK(w[3] == 0.0);
  CHECK(w[9] == 0.0);
  CHECK(Weighting::uniform(4)[2] == doctest::Approx(0.25));
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(H(2, {{1, 2}}), dvec({0.5, 0.5})) == doctest::Approx(0.25));
  CHECK(evaluate(clique(3, 3), Weighting::uniform(3)) == doctest::Approx(1.0 / 27));
  const auto y = qvec({"1/3", "2/9", "2/9", "2/9"});
  CHECK(evaluate_exact(kStar, y) == Rational(4, 81));
  CHECK(evaluate_exact(clique(3, 3), qvec({"1/3", "1/3", "1/3"})) == Rational(1, 27));
  CHECK_THROWS_AS(evaluate(kStar, dvec({0.5, 0.5})), EvaluationError);
  CHECK(evaluate(Hypergraph(3), dvec({})) == 0.0);
}

TEST_CASE("partials examples") {
  auto p = partials(H(2, {{1, 2}}), dvec({0.5, 0.5}));
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));
  auto q = partials_exact(kStar, qvec({"1/3", "2/9", "2/9", "2/9"}));
  CHECK(q[0] == Rational(4, 27));
  for (const auto& v : partials_exact(clique(4, 3), qvec({"1/4", "1/4", "1/4", "1/4"}))) CHECK(v == Rational(3, 16));
}

TEST_CASE("Euler identity holds exactly") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < 20; ++k)
      if (rng() % 2) edges.push_back(colex_unrank(ColexIndex{k}, r));
    const Hypergraph h(r, edges);
    std::vector<Rational> y;
    for (int v = 0; v < 8; ++v) y.emplace_back(static_cast<long>(rng() % 50), 17);
    Rational lhs = 0;
    const auto p = partials_exact(h, y);
    for (std::size_t v = 0; v < p.size(); ++v) lhs += y[v] * p[v];
    CHECK(lhs == r * evaluate_exact(h, y));
  }
}

TEST_CASE("evaluation agrees with direct monomial expansion") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 4);
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < 35; ++k) {
      auto e = colex_unrank(ColexIndex{k}, r);
      if (e.back() <= 9 && rng() % 3 == 0) edges.push_back(e);
    }
    const Hypergraph h(r, edges);
    auto y = random_simplex(rng, 9);
    CHECK(evaluate(h, y) == doctest::Approx(brute_lagrangian(h, y)).epsilon(1e-12));
  }
}

TEST_CASE("link_value") {
  const auto y = dvec({1.0 / 3, 2.0 / 9, 2.0 / 9, 2.0 / 9});
  CHECK(link_value(kStar, {1}, y) == doctest::Approx(4.0 / 27));
  CHECK(link_value(kStar, {1, 2}, y) == doctest::Approx(4.0 / 9));
  CHECK(link_value(kStar, {}, y) == doctest::Approx(4.0 / 81));
}

TEST_CASE("clique_lagrangian") {
  CHECK(clique_lagrangian(4, 3) == Rational(1, 16));
  CHECK(clique_lagrangian(5, 3) == Rational(2, 25));
  for (int r = 1; r <= 6; ++r) {
    Rational expect(1);
    for (int k = 0; k < r; ++k) expect /= r;
    CHECK(clique_lagrangian(r, r) == expect);
  }
  CHECK_THROWS_AS(clique_lagrangian(2, 3), DomainError);
}

TEST_CASE("Motzkin-Straus value") {
  CHECK(motzkin_straus_value(H(2, {{1, 2}, {1, 3}, {2, 3}})) == Rational(1, 3));
  CHECK(motzkin_straus_value(H(2, {{1, 2}})) == Rational(1, 4));
  const auto c5 = H(2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK(clique_number(c5) == 2);
  CHECK(motzkin_straus_value(c5) == Rational(1, 4));
  CHECK_THROWS_AS(motzkin_straus_value(kStar), UniformityError);
  std::vector<Edge> path;
  for (Vertex v = 1; v < 13; ++v) path.push_back({v, v + 1});
  CHECK_THROWS_AS(motzkin_straus_value(H(2, path)), SizeError);
}

TEST_CASE("grid_oracle examples") {
  auto a = grid_oracle(clique(3, 3), 3);
  CHECK(a.exact_value == Rational(1, 27));
  CHECK(a.method == Method::oracle);
  CHECK(grid_oracle(H(2, {{1, 2}}), 2).exact_value == Rational(1, 4));
  auto b = grid_oracle(kStar, 9);
  CHECK(b.exact_value == Rational(4, 81));
  CHECK(b.vertices.front() == 1);
  CHECK(b.weights == qvec({"1/3", "2/9", "2/9", "2/9"}));
  CHECK_THROWS_AS(grid_oracle(clique(12, 3), 60), SizeError);
}

TEST_CASE("grid_oracle is monotone along divisibility and bounded by maximize") {
  const std::vector<Hypergraph> fixtures = {kStar, colex_segment(5, 3), colex_segment(7, 3), clique(5, 3),
                                            H(2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}})};
  for (const auto& h : fixtures) {
    const auto best = maximize(h);
    Rational prev = -1;
    for (int n : {2, 4, 8, 16}) {
      auto g = grid_oracle(h, n);
      CHECK(g.exact_value >= prev);
      CHECK(g.value <= best.value + 1e-9);
      prev = g.exact_value;
    }
  }
}

TEST_CASE("symmetrize examples") {
  auto z = symmetrize(clique(3, 3), Weighting(dvec({0.5, 0.3, 0.2})), 2, 3);
  CHECK(z[1] == doctest::Approx(0.5));
  CHECK(z[2] == doctest::Approx(0.25));
  CHECK(z[3] == doctest::Approx(0.25));
  CHECK(evaluate(clique(3, 3), dvec({0.5, 0.3, 0.2})) == doctest::Approx(0.03));
  CHECK(evaluate(clique(3, 3), z) == doctest::Approx(0.03125));

  const Weighting same(dvec({0.4, 0.3, 0.3}));
  auto fixed = symmetrize(clique(3, 3), same, 2, 3);
  for (Vertex v = 1; v <= 3; ++v) CHECK(fixed[v] == doctest::Approx(same[v]));

  const auto y = dvec({0.4, 0.3, 0.2, 0.1});
  CHECK(link_diff(kStar, 3, 4).empty());
  CHECK(link_diff(kStar, 4, 3).empty());
  auto w = symmetrize(kStar, Weighting(y), 3, 4);
  CHECK(w[3] == doctest::Approx(0.15));
  CHECK(w[4] == doctest::Approx(0.15));
  CHECK(evaluate(kStar, w) >= evaluate(kStar, y));

  CHECK_THROWS_AS(symmetrize(kStar, Weighting(y), 1, 4), SymmetryError);

  auto ex = symmetrize(clique(3, 3), Weighting::from_exact(qvec({"1/2", "3/10", "1/5"})), 2, 3);
  REQUIRE(ex.exact().has_value());
  CHECK((*ex.exact())[1] == Rational(1, 4));
}

TEST_CASE("kkt_residual examples") {
  auto a = kkt_residual(clique(4, 3), Weighting::uniform(4));
  CHECK(a.on_support == doctest::Approx(0.0));
  CHECK(a.off_support == 0.0);
  auto b = kkt_residual(kStar, dvec({1.0 / 3, 2.0 / 9, 2.0 / 9, 2.0 / 9}));
  CHECK(b.on_support < 1e-15);
  auto c = kkt_residual(H(2, {{1, 2}}), dvec({1.0, 0.0}));
  CHECK(c.on_support == doctest::Approx(0.0));
  CHECK(c.off_support == doctest::Approx(1.0));
}

TEST_CASE("pair identity examples") {
  const auto x = dvec({1.0 / 3, 2.0 / 9, 2.0 / 9, 2.0 / 9});
  CHECK(check_pair_identity(kStar, x, 1, 2) < 1e-15);
  CHECK(check_pair_identity(kStar, x, 2, 3) < 1e-15);
  // hand evaluation of the two sides for (1,2)
  CHECK((1.0 / 3 - 2.0 / 9) * (4.0 / 9) == doctest::Approx(4.0 / 81));
  for (Vertex i = 1; i <= 4; ++i)
    for (Vertex j = i + 1; j <= 4; ++j) CHECK(check_pair_identity(clique(4, 3), Weighting::uniform(4).values(), i, j) < 1e-15);
  CHECK_THROWS_AS(check_pair_identity(kStar, x, 2, 2), ArgumentError);
  CHECK_THROWS_AS(check_pair_identity(kStar, x, 3, 1), ArgumentError);
}

TEST_CASE("scaling bound examples") {
  const auto u = Weighting::uniform(4);
  CHECK(check_scaling_bound(clique(4, 3), u.values(), 1, 1.0 / 3));
  CHECK(link_value(clique(4, 3), {1}, u.values()) == doctest::Approx(std::pow(0.75, 2) / 3));
  CHECK(check_scaling_bound(clique(4, 3), dvec({1.0, 0.0, 0.0, 0.0}), 1, 1.0 / 3));
  CHECK(check_scaling_bound(clique(4, 3), u.values(), 1, SolverConfig{}));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Edge> edges;
    for (std::uint64_t k = 0; k < 20; ++k)
      if (rng() % 2) edges.push_back(colex_unrank(ColexIndex{k}, 3));
    const Hypergraph h(3, edges);
    auto y = random_simplex(rng, 6);
    const Vertex i = 1 + static_cast<Vertex>(rng() % 6);
    SolverConfig cfg;
    cfg.starts = 10;
    CHECK(check_scaling_bound(h, y, i, cfg));
  }
}

#include <doctest.h>

#include <algorithm>
#include <set>

#include "hyperlag/errors.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/verifier.hpp"

using namespace hyperlag;

namespace {

Hypergraph H(int r, std::vector<Edge> e) { return Hypergraph(r, std::move(e)); }

std::vector<Edge> triples(int n) {
  std::vector<Edge> out;
  for (int c = 3; c <= n; ++c)
    for (int b = 2; b < c; ++b)
      for (int a = 1; a < b; ++a) out.push_back({a, b, c});
  return out;
}

bool dominated(const Edge& a, const Edge& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

// every m-subset of [tmax]^{(3)} closed downward under domination
std::set<std::vector<Edge>> brute_downsets(std::size_t m, int tmax) {
  const auto all = triples(tmax);
  std::set<std::vector<Edge>> out;
  std::vector<char> pick(all.size(), 0);
  if (m > all.size()) return out;
  std::fill(pick.begin(), pick.begin() + static_cast<long>(m), 1);
  do {
    std::vector<Edge> chosen;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (pick[k]) chosen.push_back(all[k]);
    bool closed = true;
    for (const auto& b : chosen)
      for (const auto& a : all)
        if (dominated(a, b) && std::find(chosen.begin(), chosen.end(), a) == chosen.end()) closed = false;
    if (closed) out.insert(Hypergraph(3, chosen).edges());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST_CASE("enumerate_left_compressed examples") {
  auto one = enumerate_left_compressed(1, 3, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == H(3, {{1, 2, 3}}));

  auto two = enumerate_left_compressed(2, 3, 4);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == H(3, {{1, 2, 3}, {1, 2, 4}}));

  auto three = enumerate_left_compressed(3, 3, 5);
  std::set<std::vector<Edge>> got;
  for (const auto& h : three) got.insert(h.edges());
  CHECK(got == std::set<std::vector<Edge>>{{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}});
  CHECK(three.size() == 2);
}

TEST_CASE("enumeration equals the brute-force downset filter") {
  for (int tmax = 3; tmax <= 6; ++tmax)
    for (std::size_t m = 1; m <= 6; ++m) {
      std::set<std::vector<Edge>> got;
      std::size_t count = 0;
      for (const auto& h : enumerate_left_compressed(m, 3, tmax)) {
        CHECK(is_left_compressed(h).compressed);
        CHECK(h.size() == m);
        got.insert(h.edges());
        ++count;
      }
      CHECK(count == got.size());
      CHECK(got == brute_downsets(m, tmax));
      CHECK(count_left_compressed(m, 3, tmax, 1000) == count);
    }
}

TEST_CASE("pair-covering filter") {
  for (const auto& h : enumerate_left_compressed(4, 3, 6, true)) CHECK(covers_pairs(h).covers);
  CHECK(enumerate_left_compressed(2, 3, 6, true).empty());
  CHECK(count_left_compressed(10, 3, 7, 1) == 2);
}

TEST_CASE("regime arithmetic") {
  CHECK(regime_t(1, 3) == 4);
  CHECK(regime_t(3, 3) == 4);
  CHECK(regime_t(4, 3) == 5);
  CHECK(regime_t(10, 3) == 6);
  CHECK(classify(1, 3) == Regime::R1);
  CHECK(classify(2, 3) == Regime::R1);
  CHECK(classify(3, 3) == Regime::R2);
  for (std::uint64_t m = 4; m <= 7; ++m) CHECK(classify(m, 3) == Regime::R1);
  CHECK(classify(8, 3) == Regime::R2);
  CHECK(classify(9, 3) == Regime::R2);
  CHECK(classify(10, 3) == Regime::R1);

  auto w = r1_window(3, 5);
  CHECK(w.lo == 4);
  CHECK(w.hi == 7);
  auto w4 = r1_window(4, 5);
  CHECK(w4.lo == 1);
  CHECK(w4.hi == 2);
  auto w3 = r1_window(3, 4);
  CHECK(w3.lo == 1);
  CHECK(w3.hi == 2);
  CHECK_FALSE(w3.empty());

  // consistency of the window with the classifier over a range of (m, r)
  for (int r = 2; r <= 5; ++r)
    for (std::uint64_t m = 1; m <= 300; ++m) {
      const int t = regime_t(m, r);
      CHECK(binomial_u64(t - 1, r) <= m);
      CHECK(m < binomial_u64(t, r));
      const auto win = r1_window(r, t);
      CHECK((classify(m, r) == Regime::R1) == (win.lo <= m && m <= win.hi));
    }
}

TEST_CASE("colex value") {
  auto [v1, how1] = colex_value(2, 3, {});
  CHECK(v1 == Rational(1, 27));
  CHECK(how1 == Method::closed_form);
  auto [v2, how2] = colex_value(3, 3, {});
  CHECK(v2 == Rational(4, 81));
  CHECK(how2 == Method::multistart);
}

TEST_CASE("verify_conjecture examples") {
  auto rep = verify_conjecture(2, 3);
  CHECK(rep.colex_value == Rational(1, 27));
  CHECK(rep.best_value == Rational(1, 27));
  CHECK(rep.witness == H(3, {{1, 2, 3}, {1, 2, 4}}));
  CHECK_FALSE(rep.counterexample);
  CHECK(rep.exact_comparison);
  CHECK(rep.regime == Regime::R1);
  CHECK_FALSE(rep.diagnostics.has_value());

  auto r2 = verify_conjecture(3, 3);
  CHECK(r2.regime == Regime::R2);
  CHECK_FALSE(r2.exact_comparison);
  CHECK_FALSE(r2.counterexample);
}

TEST_CASE("verify_range examples") {
  auto a = verify_range(3, 4);
  REQUIRE(a.size() == 2);
  for (const auto& rep : a) {
    CHECK_FALSE(rep.counterexample);
    CHECK(rep.colex_value == Rational(1, 27));
  }
  auto b = verify_range(3, 5);
  REQUIRE(b.size() == 4);
  for (std::size_t k = 0; k < b.size(); ++k) {
    CHECK(b[k].m == 4 + k);
    CHECK(b[k].colex_value == Rational(1, 16));
    CHECK_FALSE(b[k].counterexample);
  }
  auto c = verify_range(4, 5);
  REQUIRE(c.size() == 2);
  for (const auto& rep : c) CHECK(rep.colex_value == Rational(1, 256));
}

TEST_CASE("restricted_support_verify examples") {
  auto a = restricted_support_verify(2, 3, 4);
  CHECK(a.restricted);
  CHECK(a.tmax == 4);
  CHECK(a.colex_value == Rational(1, 27));
  CHECK_FALSE(a.counterexample);
  auto b = restricted_support_verify(7, 3, 5);
  CHECK(b.colex_value == Rational(1, 16));
  CHECK_FALSE(b.counterexample);
  CHECK_THROWS_AS(restricted_support_verify(8, 3, 5), DomainError);
  CHECK_THROWS_AS(restricted_support_verify(3, 3, 5), DomainError);
}

TEST_CASE("verification reports are deterministic and independent of jobs") {
  VerifyConfig one, two;
  two.jobs = 3;
  std::vector<VerificationReport> a, b;
  for (std::uint64_t m = 1; m <= 9; ++m) {
    a.push_back(verify_conjecture(m, 3, one));
    b.push_back(verify_conjecture(m, 3, two));
  }
  CHECK(to_json(a).dump(2) == to_json(b).dump(2));
  CHECK(reports_to_csv(a) == reports_to_csv(b));
}

TEST_CASE("candidate cap") {
  VerifyConfig cfg;
  cfg.max_candidates = 3;
  CHECK_THROWS_AS(verify_conjecture(10, 3, cfg), SizeError);
}

TEST_CASE("monitor_q") {
  // C(q-1, r-1) <= t/(T-1) C(t-1, r-1) < C(q, r-1)
  for (int r = 2; r <= 4; ++r)
    for (int t = r; t <= 12; ++t)
      for (int T = t; T <= 3 * t; ++T) {
        const int q = monitor_q(t, T, r);
        const double target = static_cast<double>(t) / (T - 1) * binomial_real(t - 1, r - 1);
        CHECK(binomial_real(q - 1, r - 1) <= target + 1e-9);
        CHECK(target < binomial_real(q, r - 1));
      }
  CHECK(monitor_q(5, 1, 3) == 0);
}

TEST_CASE("counterexample monitor on synthetic inputs") {
  SUBCASE("clique passed with t - 1") {
    for (int t = 4; t <= 6; ++t) {
      const auto g = clique(t, 3);
      auto d = counterexample_monitor(g, maximize(g), t - 1);
      CHECK(d.premise);
      CHECK(d.support == t);
      CHECK(d.delta == 1);
      CHECK(d.x1 == doctest::Approx(1.0 / t));
      for (const auto& b : d.bounds) CHECK(b.status != BoundStatus::fail);
    }
  }
  SUBCASE("five-clique at t = 5") {
    const auto g = clique(5, 3);
    auto d = counterexample_monitor(g, maximize(g), 5);
    CHECK(d.premise);
    CHECK(d.support == 5);
    CHECK(d.delta == 0);
    CHECK(d.x1 == doctest::Approx(0.2));
    int applicable = 0;
    for (const auto& b : d.bounds) {
      if (b.status == BoundStatus::not_applicable) continue;
      ++applicable;
      CHECK(b.status == BoundStatus::pass);
    }
    CHECK(applicable == 2);
  }
  SUBCASE("premise false marks everything not applicable") {
    const auto g = clique(4, 3);
    auto d = counterexample_monitor(g, maximize(g), 5);
    CHECK_FALSE(d.premise);
    for (const auto& b : d.bounds) CHECK(b.status == BoundStatus::not_applicable);
  }
}

TEST_CASE("monitor stays silent on verified candidates") {
  for (std::uint64_t m = 4; m <= 7; ++m)
    for (const auto& g : enumerate_left_compressed(m, 3, 7)) {
      auto d = counterexample_monitor(g, maximize(g), 5);
      CHECK_FALSE(d.premise);
    }
}

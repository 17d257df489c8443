#include "hyperlag/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hyperlag/errors.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/reductions.hpp"
#include "hyperlag/solver.hpp"
#include "hyperlag/verifier.hpp"

namespace hyperlag {

namespace {

using Rng = std::mt19937_64;

double uniform01(Rng& rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; }

int uniform_int(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

std::vector<double> random_simplex(Rng& rng, int n) {
  std::vector<double> y(static_cast<std::size_t>(n));
  double s = 0.0;
  for (double& v : y) {
    v = -std::log(uniform01(rng));
    s += v;
  }
  for (double& v : y) v /= s;
  return y;
}

// m random distinct r-subsets of [n]
Hypergraph random_hypergraph(Rng& rng, int r, int n, std::size_t m) {
  const auto total = binomial_u64(n, r);
  m = std::min<std::size_t>(m, total);
  std::vector<std::uint64_t> ranks(total);
  for (std::uint64_t k = 0; k < total; ++k) ranks[k] = k;
  std::shuffle(ranks.begin(), ranks.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < m; ++k) edges.push_back(colex_unrank(ColexIndex{ranks[k]}, r));
  return Hypergraph(r, std::move(edges));
}

Hypergraph random_small(Rng& rng, int r_lo = 2, int r_hi = 3) {
  const int r = uniform_int(rng, r_lo, r_hi);
  const int n = uniform_int(rng, r + 1, 6);
  const auto cap = std::min<std::uint64_t>(binomial_u64(n, r), 10);
  const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(cap)));
  return random_hypergraph(rng, r, n, m);
}

std::string describe(const Hypergraph& h) {
  std::ostringstream out;
  out << "r=" << h.r() << " {";
  for (std::size_t k = 0; k < h.edges().size(); ++k) {
    out << (k ? "," : "");
    for (Vertex v : h.edges()[k]) out << v;
  }
  out << "}";
  return out.str();
}

void record(SuiteResult& res, bool ok, const std::string& what) {
  ++res.trials;
  if (!ok) {
    if (res.failures == 0) res.first_failure = what;
    ++res.failures;
  }
}

SolverConfig solver_for(std::uint64_t seed) {
  SolverConfig cfg;
  cfg.seed = seed;
  return cfg;
}

SuiteResult maclaurin(std::uint64_t seed) {
  SuiteResult res;
  res.name = "maclaurin";
  Rng rng(seed);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = uniform_int(rng, 1, 10);
    const int r = uniform_int(rng, 1, std::min(n, 5));
    const bool equal = trial % 10 == 0;
    std::vector<double> y(static_cast<std::size_t>(n));
    for (double& v : y) v = equal ? 0.37 : 3.0 * uniform01(rng);
    double total = 0.0;
    for (double v : y) total += v;
    const double lhs = evaluate(clique(n, r), y);
    const double rhs = static_cast<double>(binomial_u64(n, r)) * std::pow(total / n, r);
    double fact = 1.0;
    for (int k = 2; k <= r; ++k) fact *= k;
    const double cap = std::pow(total, r) / fact;
    const double slack = 1e-12 * std::max(1.0, rhs);
    bool ok = lhs <= rhs + slack;
    // strict unless all entries agree (or the sum is a single term)
    const bool all_same = std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); });
    if (!all_same && r >= 2) ok = ok && lhs < rhs;
    if (r >= 2) ok = ok && rhs < cap * (1 + 1e-15);
    record(res, ok, "n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
  return res;
}

SuiteResult scaling(std::uint64_t seed) {
  SuiteResult res;
  res.name = "scaling";
  Rng rng(seed);
  while (res.trials < 500) {
    const Hypergraph h = random_small(rng, 2, 4);
    const auto sup = h.support();
    const int n = h.max_vertex();
    auto y = random_simplex(rng, n);
    // push some mass to a single vertex now and then
    if (res.trials % 7 == 0) {
      std::fill(y.begin(), y.end(), 0.0);
      y[static_cast<std::size_t>(sup.front() - 1)] = 1.0;
    }
    const Vertex i = sup[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(sup.size()) - 1))];
    const Hypergraph li = link(h, {i});
    double lam = 0.0;
    if (h.r() == 2) {
      lam = li.empty() ? 0.0 : 1.0;
    } else if (h.r() == 3) {
      lam = motzkin_straus_value(li).get_d();
    } else {
      lam = maximize(li, solver_for(seed + res.trials)).value;
    }
    record(res, check_scaling_bound(h, y, i, lam), describe(h) + " i=" + std::to_string(i));
  }
  return res;
}

SuiteResult kk(std::uint64_t) {
  SuiteResult res;
  res.name = "kk";
  for (std::uint64_t m = 1; m <= 12; ++m) {
    for_each_left_compressed(m, 3, 6, [&](const Hypergraph& h) {
      const auto b = kk_link_bounds(h);
      bool ok = static_cast<double>(b.link_one) >= b.lower - 1e-9;
      for (std::size_t j = 0; j < b.link_sizes.size(); ++j)
        ok = ok && static_cast<double>(b.link_sizes[j]) <= b.upper[j] + 1e-9;
      record(res, ok, describe(h));
      return true;
    });
  }
  return res;
}

// KKT residuals (and the pair identity when H is left-compressed) at the
// solver's maximizers.
bool kkt_ok(const Hypergraph& h, const LagrangianResult& res) {
  if (res.kkt.on_support > 1e-7 || res.kkt.off_support > 1e-7) return false;
  if (!is_left_compressed(h).compressed) return true;
  const auto y = res.by_vertex(h.max_vertex());
  auto sup = y.support();
  for (std::size_t a = 0; a < sup.size(); ++a)
    for (std::size_t b = a + 1; b < sup.size(); ++b)
      if (check_pair_identity(h, y.values(), sup[a], sup[b]) > 1e-6) return false;
  return true;
}

SuiteResult kkt(std::uint64_t seed) {
  SuiteResult res;
  res.name = "kkt";
  std::vector<Hypergraph> fixtures;
  for (int t = 2; t <= 7; ++t) fixtures.push_back(clique(t, 2));
  for (int t = 3; t <= 7; ++t) fixtures.push_back(clique(t, 3));
  for (std::uint64_t m = 1; m <= 20; ++m) fixtures.push_back(colex_segment(m, 3));
  for (std::uint64_t m = 1; m <= 10; ++m) fixtures.push_back(colex_segment(m, 4));
  Rng rng(seed);
  for (int k = 0; k < 100; ++k) fixtures.push_back(random_small(rng));
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    const auto& h = fixtures[k];
    record(res, kkt_ok(h, maximize(h, solver_for(seed + k))), describe(h));
  }
  return res;
}

SuiteResult compression(std::uint64_t seed) {
  SuiteResult res;
  res.name = "compression";
  Rng rng(seed);
  for (int trial = 0; trial < 500; ++trial) {
    const Hypergraph h = random_small(rng);
    const auto cfg = solver_for(seed + static_cast<std::uint64_t>(trial));
    const double before = maximize(h, cfg).value;
    const double after = maximize(left_compress(h), cfg).value;
    record(res, after >= before - 1e-6, describe(h));
  }
  return res;
}

SuiteResult uncovered(std::uint64_t seed) {
  SuiteResult res;
  res.name = "uncovered";
  Rng rng(seed);
  while (res.trials < 500) {
    const Hypergraph h = random_small(rng);
    const auto cov = covers_pairs(h);
    if (cov.covers) continue;
    const auto cfg = solver_for(seed + res.trials);
    const auto [i, j] = cov.uncovered[static_cast<std::size_t>(rng() % cov.uncovered.size())];
    const double whole = maximize(h, cfg).value;
    const double split = std::max(maximize(delete_vertex(h, i), cfg).value, maximize(delete_vertex(h, j), cfg).value);
    record(res, whole <= split + 1e-9, describe(h));
  }
  return res;
}

SuiteResult symmetrization(std::uint64_t seed) {
  SuiteResult res;
  res.name = "symmetrize";
  Rng rng(seed);
  for (int trial = 0; trial < 500; ++trial) {
    const int r = uniform_int(rng, 2, 3);
    const int n = uniform_int(rng, r + 1, 6);
    Vertex i = uniform_int(rng, 1, n);
    Vertex j = uniform_int(rng, 1, n - 1);
    if (j >= i) ++j;
    // close a random edge set under the transposition (i j)
    const Hypergraph seed_graph = random_hypergraph(rng, r, n, static_cast<std::size_t>(uniform_int(rng, 1, 6)));
    std::vector<Edge> edges;
    for (const auto& e : seed_graph.edges()) {
      Edge img = e;
      for (Vertex& v : img) v = v == i ? j : (v == j ? i : v);
      std::sort(img.begin(), img.end());
      edges.push_back(e);
      edges.push_back(img);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const Hypergraph h(r, std::move(edges));
    // random exact weighting with denominator 1000
    std::vector<Rational> q(static_cast<std::size_t>(n));
    Rational sum = 0;
    for (auto& v : q) {
      v = Rational(static_cast<long>(rng() % 1000) + 1, 1000);
      v.canonicalize();
      sum += v;
    }
    for (auto& v : q) v /= sum;
    const auto y = Weighting::from_exact(q);
    const auto z = symmetrize(h, y, i, j);
    record(res, evaluate_exact(h, *z.exact()) >= evaluate_exact(h, *y.exact()), describe(h));
  }
  return res;
}

SuiteResult gradient(std::uint64_t seed) {
  SuiteResult res;
  res.name = "gradient";
  Rng rng(seed);
  const double eps = 1e-6;
  for (int trial = 0; trial < 500; ++trial) {
    const Hypergraph h = random_small(rng, 2, 4);
    const int n = h.max_vertex();
    std::vector<double> y(static_cast<std::size_t>(n));
    for (double& v : y) v = uniform01(rng);
    const auto g = partials(h, y);
    const double base = evaluate(h, y);
    bool ok = true;
    for (int k = 0; k < n; ++k) {
      auto step = y;
      step[static_cast<std::size_t>(k)] += eps;
      const double fd = (evaluate(h, step) - base) / eps;
      ok = ok && std::fabs(g[static_cast<std::size_t>(k)] - fd) <= 1e-5;
    }
    record(res, ok, describe(h));
  }
  return res;
}

SuiteResult swaps(std::uint64_t seed) {
  SuiteResult res;
  res.name = "swaps";
  for (std::uint64_t m = 1; m <= 20; ++m) {
    const Hypergraph h = colex_segment(m, 3);
    const auto best = maximize(h, solver_for(seed));
    const auto y = best.by_vertex(h.max_vertex());
    record(res, !find_improving_swap(h, y.values()).has_value(), describe(h));
  }
  VerifyConfig cfg;
  cfg.solver.seed = seed;
  for (std::uint64_t m = 1; m <= 6; ++m) {
    const auto rep = verify_conjecture(m, 3, cfg);
    const auto y = rep.witness_result.by_vertex(rep.witness.max_vertex());
    record(res, !find_improving_swap(rep.witness, y.values()).has_value(), describe(rep.witness));
  }
  // a graph that is visibly not optimal must admit a swap
  const Hypergraph g(3, {{1, 2, 3}, {1, 2, 5}});
  const std::vector<double> y{0.3, 0.3, 0.2, 0.15, 0.05};
  record(res, find_improving_swap(g, y).has_value(), describe(g));
  return res;
}

const std::map<std::string, std::function<SuiteResult(std::uint64_t)>>& registry() {
  static const std::map<std::string, std::function<SuiteResult(std::uint64_t)>> suites{
      {"maclaurin", maclaurin}, {"scaling", scaling},       {"kk", kk},
      {"kkt", kkt},             {"compression", compression}, {"uncovered", uncovered},
      {"symmetrize", symmetrization}, {"gradient", gradient}, {"swaps", swaps},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"maclaurin", "scaling",    "kk",       "kkt",  "compression",
                                              "uncovered", "symmetrize", "gradient", "swaps"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw ArgumentError("unknown suite '" + name + "'");
  return it->second(seed);
}

}  // namespace hyperlag

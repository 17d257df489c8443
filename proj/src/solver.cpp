#include "hyperlag/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "hyperlag/errors.hpp"

namespace hyperlag {

void SolverConfig::validate() const {
  if (starts < 1) throw ArgumentError("solver needs at least one start");
  if (max_iters < 1) throw ArgumentError("max_iters must be positive");
  if (!(value_tol > 0 && step_tol > 0 && zero_tol > 0 && accept_tol > 0))
    throw ArgumentError("solver tolerances must be positive");
  if (max_denominator < 1) throw ArgumentError("max_denominator must be positive");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over a golden-ratio stride
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// H relabelled onto 0..n-1 (its support), edges flattened.
struct Dense {
  int n = 0;
  int r = 0;
  std::vector<int> idx;
  std::vector<Vertex> labels;

  explicit Dense(const Hypergraph& h) : r(h.r()), labels(h.support()) {
    n = static_cast<int>(labels.size());
    idx.reserve(h.size() * static_cast<std::size_t>(r));
    for (const auto& e : h.edges())
      for (Vertex v : e)
        idx.push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
  }

  double value(const std::vector<double>& y) const {
    double total = 0.0;
    for (std::size_t p = 0; p < idx.size(); p += static_cast<std::size_t>(r)) {
      double prod = 1.0;
      for (int l = 0; l < r; ++l) prod *= y[static_cast<std::size_t>(idx[p + static_cast<std::size_t>(l)])];
      total += prod;
    }
    return total;
  }

  // fills g with partial derivatives, returns L
  double gradient(const std::vector<double>& y, std::vector<double>& g) const {
    g.assign(static_cast<std::size_t>(n), 0.0);
    double total = 0.0;
    const auto ur = static_cast<std::size_t>(r);
    for (std::size_t p = 0; p < idx.size(); p += ur) {
      for (std::size_t k = 0; k < ur; ++k) {
        double prod = 1.0;
        for (std::size_t l = 0; l < ur; ++l)
          if (l != k) prod *= y[static_cast<std::size_t>(idx[p + l])];
        g[static_cast<std::size_t>(idx[p + k])] += prod;
        if (k == 0) total += prod * y[static_cast<std::size_t>(idx[p])];
      }
    }
    return total;
  }

  // second partials restricted to `face` (positions into face)
  Eigen::MatrixXd hessian(const std::vector<double>& y, const std::vector<int>& face) const {
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t a = 0; a < face.size(); ++a) pos[static_cast<std::size_t>(face[a])] = static_cast<int>(a);
    const auto k = static_cast<Eigen::Index>(face.size());
    Eigen::MatrixXd hm = Eigen::MatrixXd::Zero(k, k);
    const auto ur = static_cast<std::size_t>(r);
    for (std::size_t p = 0; p < idx.size(); p += ur) {
      for (std::size_t a = 0; a < ur; ++a) {
        int pa = pos[static_cast<std::size_t>(idx[p + a])];
        if (pa < 0) continue;
        for (std::size_t b = a + 1; b < ur; ++b) {
          int pb = pos[static_cast<std::size_t>(idx[p + b])];
          if (pb < 0) continue;
          double prod = 1.0;
          for (std::size_t l = 0; l < ur; ++l)
            if (l != a && l != b) prod *= y[static_cast<std::size_t>(idx[p + l])];
          hm(pa, pb) += prod;
          hm(pb, pa) += prod;
        }
      }
    }
    return hm;
  }
};

void normalize(std::vector<double>& y) {
  double s = 0.0;
  for (double v : y) s += v;
  if (s > 0)
    for (double& v : y) v /= s;
}

// Euclidean projection onto {y >= 0, Σ y = 1, y_i = 0 outside allowed}.
std::vector<double> project_simplex(const std::vector<double>& v, const std::vector<char>& allowed) {
  std::vector<double> u;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (allowed[i]) u.push_back(v[i]);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cum += u[k];
    double t = (cum - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0) theta = t;
  }
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (allowed[i]) out[i] = std::max(0.0, v[i] - theta);
  return out;
}

struct Run {
  std::vector<double> y;
  double value = 0.0;
  std::vector<char> allowed;
};

class LocalSearch {
 public:
  LocalSearch(const Dense& d, const SolverConfig& cfg) : d_(d), cfg_(cfg) {}

  Run run(std::vector<double> y, std::vector<char> allowed) const {
    for (int round = 0; round < 6; ++round) {
      replicator(y);
      threshold(y);
      if (!newton(y)) {
        projected_gradient(y, allowed);
        threshold(y);
        newton(y);
      }
      // re-admit the worst off-support violator, if any
      std::vector<double> g;
      const double rl = d_.r * d_.gradient(y, g);
      int worst = -1;
      double worst_gap = 1e-10 * std::max(1.0, rl);
      for (int i = 0; i < d_.n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (!allowed[ui] || y[ui] > 0) continue;
        if (g[ui] - rl > worst_gap) {
          worst_gap = g[ui] - rl;
          worst = i;
        }
      }
      if (worst < 0) break;
      y[static_cast<std::size_t>(worst)] = 1e-3;
      normalize(y);
    }
    Run out;
    out.value = d_.value(y);
    out.y = std::move(y);
    out.allowed = std::move(allowed);
    return out;
  }

 private:
  void replicator(std::vector<double>& y) const {
    std::vector<double> g;
    std::vector<double> next(y.size());
    double l = d_.gradient(y, g);
    for (int it = 0; it < cfg_.max_iters && l > 0; ++it) {
      const double rl = d_.r * l;
      double step = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        next[i] = y[i] * g[i] / rl;
        step = std::max(step, std::fabs(next[i] - y[i]));
      }
      normalize(next);
      y.swap(next);
      const double l_next = d_.gradient(y, g);
      const bool done = (l_next - l) < cfg_.value_tol && step < cfg_.step_tol;
      l = l_next;
      if (done) break;
    }
  }

  void threshold(std::vector<double>& y) const {
    double top = *std::max_element(y.begin(), y.end());
    for (double& v : y)
      if (v < cfg_.zero_tol && v < top) v = 0.0;
    normalize(y);
  }

  // Newton on the KKT system of the current face. Leaves y unchanged on
  // failure.
  bool newton(std::vector<double>& y) const {
    std::vector<int> face;
    for (int i = 0; i < d_.n; ++i)
      if (y[static_cast<std::size_t>(i)] > 0) face.push_back(i);
    const auto k = static_cast<Eigen::Index>(face.size());
    if (k <= 1) return true;
    std::vector<double> g;
    std::vector<double> trial = y;
    const double start_value = d_.gradient(y, g);
    double mu = d_.r * start_value;
    auto residual = [&](const std::vector<double>& pt, double m, Eigen::VectorXd& f) {
      d_.gradient(pt, g);
      f.resize(k + 1);
      double s = 0.0;
      for (Eigen::Index a = 0; a < k; ++a) {
        f(a) = g[static_cast<std::size_t>(face[static_cast<std::size_t>(a)])] - m;
        s += pt[static_cast<std::size_t>(face[static_cast<std::size_t>(a)])];
      }
      f(k) = s - 1.0;
      return f.cwiseAbs().maxCoeff();
    };
    Eigen::VectorXd f;
    double res0 = residual(trial, mu, f);
    double res = res0;
    for (int it = 0; it < 50 && res > 1e-15; ++it) {
      Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(k + 1, k + 1);
      jac.topLeftCorner(k, k) = d_.hessian(trial, face);
      jac.block(0, k, k, 1).setConstant(-1.0);
      jac.block(k, 0, 1, k).setConstant(1.0);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
      if (!lu.isInvertible()) return false;
      Eigen::VectorXd delta = lu.solve(-f);
      for (Eigen::Index a = 0; a < k; ++a) trial[static_cast<std::size_t>(face[static_cast<std::size_t>(a)])] += delta(a);
      mu += delta(k);
      for (int i : face)
        if (!(trial[static_cast<std::size_t>(i)] > 0)) return false;
      double next = residual(trial, mu, f);
      if (!(next < res) && next > 1e-13) break;
      res = next;
    }
    normalize(trial);
    const double value = d_.value(trial);
    if (!(value >= start_value - 1e-12) || res > std::max(1e-12, 0.5 * res0)) return false;
    y.swap(trial);
    return true;
  }

  void projected_gradient(std::vector<double>& y, const std::vector<char>& allowed) const {
    std::vector<double> g;
    double l = d_.gradient(y, g);
    for (int it = 0; it < cfg_.max_iters; ++it) {
      double alpha = 1.0;
      std::vector<double> cand;
      double l_cand = l;
      bool moved = false;
      while (alpha > 1e-14) {
        std::vector<double> stepped(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) stepped[i] = y[i] + alpha * g[i];
        cand = project_simplex(stepped, allowed);
        double ascent = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) ascent += g[i] * (cand[i] - y[i]);
        l_cand = d_.value(cand);
        if (l_cand >= l + 1e-4 * ascent && l_cand > l) {
          moved = true;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
      double step = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) step = std::max(step, std::fabs(cand[i] - y[i]));
      y.swap(cand);
      const double gain = l_cand - l;
      l = d_.gradient(y, g);
      if (gain < cfg_.value_tol && step < cfg_.step_tol) break;
    }
  }

  const Dense& d_;
  const SolverConfig& cfg_;
};

std::vector<double> greedy_clique_start(const Hypergraph& h, const Dense& d) {
  std::vector<int> order(static_cast<std::size_t>(d.n));
  std::vector<std::size_t> deg(static_cast<std::size_t>(d.n));
  for (int i = 0; i < d.n; ++i) {
    order[static_cast<std::size_t>(i)] = i;
    deg[static_cast<std::size_t>(i)] = h.degree(d.labels[static_cast<std::size_t>(i)]);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
  });
  const Vertex top = d.labels[static_cast<std::size_t>(order.front())];
  Edge members;
  for (const auto& e : h.edges())
    if (std::binary_search(e.begin(), e.end(), top)) {
      members = e;
      break;
    }
  const int r = h.r();
  for (int i : order) {
    const Vertex v = d.labels[static_cast<std::size_t>(i)];
    if (std::binary_search(members.begin(), members.end(), v)) continue;
    // every (r-1)-subset of members together with v must be an edge
    bool ok = true;
    std::vector<char> pick(members.size(), 0);
    std::fill(pick.begin(), pick.begin() + (r - 1), 1);
    do {
      Edge e{v};
      for (std::size_t k = 0; k < members.size(); ++k)
        if (pick[k]) e.push_back(members[k]);
      std::sort(e.begin(), e.end());
      if (!h.contains(e)) {
        ok = false;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (ok) members.insert(std::upper_bound(members.begin(), members.end(), v), v);
  }
  std::vector<double> y(static_cast<std::size_t>(d.n), 0.0);
  for (Vertex v : members)
    y[static_cast<std::size_t>(std::lower_bound(d.labels.begin(), d.labels.end(), v) - d.labels.begin())] =
        1.0 / static_cast<double>(members.size());
  return y;
}

std::vector<double> simplex_sample(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> y(static_cast<std::size_t>(n));
  for (double& v : y) {
    // exponential variate from a 53-bit uniform in (0, 1]
    double u = (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
    v = -std::log(u);
  }
  normalize(y);
  return y;
}

Run minimize_support(const LocalSearch& search, Run run, const SolverConfig& cfg) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < run.y.size(); ++i)
      if (run.y[i] > 0) order.push_back(i);
    if (order.size() <= 1) break;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return run.y[a] < run.y[b]; });
    for (std::size_t v : order) {
      std::vector<double> y = run.y;
      y[v] = 0.0;
      normalize(y);
      std::vector<char> allowed = run.allowed;
      allowed[v] = 0;
      Run trial = search.run(std::move(y), std::move(allowed));
      if (trial.value >= run.value - cfg.accept_tol) {
        run = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  return run;
}

std::size_t support_of(const std::vector<Rational>& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](const Rational& q) { return q > 0; }));
}

}  // namespace

LagrangianResult maximize(const Hypergraph& h, const SolverConfig& cfg) {
  cfg.validate();
  if (h.empty()) {
    LagrangianResult out;
    out.degenerate = true;
    out.seed = cfg.seed;
    return out;
  }
  const Dense d(h);
  const LocalSearch search(d, cfg);
  const std::vector<char> all(static_cast<std::size_t>(d.n), 1);

  std::vector<Run> runs;
  runs.reserve(static_cast<std::size_t>(cfg.starts));
  for (int k = 0; k < cfg.starts; ++k) {
    std::vector<double> y0;
    if (k == 0)
      y0.assign(static_cast<std::size_t>(d.n), 1.0 / d.n);
    else if (k == 1)
      y0 = greedy_clique_start(h, d);
    else
      y0 = simplex_sample(d.n, derive_seed(cfg.seed, static_cast<std::uint64_t>(k)));
    runs.push_back(search.run(std::move(y0), all));
  }

  double best = 0.0;
  for (const auto& run : runs) best = std::max(best, run.value);

  // distinct near-best points, in start order
  std::map<std::vector<long long>, std::size_t> seen;
  std::vector<Run> finalists;
  for (auto& run : runs) {
    if (run.value < best - cfg.accept_tol) continue;
    std::vector<long long> key;
    for (double v : run.y) key.push_back(std::llround(v * 1e7));
    if (!seen.emplace(key, finalists.size()).second) continue;
    finalists.push_back(cfg.support_minimization ? minimize_support(search, std::move(run), cfg) : std::move(run));
  }

  // rationalize each finalist, then pick by (value, -support, descending weights)
  std::vector<std::vector<Rational>> exact;
  std::vector<Rational> values;
  const auto top = static_cast<std::size_t>(d.labels.back());
  for (const auto& run : finalists) {
    std::vector<Rational> by_vertex(top, Rational(0));
    Rational sum = 0;
    for (int i = 0; i < d.n; ++i) {
      const double v = run.y[static_cast<std::size_t>(i)];
      if (v <= 0) continue;
      Rational q = rationalize(v, cfg.max_denominator);
      if (q <= 0) continue;
      by_vertex[static_cast<std::size_t>(d.labels[static_cast<std::size_t>(i)] - 1)] = q;
      sum += q;
    }
    if (sum == 0) continue;
    for (auto& q : by_vertex) q /= sum;
    values.push_back(evaluate_exact(h, by_vertex));
    exact.push_back(std::move(by_vertex));
  }
  if (exact.empty()) throw Error("solver produced no usable weighting");
  Rational best_exact = *std::max_element(values.begin(), values.end());
  std::size_t pick = exact.size();
  std::vector<Rational> pick_sorted;
  for (std::size_t c = 0; c < exact.size(); ++c) {
    if (Rational(best_exact - values[c]).get_d() > cfg.accept_tol) continue;
    std::vector<Rational> sorted;
    for (const auto& q : exact[c])
      if (q > 0) sorted.push_back(q);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (pick == exact.size()) {
      pick = c;
      pick_sorted = std::move(sorted);
      continue;
    }
    const auto s_new = support_of(exact[c]);
    const auto s_old = support_of(exact[pick]);
    if (s_new < s_old ||
        (s_new == s_old && std::lexicographical_compare(pick_sorted.begin(), pick_sorted.end(), sorted.begin(),
                                                        sorted.end()))) {
      pick = c;
      pick_sorted = std::move(sorted);
    }
  }
  auto out = make_result(h, exact[pick], Method::multistart);
  out.starts_used = cfg.starts;
  out.seed = cfg.seed;
  return out;
}

bool check_scaling_bound(const Hypergraph& h, std::span<const double> y, Vertex i, const SolverConfig& cfg,
                         double tol) {
  if (h.r() < 2) throw ArityError("scaling bound requires r >= 2");
  const double lam = maximize(link(h, {i}), cfg).value;
  return check_scaling_bound(h, y, i, lam, tol);
}

}  // namespace hyperlag

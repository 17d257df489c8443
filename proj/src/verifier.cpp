#include "hyperlag/verifier.hpp"

#include <cmath>
#include <exception>
#include <thread>

#include "hyperlag/errors.hpp"

namespace hyperlag {

std::string to_string(Regime g) { return g == Regime::R1 ? "R1" : "R2"; }

std::string to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::pass: return "pass";
    case BoundStatus::fail: return "fail";
    case BoundStatus::not_applicable: return "n/a";
  }
  return "unknown";
}

int regime_t(std::uint64_t m, int r) {
  if (r < 1) throw ArgumentError("uniformity must be at least 1");
  int t = r;
  while (binomial(t, r) <= m) ++t;
  return t;
}

Window r1_window(int r, int t) {
  Integer lo = binomial(t - 1, r);
  Integer hi = Integer(binomial(t, r)) - binomial(t - 2, r - 2);
  if (lo < 1) lo = 1;
  if (hi < lo) return Window{1, 0};
  return Window{lo.get_ui(), hi.get_ui()};
}

Regime classify(std::uint64_t m, int r) {
  const int t = regime_t(m, r);
  const Window w = r1_window(r, t);
  return (!w.empty() && m >= w.lo && m <= w.hi) ? Regime::R1 : Regime::R2;
}

int monitor_q(int t, int support, int r) {
  if (r < 2 || support < 2 || t < 1) return 0;
  const Integer target = Integer(t) * binomial(t - 1, r - 1);
  const Integer den = support - 1;
  int q = 1;
  while (binomial(q, r - 1) * den <= target) ++q;
  return q;
}

MonitorDiagnostics counterexample_monitor(const Hypergraph& g, const LagrangianResult& result, int t) {
  const int r = g.r();
  MonitorDiagnostics d;
  d.t = t;
  const Rational reference = (t - 1 >= r) ? clique_lagrangian(t - 1, r) : Rational(0);
  d.premise = result.exact_value > reference;

  const auto w = result.float_weights();
  d.support = static_cast<int>(w.size());
  d.delta = d.support - t;
  if (!w.empty()) {
    d.x1 = w.front();
    d.xT = w.back();
  }
  d.q = monitor_q(t, d.support, r);
  if (d.q >= 1 && d.q <= d.support) d.xq = w[static_cast<std::size_t>(d.q - 1)];
  for (std::size_t i = static_cast<std::size_t>(std::max(d.q, 0)); i < w.size(); ++i) d.tail_sum += w[i];

  auto add = [&](std::string name, bool applicable, double lhs, double rhs, bool strict) {
    BoundCheck b{std::move(name), BoundStatus::not_applicable, lhs, rhs};
    if (applicable && d.premise) b.status = (strict ? lhs < rhs : lhs <= rhs) ? BoundStatus::pass : BoundStatus::fail;
    d.bounds.push_back(std::move(b));
  };
  const double td = t;
  const double delta = d.delta;
  const bool has_delta = d.delta >= 1 && r >= 2;
  add("support T < 10t", true, d.support, 10.0 * td, true);
  add("x1 <= r/t", true, d.x1, r / td, false);
  add("xT <= 10/(delta^(1/(r-1)) t)", has_delta, d.xT,
      has_delta ? 10.0 / (std::pow(delta, 1.0 / (r - 1)) * td) : 0.0, false);
  add("xq <= 10r delta^(-1/(r-1)^2)/t", has_delta && d.q >= 1, d.xq,
      has_delta ? 10.0 * r * std::pow(delta, -1.0 / ((r - 1) * (r - 1))) / td : 0.0, false);
  const bool tail = has_delta && d.delta > 4 * r && d.q >= 1;
  add("tail <= 2 delta xq", tail, d.tail_sum, 2.0 * delta * d.xq, false);
  add("tail <= 20r delta^(1-1/(r-1)^2)/t", tail, d.tail_sum,
      has_delta ? 20.0 * r * std::pow(delta, 1.0 - 1.0 / ((r - 1) * (r - 1))) / td : 0.0, false);
  return d;
}

std::pair<Rational, Method> colex_value(std::uint64_t m, int r, const SolverConfig& cfg) {
  if (classify(m, r) == Regime::R1) return {clique_lagrangian(regime_t(m, r) - 1, r), Method::closed_form};
  return {maximize(colex_segment(m, r), cfg).exact_value, Method::multistart};
}

namespace {

struct Scored {
  LagrangianResult result;
  bool oracle_checked = false;
  bool oracle_improved = false;
};

// Best first: larger value, then smaller support, then smaller edge list.
bool better(const Scored& a, const Hypergraph& ga, const Scored& b, const Hypergraph& gb) {
  if (a.result.exact_value != b.result.exact_value) return a.result.exact_value > b.result.exact_value;
  if (a.result.support_size != b.result.support_size) return a.result.support_size < b.result.support_size;
  return ga < gb;
}

VerificationReport run_verification(std::uint64_t m, int r, int t, int tmax, bool restricted,
                                    const VerifyConfig& cfg) {
  if (m < 1) throw DomainError("verification requires m >= 1");
  cfg.solver.validate();
  VerificationReport rep;
  rep.r = r;
  rep.m = m;
  rep.t = t;
  rep.regime = classify(m, r);
  rep.restricted = restricted;
  rep.tmax = tmax;
  std::tie(rep.colex_value, rep.colex_method) = colex_value(m, r, cfg.solver);

  const auto seen = count_left_compressed(m, r, tmax, cfg.max_candidates);
  if (seen > cfg.max_candidates)
    throw SizeError("more than " + std::to_string(cfg.max_candidates) + " candidates (counted " +
                    std::to_string(seen) + " before stopping) for m=" + std::to_string(m) +
                    ", r=" + std::to_string(r) + ", support " + std::to_string(tmax));
  const auto candidates = enumerate_left_compressed(m, r, tmax, cfg.pair_covering_only);
  rep.candidates = candidates.size();

  const double colex_float = rep.colex_value.get_d();
  std::vector<Scored> scored(candidates.size());
  auto work = [&](std::size_t idx) {
    const auto& h = candidates[idx];
    Scored s;
    s.result = maximize(h, cfg.solver);
    if (s.result.value >= colex_float - cfg.oracle_window && cfg.oracle_n > 0 &&
        grid_size(h.support().size(), cfg.oracle_n) <= 1e8) {
      s.oracle_checked = true;
      auto oracle = grid_oracle(h, cfg.oracle_n);
      if (oracle.exact_value > s.result.exact_value) {
        s.oracle_improved = true;
        s.result = std::move(oracle);
      }
    }
    scored[idx] = std::move(s);
  };

  const auto jobs = static_cast<std::size_t>(std::max(1, cfg.jobs));
  if (jobs == 1 || candidates.size() < 2) {
    for (std::size_t i = 0; i < candidates.size(); ++i) work(i);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < candidates.size(); i += jobs) work(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::size_t best = 0;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    rep.oracle_checks += scored[i].oracle_checked;
    rep.oracle_improvements += scored[i].oracle_improved;
    if (i > 0 && better(scored[i], candidates[i], scored[best], candidates[best])) best = i;
  }
  if (!candidates.empty()) {
    rep.witness = candidates[best];
    rep.witness_result = scored[best].result;
    rep.best_value = rep.witness_result.exact_value;
  } else {
    rep.witness = Hypergraph(r);
  }

  // R1 colex values are exact Lagrangians and candidate values are exact
  // lower bounds, so the exact comparison is sound there.
  rep.exact_comparison = rep.regime == Regime::R1;
  rep.counterexample = rep.exact_comparison ? rep.best_value > rep.colex_value
                                            : rep.best_value.get_d() > colex_float + cfg.numeric_tol;
  rep.saturated = !restricted && !candidates.empty() &&
                  static_cast<int>(rep.witness_result.support_size) >= tmax;
  if (rep.counterexample) rep.diagnostics = counterexample_monitor(rep.witness, rep.witness_result, t);
  return rep;
}

}  // namespace

VerificationReport verify_conjecture(std::uint64_t m, int r, const VerifyConfig& cfg) {
  if (cfg.support_slack < 0) throw ArgumentError("support slack must be nonnegative");
  int t0 = r;
  while (binomial(t0, r) < m) ++t0;
  return run_verification(m, r, regime_t(m, r), t0 + cfg.support_slack, false, cfg);
}

std::vector<VerificationReport> verify_range(int r, int t, const VerifyConfig& cfg) {
  std::vector<VerificationReport> out;
  const Window w = r1_window(r, t);
  if (w.empty()) return out;
  for (std::uint64_t m = w.lo; m <= w.hi; ++m) out.push_back(verify_conjecture(m, r, cfg));
  return out;
}

VerificationReport restricted_support_verify(std::uint64_t m, int r, int t, const VerifyConfig& cfg) {
  const Window w = r1_window(r, t);
  if (w.empty() || m < w.lo || m > w.hi)
    throw DomainError("m=" + std::to_string(m) + " lies outside [C(t-1,r), C(t,r)-C(t-2,r-2)] for t=" +
                      std::to_string(t));
  return run_verification(m, r, t, t, true, cfg);
}

}  // namespace hyperlag

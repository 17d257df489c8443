#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/solver.hpp"

namespace hyperlag {

// ---------------------------------------------------------------------------
// Candidate enumeration

/// Calls `visit` once for every m-edge downset of the coordinatewise
/// domination order on [tmax]^{(r)}, i.e. every left-compressed m-edge r-graph
/// supported inside [tmax]. Order is deterministic. With `pair_covering_only`
/// the stream is filtered to graphs that cover their pairs. Returning false
/// from `visit` stops the walk.
void for_each_left_compressed(std::uint64_t m, int r, int tmax,
                              const std::function<bool(const Hypergraph&)>& visit,
                              bool pair_covering_only = false);

std::vector<Hypergraph> enumerate_left_compressed(std::uint64_t m, int r, int tmax,
                                                  bool pair_covering_only = false);

/// Number of downsets enumerate_left_compressed would yield, counting at most
/// `cap` (returns cap + 1 when there are more).
std::uint64_t count_left_compressed(std::uint64_t m, int r, int tmax, std::uint64_t cap,
                                    bool pair_covering_only = false);

// ---------------------------------------------------------------------------
// Regimes

enum class Regime { R1, R2 };
std::string to_string(Regime g);

/// The t attached to m: the least t with m < C(t, r). It is the unique t with
/// C(t-1, r) <= m < C(t, r).
int regime_t(std::uint64_t m, int r);

/// R1 iff C(t-1, r) <= m <= C(t, r) - C(t-2, r-2) for t = regime_t(m, r).
Regime classify(std::uint64_t m, int r);

/// [C(t-1, r), C(t, r) - C(t-2, r-2)], lower end clamped to 1. Empty when the
/// upper end is below the lower end.
struct Window {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool empty() const { return hi < lo; }
};
Window r1_window(int r, int t);

// ---------------------------------------------------------------------------
// Counterexample monitor

enum class BoundStatus { pass, fail, not_applicable };
std::string to_string(BoundStatus s);

struct BoundCheck {
  std::string name;
  BoundStatus status = BoundStatus::not_applicable;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Quantities the conditional analysis of a hypothetical counterexample
/// controls, measured on a certified maximizer.
struct MonitorDiagnostics {
  int t = 0;
  bool premise = false;   // λ(G) > λ([t-1]^{(r)})
  int support = 0;        // T
  int delta = 0;          // T - t
  double x1 = 0.0;
  double xT = 0.0;
  int q = 0;              // C(q-1,r-1) <= t/(T-1) C(t-1,r-1) < C(q,r-1); 0 if undefined
  double xq = 0.0;
  double tail_sum = 0.0;  // Σ_{i>q} x_i
  std::vector<BoundCheck> bounds;
};

/// Evaluates the support, weight and tail bounds on `result`. When the premise
/// fails every bound is marked not applicable.
MonitorDiagnostics counterexample_monitor(const Hypergraph& g, const LagrangianResult& result, int t);

/// Smallest q >= 1 with C(q, r-1) (T-1) > t C(t-1, r-1); 0 when r < 2 or T < 2.
int monitor_q(int t, int support, int r);

// ---------------------------------------------------------------------------
// Verification

struct VerifyConfig {
  SolverConfig solver;
  int support_slack = 2;
  int oracle_n = 18;
  double oracle_window = 1e-3;   // grid cross-check below this gap to colex
  double numeric_tol = 1e-9;
  std::uint64_t max_candidates = 200000;
  int jobs = 1;
  bool pair_covering_only = false;
};

struct VerificationReport {
  int r = 0;
  std::uint64_t m = 0;
  int t = 0;
  Regime regime = Regime::R2;
  bool restricted = false;
  int tmax = 0;
  Rational colex_value = 0;
  Method colex_method = Method::closed_form;
  Rational best_value = 0;
  Hypergraph witness{1};
  LagrangianResult witness_result;
  bool counterexample = false;
  bool exact_comparison = true;   // false: float comparison within numeric_tol
  bool saturated = false;         // witness support reaches tmax
  std::uint64_t candidates = 0;
  std::uint64_t oracle_checks = 0;
  std::uint64_t oracle_improvements = 0;  // grid point beat the local search
  std::optional<MonitorDiagnostics> diagnostics;

  double gap() const { return Rational(best_value - colex_value).get_d(); }
};

/// λ(H^{m,r}): closed form in R1, maximize otherwise.
std::pair<Rational, Method> colex_value(std::uint64_t m, int r, const SolverConfig& cfg);

/// Compares the best left-compressed m-edge r-graph on [T0 + slack] against
/// H^{m,r}, where T0 is the least T with C(T, r) >= m. Throws SizeError (with
/// the count seen) when the candidate stream exceeds cfg.max_candidates.
VerificationReport verify_conjecture(std::uint64_t m, int r, const VerifyConfig& cfg = {});

/// verify_conjecture for every m in the R1 window of t.
std::vector<VerificationReport> verify_range(int r, int t, const VerifyConfig& cfg = {});

/// Candidates restricted to support ⊆ [t]. Throws DomainError unless m lies in
/// the R1 window of t.
VerificationReport restricted_support_verify(std::uint64_t m, int r, int t, const VerifyConfig& cfg = {});

}  // namespace hyperlag

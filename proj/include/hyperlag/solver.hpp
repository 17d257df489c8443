#pragma once

#include <cstdint>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"

namespace hyperlag {

struct SolverConfig {
  int starts = 50;
  int max_iters = 5000;
  double value_tol = 1e-13;     // replicator stops when L improves by less
  double step_tol = 1e-10;      // ... and the simplex step is below this
  double zero_tol = 1e-9;       // weights below this are dropped
  double accept_tol = 1e-10;    // allowed value loss when shrinking the support
  std::uint64_t seed = 0x5eed;
  bool support_minimization = true;
  long max_denominator = 1000000;

  /// Throws ArgumentError when starts < 1 or a tolerance is not positive.
  void validate() const;
};

/// Multistart local maximization of L(H, ·) over the simplex.
///
/// Each start runs the multiplicative update y_i <- y_i L(H_i,y) / (r L(H,y))
/// to convergence, then polishes the KKT system on the detected support with
/// Newton's method (projected gradient with backtracking when Newton cannot
/// proceed). Vertices that violate the off-support condition are re-admitted.
/// Among the best runs the smallest support wins, then the lexicographically
/// largest descending weighting. The returned weighting is rationalized and
/// the reported value is its exact evaluation, so `exact_value <= λ(H)`.
///
/// Deterministic in `cfg.seed`. An edgeless H yields value 0 with the
/// degenerate flag set.
LagrangianResult maximize(const Hypergraph& h, const SolverConfig& cfg = {});

/// check_scaling_bound with λ(H_i) taken from maximize on the link.
bool check_scaling_bound(const Hypergraph& h, std::span<const double> y, Vertex i,
                         const SolverConfig& cfg, double tol = 1e-9);

/// Deterministic per-start seed derived from (seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hyperlag

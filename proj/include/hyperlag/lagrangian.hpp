#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperlag/hypergraph.hpp"
#include "hyperlag/rational.hpp"

namespace hyperlag {

/// A point of the standard simplex, indexed by vertex: values()[v - 1] is the
/// weight of vertex v. An exact twin, when present, sums to exactly one.
class Weighting {
 public:
  Weighting() = default;

  /// Throws ArgumentError on negative entries or |sum - 1| > 1e-12.
  explicit Weighting(std::vector<double> values);

  /// Throws ArgumentError unless entries are nonnegative and sum to 1 exactly.
  static Weighting from_exact(std::vector<Rational> values);

  static Weighting uniform(int n);

  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  const std::optional<std::vector<Rational>>& exact() const { return exact_; }

  /// Weight of vertex v; zero for labels beyond the indexed range.
  double operator[](Vertex v) const;

  std::vector<Vertex> support() const;

 private:
  std::vector<double> values_;
  std::optional<std::vector<Rational>> exact_;
};

/// L(H, y) = Σ_{A∈H} Π_{i∈A} y_i with y[v - 1] the weight of vertex v. The
/// weighting need not lie on the simplex. Throws EvaluationError when H uses a
/// vertex beyond y.
double evaluate(const Hypergraph& h, std::span<const double> y);
double evaluate(const Hypergraph& h, const Weighting& y);
Rational evaluate_exact(const Hypergraph& h, std::span<const Rational> y);

/// Entry v - 1 is L(H_v, y), the partial derivative in y_v.
std::vector<double> partials(const Hypergraph& h, std::span<const double> y);
std::vector<Rational> partials_exact(const Hypergraph& h, std::span<const Rational> y);

/// L(H_S, y) for any S with |S| <= r; the empty product counts as 1.
double link_value(const Hypergraph& h, const std::vector<Vertex>& s, std::span<const double> y);

enum class Method { closed_form, multistart, oracle };
std::string to_string(Method m);

/// First-order optimality residuals at a simplex point.
struct KKTResidual {
  double on_support = 0.0;   // max over y_i > 0 of |L(H_i,y) - r L(H,y)|
  double off_support = 0.0;  // max over y_i = 0 of L(H_i,y) - r L(H,y); 0 if none
};

KKTResidual kkt_residual(const Hypergraph& h, std::span<const double> y);
KKTResidual kkt_residual(const Hypergraph& h, const Weighting& y);

/// A Lagrangian value together with the weighting that certifies it.
///
/// `weights` are exact, strictly positive, sum to one and are sorted
/// descending; `vertices[k]` is the label carrying `weights[k]`. `exact_value`
/// is L evaluated exactly at that weighting, so it is a certified lower bound
/// on λ(H).
struct LagrangianResult {
  Rational exact_value = 0;
  double value = 0.0;
  std::vector<Vertex> vertices;
  std::vector<Rational> weights;
  std::size_t support_size = 0;
  KKTResidual kkt;
  Method method = Method::multistart;
  int starts_used = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;

  std::vector<double> float_weights() const;

  /// Vertex-indexed weighting over 1..n. n defaults to the largest label used.
  Weighting by_vertex(Vertex n = 0) const;
};

/// Builds a result from a vertex-indexed exact weighting: sorts, evaluates
/// exactly, and fills the KKT residuals.
LagrangianResult make_result(const Hypergraph& h, const std::vector<Rational>& by_vertex,
                             Method method);

/// λ([t]^{(r)}) = C(t, r) / t^r. Throws DomainError when t < r.
Rational clique_lagrangian(int t, int r);

/// Clique number by exhaustive branch and bound. Requires r = 2 and support
/// of at most 12 vertices.
int clique_number(const Hypergraph& h);

/// (ω - 1) / (2ω) for a graph. Throws UniformityError when r != 2 and
/// SizeError when the support exceeds 12 vertices.
Rational motzkin_straus_value(const Hypergraph& h);

/// Exact maximum of L over weightings of support(H) whose entries are
/// multiples of 1/N. Throws SizeError when more than 1e8 grid points would be
/// visited.
LagrangianResult grid_oracle(const Hypergraph& h, int denominator);

/// Number of grid points grid_oracle(h, N) visits (saturating).
double grid_size(std::size_t vertices, int denominator);

/// Averages y_i and y_j. Requires H_{i\j} = H_{j\i} = ∅, else SymmetryError.
/// The exact twin is averaged too when present.
Weighting symmetrize(const Hypergraph& h, const Weighting& y, Vertex i, Vertex j);

/// |(y_i - y_j) L(H_{i,j}, y) - L(H_{i\j}, y)|; vanishes at maximizers of a
/// left-compressed H for support vertices i < j. Throws ArgumentError unless
/// i < j.
double check_pair_identity(const Hypergraph& h, std::span<const double> y, Vertex i, Vertex j);

/// L(H_i, y) <= (1 - y_i)^{r-1} λ(H_i) + tol, with λ(H_i) supplied.
bool check_scaling_bound(const Hypergraph& h, std::span<const double> y, Vertex i,
                         double link_lagrangian, double tol = 1e-9);

}  // namespace hyperlag

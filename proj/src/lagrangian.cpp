#include "hyperlag/lagrangian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "hyperlag/errors.hpp"

namespace hyperlag {

Weighting::Weighting(std::vector<double> values) : values_(std::move(values)) {
  double sum = 0.0;
  for (double v : values_) {
    if (!(v >= 0.0)) throw ArgumentError("weighting entries must be nonnegative");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-12) throw ArgumentError("weighting does not sum to 1");
}

Weighting Weighting::from_exact(std::vector<Rational> values) {
  Rational sum = 0;
  for (const auto& v : values) {
    if (v < 0) throw ArgumentError("weighting entries must be nonnegative");
    sum += v;
  }
  if (sum != 1) throw ArgumentError("exact weighting does not sum to 1");
  Weighting w;
  w.values_.reserve(values.size());
  for (const auto& v : values) w.values_.push_back(v.get_d());
  w.exact_ = std::move(values);
  return w;
}

Weighting Weighting::uniform(int n) {
  if (n < 1) throw ArgumentError("uniform weighting needs at least one vertex");
  return from_exact(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)));
}

double Weighting::operator[](Vertex v) const {
  if (v < 1) throw ArgumentError("vertex labels must be positive");
  return static_cast<std::size_t>(v) <= values_.size() ? values_[static_cast<std::size_t>(v - 1)] : 0.0;
}

std::vector<Vertex> Weighting::support() const {
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k] > 0) out.push_back(static_cast<Vertex>(k + 1));
  return out;
}

namespace {

void check_range(const Hypergraph& h, std::size_t n) {
  if (static_cast<std::size_t>(h.max_vertex()) > n)
    throw EvaluationError("weighting covers vertices 1.." + std::to_string(n) +
                          " but the hypergraph uses vertex " + std::to_string(h.max_vertex()));
}

template <class T>
T evaluate_impl(const Hypergraph& h, std::span<const T> y) {
  check_range(h, y.size());
  T total = 0;
  for (const auto& e : h.edges()) {
    T prod = 1;
    for (Vertex v : e) prod *= y[static_cast<std::size_t>(v - 1)];
    total += prod;
  }
  return total;
}

template <class T>
std::vector<T> partials_impl(const Hypergraph& h, std::span<const T> y) {
  check_range(h, y.size());
  std::vector<T> out(y.size(), T(0));
  for (const auto& e : h.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      T prod = 1;
      for (std::size_t l = 0; l < e.size(); ++l)
        if (l != k) prod *= y[static_cast<std::size_t>(e[l] - 1)];
      out[static_cast<std::size_t>(e[k] - 1)] += prod;
    }
  }
  return out;
}

}  // namespace

double evaluate(const Hypergraph& h, std::span<const double> y) { return evaluate_impl<double>(h, y); }

double evaluate(const Hypergraph& h, const Weighting& y) { return evaluate(h, y.values()); }

Rational evaluate_exact(const Hypergraph& h, std::span<const Rational> y) {
  return evaluate_impl<Rational>(h, y);
}

std::vector<double> partials(const Hypergraph& h, std::span<const double> y) {
  return partials_impl<double>(h, y);
}

std::vector<Rational> partials_exact(const Hypergraph& h, std::span<const Rational> y) {
  return partials_impl<Rational>(h, y);
}

double link_value(const Hypergraph& h, const std::vector<Vertex>& s, std::span<const double> y) {
  check_range(h, y.size());
  Edge sorted = s;
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (const auto& e : h.edges()) {
    if (!std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) continue;
    double prod = 1.0;
    for (Vertex v : e)
      if (!std::binary_search(sorted.begin(), sorted.end(), v)) prod *= y[static_cast<std::size_t>(v - 1)];
    total += prod;
  }
  return total;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::multistart: return "multistart";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

KKTResidual kkt_residual(const Hypergraph& h, std::span<const double> y) {
  const double rl = h.r() * evaluate(h, y);
  const auto g = partials(h, y);
  KKTResidual out;
  bool any_off = false;
  double off = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k] > 0) {
      out.on_support = std::max(out.on_support, std::fabs(g[k] - rl));
    } else {
      any_off = true;
      off = std::max(off, g[k] - rl);
    }
  }
  out.off_support = any_off ? off : 0.0;
  return out;
}

KKTResidual kkt_residual(const Hypergraph& h, const Weighting& y) { return kkt_residual(h, y.values()); }

std::vector<double> LagrangianResult::float_weights() const {
  std::vector<double> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(w.get_d());
  return out;
}

Weighting LagrangianResult::by_vertex(Vertex n) const {
  Vertex top = vertices.empty() ? 0 : *std::max_element(vertices.begin(), vertices.end());
  if (n == 0) n = top;
  if (n < top) throw ArgumentError("by_vertex range smaller than the support");
  if (n == 0) return {};
  std::vector<Rational> exact(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t k = 0; k < vertices.size(); ++k) exact[static_cast<std::size_t>(vertices[k] - 1)] = weights[k];
  return Weighting::from_exact(std::move(exact));
}

LagrangianResult make_result(const Hypergraph& h, const std::vector<Rational>& by_vertex, Method method) {
  LagrangianResult out;
  out.method = method;
  std::vector<Vertex> order;
  for (std::size_t k = 0; k < by_vertex.size(); ++k)
    if (by_vertex[k] > 0) order.push_back(static_cast<Vertex>(k + 1));
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return by_vertex[static_cast<std::size_t>(a - 1)] > by_vertex[static_cast<std::size_t>(b - 1)];
  });
  for (Vertex v : order) {
    out.vertices.push_back(v);
    out.weights.push_back(by_vertex[static_cast<std::size_t>(v - 1)]);
  }
  out.support_size = order.size();
  std::vector<Rational> full = by_vertex;
  if (full.size() < static_cast<std::size_t>(h.max_vertex())) full.resize(static_cast<std::size_t>(h.max_vertex()), 0);
  out.exact_value = evaluate_exact(h, full);
  out.value = out.exact_value.get_d();
  std::vector<double> fl;
  fl.reserve(full.size());
  for (const auto& w : full) fl.push_back(w.get_d());
  out.kkt = kkt_residual(h, fl);
  return out;
}

Rational clique_lagrangian(int t, int r) {
  if (r < 1 || t < r) throw DomainError("clique_lagrangian requires t >= r >= 1");
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(r));
  Rational out(binomial(t, r), den);
  out.canonicalize();
  return out;
}

namespace {

void grow_clique(const std::vector<std::uint32_t>& adj, std::uint32_t current, std::uint32_t candidates,
                 int size, int& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  while (candidates != 0) {
    if (size + std::popcount(candidates) <= best) return;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(adj, current | (1u << v), candidates & adj[static_cast<std::size_t>(v)], size + 1, best);
  }
}

}  // namespace

int clique_number(const Hypergraph& h) {
  if (h.r() != 2) throw UniformityError("clique number requires a graph (r = 2)");
  auto sup = h.support();
  if (sup.size() > 12) throw SizeError("clique search is limited to 12 vertices");
  if (sup.empty()) return 0;
  std::vector<std::uint32_t> adj(sup.size(), 0);
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(sup.begin(), sup.end(), v) - sup.begin());
  };
  for (const auto& e : h.edges()) {
    auto a = index(e[0]);
    auto b = index(e[1]);
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  int best = 1;
  grow_clique(adj, 0, (1u << sup.size()) - 1, 0, best);
  return best;
}

Rational motzkin_straus_value(const Hypergraph& h) {
  int omega = clique_number(h);
  if (omega == 0) return 0;
  Rational out(omega - 1, 2 * omega);
  out.canonicalize();
  return out;
}

double grid_size(std::size_t vertices, int denominator) {
  if (vertices == 0) return 0.0;
  // C(N + n - 1, n - 1) in floating point; only used against the guard
  double count = 1.0;
  const double n1 = static_cast<double>(vertices) - 1.0;
  for (double k = 1; k <= n1; k += 1.0) count = count * (denominator + k) / k;
  return count;
}

LagrangianResult grid_oracle(const Hypergraph& h, int denominator) {
  if (denominator < 1) throw ArgumentError("grid denominator must be positive");
  const auto sup = h.support();
  if (sup.empty()) {
    LagrangianResult out;
    out.method = Method::oracle;
    out.degenerate = true;
    return out;
  }
  if (grid_size(sup.size(), denominator) > 1e8)
    throw SizeError("grid oracle would visit more than 1e8 points");
  const std::size_t n = sup.size();
  const int r = h.r();
  if (std::pow(static_cast<double>(denominator), r) * static_cast<double>(h.size()) > 9e18)
    throw SizeError("grid oracle values overflow 64-bit integers");
  std::vector<std::size_t> dense;
  dense.reserve(h.size() * static_cast<std::size_t>(r));
  for (const auto& e : h.edges())
    for (Vertex v : e)
      dense.push_back(static_cast<std::size_t>(std::lower_bound(sup.begin(), sup.end(), v) - sup.begin()));

  std::vector<std::int64_t> k(n, 0);
  std::vector<std::int64_t> best_k;
  std::int64_t best = -1;
  auto score = [&]() {
    std::int64_t total = 0;
    for (std::size_t p = 0; p < dense.size(); p += static_cast<std::size_t>(r)) {
      std::int64_t prod = 1;
      for (int l = 0; l < r; ++l) prod *= k[dense[p + static_cast<std::size_t>(l)]];
      total += prod;
    }
    return total;
  };
  // enumerate compositions of N into n parts in lexicographic order
  auto recurse = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
    if (pos + 1 == n) {
      k[pos] = left;
      std::int64_t s = score();
      if (s > best) {
        best = s;
        best_k = k;
      }
      return;
    }
    for (std::int64_t a = left; a >= 0; --a) {
      k[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  recurse(recurse, 0, denominator);

  std::vector<Rational> by_vertex(static_cast<std::size_t>(sup.back()), Rational(0));
  for (std::size_t p = 0; p < n; ++p) {
    Rational w(best_k[p], denominator);
    w.canonicalize();
    by_vertex[static_cast<std::size_t>(sup[p] - 1)] = w;
  }
  auto out = make_result(h, by_vertex, Method::oracle);
  out.starts_used = 0;
  return out;
}

Weighting symmetrize(const Hypergraph& h, const Weighting& y, Vertex i, Vertex j) {
  if (!link_diff(h, i, j).empty() || !link_diff(h, j, i).empty())
    throw SymmetryError("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                        " are not interchangeable in H");
  const auto n = static_cast<Vertex>(y.size());
  if (i < 1 || j < 1 || i > n || j > n) throw EvaluationError("symmetrize pair outside the weighting");
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(j - 1);
  if (y.exact()) {
    auto z = *y.exact();
    Rational mid = (z[a] + z[b]) / 2;
    z[a] = mid;
    z[b] = mid;
    return Weighting::from_exact(std::move(z));
  }
  std::vector<double> z(y.values().begin(), y.values().end());
  double mid = 0.5 * (z[a] + z[b]);
  z[a] = mid;
  z[b] = mid;
  return Weighting(std::move(z));
}

double check_pair_identity(const Hypergraph& h, std::span<const double> y, Vertex i, Vertex j) {
  if (!(i < j)) throw ArgumentError("pair identity requires i < j");
  check_range(h, y.size());
  auto weight = [&](Vertex v) { return static_cast<std::size_t>(v) <= y.size() ? y[static_cast<std::size_t>(v - 1)] : 0.0; };
  double joint = link_value(h, {i, j}, y);
  double diff = evaluate(link_diff(h, i, j), y);
  return std::fabs((weight(i) - weight(j)) * joint - diff);
}

bool check_scaling_bound(const Hypergraph& h, std::span<const double> y, Vertex i, double link_lagrangian,
                         double tol) {
  if (h.r() < 2) throw ArityError("scaling bound requires r >= 2");
  const double yi = static_cast<std::size_t>(i) <= y.size() ? y[static_cast<std::size_t>(i - 1)] : 0.0;
  const double lhs = evaluate(link(h, {i}), y);
  return lhs <= std::pow(1.0 - yi, h.r() - 1) * link_lagrangian + tol;
}

}  // namespace hyperlag

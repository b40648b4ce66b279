#include "harmonia/hilbert.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace harmonia {

IndexedFun IndexedFun::uniform(std::vector<std::string> labels, std::vector<Cx> values) {
  IndexedFun f;
  f.labels = std::move(labels);
  f.values = std::move(values);
  f.weights.assign(f.labels.size(), Rational(1));
  f.validate();
  return f;
}

IndexedFun IndexedFun::weighted(std::vector<std::string> labels, std::vector<Cx> values,
                                std::vector<Rational> weights) {
  IndexedFun f;
  f.labels = std::move(labels);
  f.values = std::move(values);
  f.weights = std::move(weights);
  f.validate();
  return f;
}

void IndexedFun::validate() const {
  if (values.size() != labels.size() || weights.size() != labels.size())
    throw std::invalid_argument("IndexedFun: one value and one weight per label required");
  for (const auto& w : weights)
    if (w <= Rational(0)) throw std::invalid_argument("IndexedFun: weights must be positive");
}

void require_same_index(const IndexedFun& f, const IndexedFun& g) {
  if (f.labels != g.labels || f.weights != g.weights)
    throw std::invalid_argument("index mismatch: operands live on different weighted index sets");
}

Cx inner_product(const IndexedFun& f, const IndexedFun& g) {
  require_same_index(f, g);
  Cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i)
    acc += f.values[i] * std::conj(g.values[i]) * to_double(f.weights[i]);
  return acc;
}

double lp_norm(const IndexedFun& f, double p) {
  f.validate();
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, modulus(v));
    return m;
  }
  if (!(p > 0)) throw std::domain_error("lp_norm: p must be positive or infinity");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    acc += std::pow(modulus(f.values[i]), p) * to_double(f.weights[i]);
  return std::pow(acc, 1.0 / p);
}

DualNormResult dual_norm(const IndexedFun& g, double p) {
  g.validate();
  const bool p_inf = std::isinf(p);
  if (!p_inf && !(p >= 1.0)) throw std::domain_error("dual_norm: p must lie in [1, infinity]");

  IndexedFun f = g;  // same index set and weights
  const std::size_t n = g.size();

  if (p == 1.0) {
    // q = infinity: a signed point mass at the largest |g| value.
    std::size_t best = 0;
    double best_mod = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      double m = modulus(g.values[i]);
      if (m > best_mod) { best_mod = m; best = i; }
    }
    for (auto& v : f.values) v = Cx(0.0, 0.0);
    if (best_mod > 0) {
      // |f(best)| * w(best) = 1 makes the weighted l1 norm one.
      f.values[best] = std::conj(g.values[best]) / best_mod / to_double(g.weights[best]);
    }
    return {best_mod, f};
  }

  if (p_inf) {
    // q = 1: align phases everywhere.
    double q_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double m = modulus(g.values[i]);
      q_norm += m * to_double(g.weights[i]);
      f.values[i] = (m > 0) ? std::conj(g.values[i]) / m : Cx(1.0, 0.0);
    }
    return {q_norm, f};
  }

  const double q = p / (p - 1.0);
  double q_norm = lp_norm(g, q);
  if (q_norm == 0.0) {
    for (auto& v : f.values) v = Cx(0.0, 0.0);
    return {0.0, f};
  }
  // f = conj(g) |g|^{q-2} / ||g||_q^{q-1} has unit lp norm and pairs to ||g||_q.
  for (std::size_t i = 0; i < n; ++i) {
    double m = modulus(g.values[i]);
    f.values[i] = (m > 0)
        ? std::conj(g.values[i]) * std::pow(m, q - 2.0) / std::pow(q_norm, q - 1.0)
        : Cx(0.0, 0.0);
  }
  return {q_norm, f};
}

void VectorList::validate() const {
  for (const auto& v : vectors)
    if (v.size() != dimension)
      throw std::invalid_argument("VectorList: all vectors must have the stated dimension");
}

Cx dot(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Cx acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}

double norm2(const std::vector<Cx>& a) { return std::sqrt(std::abs(dot(a, a))); }

Projection project(const std::vector<Cx>& v, const VectorList& onb, double ortho_tol) {
  onb.validate();
  if (v.size() != onb.dimension)
    throw std::invalid_argument("project: vector dimension differs from basis dimension");
  for (std::size_t i = 0; i < onb.vectors.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(modulus(dot(onb.vectors[i], onb.vectors[j])) - expected) > ortho_tol)
        throw std::invalid_argument("project: list is not orthonormal at the requested tolerance");
    }

  Projection out;
  out.projection.assign(v.size(), Cx(0.0, 0.0));
  for (const auto& e : onb.vectors) {
    Cx c = dot(v, e);
    for (std::size_t k = 0; k < v.size(); ++k) out.projection[k] += c * e[k];
  }
  out.residual.resize(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.residual[k] = v[k] - out.projection[k];
  return out;
}

VectorList gram_schmidt(const VectorList& vs, double tol) {
  vs.validate();
  if (!(tol > 0)) throw std::domain_error("gram_schmidt: tol must be positive");
  VectorList out;
  out.dimension = vs.dimension;
  for (const auto& v : vs.vectors) {
    std::vector<Cx> u = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : out.vectors) {
        Cx c = dot(u, e);
        for (std::size_t k = 0; k < u.size(); ++k) u[k] -= c * e[k];
      }
    }
    double n = norm2(u);
    if (n < tol) continue;  // dependent on the vectors already kept
    for (auto& x : u) x /= n;
    out.vectors.push_back(std::move(u));
  }
  return out;
}

DoubleSum double_sum(const std::vector<std::vector<Cx>>& table) {
  DoubleSum out;
  out.total = Cx(0.0, 0.0);
  std::size_t cols = table.empty() ? 0 : table.front().size();
  for (const auto& row : table)
    if (row.size() != cols) throw std::invalid_argument("double_sum: ragged table");
  out.row_sums.assign(table.size(), Cx(0.0, 0.0));
  out.col_sums.assign(cols, Cx(0.0, 0.0));
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      out.row_sums[i] += table[i][j];
      out.col_sums[j] += table[i][j];
    }
  for (const auto& s : out.row_sums) out.total += s;
  return out;
}

}  // namespace harmonia

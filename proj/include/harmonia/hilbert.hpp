// Finite-dimensional inner-product and little-lp machinery: weighted index
// sets, norms and their duals, orthogonal projection, Gram-Schmidt, and
// order-of-summation checks for finite double sums.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harmonia/scalar.hpp"

namespace harmonia {

// A complex-valued function on a finite labelled index set.  Each label
// carries a positive rational weight (mass of the point); the default weight
// 1 recovers plain sequence space, while 1/|E| weights model a normalized
// invariant measure on E.
struct IndexedFun {
  std::vector<std::string> labels;
  std::vector<Cx> values;
  std::vector<Rational> weights;

  static IndexedFun uniform(std::vector<std::string> labels, std::vector<Cx> values);
  static IndexedFun weighted(std::vector<std::string> labels, std::vector<Cx> values,
                             std::vector<Rational> weights);

  std::size_t size() const { return labels.size(); }
  void validate() const;  // throws on shape/positivity violations
};

// Throws std::invalid_argument unless f and g share labels and weights.
void require_same_index(const IndexedFun& f, const IndexedFun& g);

// sum_x f(x) * conj(g(x)) * w(x)
Cx inner_product(const IndexedFun& f, const IndexedFun& g);

// Weighted p-norm, (sum w |f|^p)^{1/p}; p = infinity gives sup |f|.
// Valid for every p > 0, including the non-norm range p < 1.
double lp_norm(const IndexedFun& f, double p);

struct DualNormResult {
  double norm;          // ||g||_q with 1/p + 1/q = 1
  IndexedFun witness;   // ||witness||_p <= 1 and <witness pairing> attains norm
};

// Dual norm of the pairing f -> sum f g w on the unit ball of lp, together
// with an extremal witness.  p must lie in [1, infinity].
DualNormResult dual_norm(const IndexedFun& g, double p);

struct VectorList {
  std::size_t dimension = 0;
  std::vector<std::vector<Cx>> vectors;

  void validate() const;
};

Cx dot(const std::vector<Cx>& a, const std::vector<Cx>& b);  // sum a conj(b)
double norm2(const std::vector<Cx>& a);

struct Projection {
  std::vector<Cx> projection;
  std::vector<Cx> residual;
};

// Orthogonal projection onto the span of an orthonormal list.  The list is
// checked to be orthonormal within ortho_tol before use.
Projection project(const std::vector<Cx>& v, const VectorList& onb,
                   double ortho_tol = 1e-9);

// Classical Gram-Schmidt with a single re-orthogonalization pass.  Vectors
// whose residual drops below tol are treated as dependent and dropped.
VectorList gram_schmidt(const VectorList& vs, double tol = 1e-10);

struct DoubleSum {
  Cx total;
  std::vector<Cx> row_sums;
  std::vector<Cx> col_sums;
};

// Row sums, column sums, and the common total of a finite table.
DoubleSum double_sum(const std::vector<std::vector<Cx>>& table);

}  // namespace harmonia

// Ultrametric verification and construction: truncated product ultrametrics
// driven by a decay sequence, exhaustive strong-triangle checks on finite
// tables, and quotient metrics on finite groups with an invariant metric.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmonia/scalar.hpp"

namespace harmonia {

// Symmetric nonnegative distance table on a finite labelled point set.
struct FiniteMetric {
  std::vector<std::string> points;
  std::vector<double> table;  // row-major, points.size() squared

  std::size_t size() const { return points.size(); }
  double at(std::size_t i, std::size_t j) const { return table[i * size() + j]; }
  void set(std::size_t i, std::size_t j, double v) {
    table[i * size() + j] = v;
    table[j * size() + i] = v;
  }
  static FiniteMetric zero(std::vector<std::string> points);
  static FiniteMetric discrete(std::size_t n);

  // Symmetry, zero diagonal, positivity off the diagonal.
  void validate() const;
};

// Strictly decreasing positive rationals t_0 > t_1 > ... > t_L.
struct DecaySeq {
  std::vector<Rational> t;

  std::size_t size() const { return t.size(); }
  void validate() const;
};

// max_j min(d_j(x_j, y_j), t_j) over coordinates j = 1..m, with t_j the j-th
// entry of the decay sequence.  Tuples name points of each component metric
// by index; m must not exceed the number of components or decay entries.
double product_ultrametric(const std::vector<std::size_t>& x,
                           const std::vector<std::size_t>& y,
                           const std::vector<FiniteMetric>& components,
                           const DecaySeq& t);

struct UltraWitness {
  std::size_t x, y, z;
  double dxz, dxy, dyz;  // dxz > max(dxy, dyz)
};

// Exhaustive check of d(x,z) <= max(d(x,y), d(y,z)); first violation or pass.
std::optional<UltraWitness> is_ultrametric(const FiniteMetric& m);

// Same exhaustive sweep for the ordinary triangle inequality.
std::optional<UltraWitness> is_metric_triangle(const FiniteMetric& m);

// Quotient metric on the cosets of a subgroup.  The group is given by its
// composition table (cayley[i][j] = index of i*j) and the subgroup by element
// indices; d must satisfy d(x*h, y*h) = d(x, y) for all h in the subgroup,
// which is verified before any coset distance is formed.  The resulting coset
// labels are "{a,b,...}" over sorted member labels; the triangle inequality
// of the output is verified exhaustively.
FiniteMetric quotient_metric(const std::vector<std::vector<int>>& cayley,
                             const std::vector<int>& subgroup,
                             const FiniteMetric& d);

// Coset partition of the same data, in order of smallest member index.
std::vector<std::vector<int>> cosets_of(const std::vector<std::vector<int>>& cayley,
                                        const std::vector<int>& subgroup);

// Composition table of Z/n under addition; handy for tests and the CLI.
std::vector<std::vector<int>> cyclic_cayley(int n);

// d(x,y) = min(|x-y| mod n, n - |x-y| mod n) on Z/n.
FiniteMetric cyclic_metric(int n);

}  // namespace harmonia

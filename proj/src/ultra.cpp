#include "harmonia/ultra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace harmonia {

FiniteMetric FiniteMetric::zero(std::vector<std::string> points) {
  FiniteMetric m;
  m.points = std::move(points);
  m.table.assign(m.points.size() * m.points.size(), 0.0);
  return m;
}

FiniteMetric FiniteMetric::discrete(std::size_t n) {
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(std::to_string(i));
  FiniteMetric m = zero(std::move(pts));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m.table[i * n + j] = 1.0;
  return m;
}

void FiniteMetric::validate() const {
  const std::size_t n = size();
  if (table.size() != n * n)
    throw std::invalid_argument("FiniteMetric: table size must be points^2");
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0.0) throw std::invalid_argument("FiniteMetric: nonzero diagonal");
    for (std::size_t j = 0; j < i; ++j) {
      if (at(i, j) != at(j, i)) throw std::invalid_argument("FiniteMetric: asymmetric table");
      if (!(at(i, j) > 0.0))
        throw std::invalid_argument("FiniteMetric: distinct points at distance <= 0");
    }
  }
}

void DecaySeq::validate() const {
  if (t.empty()) throw std::invalid_argument("DecaySeq: empty");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= Rational(0)) throw std::invalid_argument("DecaySeq: entries must be positive");
    if (i > 0 && !(t[i] < t[i - 1]))
      throw std::invalid_argument("DecaySeq: entries must strictly decrease");
  }
}

double product_ultrametric(const std::vector<std::size_t>& x,
                           const std::vector<std::size_t>& y,
                           const std::vector<FiniteMetric>& components,
                           const DecaySeq& t) {
  if (x.size() != y.size())
    throw std::invalid_argument("product_ultrametric: tuple length mismatch");
  if (x.size() > components.size() || x.size() > t.size())
    throw std::invalid_argument("product_ultrametric: tuple longer than components or decay");
  t.validate();
  double best = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    double dj = components[j].at(x[j], y[j]);
    best = std::max(best, std::min(dj, to_double(t.t[j])));
  }
  return best;
}

std::optional<UltraWitness> is_ultrametric(const FiniteMetric& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (m.at(x, z) > std::max(m.at(x, y), m.at(y, z)))
          return UltraWitness{x, y, z, m.at(x, z), m.at(x, y), m.at(y, z)};
  return std::nullopt;
}

std::optional<UltraWitness> is_metric_triangle(const FiniteMetric& m) {
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (m.at(x, z) > m.at(x, y) + m.at(y, z))
          return UltraWitness{x, y, z, m.at(x, z), m.at(x, y), m.at(y, z)};
  return std::nullopt;
}

std::vector<std::vector<int>> cosets_of(const std::vector<std::vector<int>>& cayley,
                                        const std::vector<int>& subgroup) {
  const int n = static_cast<int>(cayley.size());
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> cosets;
  for (int a = 0; a < n; ++a) {
    if (owner[a] != -1) continue;
    std::set<int> members;
    for (int h : subgroup) members.insert(cayley[a][h]);
    std::vector<int> coset(members.begin(), members.end());
    for (int x : coset) owner[x] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

FiniteMetric quotient_metric(const std::vector<std::vector<int>>& cayley,
                             const std::vector<int>& subgroup,
                             const FiniteMetric& d) {
  d.validate();
  const int n = static_cast<int>(cayley.size());
  if (static_cast<std::size_t>(n) != d.size())
    throw std::invalid_argument("quotient_metric: metric and group sizes differ");
  if (subgroup.empty()) throw std::invalid_argument("quotient_metric: empty subgroup");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int h : subgroup)
        if (d.at(cayley[x][h], cayley[y][h]) != d.at(x, y))
          throw std::invalid_argument(
              "quotient_metric: invariance d(x*h, y*h) = d(x, y) fails at x=" +
              d.points[x] + " y=" + d.points[y] + " h=" + d.points[h]);

  auto cosets = cosets_of(cayley, subgroup);
  FiniteMetric q;
  for (const auto& coset : cosets) {
    std::string label = "{";
    for (std::size_t i = 0; i < coset.size(); ++i) {
      if (i) label += ",";
      label += d.points[coset[i]];
    }
    label += "}";
    q.points.push_back(std::move(label));
  }
  const std::size_t m = cosets.size();
  q.table.assign(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      double best = std::numeric_limits<double>::infinity();
      for (int x : cosets[a])
        for (int y : cosets[b]) best = std::min(best, d.at(x, y));
      q.table[a * m + b] = best;
    }
  q.validate();
  if (auto w = is_metric_triangle(q))
    throw std::logic_error("quotient_metric: coset distances violate the triangle inequality");
  return q;
}

std::vector<std::vector<int>> cyclic_cayley(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

FiniteMetric cyclic_metric(int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back(std::to_string(i));
  FiniteMetric m = FiniteMetric::zero(std::move(pts));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int diff = ((i - j) % n + n) % n;
      m.table[i * n + j] = std::min(diff, n - diff);
    }
  return m;
}

}  // namespace harmonia

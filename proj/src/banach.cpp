#include "harmonia/banach.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harmonia {

GroupFun neumann_inverse(const GroupFun& a, double tol) {
  a.validate();
  if (a.haar != Haar::Counting)
    throw std::invalid_argument("neumann_inverse: counting Haar required");
  if (!(tol > 0)) throw std::domain_error("neumann_inverse: tol must be positive");
  const double na = l1_norm(a);
  if (!(na < 1.0))
    throw std::domain_error(
        "neumann_inverse: ||a||_1 = " + std::to_string(na) +
        " >= 1, the geometric bound 1/(1 - ||a||) is unavailable");

  GroupFun sum = GroupFun::delta(a.group, a.group.zero());
  GroupFun term = sum;
  double tail = (na > 0) ? na / (1.0 - na) : 0.0;  // after the j = 0 term
  while (tail >= tol) {
    term = convolve(term, a);
    for (long long i = 0; i < a.group.order(); ++i) sum.values[i] += term.values[i];
    tail *= na;
  }
  return sum;
}

SpectralRadiusSeq spectral_radius_seq(const GroupFun& x, int k_max) {
  x.validate();
  if (x.haar != Haar::Counting)
    throw std::invalid_argument("spectral_radius_seq: counting Haar required");
  if (k_max < 1) throw std::domain_error("spectral_radius_seq: k_max must be >= 1");
  SpectralRadiusSeq out;
  out.roots.reserve(k_max);
  GroupFun power = x;
  for (int k = 1; k <= k_max; ++k) {
    out.roots.push_back(std::pow(l1_norm(power), 1.0 / k));
    if (k < k_max) power = convolve(power, x);
  }
  out.estimate = *std::min_element(out.roots.begin(), out.roots.end());
  return out;
}

std::vector<Cx> spectrum_via_characters(const GroupFun& x) {
  if (x.haar != Haar::Counting)
    throw std::invalid_argument("spectrum_via_characters: counting Haar required");
  return dft(x);
}

double conv_singularity_defect(const GroupFun& x, Cx lambda) {
  GroupFun shifted = GroupFun::delta(x.group, x.group.zero());
  for (long long i = 0; i < x.group.order(); ++i)
    shifted.values[i] = lambda * shifted.values[i] - x.values[i];
  return scaled_abs_det(conv_matrix(shifted));
}

std::vector<HomCheck> homs_l1(const FiniteAbelianGroup& g, Rng& rng, int pairs) {
  const long long N = g.order();
  auto random_fun = [&]() {
    GroupFun f = GroupFun::zero(g);
    for (auto& v : f.values) v = rng.unit_disk();
    return f;
  };

  std::vector<HomCheck> out;
  for (long long bi = 0; bi < N; ++bi) {
    GroupChar chi{g, g.element(bi)};
    HomCheck check{chi, 0.0, 0.0};
    for (int t = 0; t < pairs; ++t) {
      GroupFun f = random_fun();
      GroupFun h = random_fun();
      auto fhat = dft(f);
      auto hhat = dft(h);
      auto cvhat = dft(convolve(f, h));
      check.mult_defect =
          std::max(check.mult_defect, modulus(cvhat[bi] - fhat[bi] * hhat[bi]));
      check.bound_excess = std::max(check.bound_excess, modulus(fhat[bi]) - l1_norm(f));
      check.bound_excess = std::max(check.bound_excess, modulus(hhat[bi]) - l1_norm(h));
    }
    out.push_back(std::move(check));
  }
  return out;
}

CxMatrix CxMatrix::identity(std::size_t n) {
  CxMatrix m = zero(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cx(1.0, 0.0);
  return m;
}

CxMatrix multiply(const CxMatrix& a, const CxMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("multiply: size mismatch");
  CxMatrix c = CxMatrix::zero(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      Cx aik = a.at(i, k);
      if (aik == Cx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

CxMatrix adjoint(const CxMatrix& a) {
  CxMatrix c = CxMatrix::zero(a.n);
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) c.at(j, i) = std::conj(a.at(i, j));
  return c;
}

CxMatrix subtract(const CxMatrix& a, const CxMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("subtract: size mismatch");
  CxMatrix c = a;
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] -= b.e[i];
  return c;
}

CxMatrix inverse(const CxMatrix& a) {
  const std::size_t n = a.n;
  CxMatrix work = a;
  CxMatrix inv = CxMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work.at(r, col)) > std::abs(work.at(pivot, col))) pivot = r;
    if (std::abs(work.at(pivot, col)) < 1e-300)
      throw std::domain_error("inverse: singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Cx d = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      Cx factor = work.at(r, col);
      if (factor == Cx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) -= factor * work.at(col, j);
        inv.at(r, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

double scaled_abs_det(const CxMatrix& a) {
  const std::size_t n = a.n;
  CxMatrix work = a;
  for (std::size_t i = 0; i < n; ++i) {
    double rowmax = 0.0;
    for (std::size_t j = 0; j < n; ++j) rowmax = std::max(rowmax, std::abs(work.at(i, j)));
    if (rowmax == 0.0) return 0.0;
    for (std::size_t j = 0; j < n; ++j) work.at(i, j) /= rowmax;
  }
  double logdet = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work.at(r, col)) > std::abs(work.at(pivot, col))) pivot = r;
    double p = std::abs(work.at(pivot, col));
    if (p == 0.0) return 0.0;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) std::swap(work.at(pivot, j), work.at(col, j));
    logdet += std::log(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      Cx factor = work.at(r, col) / work.at(col, col);
      for (std::size_t j = col; j < n; ++j) work.at(r, j) -= factor * work.at(col, j);
    }
  }
  return std::exp(logdet);
}

double op_norm(const CxMatrix& a, int iters, double rel_tol) {
  const std::size_t n = a.n;
  if (n == 0) return 0.0;
  if (n > 256) throw std::domain_error("op_norm: dimension above 256");
  CxMatrix b = multiply(adjoint(a), a);  // Hermitian, nonnegative

  // Deterministic start with every coordinate populated.
  std::vector<Cx> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = Cx(1.0 + static_cast<double>(i) / n, 0.25 + 0.5 * static_cast<double>(i % 3));
  auto normalize = [](std::vector<Cx>& x) {
    double s = 0.0;
    for (const auto& c : x) s += std::norm(c);
    s = std::sqrt(s);
    if (s > 0)
      for (auto& c : x) c /= s;
    return s;
  };
  normalize(v);

  double lambda = 0.0;
  std::vector<Cx> w(n);
  for (int it = 0; it < iters; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      Cx acc(0.0, 0.0);
      for (std::size_t j = 0; j < n; ++j) acc += b.at(i, j) * v[j];
      w[i] = acc;
    }
    // Rayleigh quotient <Bv, v> with unit v.
    Cx ray(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) ray += w[i] * std::conj(v[i]);
    double next = ray.real();
    double grown = normalize(w);
    v.swap(w);
    if (grown == 0.0) return 0.0;  // iterate landed in the kernel
    if (it > 0 && std::abs(next - lambda) <= rel_tol * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

double cstar_gap(const CxMatrix& t) {
  double nt = op_norm(t);
  double ntt = op_norm(multiply(adjoint(t), t));
  return std::abs(ntt - nt * nt);
}

CxMatrix conv_matrix(const GroupFun& x) {
  x.validate();
  const auto& g = x.group;
  const std::size_t N = static_cast<std::size_t>(g.order());
  CxMatrix m = CxMatrix::zero(N);
  // (x * f)(a) = sum_b x(a - b) f(b)
  for (std::size_t ai = 0; ai < N; ++ai)
    for (std::size_t bi = 0; bi < N; ++bi) {
      auto diff = g.sub(g.element(static_cast<long long>(ai)), g.element(static_cast<long long>(bi)));
      m.at(ai, bi) = x.values[g.index_of(diff)] * haar_weight(x);
    }
  return m;
}

}  // namespace harmonia

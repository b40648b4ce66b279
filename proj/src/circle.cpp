#include "harmonia/circle.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonia {

void TrigPoly::set_coeff(int n, Cx value) {
  if (n < -degree_ || n > degree_) {
    if (value == Cx(0.0, 0.0)) return;
    // Grow symmetrically so existing indices keep their meaning.
    int new_degree = std::abs(n);
    std::vector<Cx> grown(2 * new_degree + 1, Cx(0.0, 0.0));
    for (int m = -degree_; m <= degree_; ++m) grown[m + new_degree] = coeffs_[m + degree_];
    coeffs_ = std::move(grown);
    degree_ = new_degree;
  }
  coeffs_[n + degree_] = value;
}

Cx TrigPoly::eval(Cx z) const {
  // Powers of z and 1/z = conj(z) on the circle, accumulated incrementally.
  Cx acc = coeff(0);
  Cx zp(1.0, 0.0), zm(1.0, 0.0);
  Cx zinv = std::conj(z) / std::norm(z);
  for (int n = 1; n <= degree_; ++n) {
    zp *= z;
    zm *= zinv;
    acc += coeff(n) * zp + coeff(-n) * zm;
  }
  return acc;
}

double TrigPoly::coeff_l1() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += modulus(c);
  return s;
}

double TrigPoly::coeff_l2_sq() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return s;
}

Cx circle_point(long long k, long long M) {
  return expi_turns(Rational(Int(k), Int(M)));
}

SampledCircleFun SampledCircleFun::sample(const std::function<Cx(Cx)>& f, std::size_t M) {
  if (M < 1) throw std::domain_error("SampledCircleFun: need at least one sample");
  SampledCircleFun out;
  out.values.reserve(M);
  for (std::size_t k = 0; k < M; ++k)
    out.values.push_back(f(circle_point(static_cast<long long>(k), static_cast<long long>(M))));
  return out;
}

SampledCircleFun SampledCircleFun::sample(const TrigPoly& f, std::size_t M) {
  return sample([&f](Cx z) { return f.eval(z); }, M);
}

Cx fourier_coeff(const SampledCircleFun& f, long long n) {
  const long long M = static_cast<long long>(f.size());
  if (M < 1) throw std::domain_error("fourier_coeff: empty sample set");
  if (2 * std::llabs(n) >= M)
    throw std::domain_error("fourier_coeff: frequency " + std::to_string(n) +
                            " aliases on " + std::to_string(M) + " samples");
  Cx acc(0.0, 0.0);
  for (long long k = 0; k < M; ++k)
    acc += f.values[static_cast<std::size_t>(k)] * expi_turns(Rational(Int(-n * k), Int(M)));
  return acc / static_cast<double>(M);
}

Cx fourier_coeff(const TrigPoly& f, long long n, std::size_t M) {
  const long long need = 2 * std::max<long long>(std::llabs(n), f.degree()) + 1;
  if (M == 0) M = static_cast<std::size_t>(need);
  if (static_cast<long long>(M) < need)
    throw std::domain_error("fourier_coeff: " + std::to_string(M) +
                            " samples alias a degree-" + std::to_string(f.degree()) +
                            " polynomial at frequency " + std::to_string(n));
  Cx acc(0.0, 0.0);
  for (std::size_t k = 0; k < M; ++k) {
    Cx z = circle_point(static_cast<long long>(k), static_cast<long long>(M));
    acc += f.eval(z) * expi_turns(Rational(Int(-n * static_cast<long long>(k)), Int(M)));
  }
  return acc / static_cast<double>(M);
}

Cx abel_sum(const TrigPoly& a, double r, Cx z) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("abel_sum: r must lie in [0, 1)");
  if (std::abs(modulus(z) - 1.0) > 1e-9)
    throw std::domain_error("abel_sum: z must lie on the unit circle");
  Cx acc = a.coeff(0);
  Cx zp(1.0, 0.0), zm(1.0, 0.0);
  Cx zinv = std::conj(z) / std::norm(z);
  double rp = 1.0;
  for (int n = 1; n <= a.degree(); ++n) {
    zp *= z;
    zm *= zinv;
    rp *= r;
    acc += rp * (a.coeff(n) * zp + a.coeff(-n) * zm);
  }
  ensure_finite(acc, "abel_sum");
  return acc;
}

double poisson_kernel(double r, Cx z, Cx w) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("poisson_kernel: r must lie in [0, 1)");
  Cx denom = Cx(1.0, 0.0) - r * z * std::conj(w);
  return (1.0 - r * r) / std::norm(denom);
}

Cx poisson_extension(const SampledCircleFun& f, double r, Cx z) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("poisson_extension: r must lie in [0, 1)");
  const std::size_t M = f.size();
  if (M < 1) throw std::domain_error("poisson_extension: empty sample set");
  Cx acc(0.0, 0.0);
  for (std::size_t k = 0; k < M; ++k) {
    Cx w = circle_point(static_cast<long long>(k), static_cast<long long>(M));
    acc += poisson_kernel(r, z, w) * f.values[k];
  }
  return acc / static_cast<double>(M);
}

TrigPoly convolve_sequences(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly c(a.degree() + b.degree());
  for (int n = -c.degree(); n <= c.degree(); ++n) {
    Cx acc(0.0, 0.0);
    for (int j = -a.degree(); j <= a.degree(); ++j) acc += a.coeff(j) * b.coeff(n - j);
    c.set_coeff(n, acc);
  }
  return c;
}

double parseval_gap(const TrigPoly& f, std::size_t M) {
  if (static_cast<long long>(M) <= 2LL * f.degree())
    throw std::domain_error("parseval_gap: need more than 2N samples");
  double mean_sq = 0.0;
  for (std::size_t k = 0; k < M; ++k) {
    Cx z = circle_point(static_cast<long long>(k), static_cast<long long>(M));
    mean_sq += std::norm(f.eval(z));
  }
  mean_sq /= static_cast<double>(M);
  return std::abs(f.coeff_l2_sq() - mean_sq);
}

}  // namespace harmonia

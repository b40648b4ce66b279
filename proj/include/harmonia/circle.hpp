// Fourier series on the unit circle through trigonometric polynomials and
// uniform samples: coefficients by exact quadrature, Abel means, the Poisson
// kernel, and Cauchy products of coefficient sequences.
#pragma once

#include <functional>
#include <vector>

#include "harmonia/scalar.hpp"

namespace harmonia {

// Finitely supported doubly infinite coefficient sequence a_n, |n| <= N,
// evaluated on |z| = 1 as sum a_n z^n.
class TrigPoly {
 public:
  TrigPoly() : degree_(0), coeffs_(1, Cx(0.0, 0.0)) {}
  explicit TrigPoly(int degree) : degree_(degree), coeffs_(2 * degree + 1, Cx(0.0, 0.0)) {}

  int degree() const { return degree_; }
  Cx coeff(int n) const {
    return (n < -degree_ || n > degree_) ? Cx(0.0, 0.0) : coeffs_[n + degree_];
  }
  void set_coeff(int n, Cx value);

  Cx eval(Cx z) const;
  double coeff_l1() const;       // sum |a_n|
  double coeff_l2_sq() const;    // sum |a_n|^2

 private:
  int degree_;
  std::vector<Cx> coeffs_;  // index i holds a_{i - degree_}
};

// Values on the uniform grid exp(2 pi i k / M), k = 0..M-1.
struct SampledCircleFun {
  std::vector<Cx> values;

  std::size_t size() const { return values.size(); }
  static SampledCircleFun sample(const std::function<Cx(Cx)>& f, std::size_t M);
  static SampledCircleFun sample(const TrigPoly& f, std::size_t M);
};

// Grid point exp(2 pi i k / M), computed from the exact rational angle.
Cx circle_point(long long k, long long M);

// M-point average of f(z) conj(z)^n.  Exact for band-limited data as long as
// all frequencies of f and n itself stay below M/2; the guard 2|n| < M is
// enforced for sampled input.
Cx fourier_coeff(const SampledCircleFun& f, long long n);

// Quadrature coefficient of a trigonometric polynomial.  M = 0 picks the
// smallest exact rule, 2*max(|n|, N) + 1; an explicit M below the aliasing
// limit is rejected.
Cx fourier_coeff(const TrigPoly& f, long long n, std::size_t M = 0);

// sum_n a_n r^{|n|} z^n by direct summation; requires 0 <= r < 1 and z on
// the unit circle within 1e-9.
Cx abel_sum(const TrigPoly& a, double r, Cx z);

// (1 - r^2) / |1 - r z conj(w)|^2 for z, w on the circle, 0 <= r < 1.
double poisson_kernel(double r, Cx z, Cx w);

// M-point quadrature of the kernel average of f against P(rz, .).
Cx poisson_extension(const SampledCircleFun& f, double r, Cx z);

// Cauchy product c_n = sum_j a_j b_{n-j}, exact on finite supports.
TrigPoly convolve_sequences(const TrigPoly& a, const TrigPoly& b);

// | sum |a_n|^2  -  M-point mean of |f|^2 |, requiring M > 2N.
double parseval_gap(const TrigPoly& f, std::size_t M);

}  // namespace harmonia

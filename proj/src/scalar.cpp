#include "harmonia/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace harmonia {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Int rat_floor(const Rational& q) {
  Int quot = q.numerator() / q.denominator();
  Int rem = q.numerator() % q.denominator();
  if (rem != 0 && q.numerator() < 0) --quot;
  return quot;
}

Rational rat_mod(const Rational& q, const Rational& m) {
  if (m <= Rational(0)) throw std::domain_error("rat_mod: modulus must be positive");
  Rational r = q - Rational(rat_floor(q / m)) * m;
  if (r < Rational(0)) r += m;  // guards against q an exact multiple
  if (r >= m) r -= m;
  return r;
}

std::string rational_to_string(const Rational& q) {
  std::string s = q.numerator().str();
  if (q.denominator() != 1) s += "/" + q.denominator().str();
  return s;
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  }
}

double modulus(const Cx& z) { return std::hypot(z.real(), z.imag()); }

Cx exp_approx(const Cx& z, double tol) {
  if (!(tol > 0)) throw std::domain_error("exp_approx: tol must be positive");
  double az = modulus(z);
  if (!(az <= 64.0)) throw std::domain_error("exp_approx: |z| exceeds supported range 64");

  Cx sum(1.0, 0.0);   // j = 0 term
  Cx term(1.0, 0.0);
  double term_bound = 1.0;
  for (int j = 1; j < 4096; ++j) {
    // After terms 0..j-1 the tail is below |z|^j/j! / (1 - |z|/(j+1))
    // once j + 1 > |z|.
    term_bound *= az / j;
    double ratio = az / (j + 1);
    if (ratio < 1.0 && term_bound / (1.0 - ratio) < tol) break;
    term *= z / static_cast<double>(j);
    sum += term;
  }
  ensure_finite(sum, "exp_approx");
  return sum;
}

Cx expi_turns(const Rational& turns) {
  Rational t = rat_frac(turns);
  double angle = kTwoPi * to_double(t);
  Cx z(std::cos(angle), std::sin(angle));
  ensure_finite(z, "expi_turns");
  return z;
}

Cx root_of_unity(const Int& k, const Int& n) {
  if (n < 1) throw std::domain_error("root_of_unity: n must be >= 1");
  return expi_turns(Rational(k, n));
}

Cx root_of_unity(long long k, long long n) {
  return root_of_unity(Int(k), Int(n));
}

void ensure_finite(const Cx& z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error(std::string(where) + ": non-finite result");
}

}  // namespace harmonia

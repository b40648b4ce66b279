// Scalar layer: exact rationals over arbitrary-precision integers, complex
// doubles, and controlled evaluation of exp on the unit circle.  Everything
// downstream builds on these two number types: exactness lives in Rational,
// analysis lives in Cx.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <complex>
#include <string>

namespace harmonia {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;
using Cx = std::complex<double>;

inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline double to_double(const Rational& q) {
  return to_double(q.numerator()) / to_double(q.denominator());
}

// Floor of a rational, correct for negative values.
Int rat_floor(const Rational& q);

// q mod m reduced into [0, m).  m must be positive.
Rational rat_mod(const Rational& q, const Rational& m);

// Representative of q in [0, 1).
inline Rational rat_frac(const Rational& q) { return rat_mod(q, Rational(1)); }

// "n" or "n/d"; parse accepts both forms.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

// |z|, zero exactly when z = 0.
double modulus(const Cx& z);

// Partial sum of sum_j z^j / j! whose remainder is below tol, the cutoff
// coming from the geometric bound |z|^j / j! * (1 - |z|/(j+1))^{-1} on the
// tail.  Inputs are restricted to |z| <= 64.
Cx exp_approx(const Cx& z, double tol);

// exp(2*pi*i * t) for an exact rational number of turns t.  The angle is
// reduced mod 1 in exact arithmetic before the single float evaluation.
Cx expi_turns(const Rational& turns);

// exp(2*pi*i*k/n), n >= 1.
Cx root_of_unity(const Int& k, const Int& n);
Cx root_of_unity(long long k, long long n);

// Throws std::domain_error if z has a NaN or infinite part.
void ensure_finite(const Cx& z, const char* where);

}  // namespace harmonia

// Exact arithmetic on truncated coherent residue towers: r-adic integers at
// working precision R_L, p-adic numbers as (valuation, unit), absolute values
// driven by a decay sequence, unit inversion, Haar averages over Z_p, and the
// finite Fourier analysis of locally constant functions on Z_p and on
// windows of Q_p.
#pragma once

#include <functional>
#include <vector>

#include "harmonia/scalar.hpp"
#include "harmonia/ultra.hpp"

namespace harmonia {

// Radices r_1..r_L (each >= 2) and their partial products R_0 = 1,
// R_l = r_1 ... r_l.  The constant tower r_j = p realizes Z/p^L.
struct RadixTower {
  std::vector<long long> radices;
  std::vector<Int> partial;  // size L + 1, partial[l] = R_l

  static RadixTower of(std::vector<long long> radices);
  static RadixTower constant(long long p, int levels);

  int levels() const { return static_cast<int>(radices.size()); }
  const Int& modulus() const { return partial.back(); }  // R_L
  bool operator==(const RadixTower& o) const { return radices == o.radices; }
  bool operator!=(const RadixTower& o) const { return !(*this == o); }
};

// Residue in [0, R_L); the coherent tower below it is recovered by reduction.
struct RAdicInt {
  RadixTower tower;
  Int residue;

  // x mod R_l, the level-l member of the coherent sequence.
  Int at_level(int l) const;
};

RAdicInt radic_from_int(const RadixTower& tower, const Int& a);

RAdicInt radic_add(const RAdicInt& x, const RAdicInt& y);
RAdicInt radic_sub(const RAdicInt& x, const RAdicInt& y);
RAdicInt radic_mul(const RAdicInt& x, const RAdicInt& y);
RAdicInt radic_neg(const RAdicInt& x);

// Largest l <= L with R_l dividing the residue; L for the zero residue.
int valuation(const RAdicInt& x);

// t_{valuation(x)}, or 0 for the zero residue (truncated "l(0) = infinity").
Rational radic_abs(const RAdicInt& x, const DecaySeq& t);

// t_l = 1/R_l, the default decay for a tower.
DecaySeq default_decay(const RadixTower& tower);

// Modular inverse of the residue; requires gcd(residue, R_L) = 1 and reports
// the offending gcd otherwise.
RAdicInt invert_unit(const RAdicInt& x);

// p^v * unit with the unit a residue mod p^L prime to p; v may be negative.
// |x|_p = p^{-v}, exactly.
struct PAdicNumber {
  long long p = 2;
  int precision = 20;  // L
  bool zero = true;
  long long v = 0;
  Int unit = 1;  // in [0, p^L), not divisible by p unless zero
};

// Writes q = p^v a/b with a, b prime to p and resolves b^{-1} mod p^L.
PAdicNumber qp_normalize(long long p, const Rational& q, int precision = 20);

Rational padic_abs(const PAdicNumber& x);  // p^{-v} as an exact rational

// Element a/p^k of the group of p-power roots of unity (mod 1), reduced so
// that p does not divide a unless a = 0.
struct PrueferElement {
  long long p = 2;
  int level = 0;   // k
  Int numerator = 0;  // in [0, p^k)

  Rational value() const;  // a / p^k
};

// Fractional part of x*y in the p-power root group: the exact phase of the
// character of Z_p attached to y, evaluated at x.  Requires v(y) >= -L.
PrueferElement pairing_fraction(const PAdicNumber& y, const RAdicInt& x);

// exp(2 pi i frac(x y)); additive in x, and trivial exactly when v(y) >= 0.
Cx char_pairing(const PAdicNumber& y, const RAdicInt& x);

// Normalized Riemann sum p^{-J} sum over residues mod p^J of a level-j table
// (size p^j, J >= j required).  Values are accumulated in a canonical order,
// so the result depends only on the multiset of sampled values; translating
// the table leaves the integral bit-identical.
Cx haar_integral(const std::vector<Cx>& table, long long p, int J);

// Same Riemann sum for a callback sampled on residues mod p^J.
Cx haar_integral(const std::function<Cx(const Int&)>& f, long long p, int J);

// fhat(a/p^j) = p^{-j} sum_x f(x) exp(-2 pi i a x / p^j) over a level-j table.
std::vector<Cx> zp_fourier(const std::vector<Cx>& table, long long p);

// f(x) = sum_a fhat(a) exp(2 pi i a x / p^j); inverse of zp_fourier.
std::vector<Cx> zp_fourier_inverse(const std::vector<Cx>& coeffs, long long p);

// Transform over the window p^{-m} Z_p / p^k Z_p, indexed by t -> t/p^m for
// t = 0..p^{m+k}-1, with the self-dual normalization p^{-(m+k)/2}.  Applying
// it twice reflects the argument.
std::vector<Cx> qp_fourier(const std::vector<Cx>& table, long long p, int m, int k);

}  // namespace harmonia

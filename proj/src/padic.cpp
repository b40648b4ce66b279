#include "harmonia/padic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harmonia {

namespace {

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Extended gcd: returns g = gcd(a, b) and x with a x == g (mod b).
Int egcd_inverse_part(const Int& a, const Int& b, Int& g) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  g = old_r;
  return old_s;
}

Int pow_int(long long base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

RadixTower RadixTower::of(std::vector<long long> radices) {
  RadixTower t;
  t.radices = std::move(radices);
  t.partial.assign(1, Int(1));
  for (long long r : t.radices) {
    if (r < 2) throw std::invalid_argument("RadixTower: radices must be >= 2");
    t.partial.push_back(t.partial.back() * r);
  }
  return t;
}

RadixTower RadixTower::constant(long long p, int levels) {
  if (levels < 1) throw std::invalid_argument("RadixTower: need at least one level");
  return of(std::vector<long long>(levels, p));
}

Int RAdicInt::at_level(int l) const {
  if (l < 0 || l > tower.levels()) throw std::out_of_range("RAdicInt: level out of range");
  return residue % tower.partial[l];
}

RAdicInt radic_from_int(const RadixTower& tower, const Int& a) {
  return {tower, mod_floor(a, tower.modulus())};
}

static void require_same_tower(const RAdicInt& x, const RAdicInt& y) {
  if (x.tower != y.tower) throw std::invalid_argument("r-adic tower mismatch");
}

RAdicInt radic_add(const RAdicInt& x, const RAdicInt& y) {
  require_same_tower(x, y);
  return {x.tower, mod_floor(x.residue + y.residue, x.tower.modulus())};
}

RAdicInt radic_sub(const RAdicInt& x, const RAdicInt& y) {
  require_same_tower(x, y);
  return {x.tower, mod_floor(x.residue - y.residue, x.tower.modulus())};
}

RAdicInt radic_mul(const RAdicInt& x, const RAdicInt& y) {
  require_same_tower(x, y);
  return {x.tower, mod_floor(x.residue * y.residue, x.tower.modulus())};
}

RAdicInt radic_neg(const RAdicInt& x) {
  return {x.tower, mod_floor(-x.residue, x.tower.modulus())};
}

int valuation(const RAdicInt& x) {
  const int L = x.tower.levels();
  if (x.residue == 0) return L;
  int l = 0;
  while (l < L && x.residue % x.tower.partial[l + 1] == 0) ++l;
  return l;
}

Rational radic_abs(const RAdicInt& x, const DecaySeq& t) {
  t.validate();
  if (t.size() < static_cast<std::size_t>(x.tower.levels()) + 1)
    throw std::invalid_argument("radic_abs: decay sequence shorter than the tower");
  if (x.residue == 0) return Rational(0);
  return t.t[valuation(x)];
}

DecaySeq default_decay(const RadixTower& tower) {
  DecaySeq t;
  for (const Int& R : tower.partial) t.t.push_back(Rational(Int(1), R));
  return t;
}

RAdicInt invert_unit(const RAdicInt& x) {
  Int g;
  Int inv = egcd_inverse_part(x.residue, x.tower.modulus(), g);
  if (g != 1)
    throw std::domain_error("invert_unit: residue shares factor " + g.str() +
                            " with the modulus");
  return {x.tower, mod_floor(inv, x.tower.modulus())};
}

PAdicNumber qp_normalize(long long p, const Rational& q, int precision) {
  if (p < 2) throw std::invalid_argument("qp_normalize: p must be >= 2");
  PAdicNumber out;
  out.p = p;
  out.precision = precision;
  if (q.numerator() == 0) return out;  // the distinguished zero

  Int num = q.numerator();
  Int den = q.denominator();
  long long v = 0;
  while (num % p == 0) { num /= p; ++v; }
  while (den % p == 0) { den /= p; --v; }

  const Int modulus = pow_int(p, precision);
  Int g;
  Int den_inv = egcd_inverse_part(mod_floor(den, modulus), modulus, g);
  // den is prime to p, hence to p^L.
  out.zero = false;
  out.v = v;
  out.unit = mod_floor(mod_floor(num, modulus) * mod_floor(den_inv, modulus), modulus);
  return out;
}

Rational padic_abs(const PAdicNumber& x) {
  if (x.zero) return Rational(0);
  Int pw = 1;
  for (long long i = 0; i < std::llabs(x.v); ++i) pw *= x.p;
  return x.v >= 0 ? Rational(Int(1), pw) : Rational(pw, Int(1));
}

Rational PrueferElement::value() const {
  Int den = 1;
  for (int i = 0; i < level; ++i) den *= p;
  return Rational(numerator, den);
}

PrueferElement pairing_fraction(const PAdicNumber& y, const RAdicInt& x) {
  const long long p = y.p;
  for (long long r : x.tower.radices)
    if (r != p) throw std::invalid_argument("pairing_fraction: tower radix differs from p");

  PrueferElement out;
  out.p = p;
  if (y.zero || y.v >= 0) return out;  // x y lands in Z_p: trivial phase

  const int k = static_cast<int>(-y.v);
  if (k > x.tower.levels())
    throw std::domain_error("pairing_fraction: v(y) = " + std::to_string(y.v) +
                            " exceeds the working precision " +
                            std::to_string(x.tower.levels()));
  // frac(x y) = (unit * x mod p^k) / p^k.
  const Int pk = pow_int(p, k);
  Int a = mod_floor(y.unit * x.residue, pk);
  // Canonical form: strip common powers of p.
  int level = k;
  while (a != 0 && a % p == 0 && level > 0) { a /= p; --level; }
  if (a == 0) level = 0;
  out.level = level;
  out.numerator = a;
  return out;
}

Cx char_pairing(const PAdicNumber& y, const RAdicInt& x) {
  return expi_turns(pairing_fraction(y, x).value());
}

namespace {

// Order-canonical accumulation: the sum of a multiset of complex values,
// independent of input order.
Cx canonical_sum(std::vector<Cx> values) {
  std::sort(values.begin(), values.end(), [](const Cx& a, const Cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  Cx acc(0.0, 0.0);
  for (const auto& v : values) acc += v;
  return acc;
}

int table_level(std::size_t size, long long p) {
  int j = 0;
  Int pw = 1;
  while (pw < Int(static_cast<long long>(size))) { pw *= p; ++j; }
  if (pw != Int(static_cast<long long>(size)))
    throw std::invalid_argument("table size must be a power of p");
  return j;
}

}  // namespace

Cx haar_integral(const std::vector<Cx>& table, long long p, int J) {
  const int j = table_level(table.size(), p);
  if (J < j)
    throw std::invalid_argument("haar_integral: sampling level J below the table level");
  // Residues mod p^J hit each level-j coset with equal multiplicity p^{J-j};
  // the multiplicity is applied after an order-canonical sum so the result is
  // invariant under any permutation of the table.
  double multiplicity = 1.0, total_points = 1.0;
  for (int i = 0; i < J - j; ++i) multiplicity *= static_cast<double>(p);
  for (int i = 0; i < J; ++i) total_points *= static_cast<double>(p);
  Cx s = canonical_sum(table);
  return s * multiplicity / total_points;
}

Cx haar_integral(const std::function<Cx(const Int&)>& f, long long p, int J) {
  if (J < 0) throw std::invalid_argument("haar_integral: negative level");
  Int pJ = pow_int(p, J);
  std::vector<Cx> samples;
  for (Int r = 0; r < pJ; ++r) samples.push_back(f(r));
  double total_points = to_double(pJ);
  return canonical_sum(std::move(samples)) / total_points;
}

std::vector<Cx> zp_fourier(const std::vector<Cx>& table, long long p) {
  table_level(table.size(), p);  // shape check
  const long long n = static_cast<long long>(table.size());
  std::vector<Cx> out(table.size(), Cx(0.0, 0.0));
  for (long long a = 0; a < n; ++a) {
    Cx acc(0.0, 0.0);
    for (long long x = 0; x < n; ++x)
      acc += table[x] * expi_turns(Rational(Int(-a * x), Int(n)));
    out[a] = acc / static_cast<double>(n);
  }
  return out;
}

std::vector<Cx> zp_fourier_inverse(const std::vector<Cx>& coeffs, long long p) {
  table_level(coeffs.size(), p);  // shape check
  const long long n = static_cast<long long>(coeffs.size());
  std::vector<Cx> out(coeffs.size(), Cx(0.0, 0.0));
  for (long long x = 0; x < n; ++x) {
    Cx acc(0.0, 0.0);
    for (long long a = 0; a < n; ++a)
      acc += coeffs[a] * expi_turns(Rational(Int(a * x), Int(n)));
    out[x] = acc;
  }
  return out;
}

std::vector<Cx> qp_fourier(const std::vector<Cx>& table, long long p, int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("qp_fourier: window exponents must be >= 0");
  Int pn = pow_int(p, m + k);
  if (Int(static_cast<long long>(table.size())) != pn)
    throw std::invalid_argument("qp_fourier: table must have p^{m+k} entries");
  const long long n = static_cast<long long>(table.size());
  // Pairing of x = t/p^m with xi = s/p^k: frac(x xi) = t s / p^{m+k} mod 1.
  const double scale = std::pow(static_cast<double>(p), -0.5 * (m + k));
  std::vector<Cx> out(table.size(), Cx(0.0, 0.0));
  for (long long s = 0; s < n; ++s) {
    Cx acc(0.0, 0.0);
    for (long long t = 0; t < n; ++t)
      acc += table[t] * expi_turns(Rational(Int(-s) * Int(t), Int(n)));
    out[s] = acc * scale;
  }
  return out;
}

}  // namespace harmonia

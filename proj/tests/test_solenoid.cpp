#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harmonia/rng.hpp"
#include "harmonia/solenoid.hpp"

using namespace harmonia;

namespace {

Rational rat(long long num, long long den = 1) { return Rational(Int(num), Int(den)); }

SolenoidPoint random_point(Rng& rng, const RadixTower& tower) {
  Rational a(Int(rng.below(2000001) - 1000000), Int(1 + rng.below(997)));
  return sol_from_real(tower, a);
}

}  // namespace

TEST_CASE("image of a real number") {
  RadixTower t = RadixTower::of({2, 3});

  SolenoidPoint x = sol_from_real(t, rat(5, 4));
  x.validate();
  CHECK(x.angles == std::vector<Rational>{rat(1, 4), rat(5, 4), rat(5, 4)});

  SolenoidPoint zero = sol_from_real(t, rat(0));
  for (const auto& a : zero.angles) CHECK(a == rat(0));

  SolenoidPoint seven = sol_from_real(t, rat(7));
  CHECK(seven.angles == std::vector<Rational>{rat(0), rat(1), rat(1)});
}

TEST_CASE("group law preserves coherence exactly") {
  RadixTower t = RadixTower::of({2, 3});

  SolenoidPoint a = sol_from_real(t, rat(5, 4));
  SolenoidPoint b = sol_from_real(t, rat(3, 4));
  SolenoidPoint s = sol_add(a, b);
  s.validate();
  CHECK(s.angles[0] == rat(0));  // 1/4 + 3/4 mod 1
  CHECK(s.angles[1] == rat(0));  // 5/4 + 3/4 = 2 mod 2

  Rng rng(81);
  RadixTower big = RadixTower::of({2, 3, 4, 5});
  for (int i = 0; i < 100; ++i) {
    SolenoidPoint x = random_point(rng, big);
    SolenoidPoint y = random_point(rng, big);
    SolenoidPoint z = random_point(rng, big);

    SolenoidPoint sum = sol_add(x, y);
    sum.validate();
    CHECK(sol_add(x, sol_neg(x)).angles == sol_from_real(big, rat(0)).angles);
    // associativity, exact rational arithmetic
    CHECK(sol_add(sol_add(x, y), z).angles == sol_add(x, sol_add(y, z)).angles);
    // additivity of the real embedding
    Rational u(Int(rng.below(10000)), Int(1 + rng.below(97)));
    Rational v(Int(rng.below(10000)), Int(1 + rng.below(97)));
    CHECK(sol_add(sol_from_real(big, u), sol_from_real(big, v)).angles ==
          sol_from_real(big, u + v).angles);
  }

  CHECK_THROWS_AS(sol_add(a, random_point(rng, big)), std::invalid_argument);
}

TEST_CASE("projections of the real embedding reduce mod R_k") {
  Rng rng(82);
  RadixTower t = RadixTower::of({3, 4, 5});
  for (int i = 0; i < 200; ++i) {
    Rational a(Int(rng.below(2000001) - 1000000), Int(1 + rng.below(997)));
    SolenoidPoint x = sol_from_real(t, a);
    for (int l = 0; l <= t.levels(); ++l)
      CHECK(x.angles[l] == rat_mod(a, Rational(t.partial[l])));
  }
}

TEST_CASE("embedding of the r-adic fiber") {
  RadixTower t = RadixTower::of({2, 3});
  SolenoidPoint e5 = zr_embed(radic_from_int(t, 5));
  e5.validate();
  CHECK(e5.angles == std::vector<Rational>{rat(0), rat(1), rat(5)});

  SolenoidPoint e0 = zr_embed(radic_from_int(t, 0));
  for (const auto& a : e0.angles) CHECK(a == rat(0));

  Rng rng(83);
  RadixTower big = RadixTower::of({2, 3, 4, 5});
  for (int i = 0; i < 100; ++i) {
    Int a = rng.below(1000000007LL), b = rng.below(1000000007LL);
    RAdicInt xa = radic_from_int(big, a), xb = radic_from_int(big, b);
    CHECK(zr_embed(radic_add(xa, xb)).angles == sol_add(zr_embed(xa), zr_embed(xb)).angles);
    CHECK(zr_embed(xa).angles[0] == rat(0));  // the fiber over angle zero
  }
}

TEST_CASE("character evaluation") {
  RadixTower t = RadixTower::of({2, 3});

  // a/R_k = 1/2 at the level-1 angle 3/2: exp(3 pi i / 2) = -i
  SolenoidPoint x = sol_from_real(t, rat(3, 2));
  SolenoidChar chi{t, 1, 1};
  CHECK(modulus(sol_char_eval(chi, x) - Cx(0, -1)) < 1e-15);

  SolenoidChar trivial{t, 2, 0};
  Rng rng(84);
  for (int i = 0; i < 20; ++i)
    CHECK(sol_char_eval(trivial, random_point(rng, t)) == Cx(1, 0));

  SolenoidChar too_deep{t, 7, 1};
  CHECK_THROWS_AS(sol_char_eval(too_deep, x), std::domain_error);
}

TEST_CASE("characters are homomorphisms and depend only on their level") {
  Rng rng(85);
  RadixTower t = RadixTower::of({2, 3, 4, 5});
  for (int i = 0; i < 500; ++i) {
    int level = static_cast<int>(rng.below(t.levels() + 1));
    SolenoidChar chi{t, level, Int(rng.below(1 + t.partial[level].convert_to<long long>()))};
    SolenoidPoint x = random_point(rng, t);
    SolenoidPoint y = random_point(rng, t);
    CHECK(modulus(sol_char_eval(chi, sol_add(x, y)) -
                  sol_char_eval(chi, x) * sol_char_eval(chi, y)) < 1e-10);

    // forgetting the higher levels does not change the value
    CHECK(sol_char_turns(chi, x) ==
          rat_frac(Rational(chi.numerator) * x.angles[level] / Rational(t.partial[level])));
  }
}

TEST_CASE("equal characters at different levels") {
  RadixTower t = RadixTower::of({2, 3, 4});
  SolenoidChar low{t, 1, 1};    // 1/2
  SolenoidChar high{t, 3, 12};  // 12/24 = 1/2
  CHECK(low.value() == high.value());
  Rng rng(86);
  for (int i = 0; i < 50; ++i) {
    SolenoidPoint x = random_point(rng, t);
    CHECK(modulus(sol_char_eval(low, x) - sol_char_eval(high, x)) < 1e-12);
  }
}

TEST_CASE("character kernel on the embedded fiber") {
  RadixTower t = RadixTower::of({2, 3, 4});
  const int k = 2;  // R_2 = 6
  Rng rng(87);
  for (int i = 0; i < 200; ++i) {
    Int a = rng.below(6);
    Int u = rng.below(1000000);
    SolenoidChar chi{t, k, a};
    Cx value = sol_char_eval(chi, zr_embed(radic_from_int(t, u)));
    if (a * u % 6 == 0)
      CHECK(value == Cx(1, 0));  // exact kernel membership
    else
      CHECK(modulus(value - Cx(1, 0)) > 1e-6);
  }
}

TEST_CASE("restriction to the fiber matches the p-adic pairing") {
  Rng rng(88);
  RadixTower t3 = RadixTower::constant(3, 6);
  for (int i = 0; i < 50; ++i) {
    int k = 1 + static_cast<int>(rng.below(6));
    Int pk = t3.partial[k];
    Int a = rng.below(pk.convert_to<long long>());
    RAdicInt u = radic_from_int(t3, rng.below(1000000007LL));

    SolenoidChar chi{t3, k, a};
    PAdicNumber y = qp_normalize(3, Rational(a, pk), 6);
    CHECK(modulus(sol_char_eval(chi, zr_embed(u)) - char_pairing(y, u)) < 1e-12);
  }
}

TEST_CASE("monte carlo orthogonality of distinct characters at a level") {
  Rng rng(89);
  RadixTower t = RadixTower::of({2, 3, 4});
  SolenoidChar chi{t, 2, 1};
  SolenoidChar psi{t, 2, 4};
  Cx acc(0, 0);
  const int M = 10000;
  const double level_size = 6.0;  // R_2
  for (int i = 0; i < M; ++i) {
    SolenoidPoint x = sol_from_real(t, Rational(Int(rng.below(6000000)), Int(1000000)));
    acc += sol_char_eval(chi, x) * std::conj(sol_char_eval(psi, x));
  }
  CHECK(modulus(acc) / (level_size * M) < 1e-2);

  // exact version through the finite level-2 quotient
  Cx exact(0, 0);
  for (long long r = 0; r < 6; ++r) {
    SolenoidPoint x = sol_from_real(t, rat(r));
    exact += sol_char_eval(chi, x) * std::conj(sol_char_eval(psi, x));
  }
  CHECK(modulus(exact) / 6.0 < 1e-10);
}

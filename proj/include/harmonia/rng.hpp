// Seeded random source shared by the stochastic verifications and the CLI.
// Doubles are derived from raw mt19937_64 output rather than the standard
// distributions so that a seed reproduces identical streams on any platform.
#pragma once

#include <cstdint>
#include <random>

#include "harmonia/scalar.hpp"

namespace harmonia {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  long long below(long long n) {
    return static_cast<long long>(eng_() % static_cast<std::uint64_t>(n));
  }

  // Uniform on the square [-1,1]^2.
  Cx box() { return Cx(uniform(-1.0, 1.0), uniform(-1.0, 1.0)); }

  // Uniform on the closed unit disk, by rejection.
  Cx unit_disk() {
    for (;;) {
      Cx z = box();
      if (std::norm(z) <= 1.0) return z;
    }
  }

  // A point of the unit circle.
  Cx on_circle() {
    return expi_turns(Rational(Int(below(1'000'000'007LL)), Int(1'000'000'007LL)));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace harmonia

#include "harmonia/solenoid.hpp"

#include <stdexcept>

namespace harmonia {

void SolenoidPoint::validate() const {
  const int L = tower.levels();
  if (angles.size() != static_cast<std::size_t>(L) + 1)
    throw std::invalid_argument("SolenoidPoint: need one angle per level 0..L");
  for (int l = 0; l <= L; ++l) {
    Rational R(tower.partial[l]);
    if (angles[l] < Rational(0) || angles[l] >= R)
      throw std::invalid_argument("SolenoidPoint: angle at level " + std::to_string(l) +
                                  " outside [0, R_l)");
  }
  for (int l = 0; l + 1 <= L; ++l) {
    // Exact coherence: x_{l+1} - x_l must be an integer multiple of R_l.
    Rational diff = angles[l + 1] - angles[l];
    Rational q = diff / Rational(tower.partial[l]);
    if (q.denominator() != 1)
      throw std::invalid_argument("SolenoidPoint: incoherent angles at level " +
                                  std::to_string(l));
  }
}

SolenoidPoint sol_from_real(const RadixTower& tower, const Rational& a) {
  SolenoidPoint x;
  x.tower = tower;
  for (int l = 0; l <= tower.levels(); ++l)
    x.angles.push_back(rat_mod(a, Rational(tower.partial[l])));
  return x;
}

SolenoidPoint sol_add(const SolenoidPoint& x, const SolenoidPoint& y) {
  if (x.tower != y.tower) throw std::invalid_argument("sol_add: tower mismatch");
  SolenoidPoint z;
  z.tower = x.tower;
  for (int l = 0; l <= x.tower.levels(); ++l)
    z.angles.push_back(rat_mod(x.angles[l] + y.angles[l], Rational(x.tower.partial[l])));
  return z;
}

SolenoidPoint sol_neg(const SolenoidPoint& x) {
  SolenoidPoint z;
  z.tower = x.tower;
  for (int l = 0; l <= x.tower.levels(); ++l)
    z.angles.push_back(rat_mod(-x.angles[l], Rational(x.tower.partial[l])));
  return z;
}

SolenoidPoint zr_embed(const RAdicInt& u) {
  SolenoidPoint x;
  x.tower = u.tower;
  for (int l = 0; l <= u.tower.levels(); ++l) x.angles.push_back(Rational(u.at_level(l)));
  return x;
}

Rational SolenoidChar::value() const { return Rational(numerator, tower.partial[level]); }

Rational sol_char_turns(const SolenoidChar& chi, const SolenoidPoint& x) {
  if (chi.tower != x.tower) throw std::invalid_argument("sol_char: tower mismatch");
  if (chi.level < 0 || chi.level > x.tower.levels())
    throw std::domain_error("sol_char: level exceeds the working precision");
  // a * x_k / R_k, reduced mod 1; only the level-k angle enters.
  return rat_frac(Rational(chi.numerator) * x.angles[chi.level] /
                  Rational(chi.tower.partial[chi.level]));
}

Cx sol_char_eval(const SolenoidChar& chi, const SolenoidPoint& x) {
  return expi_turns(sol_char_turns(chi, x));
}

}  // namespace harmonia

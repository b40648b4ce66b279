// Inverse limits of circles R/R_l Z along a radix tower: coherent towers of
// exact rational angles, the group law, the homomorphic image of the reals,
// the embedded r-adic fiber over angle zero, and characters a/R_k that read
// the level-k angle.
#pragma once

#include <vector>

#include "harmonia/padic.hpp"
#include "harmonia/scalar.hpp"

namespace harmonia {

// Angles x_0..x_L with x_l in [0, R_l); coherence x_{l+1} == x_l (mod R_l)
// holds exactly and is preserved by every exported operation.
struct SolenoidPoint {
  RadixTower tower;
  std::vector<Rational> angles;  // size levels + 1

  void validate() const;  // shape, ranges, exact coherence
};

// x_l = a mod R_l; a group homomorphism in a.
SolenoidPoint sol_from_real(const RadixTower& tower, const Rational& a);

SolenoidPoint sol_add(const SolenoidPoint& x, const SolenoidPoint& y);
SolenoidPoint sol_neg(const SolenoidPoint& x);

// Integer angles (u mod R_l) over the fiber x_0 = 0.
SolenoidPoint zr_embed(const RAdicInt& u);

// The character x -> exp(2 pi i a x_k / R_k); equal characters at different
// levels compare equal as the rational a / R_k.
struct SolenoidChar {
  RadixTower tower;
  int level = 0;   // k
  Int numerator = 0;  // a in [0, R_k)

  Rational value() const;  // a / R_k
};

Rational sol_char_turns(const SolenoidChar& chi, const SolenoidPoint& x);
Cx sol_char_eval(const SolenoidChar& chi, const SolenoidPoint& x);

}  // namespace harmonia

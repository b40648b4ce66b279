// Harmonic analysis on finite abelian groups presented as products of cyclic
// factors: characters with exact rational phase, the transform and its
// inverse under both Haar normalizations, convolution of functions and of
// finitely supported measures, translation and involution, diagonalization
// of convolution operators, annihilators, the second dual, and density of
// integer orbits on the circle.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "harmonia/scalar.hpp"

namespace harmonia {

class FiniteAbelianGroup {
 public:
  using Elem = std::vector<long long>;

  explicit FiniteAbelianGroup(std::vector<long long> moduli);

  const std::vector<long long>& moduli() const { return moduli_; }
  long long order() const { return order_; }
  std::size_t rank() const { return moduli_.size(); }

  // Elements are exponent tuples, enumerated lexicographically with the first
  // coordinate most significant.
  long long index_of(const Elem& x) const;
  Elem element(long long index) const;

  Elem zero() const { return Elem(rank(), 0); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;

  bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }
  bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

 private:
  std::vector<long long> moduli_;
  long long order_;
};

// Character indexed by an exponent tuple b: x -> exp(2 pi i sum x_k b_k / n_k).
struct GroupChar {
  FiniteAbelianGroup group;
  FiniteAbelianGroup::Elem exponents;
};

// Exact number of turns sum_k x_k b_k / n_k mod 1; the one float is the exp.
Rational char_turns(const GroupChar& chi, const FiniteAbelianGroup::Elem& x);
Cx char_eval(const GroupChar& chi, const FiniteAbelianGroup::Elem& x);

enum class Haar { Counting, Normalized };

// Complex table over the group, with the Haar convention it integrates
// against: counting measure gives each point mass 1, the normalized choice
// mass 1/|A|.
struct GroupFun {
  FiniteAbelianGroup group;
  std::vector<Cx> values;  // lexicographic element order
  Haar haar = Haar::Counting;

  static GroupFun zero(const FiniteAbelianGroup& g, Haar haar = Haar::Counting);
  static GroupFun delta(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Elem& at,
                        Haar haar = Haar::Counting);
  void validate() const;
};

// Finitely supported complex measure: one mass per point, no Haar convention.
struct GroupMeasure {
  FiniteAbelianGroup group;
  std::vector<Cx> mass;

  static GroupMeasure delta(const FiniteAbelianGroup& g, const FiniteAbelianGroup::Elem& at);
};

double haar_weight(const GroupFun& f);  // 1 or 1/|A|
double l1_norm(const GroupFun& f);
double l2_norm(const GroupFun& f);
double linf_norm(const GroupFun& f);
double total_variation(const GroupMeasure& mu);

// The character table of f as the lex-ordered vector over exponent tuples b:
// fhat[b] = sum_x f(x) conj(chi_b(x)) * weight.  Direct O(|A|^2) sum.
std::vector<Cx> dft(const GroupFun& f);

// Same transform through one mixed-radix Cooley-Tukey pass per cyclic factor.
std::vector<Cx> dft_fast(const GroupFun& f);

// Inverse with the dual normalization of the chosen Haar convention, so that
// idft(dft(f)) = f.
GroupFun idft(const FiniteAbelianGroup& g, const std::vector<Cx>& fhat, Haar haar);

// (f * g)(x) = sum_y f(x - y) g(y) * weight; same group and Haar required.
GroupFun convolve(const GroupFun& f, const GroupFun& g);
GroupMeasure convolve(const GroupMeasure& mu, const GroupMeasure& nu);

// muhat[b] = sum_x conj(chi_b(x)) mu({x})
std::vector<Cx> measure_transform(const GroupMeasure& mu);

GroupFun translate(const GroupFun& f, const FiniteAbelianGroup::Elem& a);

// x -> conj(f(-x)); its transform is the conjugate transform of f.
GroupFun involution(const GroupFun& f);

// The character chi as a counting-measure GroupFun.
GroupFun char_fun(const GroupChar& chi);

struct ConvEigenPair {
  Cx eigenvalue;      // thetahat(chi)
  GroupChar chi;
  double defect;      // || theta * chi - eigenvalue * chi ||_inf
};

// Every character is an eigenfunction of convolution by theta; returns the
// full eigensystem in lex character order.  Requires counting Haar.
std::vector<ConvEigenPair> conv_operator_spectrum(const GroupFun& theta);

// Closure of the given generators under the group operation.
std::vector<FiniteAbelianGroup::Elem> subgroup_closure(
    const FiniteAbelianGroup& g, const std::vector<FiniteAbelianGroup::Elem>& generators);

// Characters trivial on the subgroup generated by `generators`; exactly
// |A| / |H| of them, verified before returning.
std::vector<GroupChar> annihilator(const FiniteAbelianGroup& g,
                                   const std::vector<FiniteAbelianGroup::Elem>& generators);

// Checks that a -> (evaluation at a) is a bijection from the group onto the
// characters of its character group, matching exponent tuples.  Returns a
// colliding pair on failure, or nothing on pass.
std::optional<std::pair<FiniteAbelianGroup::Elem, FiniteAbelianGroup::Elem>>
second_dual_check(const FiniteAbelianGroup& g);

struct OrbitReport {
  bool dense = false;
  double max_gap = 1.0;     // largest circular gap between consecutive orbit points
  double gap_center = 0.0;  // a point of [0,1) at maximal distance from the orbit
};

// Whether {j * angle mod 1 : 0 <= j < max_iter} meshes [0, 1) below epsilon.
// The rational case is resolved by exact gap analysis (gap 1/q once the full
// cycle is reached); otherwise the orbit is sorted numerically.
OrbitReport orbit_density(const Rational& angle, double epsilon, long long max_iter);
OrbitReport orbit_density(double angle, double epsilon, long long max_iter);

}  // namespace harmonia

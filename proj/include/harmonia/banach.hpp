// Commutative Banach-algebra computations on l1 of a finite abelian group
// under convolution (identity delta_0), plus a small dense complex matrix
// layer for operator norms, the C*-identity gap, and singularity checks.
#pragma once

#include <vector>

#include "harmonia/group.hpp"
#include "harmonia/rng.hpp"
#include "harmonia/scalar.hpp"

namespace harmonia {

// Partial sum of sum_j a^{*j} with geometric tail below tol; inverts
// delta_0 - a when ||a||_1 < 1.  The l1 norm uses counting Haar.
GroupFun neumann_inverse(const GroupFun& a, double tol);

struct SpectralRadiusSeq {
  std::vector<double> roots;  // ||x^{*k}||_1^{1/k}, k = 1..k_max
  double estimate;            // min over k
};

SpectralRadiusSeq spectral_radius_seq(const GroupFun& x, int k_max);

// sigma(x) = { xhat(chi) : chi in the character group }: every multiplicative
// functional on the algebra is evaluation of the transform at a character.
std::vector<Cx> spectrum_via_characters(const GroupFun& x);

// Scaled determinant of the convolution operator of lambda*delta_0 - x; near
// zero exactly when lambda sits in the spectrum.
double conv_singularity_defect(const GroupFun& x, Cx lambda);

struct HomCheck {
  GroupChar chi;
  double mult_defect;    // max |Phi(f*g) - Phi(f) Phi(g)| over sampled pairs
  double bound_excess;   // max(|Phi(f)| - ||f||_1, 0) over samples
};

// All |A| multiplicative functionals f -> fhat(chi), each verified
// multiplicative and norm-bounded on `pairs` random pairs.
std::vector<HomCheck> homs_l1(const FiniteAbelianGroup& g, Rng& rng, int pairs = 50);

// Dense square complex matrix, row-major.
struct CxMatrix {
  std::size_t n = 0;
  std::vector<Cx> e;

  static CxMatrix zero(std::size_t n) { return {n, std::vector<Cx>(n * n, Cx(0, 0))}; }
  static CxMatrix identity(std::size_t n);
  Cx& at(std::size_t i, std::size_t j) { return e[i * n + j]; }
  const Cx& at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
};

CxMatrix multiply(const CxMatrix& a, const CxMatrix& b);
CxMatrix adjoint(const CxMatrix& a);
CxMatrix subtract(const CxMatrix& a, const CxMatrix& b);

// Gauss-Jordan inverse with partial pivoting; throws on singular input.
CxMatrix inverse(const CxMatrix& a);

// |det| of the matrix after normalizing each row by its largest entry, so a
// nearly dependent row registers near zero regardless of scale.
double scaled_abs_det(const CxMatrix& a);

// Largest singular value via power iteration on A* A: at most `iters`
// Rayleigh steps, stopping early at relative tolerance rel_tol.  A bounded
// iterative oracle, not an exact value.
double op_norm(const CxMatrix& a, int iters = 500, double rel_tol = 1e-12);

// | ||T* T||_op - ||T||_op^2 |, the two sides computed by independent
// power-iteration runs.
double cstar_gap(const CxMatrix& t);

// Matrix of the operator g -> x * g on functions in lex element order.
CxMatrix conv_matrix(const GroupFun& x);

}  // namespace harmonia

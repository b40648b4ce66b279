#include "harmonia/acceptance.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>

#include "harmonia/banach.hpp"
#include "harmonia/circle.hpp"
#include "harmonia/group.hpp"
#include "harmonia/hilbert.hpp"
#include "harmonia/padic.hpp"
#include "harmonia/rng.hpp"
#include "harmonia/solenoid.hpp"
#include "harmonia/ultra.hpp"

namespace harmonia {

namespace {

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

TrigPoly random_trig_poly(Rng& rng, int degree) {
  TrigPoly f(degree);
  for (int n = -degree; n <= degree; ++n) f.set_coeff(n, rng.unit_disk());
  return f;
}

GroupFun random_group_fun(Rng& rng, const FiniteAbelianGroup& g) {
  GroupFun f = GroupFun::zero(g);
  for (auto& v : f.values) v = rng.unit_disk();
  return f;
}

CriterionResult parseval_criterion(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    int degree = 1 + static_cast<int>(rng.below(16));
    worst = std::max(worst, parseval_gap(random_trig_poly(rng, degree), 64));
  }
  return {1, "parseval-on-T", worst < 1e-9, sci(worst), "1e-9",
          "100 random coefficient sequences, degree <= 16, 64 samples"};
}

CriterionResult poisson_normalization_criterion(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t M = 4096;
  Cx z = rng.on_circle();
  double worst_mean = 0.0;
  bool nonneg = true;
  for (double r : {0.0, 0.5, 0.9, 0.99}) {
    double mean = 0.0;
    for (std::size_t k = 0; k < M; ++k) {
      double P = poisson_kernel(r, z, circle_point(static_cast<long long>(k), M));
      if (P < 0.0) nonneg = false;
      mean += P;
    }
    mean /= static_cast<double>(M);
    worst_mean = std::max(worst_mean, std::abs(mean - 1.0));
  }
  bool pass = worst_mean < 1e-6 && nonneg;
  return {2, "poisson-normalization", pass, sci(worst_mean), "1e-6",
          nonneg ? "kernel nonnegative at every sample" : "negative kernel value seen"};
}

CriterionResult abel_closed_form_criterion(std::uint64_t) {
  TrigPoly a(200);
  Cx ipow(1.0, 0.0);
  const Cx i(0.0, 1.0);
  for (int j = 0; j <= 200; ++j) {
    a.set_coeff(j, ipow);
    ipow *= i;
  }
  const double r = 0.999;
  Cx direct = abel_sum(a, r, Cx(1.0, 0.0));
  Cx closed = Cx(1.0, 0.0) / (Cx(1.0, 0.0) - r * i);
  double diff = modulus(direct - closed);
  return {3, "abel-closed-form", diff < 1e-10, sci(diff), "1e-10",
          "truncation tail r^201/|1-ri| = " + sci(std::pow(r, 201) / modulus(Cx(1.0, 0.0) - r * i))};
}

CriterionResult abel_kernel_agreement_criterion(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t M = 256;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    TrigPoly f = random_trig_poly(rng, 1 + static_cast<int>(rng.below(8)));
    SampledCircleFun samples = SampledCircleFun::sample(f, M);
    for (double r : {0.5, 0.9})
      for (int k = 0; k < 16; ++k) {
        Cx z = circle_point(k, 16);
        worst = std::max(worst, modulus(abel_sum(f, r, z) - poisson_extension(samples, r, z)));
      }
  }
  return {4, "abel-kernel-agreement", worst < 1e-8, sci(worst), "1e-8",
          "100 band-limited functions, 16 test points, r in {0.5, 0.9}"};
}

CriterionResult convolution_theorem_criterion(std::uint64_t seed) {
  Rng rng(seed);
  FiniteAbelianGroup g({8, 5});
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    GroupFun f = random_group_fun(rng, g);
    GroupFun h = random_group_fun(rng, g);
    auto fhat = dft(f);
    auto hhat = dft(h);
    auto cvhat = dft(convolve(f, h));
    for (long long b = 0; b < g.order(); ++b)
      worst = std::max(worst, modulus(cvhat[b] - fhat[b] * hhat[b]));
  }
  return {5, "convolution-theorem", worst < 1e-9, sci(worst), "1e-9",
          "20 random pairs on Z/8 x Z/5"};
}

CriterionResult orthogonality_criterion(std::uint64_t) {
  double worst = 0.0;
  for (const auto& moduli : {std::vector<long long>{12}, std::vector<long long>{2, 2, 3}}) {
    FiniteAbelianGroup g(moduli);
    const long long N = g.order();
    std::vector<GroupFun> chars;
    for (long long b = 0; b < N; ++b) chars.push_back(char_fun({g, g.element(b)}));
    for (long long b1 = 0; b1 < N; ++b1)
      for (long long b2 = 0; b2 < N; ++b2) {
        Cx acc(0.0, 0.0);
        for (long long x = 0; x < N; ++x)
          acc += chars[b1].values[x] * std::conj(chars[b2].values[x]);
        Cx expected = (b1 == b2) ? Cx(static_cast<double>(N), 0.0) : Cx(0.0, 0.0);
        worst = std::max(worst, modulus(acc - expected) / static_cast<double>(N));
      }
  }
  return {6, "character-orthogonality", worst < 1e-9, sci(worst), "1e-9 * |A|",
          "all character pairs on Z/12 and Z/2 x Z/2 x Z/3"};
}

CriterionResult spectral_radius_criterion(std::uint64_t seed) {
  Rng rng(seed);
  FiniteAbelianGroup g({16});
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    GroupFun theta = random_group_fun(rng, g);
    auto seq = spectral_radius_seq(theta, 64);
    double spectrum_max = 0.0;
    for (const auto& lambda : dft(theta)) spectrum_max = std::max(spectrum_max, modulus(lambda));
    worst = std::max(worst, std::abs(seq.estimate - spectrum_max) / spectrum_max);
  }
  return {7, "spectral-radius", worst < 0.05, sci(worst), "5e-2",
          "20 random elements on Z/16, k <= 64"};
}

CriterionResult neumann_criterion(std::uint64_t seed) {
  Rng rng(seed);
  FiniteAbelianGroup g({8});
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    GroupFun a = random_group_fun(rng, g);
    double scale = 0.9 / l1_norm(a);
    for (auto& v : a.values) v *= scale;
    GroupFun inv = neumann_inverse(a, 5e-10);
    GroupFun e_minus_a = GroupFun::delta(g, g.zero());
    for (long long i = 0; i < g.order(); ++i) e_minus_a.values[i] -= a.values[i];
    GroupFun resid = convolve(e_minus_a, inv);
    resid.values[0] -= 1.0;
    worst = std::max(worst, l1_norm(resid));
  }
  return {8, "neumann-inversion", worst < 1e-9, sci(worst), "1e-9",
          "20 random elements with ||a||_1 = 0.9 on Z/8, tol 5e-10"};
}

CriterionResult homomorphism_criterion(std::uint64_t seed) {
  Rng rng(seed);
  FiniteAbelianGroup g({6});
  auto homs = homs_l1(g, rng, 50);
  double worst_mult = 0.0, worst_excess = 0.0;
  for (const auto& h : homs) {
    worst_mult = std::max(worst_mult, h.mult_defect);
    worst_excess = std::max(worst_excess, h.bound_excess);
  }
  bool pass = homs.size() == 6 && worst_mult < 1e-9 && worst_excess <= 1e-12;
  return {9, "homomorphism-completeness", pass, sci(std::max(worst_mult, worst_excess)),
          "1e-9 (mult), 1e-12 (bound)",
          std::to_string(homs.size()) + " functionals on Z/6, 50 random pairs each"};
}

CriterionResult cstar_criterion(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    CxMatrix m = CxMatrix::zero(8);
    for (auto& v : m.e) v = rng.unit_disk();
    double nt = op_norm(m);
    worst = std::max(worst, cstar_gap(m) / (nt * nt));
  }
  return {10, "cstar-identity", worst < 1e-8, sci(worst), "1e-8 * ||T||^2",
          "50 random 8x8 complex matrices"};
}

CriterionResult padic_laws_criterion(std::uint64_t seed) {
  Rng rng(seed);
  RadixTower t3 = RadixTower::constant(3, 20);
  DecaySeq decay = default_decay(t3);
  const Int modulus = t3.modulus();
  long long failures = 0;
  auto random_residue = [&]() {
    Int r = 0;
    for (int i = 0; i < 3; ++i) r = r * 1000000007LL + rng.below(1000000007LL);
    return radic_from_int(t3, r);
  };
  for (int t = 0; t < 1000; ++t) {
    RAdicInt x = random_residue();
    RAdicInt y = random_residue();
    Rational ax = radic_abs(x, decay), ay = radic_abs(y, decay);
    Rational as = radic_abs(radic_add(x, y), decay);
    if (as > std::max(ax, ay)) ++failures;                       // ultrametric law
    if (ax != ay && as != std::max(ax, ay)) ++failures;          // equality case
    RAdicInt prod = radic_mul(x, y);
    if (valuation(x) + valuation(y) < t3.levels()) {
      if (radic_abs(prod, decay) != ax * ay) ++failures;         // multiplicativity
    } else if (prod.residue % t3.partial[t3.levels()] != 0 && prod.residue != 0) {
      // beyond working precision the product must collapse to residue 0
      ++failures;
    }
  }
  // geometric series: (1 - 3l) sum_{j<20} (3l)^j == 1 - (3l)^20 == 1 mod 3^20
  for (int t = 0; t < 50; ++t) {
    Int l = rng.below(1000000007LL);
    Int q = 3 * l;
    Int series = 0, power = 1;
    for (int j = 0; j < 20; ++j) {
      series = (series + power) % modulus;
      power = (power * q) % modulus;
    }
    if (((1 - q) * series % modulus + modulus) % modulus != 1) ++failures;
    RAdicInt u = radic_from_int(t3, 1 - q);
    if (invert_unit(u).residue != series) ++failures;
  }
  return {11, "padic-exact-laws", failures == 0, std::to_string(failures), "0 failures",
          "1000 random pairs mod 3^20, exact; geometric inversion identity"};
}

CriterionResult unit_inversion_criterion(std::uint64_t seed) {
  Rng rng(seed);
  long long failures = 0;
  for (long long p : {2LL, 3LL, 5LL}) {
    RadixTower t = RadixTower::constant(p, 20);
    for (int i = 0; i < 500; ++i) {
      Int r = 0;
      for (int k = 0; k < 3; ++k) r = r * 1000000007LL + rng.below(1000000007LL);
      if (r % p == 0) r += 1;
      RAdicInt x = radic_from_int(t, r);
      if (radic_mul(x, invert_unit(x)).residue != 1) ++failures;
    }
  }
  return {12, "unit-inversion", failures == 0, std::to_string(failures), "0 failures",
          "500 random units mod p^20 for p in {2, 3, 5}"};
}

CriterionResult haar_ball_criterion(std::uint64_t seed) {
  Rng rng(seed);
  long long failures = 0;
  for (long long p : {2LL, 3LL}) {
    for (int j = 1; j <= 6; ++j) {
      long long pj = 1;
      for (int i = 0; i < j; ++i) pj *= p;
      double expected = 1.0 / static_cast<double>(pj);
      for (long long a = 0; a < pj; ++a) {  // every center
        std::vector<Cx> ball(pj, Cx(0.0, 0.0));
        ball[a] = Cx(1.0, 0.0);
        if (haar_integral(ball, p, j) != Cx(expected, 0.0)) ++failures;
        if (haar_integral(ball, p, j + 2) != Cx(expected, 0.0)) ++failures;
      }
    }
  }
  // translation invariance of level-J sums, exact, on random tables
  const long long p = 3;
  const int J = 5;
  const long long pj = 27;  // level-3 tables
  for (int t = 0; t < 20; ++t) {
    std::vector<Cx> table(pj);
    for (auto& v : table) v = rng.unit_disk();
    Cx base = haar_integral(table, p, J);
    for (long long a = 0; a < pj; ++a) {
      std::vector<Cx> shifted(pj);
      for (long long x = 0; x < pj; ++x) shifted[x] = table[(x + a) % pj];
      if (haar_integral(shifted, p, J) != base) ++failures;
    }
  }
  return {13, "haar-ball-measures", failures == 0, std::to_string(failures), "0 failures",
          "balls p^{-j} for j <= 6, all centers; exact translation invariance"};
}

CriterionResult zp_fourier_criterion(std::uint64_t seed) {
  Rng rng(seed);
  const long long p = 3;
  const std::size_t n = 27;  // level 3
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    std::vector<Cx> table(n);
    for (auto& v : table) v = rng.unit_disk();
    auto back = zp_fourier_inverse(zp_fourier(table, p), p);
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, modulus(back[i] - table[i]));
  }
  return {14, "zp-fourier-inversion", worst < 1e-10, sci(worst), "1e-10",
          "20 random level-3 tables at p = 3"};
}

CriterionResult qp_duality_criterion(std::uint64_t seed) {
  Rng rng(seed);
  const long long p = 2;
  double worst = 0.0;
  {
    const int m = 2, k = 2;
    const std::size_t n = 16;
    for (int t = 0; t < 20; ++t) {
      std::vector<Cx> table(n);
      for (auto& v : table) v = rng.unit_disk();
      auto twice = qp_fourier(qp_fourier(table, p, m, k), p, k, m);
      for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, modulus(twice[i] - table[(n - i) % n]));
    }
  }
  double fixed_point = 0.0;
  {
    const int m = 1, k = 1;
    std::vector<Cx> zp_indicator(4, Cx(0.0, 0.0));
    zp_indicator[0] = zp_indicator[2] = Cx(1.0, 0.0);  // t/2 integral iff t even
    auto out = qp_fourier(zp_indicator, p, m, k);
    for (std::size_t i = 0; i < 4; ++i)
      fixed_point = std::max(fixed_point, modulus(out[i] - zp_indicator[i]));
  }
  bool pass = worst < 1e-9 && fixed_point < 1e-10;
  return {15, "qp-self-duality", pass, sci(std::max(worst, fixed_point)),
          "1e-9 (reflection), 1e-10 (fixed point)",
          "window (2,2) double transform; Z_p indicator in window (1,1)"};
}

CriterionResult solenoid_criterion(std::uint64_t seed) {
  Rng rng(seed);
  RadixTower tower = RadixTower::of({2, 3, 4, 5});
  long long incoherent = 0;
  auto random_point = [&]() {
    Rational a(Int(rng.below(2000001) - 1000000), Int(1 + rng.below(997)));
    return sol_from_real(tower, a);
  };
  std::vector<SolenoidPoint> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_point());
  for (int t = 0; t < 1000; ++t) {
    const auto& x = pool[rng.below(64)];
    const auto& y = pool[rng.below(64)];
    SolenoidPoint s = sol_add(x, y);
    try {
      s.validate();
    } catch (const std::exception&) {
      ++incoherent;
    }
  }
  double hom_gap = 0.0;
  for (int t = 0; t < 500; ++t) {
    int level = static_cast<int>(rng.below(tower.levels() + 1));
    SolenoidChar chi{tower, level, Int(rng.below(1 + tower.partial[level].convert_to<long long>()))};
    const auto& x = pool[rng.below(64)];
    const auto& y = pool[rng.below(64)];
    hom_gap = std::max(hom_gap, modulus(sol_char_eval(chi, sol_add(x, y)) -
                                        sol_char_eval(chi, x) * sol_char_eval(chi, y)));
  }
  double cross = 0.0;
  RadixTower t3 = RadixTower::constant(3, 6);
  for (int t = 0; t < 50; ++t) {
    int k = 1 + static_cast<int>(rng.below(6));
    Int pk = t3.partial[k];
    Int a = Int(rng.below(pk.convert_to<long long>()));
    RAdicInt u = radic_from_int(t3, Int(rng.below(1000000007LL)));
    SolenoidChar chi{t3, k, a};
    PAdicNumber y = qp_normalize(3, Rational(a, pk), 6);
    cross = std::max(cross, modulus(sol_char_eval(chi, zr_embed(u)) - char_pairing(y, u)));
  }
  bool pass = incoherent == 0 && hom_gap < 1e-10 && cross < 1e-12;
  return {16, "solenoid-coherence-duality", pass,
          std::to_string(incoherent) + " incoherent, hom " + sci(hom_gap) + ", cross " + sci(cross),
          "0; 1e-10; 1e-12",
          "tower (2,3,4,5): 1000 additions, 500 character pairs; Z_r fiber vs p-adic pairing"};
}

CriterionResult quotient_metric_criterion(std::uint64_t) {
  auto cayley = cyclic_cayley(12);
  FiniteMetric d = cyclic_metric(12);
  FiniteMetric q = quotient_metric(cayley, {0, 6}, d);
  double worst = -1.0;  // max of d(a,c) - d(a,b) - d(b,c); must stay <= 0
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      for (std::size_t c = 0; c < q.size(); ++c)
        worst = std::max(worst, q.at(a, c) - q.at(a, b) - q.at(b, c));
  return {17, "quotient-metric-triangle", worst <= 0.0, sci(worst), "<= 0 exactly",
          "Z/12 with H = {0, 6}, all coset triples"};
}

CriterionResult projection_criterion(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t dim = 6;
  VectorList raw{dim, {}};
  for (int i = 0; i < 3; ++i) {
    std::vector<Cx> v(dim);
    for (auto& c : v) c = rng.unit_disk();
    raw.vectors.push_back(std::move(v));
  }
  VectorList onb = gram_schmidt(raw, 1e-10);
  std::vector<Cx> v(dim);
  for (auto& c : v) c = rng.unit_disk();
  Projection pr = project(v, onb);
  double best_dist = norm2(pr.residual);
  double worst = 0.0;  // how far below the projection distance a competitor gets
  for (int t = 0; t < 1000; ++t) {
    std::vector<Cx> w(dim, Cx(0.0, 0.0));
    for (const auto& e : onb.vectors) {
      Cx c = rng.unit_disk() * 2.0;
      for (std::size_t i = 0; i < dim; ++i) w[i] += c * e[i];
    }
    std::vector<Cx> diff(dim);
    for (std::size_t i = 0; i < dim; ++i) diff[i] = v[i] - w[i];
    worst = std::max(worst, best_dist - norm2(diff));
  }
  return {18, "projection-optimality", worst <= 1e-10, sci(worst), "1e-10",
          "dim 6, span 3, 1000 competitors in the span"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int threads) {
  using Task = std::function<CriterionResult(std::uint64_t)>;
  const std::vector<Task> tasks = {
      parseval_criterion,        poisson_normalization_criterion,
      abel_closed_form_criterion, abel_kernel_agreement_criterion,
      convolution_theorem_criterion, orthogonality_criterion,
      spectral_radius_criterion, neumann_criterion,
      homomorphism_criterion,    cstar_criterion,
      padic_laws_criterion,      unit_inversion_criterion,
      haar_ball_criterion,       zp_fourier_criterion,
      qp_duality_criterion,      solenoid_criterion,
      quotient_metric_criterion, projection_criterion,
  };

  std::vector<CriterionResult> results(tasks.size());
  auto run_one = [&](std::size_t i) {
    // Independent stream per criterion, decorrelated from the neighbours.
    std::uint64_t criterion_seed = seed * 0x9e3779b97f4a7c15ULL + (i + 1) * 0x100000001b3ULL;
    try {
      results[i] = tasks[i](criterion_seed);
    } catch (const std::exception& e) {
      results[i] = {static_cast<int>(i) + 1, "criterion-" + std::to_string(i + 1), false,
                    "exception", "-", e.what()};
    }
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        run_one(i);
      }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(threads, static_cast<int>(tasks.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

int report_acceptance(std::uint64_t seed, std::ostream& out, int threads) {
  auto results = run_acceptance(seed, threads);
  int failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    char line[512];
    std::snprintf(line, sizeof(line), "[%2d] %-4s %-28s measured=%s threshold=%s",
                  r.number, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.measured.c_str(),
                  r.threshold.c_str());
    out << line;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
      << "\n";
  return failures;
}

}  // namespace harmonia

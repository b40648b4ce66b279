#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "harmonia/hilbert.hpp"
#include "harmonia/rng.hpp"

using namespace harmonia;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

IndexedFun fun2(Cx a, Cx b) { return IndexedFun::uniform({"0", "1"}, {a, b}); }

IndexedFun random_fun(Rng& rng, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Cx> values;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    values.push_back(rng.unit_disk() * 2.0);
  }
  return IndexedFun::uniform(std::move(labels), std::move(values));
}

std::vector<Cx> random_vector(Rng& rng, std::size_t n) {
  std::vector<Cx> v(n);
  for (auto& c : v) c = rng.unit_disk() * 2.0;
  return v;
}

}  // namespace

TEST_CASE("inner product examples") {
  CHECK(modulus(inner_product(fun2(Cx(1, 0), Cx(0, 1)), fun2(Cx(1, 0), Cx(1, 0))) -
                Cx(1, 1)) < 1e-15);

  auto half = Rational(Int(1), Int(2));
  auto f = IndexedFun::weighted({"0", "1"}, {Cx(1, 0), Cx(1, 0)}, {half, half});
  CHECK(modulus(inner_product(f, f) - Cx(1, 0)) < 1e-15);

  CHECK(modulus(inner_product(fun2(Cx(2, 0), Cx(0, 0)), fun2(Cx(0, 0), Cx(3, 0))))
        < 1e-15);

  auto other = IndexedFun::uniform({"a", "b"}, {Cx(1, 0), Cx(1, 0)});
  CHECK_THROWS_AS(inner_product(f, other), std::invalid_argument);
}

TEST_CASE("inner product conjugate symmetry") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    auto f = random_fun(rng, 5);
    auto g = f;
    for (auto& v : g.values) v = rng.unit_disk();
    CHECK(modulus(inner_product(f, g) - std::conj(inner_product(g, f))) < 1e-12);
  }
}

TEST_CASE("lp norms") {
  CHECK(lp_norm(fun2(Cx(3, 0), Cx(4, 0)), 2.0) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(lp_norm(fun2(Cx(3, 0), Cx(4, 0)), kInf) == 4.0);
  // (1 + 1)^2 at p = 1/2
  CHECK(lp_norm(fun2(Cx(1, 0), Cx(1, 0)), 0.5) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(lp_norm(fun2(Cx(1, 0), Cx(1, 0)), 0.0), std::domain_error);
}

TEST_CASE("lp norm monotone in p for unit weights") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    auto f = random_fun(rng, 6);
    double p = rng.uniform(0.5, 4.0);
    double q = p + rng.uniform(0.1, 3.0);
    CHECK(lp_norm(f, q) <= lp_norm(f, p) + 1e-12);
    CHECK(lp_norm(f, kInf) <= lp_norm(f, p) + 1e-12);
  }
}

TEST_CASE("small p triangle substitute") {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    auto f = random_fun(rng, 5);
    auto g = f;
    for (auto& v : g.values) v = rng.unit_disk() * 2.0;
    double p = rng.uniform(0.2, 1.0);
    IndexedFun sum = f;
    for (std::size_t i = 0; i < sum.size(); ++i) sum.values[i] += g.values[i];
    double lhs = std::pow(lp_norm(sum, p), p);
    double rhs = std::pow(lp_norm(f, p), p) + std::pow(lp_norm(g, p), p);
    CHECK(lhs <= rhs + 1e-10);
  }
}

TEST_CASE("dual norm examples and witnesses") {
  // p = 1: brute force over signed point masses agrees
  auto g1 = fun2(Cx(1, 0), Cx(-2, 0));
  auto [n1, w1] = dual_norm(g1, 1.0);
  CHECK(n1 == doctest::Approx(2.0).epsilon(1e-14));
  double brute = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (double sign : {-1.0, 1.0}) {
      auto probe = fun2(Cx(0, 0), Cx(0, 0));
      probe.values[i] = Cx(sign, 0);
      brute = std::max(brute, std::abs((probe.values[0] * g1.values[0] +
                                        probe.values[1] * g1.values[1]).real()));
    }
  CHECK(n1 == doctest::Approx(brute).epsilon(1e-14));
  CHECK(modulus(w1.values[0]) < 1e-15);
  CHECK(modulus(w1.values[1] - Cx(-1, 0)) < 1e-15);

  auto g2 = fun2(Cx(3, 0), Cx(4, 0));
  auto [n2, w2] = dual_norm(g2, 2.0);
  CHECK(n2 == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(modulus(w2.values[0] - Cx(0.6, 0)) < 1e-12);
  CHECK(modulus(w2.values[1] - Cx(0.8, 0)) < 1e-12);

  auto g3 = fun2(Cx(1, 0), Cx(1, 0));
  auto [n3, w3] = dual_norm(g3, kInf);
  CHECK(n3 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(modulus(w3.values[0] - Cx(1, 0)) < 1e-15);

  CHECK_THROWS_AS(dual_norm(g3, 0.5), std::domain_error);
}

TEST_CASE("dual norm witness attains the bound") {
  Rng rng(8);
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
    for (int t = 0; t < 50; ++t) {
      auto g = random_fun(rng, 6);
      if (t % 2) {  // exercise the weighted pairing too
        for (auto& w : g.weights) w = Rational(Int(1 + rng.below(8)), Int(1 + rng.below(8)));
      }
      auto [norm, witness] = dual_norm(g, p);
      CHECK(lp_norm(witness, p) <= 1.0 + 1e-12);
      Cx pair(0, 0);
      for (std::size_t i = 0; i < g.size(); ++i)
        pair += witness.values[i] * g.values[i] * to_double(g.weights[i]);
      CHECK(modulus(pair) >= norm - 1e-9);
      // Holder caps the weighted pairing at the product of dual norms
      CHECK(modulus(pair) <= lp_norm(witness, p) * norm + 1e-10);
    }
  }
}

TEST_CASE("Holder inequality") {
  Rng rng(9);
  for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
    double q = std::isinf(p) ? 1.0 : p / (p - 1.0);
    if (p == 1.0) q = kInf;
    for (int t = 0; t < 200; ++t) {
      auto f = random_fun(rng, 6);
      auto g = f;
      for (auto& v : g.values) v = rng.unit_disk() * 2.0;
      Cx pair(0, 0);
      for (std::size_t i = 0; i < f.size(); ++i) pair += f.values[i] * g.values[i];
      CHECK(modulus(pair) <= lp_norm(f, p) * lp_norm(g, q) + 1e-10);
    }
  }
}

TEST_CASE("Cauchy-Schwarz") {
  Rng rng(10);
  for (int t = 0; t < 1000; ++t) {
    auto f = random_fun(rng, 5);
    auto g = f;
    for (auto& v : g.values) v = rng.unit_disk() * 2.0;
    CHECK(modulus(inner_product(f, g)) <= lp_norm(f, 2.0) * lp_norm(g, 2.0) + 1e-12);
  }
}

TEST_CASE("projection examples") {
  VectorList e1{2, {{Cx(1, 0), Cx(0, 0)}}};
  auto pr = project({Cx(1, 0), Cx(1, 0)}, e1);
  CHECK(modulus(pr.projection[0] - Cx(1, 0)) < 1e-15);
  CHECK(modulus(pr.projection[1]) < 1e-15);
  CHECK(modulus(pr.residual[1] - Cx(1, 0)) < 1e-15);

  VectorList e23{3, {{Cx(0, 0), Cx(1, 0), Cx(0, 0)}, {Cx(0, 0), Cx(0, 0), Cx(1, 0)}}};
  auto pr2 = project({Cx(5, 0), Cx(0, 0), Cx(0, 0)}, e23);
  for (const auto& c : pr2.projection) CHECK(modulus(c) < 1e-15);
  CHECK(modulus(pr2.residual[0] - Cx(5, 0)) < 1e-15);

  const double s = 1.0 / std::sqrt(2.0);
  VectorList diag{3, {{Cx(s, 0), Cx(s, 0), Cx(0, 0)}}};
  auto pr3 = project({Cx(1, 0), Cx(2, 0), Cx(3, 0)}, diag);  // hand value 3/sqrt(2)
  CHECK(modulus(pr3.projection[0] - Cx(1.5, 0)) < 1e-12);
  CHECK(modulus(pr3.projection[1] - Cx(1.5, 0)) < 1e-12);
  CHECK(modulus(pr3.projection[2]) < 1e-12);

  VectorList not_onb{2, {{Cx(1, 0), Cx(1, 0)}}};
  CHECK_THROWS_AS(project({Cx(1, 0), Cx(0, 0)}, not_onb), std::invalid_argument);
}

TEST_CASE("projection invariants") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    VectorList raw{6, {random_vector(rng, 6), random_vector(rng, 6), random_vector(rng, 6)}};
    VectorList onb = gram_schmidt(raw, 1e-10);
    auto v = random_vector(rng, 6);
    auto pr = project(v, onb);
    // the residual is defined by one floating subtraction per component, so
    // adding back recovers v up to one rounding of the larger operand
    for (std::size_t i = 0; i < v.size(); ++i) {
      Cx back = pr.projection[i] + pr.residual[i];
      double scale = std::max({modulus(pr.projection[i]), modulus(pr.residual[i]), 1.0});
      CHECK(modulus(back - v[i]) <= 0x1p-51 * scale);
    }
    for (const auto& e : onb.vectors) CHECK(modulus(dot(pr.residual, e)) < 1e-8);
    // Pythagoras across the splitting
    double lhs = dot(v, v).real();
    double rhs = dot(pr.projection, pr.projection).real() +
                 dot(pr.residual, pr.residual).real();
    CHECK(std::abs(lhs - rhs) < 1e-8);

    // Bessel for the orthonormal list
    double coeff_sq = 0.0;
    for (const auto& e : onb.vectors) coeff_sq += std::norm(dot(v, e));
    CHECK(coeff_sq <= dot(v, v).real() + 1e-10);
  }
}

TEST_CASE("projection minimizes distance over the span") {
  Rng rng(13);
  VectorList raw{5, {random_vector(rng, 5), random_vector(rng, 5)}};
  VectorList onb = gram_schmidt(raw, 1e-10);
  auto v = random_vector(rng, 5);
  auto pr = project(v, onb);
  double best = norm2(pr.residual);
  for (int t = 0; t < 500; ++t) {
    std::vector<Cx> w(5, Cx(0, 0));
    for (const auto& e : onb.vectors) {
      Cx c = rng.unit_disk() * 3.0;
      for (std::size_t i = 0; i < 5; ++i) w[i] += c * e[i];
    }
    std::vector<Cx> diff(5);
    for (std::size_t i = 0; i < 5; ++i) diff[i] = v[i] - w[i];
    CHECK(norm2(diff) >= best - 1e-10);
  }
}

TEST_CASE("gram_schmidt examples") {
  VectorList vs{2, {{Cx(1, 0), Cx(0, 0)}, {Cx(1, 0), Cx(1, 0)}}};
  auto onb = gram_schmidt(vs, 1e-10);
  REQUIRE(onb.vectors.size() == 2);
  CHECK(modulus(onb.vectors[0][0] - Cx(1, 0)) < 1e-12);
  CHECK(modulus(onb.vectors[1][1] - Cx(1, 0)) < 1e-12);

  VectorList dep{2, {{Cx(2, 0), Cx(0, 0)}, {Cx(4, 0), Cx(0, 0)}}};
  CHECK(gram_schmidt(dep, 1e-10).vectors.size() == 1);

  const double s = 1.0 / std::sqrt(2.0);
  VectorList vs2{2, {{Cx(1, 0), Cx(1, 0)}, {Cx(1, 0), Cx(0, 0)}}};
  auto onb2 = gram_schmidt(vs2, 1e-10);
  REQUIRE(onb2.vectors.size() == 2);
  CHECK(modulus(onb2.vectors[0][0] - Cx(s, 0)) < 1e-12);
  CHECK(modulus(onb2.vectors[0][1] - Cx(s, 0)) < 1e-12);
  CHECK(modulus(onb2.vectors[1][0] - Cx(s, 0)) < 1e-12);
  CHECK(modulus(onb2.vectors[1][1] - Cx(-s, 0)) < 1e-12);
}

TEST_CASE("gram_schmidt output is orthonormal and spans the input") {
  Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    VectorList vs{8, {}};
    for (int i = 0; i < 5; ++i) vs.vectors.push_back(random_vector(rng, 8));
    vs.vectors.push_back(vs.vectors[0]);  // a dependent vector
    auto onb = gram_schmidt(vs, 1e-10);
    CHECK(onb.vectors.size() == 5);
    for (std::size_t i = 0; i < onb.vectors.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double expect = i == j ? 1.0 : 0.0;
        CHECK(std::abs(modulus(dot(onb.vectors[i], onb.vectors[j])) - expect) < 1e-10);
      }
    for (const auto& v : vs.vectors) {
      auto pr = project(v, onb);
      CHECK(norm2(pr.residual) < 1e-8);
    }
  }
}

TEST_CASE("parallelogram law") {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    auto x = random_vector(rng, 6);
    auto y = random_vector(rng, 6);
    std::vector<Cx> mid(6), half_diff(6);
    for (int i = 0; i < 6; ++i) {
      mid[i] = (x[i] + y[i]) / 2.0;
      half_diff[i] = (x[i] - y[i]) / 2.0;
    }
    double lhs = std::abs(dot(mid, mid).real()) + std::abs(dot(half_diff, half_diff).real());
    double rhs = std::abs(dot(x, x).real()) / 2.0 + std::abs(dot(y, y).real()) / 2.0;
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("double sums") {
  // f(x, y) = x * y on {1,2} x {1,3}
  auto ds = double_sum({{Cx(1, 0), Cx(3, 0)}, {Cx(2, 0), Cx(6, 0)}});
  CHECK(ds.total == Cx(12, 0));
  CHECK(ds.row_sums[0] == Cx(4, 0));
  CHECK(ds.row_sums[1] == Cx(8, 0));
  CHECK(ds.col_sums[0] == Cx(3, 0));
  CHECK(ds.col_sums[1] == Cx(9, 0));

  auto zero = double_sum({{Cx(0, 0), Cx(0, 0)}, {Cx(0, 0), Cx(0, 0)}});
  CHECK(zero.total == Cx(0, 0));

  // random +-1 table: the two iteration orders agree exactly
  Rng rng(16);
  std::vector<std::vector<Cx>> table(8, std::vector<Cx>(8));
  for (auto& row : table)
    for (auto& v : row) v = Cx(rng.below(2) ? 1.0 : -1.0, 0.0);
  auto d = double_sum(table);
  Cx by_rows(0, 0), by_cols(0, 0);
  for (const auto& s : d.row_sums) by_rows += s;
  for (const auto& s : d.col_sums) by_cols += s;
  CHECK(by_rows == by_cols);
  CHECK(d.total == by_rows);
}

#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numeric>

#include "generators.hpp"
#include "latspan/errors.hpp"
#include "latspan/laurent.hpp"

using namespace latspan;

namespace {

LaurentPoly x_pow(int vars, int var, long long e) {
  ExpVec v(vars, 0);
  v[var] = e;
  return LaurentPoly::monomial(vars, v);
}

// Independent determinant oracle: the Leibniz sum over permutations.
LaurentPoly leibniz_determinant(const LaurentMatrix& m) {
  std::vector<int> perm(m.size);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly out = LaurentPoly::zero(m.vars);
  do {
    int inversions = 0;
    for (int i = 0; i < m.size; ++i)
      for (int j = i + 1; j < m.size; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly prod = LaurentPoly::constant(m.vars, 1);
    for (int i = 0; i < m.size; ++i) prod = mul(prod, m.at(i, perm[i]));
    out = inversions % 2 == 0 ? add(out, prod) : sub(out, prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("ring basics") {
  LaurentPoly x = x_pow(1, 0, 1);
  CHECK(add(x, neg(x)).is_zero());

  LaurentPoly g1 = sub(sub(LaurentPoly::constant(1, 2), x_pow(1, 0, 1)), x_pow(1, 0, -1));
  CHECK(mul(g1, LaurentPoly::constant(1, 1)) == g1);

  LaurentPoly doubled = mul(LaurentPoly::constant(1, 2), g1);
  LaurentPoly expect = sub(sub(LaurentPoly::constant(1, 4), mul(LaurentPoly::constant(1, 2), x_pow(1, 0, 1))),
                           mul(LaurentPoly::constant(1, 2), x_pow(1, 0, -1)));
  CHECK(doubled == expect);

  CHECK_THROWS_AS(add(LaurentPoly::zero(1), LaurentPoly::zero(2)), ValidationError);
}

TEST_CASE("ring axioms on random polynomials") {
  testgen::Rng rng(20260810);
  for (int iter = 0; iter < 60; ++iter) {
    int vars = int(rng.range(1, 3));
    LaurentPoly a = testgen::random_poly(rng, vars, 4, 3, 5);
    LaurentPoly b = testgen::random_poly(rng, vars, 4, 3, 5);
    LaurentPoly c = testgen::random_poly(rng, vars, 4, 3, 5);
    CHECK(mul(a, mul(b, c)) == mul(mul(a, b), c));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
  }
}

TEST_CASE("evaluate on the torus") {
  LaurentPoly g1 = sub(sub(LaurentPoly::constant(1, 2), x_pow(1, 0, 1)), x_pow(1, 0, -1));
  std::vector<std::complex<double>> one{{1.0, 0.0}};
  CHECK(std::abs(evaluate(g1, one)) < 1e-12);
  std::vector<std::complex<double>> minus_one{{-1.0, 0.0}};
  CHECK(std::abs(evaluate(g1, minus_one) - std::complex<double>(4.0, 0.0)) < 1e-12);

  LaurentPoly g2 = LaurentPoly::constant(2, 4);
  for (int k = 0; k < 2; ++k) {
    g2 = sub(g2, x_pow(2, k, 1));
    g2 = sub(g2, x_pow(2, k, -1));
  }
  std::vector<std::complex<double>> p{{1.0, 0.0}, {-1.0, 0.0}};
  CHECK(std::abs(evaluate(g2, p) - std::complex<double>(4.0, 0.0)) < 1e-12);

  std::vector<std::complex<double>> off{{0.5, 0.0}};
  CHECK_THROWS_AS(evaluate(g1, off), ValidationError);
}

TEST_CASE("determinant small cases") {
  LaurentPoly g1 = sub(sub(LaurentPoly::constant(1, 2), x_pow(1, 0, 1)), x_pow(1, 0, -1));
  LaurentMatrix m(1, 1);
  m.at(0, 0) = g1;
  CHECK(determinant(m) == g1);

  LaurentMatrix diag(2, 1);
  LaurentPoly a = x_pow(1, 0, 2);
  LaurentPoly b = add(LaurentPoly::constant(1, 3), x_pow(1, 0, -1));
  diag.at(0, 0) = a;
  diag.at(1, 1) = b;
  CHECK(determinant(diag) == mul(a, b));

  LaurentMatrix empty(0, 1);
  CHECK(determinant(empty) == LaurentPoly::constant(1, 1));
}

TEST_CASE("determinant matches the Leibniz oracle") {
  testgen::Rng rng(777);
  for (int iter = 0; iter < 40; ++iter) {
    int n = int(rng.range(1, 4));
    int vars = int(rng.range(1, 2));
    LaurentMatrix m(n, vars);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ExpVec e(vars);
        for (int k = 0; k < vars; ++k) e[k] = rng.range(-2, 2);
        m.at(i, j) = LaurentPoly::monomial(vars, e, rng.range(-3, 3));
      }
    CHECK(determinant(m) == leibniz_determinant(m));
  }
}

TEST_CASE("determinant is alternating") {
  testgen::Rng rng(12345);
  for (int iter = 0; iter < 20; ++iter) {
    int n = int(rng.range(2, 4));
    LaurentMatrix m(n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = testgen::random_poly(rng, 1, 2, 2, 3);
    LaurentMatrix swapped = m;
    int r1 = int(rng.range(0, n - 1));
    int r2 = (r1 + 1) % n;
    for (int j = 0; j < n; ++j) std::swap(swapped.at(r1, j), swapped.at(r2, j));
    CHECK(determinant(swapped) == neg(determinant(m)));
  }
}

TEST_CASE("evaluate commutes with determinant") {
  testgen::Rng rng(999);
  for (int iter = 0; iter < 15; ++iter) {
    int n = int(rng.range(1, 6));
    int vars = int(rng.range(1, 2));
    LaurentMatrix m(n, vars);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = testgen::random_poly(rng, vars, 2, 2, 2);

    std::vector<std::complex<double>> point(vars);
    for (int k = 0; k < vars; ++k) {
      double theta = double(rng.range(0, 999)) / 1000.0;
      point[k] = std::polar(1.0, 2.0 * 3.14159265358979323846 * theta);
    }

    // Complex determinant of the entrywise evaluation, by Gaussian elimination.
    std::vector<std::vector<std::complex<double>>> a(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = evaluate(m.at(i, j), point);
    std::complex<double> det(1.0, 0.0);
    for (int k = 0; k < n; ++k) {
      int piv = k;
      for (int i = k; i < n; ++i)
        if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
      if (std::abs(a[piv][k]) == 0.0) {
        det = 0.0;
        break;
      }
      if (piv != k) {
        std::swap(a[piv], a[k]);
        det = -det;
      }
      det *= a[k][k];
      for (int i = k + 1; i < n; ++i) {
        std::complex<double> f = a[i][k] / a[k][k];
        for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      }
    }

    std::complex<double> via_poly = evaluate(determinant(m), point);
    double scale = std::max(1.0, std::abs(det));
    CHECK(std::abs(via_poly - det) / scale < 1e-9);
  }
}

TEST_CASE("reciprocal") {
  CHECK(reciprocal(x_pow(1, 0, 1)) == x_pow(1, 0, -1));
  LaurentPoly g1 = sub(sub(LaurentPoly::constant(1, 2), x_pow(1, 0, 1)), x_pow(1, 0, -1));
  CHECK(reciprocal(g1) == g1);
  LaurentPoly gap = LaurentPoly::constant(1, 4);
  gap = sub(sub(gap, x_pow(1, 0, 1)), x_pow(1, 0, -1));
  gap = sub(sub(gap, x_pow(1, 0, 3)), x_pow(1, 0, -3));
  CHECK(reciprocal(gap) == gap);
}

TEST_CASE("unit equivalence") {
  testgen::Rng rng(4242);
  LaurentPoly f = testgen::random_poly(rng, 2, 4, 2, 5);
  while (f.is_zero()) f = testgen::random_poly(rng, 2, 4, 2, 5);
  CHECK(unit_equivalent(mul(x_pow(2, 0, 1), f), f));
  CHECK(unit_equivalent(neg(f), f));
  CHECK(unit_equivalent(mul(x_pow(2, 1, -3), neg(f)), f));
  CHECK_FALSE(unit_equivalent(mul(LaurentPoly::constant(2, 2), f), f));
  CHECK(unit_equivalent(LaurentPoly::zero(2), LaurentPoly::zero(2)));
  CHECK_FALSE(unit_equivalent(LaurentPoly::zero(2), f));
}

TEST_CASE("canonical text rendering") {
  LaurentPoly g2 = LaurentPoly::constant(2, 4);
  for (int k = 0; k < 2; ++k) {
    g2 = sub(g2, x_pow(2, k, 1));
    g2 = sub(g2, x_pow(2, k, -1));
  }
  CHECK(to_string(g2) == "4 - x1 - x1^-1 - x2 - x2^-1");

  LaurentPoly g1 = sub(sub(LaurentPoly::constant(1, 2), x_pow(1, 0, 1)), x_pow(1, 0, -1));
  CHECK(to_string(g1) == "2 - x1 - x1^-1");
  CHECK(to_string(LaurentPoly::zero(3)) == "0");
  CHECK(to_string(mul(LaurentPoly::constant(1, 2), g1)) == "4 - 2*x1 - 2*x1^-1");

  LaurentPoly mixed = LaurentPoly::monomial(2, {1, -2}, -3);
  CHECK(to_string(mixed) == "-3*x1*x2^-2");
}

#include <doctest.h>

#include "generators.hpp"
#include "latspan/intmat.hpp"

using namespace latspan;

namespace {

IntMat from_rows(int rows, int cols, std::initializer_list<long long> vals) {
  IntMat m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = *it++;
  return m;
}

IntMat random_square(testgen::Rng& rng, int n, long long lo, long long hi) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.range(lo, hi);
  return m;
}

}  // namespace

TEST_CASE("bareiss determinant") {
  CHECK(bareiss_determinant(IntMat(0, 0)) == 1);
  CHECK(bareiss_determinant(from_rows(1, 1, {7})) == 7);
  CHECK(bareiss_determinant(from_rows(2, 2, {1, 2, 3, 4})) == -2);
  // Needs the pivot swap in the first column.
  CHECK(bareiss_determinant(from_rows(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
  CHECK(bareiss_determinant(from_rows(2, 2, {1, 2, 2, 4})) == 0);
}

TEST_CASE("bareiss matches cofactor expansion on random matrices") {
  testgen::Rng rng(31337);
  // Cofactor oracle, exponential but independent.
  std::function<BigInt(const IntMat&)> cofactor = [&](const IntMat& m) -> BigInt {
    int n = m.rows();
    if (n == 0) return 1;
    BigInt acc = 0;
    for (int j = 0; j < n; ++j) {
      if (m.at(0, j) == 0) continue;
      IntMat minor(n - 1, n - 1);
      for (int i = 1; i < n; ++i)
        for (int k = 0, kk = 0; k < n; ++k) {
          if (k == j) continue;
          minor.at(i - 1, kk++) = m.at(i, k);
        }
      BigInt term = m.at(0, j) * cofactor(minor);
      acc += (j % 2 == 0) ? term : BigInt(-term);
    }
    return acc;
  };
  for (int iter = 0; iter < 50; ++iter) {
    int n = int(rng.range(1, 5));
    IntMat m = random_square(rng, n, -9, 9);
    CHECK(bareiss_determinant(m) == cofactor(m));
  }
}

TEST_CASE("hermite column form") {
  // Column span of diag(2,2) is canonical already.
  IntMat d22 = from_rows(2, 2, {2, 0, 0, 2});
  CHECK(hermite_column_form(d22) == d22);

  // Same lattice, different generators.
  IntMat gen = from_rows(2, 2, {2, 4, 2, 6});
  IntMat h = hermite_column_form(gen);
  CHECK(h == from_rows(2, 2, {2, 0, 0, 2}));

  // Rank-deficient input drops the dependent column.
  IntMat thin = hermite_column_form(from_rows(2, 3, {1, 2, 3, 2, 4, 6}));
  CHECK(thin.cols() == 1);
  CHECK(thin.at(0, 0) == 1);
  CHECK(thin.at(1, 0) == 2);

  CHECK(hermite_column_form(IntMat(3, 0)).cols() == 0);
}

TEST_CASE("hermite form is a lattice invariant") {
  testgen::Rng rng(555);
  for (int iter = 0; iter < 40; ++iter) {
    int d = int(rng.range(1, 3));
    IntMat m = random_square(rng, d, -5, 5);
    // Random unimodular column operations preserve the span.
    IntMat n = m;
    for (int ops = 0; ops < 6; ++ops) {
      int a = int(rng.range(0, d - 1)), b = int(rng.range(0, d - 1));
      if (a == b) continue;
      BigInt q = rng.range(-3, 3);
      for (int i = 0; i < d; ++i) n.at(i, a) += q * n.at(i, b);
    }
    CHECK(hermite_column_form(m) == hermite_column_form(n));
  }
}

TEST_CASE("smith normal form, known shapes") {
  auto snf = smith_normal_form(from_rows(2, 2, {2, 0, 0, 2}));
  CHECK(snf.factors == std::vector<BigInt>{2, 2});

  // Columns (1,1) and (-1,1): index 2, factors 1 | 2.
  auto snf2 = smith_normal_form(from_rows(2, 2, {1, -1, 1, 1}));
  CHECK(snf2.factors == std::vector<BigInt>{1, 2});
}

TEST_CASE("smith transforms are unimodular and the factors multiply to the determinant") {
  testgen::Rng rng(2024);
  int tested = 0;
  while (tested < 60) {
    int d = int(rng.range(1, 4));
    IntMat m = random_square(rng, d, -9, 9);
    BigInt det = bareiss_determinant(m);
    if (det == 0) continue;
    ++tested;
    auto snf = smith_normal_form(m);
    CHECK(abs(bareiss_determinant(snf.left)) == 1);
    CHECK(abs(bareiss_determinant(snf.right)) == 1);

    IntMat prod = matmul(matmul(snf.left, m), snf.right);
    BigInt factor_product = 1;
    for (int i = 0; i < d; ++i) {
      factor_product *= snf.factors[i];
      for (int j = 0; j < d; ++j)
        CHECK(prod.at(i, j) == (i == j ? snf.factors[i] : BigInt(0)));
      if (i + 1 < d) CHECK(snf.factors[i + 1] % snf.factors[i] == 0);
    }
    CHECK(factor_product == abs(det));
  }
}

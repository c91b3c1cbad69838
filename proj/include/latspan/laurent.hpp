#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "latspan/bigint.hpp"

namespace latspan {

using ExpVec = std::vector<long long>;

/// Multivariate Laurent polynomial over arbitrary-precision integers.
/// Terms map exponent vectors (length vars) to nonzero coefficients; the
/// zero polynomial has an empty term map. Equality is term-map equality,
/// with no unit normalization.
struct LaurentPoly {
  int vars = 0;
  std::map<ExpVec, BigInt> terms;

  static LaurentPoly zero(int vars);
  static LaurentPoly constant(int vars, BigInt c);
  /// coeff * x^exps
  static LaurentPoly monomial(int vars, ExpVec exps, BigInt coeff = 1);

  bool is_zero() const { return terms.empty(); }
  /// Sum of coefficients, i.e. the exact value at (1, ..., 1).
  BigInt coefficient_sum() const;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& a);

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
bool operator==(const LaurentPoly& a, const LaurentPoly& b);

/// Substitutes x_k -> x_k^{-1}, negating every exponent vector.
LaurentPoly reciprocal(const LaurentPoly& f);

/// True iff f == +-x^s * g for some monomial shift s. Found by aligning
/// extremal exponents; no polynomial division involved.
bool unit_equivalent(const LaurentPoly& f, const LaurentPoly& g);

/// Evaluates f at a point of the unit torus. Each coordinate must have
/// modulus 1 within 1e-12 (negative exponents are then conjugate powers).
/// Powers go by repeated squaring; coefficients convert via double rounding
/// (exact while they fit the 53-bit significand).
std::complex<double> evaluate(const LaurentPoly& f, std::span<const std::complex<double>> point);

/// Canonical text form: terms ordered constant-first, then by first active
/// variable, then by |exponent| with the positive power before the negative.
/// Examples: "0", "2 - x1 - x1^-1", "4 - x1 - x1^-1 - x2 - x2^-1".
std::string to_string(const LaurentPoly& f);

/// Square matrix over the Laurent ring; all entries share one variable count.
struct LaurentMatrix {
  int size = 0;
  int vars = 0;
  std::vector<LaurentPoly> entries;  // row major

  LaurentMatrix() = default;
  LaurentMatrix(int size, int vars);

  LaurentPoly& at(int i, int j) { return entries[std::size_t(i) * size + j]; }
  const LaurentPoly& at(int i, int j) const { return entries[std::size_t(i) * size + j]; }
};

/// Exact determinant by cofactor expansion with minors memoized over column
/// subsets (O(2^n * n) ring operations). The 0x0 matrix has determinant 1.
/// Guarded at size <= 16.
LaurentPoly determinant(const LaurentMatrix& m);

}  // namespace latspan

#pragma once

#include <span>
#include <string>
#include <vector>

#include "latspan/intmat.hpp"

namespace latspan {

/// Finite-index subgroup of Z^d given by a nonsingular basis matrix whose
/// columns generate it. Normal forms and the shortest-vector length are
/// computed on construction and verified (transforms unimodular, index
/// equal to the factor product). Immutable afterwards.
struct Sublattice {
  int rank = 0;   // d
  IntMat basis;   // d x d, columns generate the lattice
  BigInt index;   // |Z^d / lattice| = |det basis|
  std::vector<BigInt> invariant_factors;  // r_1 | r_2 | ... | r_d
  IntMat snf_left, snf_right;             // left * basis * right = diag(factors)
  IntMat hermite;                         // column Hermite form (lower triangular)
  BigInt min_length_sq;                   // squared length of a shortest nonzero vector
  double min_length = 0.0;
};

/// Builds a sublattice from basis columns. Rejects singular bases. The
/// shortest vector comes from exhaustive search over the cube bounded by
/// the shortest basis column (work-capped; ample for rank <= 4 desk scale).
Sublattice from_basis(int rank, const IntMat& basis_columns);

/// diag(n, ..., n)
Sublattice diagonal_lattice(int rank, long long n);

/// Canonical coset representative of v: the unique vector congruent to v
/// with 0 <= r_i < hermite(i, i) for every coordinate.
std::vector<long long> reduce(const Sublattice& lat, std::span<const long long> v);

bool contains(const Sublattice& lat, std::span<const long long> v);

/// All coset representatives in the fundamental box of the Hermite form,
/// lexicographic order. Guarded at index <= 10^6.
std::vector<std::vector<long long>> cosets(const Sublattice& lat);

/// Parses row syntax "a,b;c,d": semicolons separate basis rows, so columns
/// of the resulting matrix generate the lattice.
Sublattice parse_lattice(int rank, const std::string& row_syntax);

}  // namespace latspan

#include "latspan/sublattice.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "latspan/errors.hpp"

namespace latspan {

namespace {

constexpr long long kCosetGuard = 1000000;     // max enumerated cosets
constexpr long long kShortestGuard = 20000000; // max points in the shortest-vector box

// adj * a = det(a) * I
IntMat adjugate(const IntMat& a) {
  int n = a.rows();
  IntMat adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = a.at(r, c);
          ++cc;
        }
        ++rr;
      }
      BigInt d = bareiss_determinant(std::move(minor));
      adj.at(j, i) = ((i + j) % 2 == 0) ? d : BigInt(-d);
    }
  return adj;
}

// Exhaustive shortest nonzero vector: every shortest vector fits in the cube
// bounded coordinatewise by the shortest basis column, so a pruned odometer
// over that cube with a membership test finds it.
BigInt shortest_vector_sq(const Sublattice& lat) {
  int d = lat.rank;
  BigInt best;
  for (int j = 0; j < d; ++j) {
    BigInt norm = 0;
    for (int i = 0; i < d; ++i) norm += lat.basis.at(i, j) * lat.basis.at(i, j);
    if (j == 0 || norm < best) best = norm;
  }

  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), best.get_mpz_t());
  if (!bound.fits_slong_p()) throw ValidationError("shortest vector: basis too large to search");
  long long m = bound.get_si();
  double box = 1.0;
  for (int i = 0; i < d; ++i) box *= double(2 * m + 1);
  if (box > double(kShortestGuard))
    throw ValidationError("shortest vector: search box exceeds the work guard");

  IntMat adj = adjugate(lat.basis);
  BigInt det = bareiss_determinant(lat.basis);

  std::vector<long long> v(d, 0);
  BigInt partial = 0;
  std::vector<BigInt> partial_at(d + 1, BigInt(0));

  // Depth-first over coordinates with the running norm pruned against best.
  auto member = [&](const std::vector<long long>& x) {
    for (int i = 0; i < d; ++i) {
      BigInt w = 0;
      for (int j = 0; j < d; ++j) w += adj.at(i, j) * x[j];
      if (!mpz_divisible_p(w.get_mpz_t(), det.get_mpz_t())) return false;
    }
    return true;
  };

  std::function<void(int)> walk = [&](int pos) {
    if (pos == d) {
      const BigInt& norm = partial_at[d];
      if (norm == 0 || norm > best) return;
      if (member(v) && norm >= 1) {
        if (norm < best) best = norm;
      }
      return;
    }
    for (long long x = -m; x <= m; ++x) {
      BigInt nxt = partial_at[pos] + BigInt(x) * x;
      if (nxt > best) continue;
      v[pos] = x;
      partial_at[pos + 1] = nxt;
      walk(pos + 1);
    }
    v[pos] = 0;
  };
  walk(0);
  return best;
}

}  // namespace

Sublattice from_basis(int rank, const IntMat& basis_columns) {
  if (rank < 1) throw ValidationError("sublattice: rank must be >= 1");
  if (basis_columns.rows() != rank || basis_columns.cols() != rank)
    throw ValidationError("sublattice: basis must be rank x rank");

  Sublattice lat;
  lat.rank = rank;
  lat.basis = basis_columns;

  BigInt det = bareiss_determinant(lat.basis);
  if (det == 0) throw ValidationError("sublattice: singular basis (index would be infinite)");
  lat.index = abs(det);

  SmithDecomposition snf = smith_normal_form(lat.basis);
  lat.snf_left = std::move(snf.left);
  lat.snf_right = std::move(snf.right);
  lat.invariant_factors = std::move(snf.factors);

  // Verify the decomposition before trusting it anywhere else.
  if (abs(bareiss_determinant(lat.snf_left)) != 1 || abs(bareiss_determinant(lat.snf_right)) != 1)
    throw std::logic_error("sublattice: non-unimodular Smith transform");
  IntMat prod = matmul(matmul(lat.snf_left, lat.basis), lat.snf_right);
  BigInt factor_product = 1;
  for (int i = 0; i < rank; ++i) {
    factor_product *= lat.invariant_factors[i];
    for (int j = 0; j < rank; ++j) {
      const BigInt& want = (i == j) ? lat.invariant_factors[i] : BigInt(0);
      if (prod.at(i, j) != want) throw std::logic_error("sublattice: Smith form mismatch");
    }
  }
  if (factor_product != lat.index) throw std::logic_error("sublattice: factor product != index");

  lat.hermite = hermite_column_form(lat.basis);
  if (lat.hermite.cols() != rank) throw std::logic_error("sublattice: Hermite form lost rank");

  lat.min_length_sq = shortest_vector_sq(lat);
  lat.min_length = std::sqrt(lat.min_length_sq.get_d());
  return lat;
}

Sublattice diagonal_lattice(int rank, long long n) {
  if (n == 0) throw ValidationError("sublattice: diagonal entry must be nonzero");
  IntMat m(rank, rank);
  for (int i = 0; i < rank; ++i) m.at(i, i) = n;
  return from_basis(rank, m);
}

std::vector<long long> reduce(const Sublattice& lat, std::span<const long long> v) {
  if (int(v.size()) != lat.rank) throw ValidationError("reduce: vector length != rank");
  std::vector<BigInt> r(v.begin(), v.end());
  // Lower-triangular Hermite basis: clearing coordinates top-down leaves the
  // unique representative in the box prod [0, H_ii).
  for (int i = 0; i < lat.rank; ++i) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r[i].get_mpz_t(), lat.hermite.at(i, i).get_mpz_t());
    if (q == 0) continue;
    for (int k = i; k < lat.rank; ++k) r[k] -= q * lat.hermite.at(k, i);
  }
  std::vector<long long> out(lat.rank);
  for (int i = 0; i < lat.rank; ++i) {
    if (!r[i].fits_slong_p()) throw ValidationError("reduce: representative exceeds word range");
    out[i] = r[i].get_si();
  }
  return out;
}

bool contains(const Sublattice& lat, std::span<const long long> v) {
  auto r = reduce(lat, v);
  for (long long x : r)
    if (x != 0) return false;
  return true;
}

std::vector<std::vector<long long>> cosets(const Sublattice& lat) {
  if (lat.index > kCosetGuard) throw ValidationError("cosets: lattice index exceeds the guard");
  int d = lat.rank;
  std::vector<long long> box(d);
  for (int i = 0; i < d; ++i) box[i] = lat.hermite.at(i, i).get_si();

  std::vector<std::vector<long long>> out;
  out.reserve(lat.index.get_ui());
  std::vector<long long> v(d, 0);
  for (;;) {
    out.push_back(v);
    int i = d - 1;
    while (i >= 0 && ++v[i] == box[i]) v[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

Sublattice parse_lattice(int rank, const std::string& row_syntax) {
  std::vector<std::vector<long long>> rows;
  std::stringstream ss(row_syntax);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<long long> entries;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      try {
        entries.push_back(std::stoll(cell));
      } catch (const std::exception&) {
        throw ValidationError("lattice: cannot parse entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(entries));
  }
  if (int(rows.size()) != rank)
    throw ValidationError("lattice: expected " + std::to_string(rank) + " rows");
  IntMat m(rank, rank);
  for (int i = 0; i < rank; ++i) {
    if (int(rows[i].size()) != rank)
      throw ValidationError("lattice: expected " + std::to_string(rank) + " entries per row");
    for (int j = 0; j < rank; ++j) m.at(i, j) = rows[i][j];
  }
  return from_basis(rank, m);
}

}  // namespace latspan

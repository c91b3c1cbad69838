#include "latspan/spectral.hpp"

#include <cmath>
#include <numbers>

#include "latspan/errors.hpp"
#include "latspan/laplacian.hpp"
#include "latspan/parallel.hpp"
#include "latspan/quotient.hpp"

namespace latspan {

namespace {

std::complex<double> unit_pow(std::complex<double> c, long long e) {
  if (e < 0) {
    c = std::conj(c);  // |c| = 1
    e = -e;
  }
  std::complex<double> r(1.0, 0.0);
  while (e != 0) {
    if (e & 1) r *= c;
    c *= c;
    e >>= 1;
  }
  return r;
}

}  // namespace

OmegaSet omega_points(const Sublattice& lat) {
  if (lat.index > 1000000) throw ValidationError("omega points: lattice index exceeds the guard");
  int d = lat.rank;

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (abs(lat.basis.at(i, j)) > BigInt(1) << 40 || abs(lat.snf_left.at(i, j)) > BigInt(1) << 40)
        throw ValidationError("omega points: basis entries too large for character evaluation");

  std::vector<long long> radix(d);
  for (int i = 0; i < d; ++i) radix[i] = lat.invariant_factors[i].get_si();

  // The characters are exp(2 pi i t) with t = left^T (k_1/r_1, ..., k_d/r_d):
  // the Smith transform turns the congruence basis^T t in Z^d into
  // independent cyclic constraints on the invariant factors.
  std::vector<std::vector<double>> left(d, std::vector<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) left[i][j] = lat.snf_left.at(i, j).get_d();

  OmegaSet omega;
  omega.rank = d;
  omega.points.reserve(std::size_t(lat.index.get_ui()));

  std::vector<long long> k(d, 0);
  for (;;) {
    std::vector<std::complex<double>> point(d);
    for (int j = 0; j < d; ++j) {
      double t = 0.0;
      for (int i = 0; i < d; ++i) t += left[i][j] * (double(k[i]) / double(radix[i]));
      t -= std::floor(t);
      point[j] = std::polar(1.0, 2.0 * std::numbers::pi * t);
    }
    omega.points.push_back(std::move(point));
    int i = d - 1;
    while (i >= 0 && ++k[i] == radix[i]) k[i--] = 0;
    if (i < 0) break;
  }

  // Every emitted point must be trivial on each basis column.
  for (const auto& point : omega.points)
    for (int c = 0; c < d; ++c) {
      std::complex<double> prod(1.0, 0.0);
      for (int j = 0; j < d; ++j) prod *= unit_pow(point[j], lat.basis.at(j, c).get_si());
      if (std::abs(prod - std::complex<double>(1.0, 0.0)) > 1e-10)
        throw std::logic_error("omega points: character fails the lattice constraint");
    }
  return omega;
}

double ProductFormulaResult::value() const { return std::exp(log_value); }

ProductFormulaResult product_formula(const PeriodicGraph& g, const Sublattice& lat,
                                     double zero_tol_rel) {
  auto zero = delta_is_zero(g);
  if (zero.zero)
    throw ValidationError(
        "product formula: delta is identically zero (graph has a closed component orbit)");

  LaurentPoly delta = laplacian_matrix(g).delta;
  OmegaSet omega = omega_points(lat);
  std::size_t npoints = omega.points.size();

  std::vector<double> mags(npoints);
  for_chunks(npoints, 256, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t p = b; p < e; ++p) mags[p] = std::abs(evaluate(delta, omega.points[p]));
  });

  double max_mag = 0.0;
  for (double m : mags) max_mag = std::max(max_mag, m);
  double threshold = zero_tol_rel * max_mag;

  std::vector<double> logs;
  logs.reserve(npoints);
  long long skipped = 0;
  for (double m : mags) {
    if (m > threshold) {
      logs.push_back(std::log(m));
    } else {
      ++skipped;
    }
  }

  ProductFormulaResult out;
  out.points = (long long)npoints;
  out.skipped = skipped;
  out.zero_threshold = threshold;
  out.log_product = pairwise_sum(logs);

  FiniteMultigraph q = build_quotient(g, lat);
  for (const auto& comp : connected_components(q))
    out.n_vertex_product *= BigInt((unsigned long)comp.size());
  out.log_value = out.log_product - log_abs(out.n_vertex_product);
  return out;
}

}  // namespace latspan

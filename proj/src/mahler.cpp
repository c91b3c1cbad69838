#include "latspan/mahler.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <random>

#include "latspan/errors.hpp"
#include "latspan/laplacian.hpp"
#include "latspan/parallel.hpp"

namespace latspan {

const char* method_name(MahlerMethod m) {
  switch (m) {
    case MahlerMethod::jensen_roots: return "jensen_roots";
    case MahlerMethod::midpoint_grid: return "midpoint_grid";
    case MahlerMethod::monte_carlo: return "monte_carlo";
  }
  return "?";
}

MahlerEstimate mahler_jensen(const LaurentPoly& f) {
  if (f.vars != 1) throw ValidationError("jensen: polynomial must have one variable");
  if (f.is_zero()) throw ValidationError("jensen: zero polynomial has no Mahler measure");

  long long emin = f.terms.begin()->first[0];
  long long emax = f.terms.rbegin()->first[0];
  int deg = int(emax - emin);

  // f = x^emin * p with p(0) != 0; the measure only sees p.
  std::vector<double> coeff(deg + 1, 0.0);
  for (const auto& [e, c] : f.terms) coeff[e[0] - emin] = c.get_d();
  const BigInt& lead = f.terms.rbegin()->second;

  MahlerEstimate est;
  est.method = MahlerMethod::jensen_roots;
  est.samples_or_grid = deg;
  est.value = log_abs(lead);
  est.error_bound = 1e-14 * double(deg + 1);
  if (deg == 0) return est;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeff[i] / coeff[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);

  auto horner = [&](std::complex<double> x, bool derivative) {
    std::complex<double> acc(0.0, 0.0);
    if (!derivative) {
      for (int k = deg; k >= 0; --k) acc = acc * x + coeff[k];
    } else {
      for (int k = deg; k >= 1; --k) acc = acc * x + double(k) * coeff[k];
    }
    return acc;
  };

  for (int i = 0; i < deg; ++i) {
    std::complex<double> root = solver.eigenvalues()(i);
    double mod = std::abs(root);
    if (mod > 1.0) est.value += std::log(mod);
    // Newton residual as a root-accuracy proxy.
    double resid = std::abs(horner(root, false)) /
                   std::max(std::abs(horner(root, true)), 1e-300);
    est.error_bound += std::min(resid, 1.0) / std::max(1.0, mod);
  }
  return est;
}

namespace {

double pow_ll(long long base, int exp, long long cap) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) {
    r *= double(base);
    if (r > double(cap)) return r;
  }
  return r;
}

struct GridResult {
  double mean = 0.0;
  long long dropped = 0;
};

// Midpoint mean of log|f| over the half-offset grid. Powers of the node
// coordinates are tabulated once per (term, axis).
GridResult grid_mean(const LaurentPoly& f, long long grid) {
  int d = f.vars;
  std::size_t nterms = f.terms.size();

  std::vector<double> coeffs(nterms);
  std::vector<std::vector<std::vector<std::complex<double>>>> table(
      nterms, std::vector<std::vector<std::complex<double>>>(d));
  {
    std::size_t t = 0;
    for (const auto& [e, c] : f.terms) {
      coeffs[t] = c.get_d();
      for (int k = 0; k < d; ++k) {
        auto& tab = table[t][k];
        tab.resize(grid);
        for (long long m = 0; m < grid; ++m) {
          double theta = (double(m) + 0.5) / double(grid);
          tab[m] = std::polar(1.0, 2.0 * std::numbers::pi * theta * double(e[k]));
        }
      }
      ++t;
    }
  }

  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= std::size_t(grid);

  constexpr std::size_t kChunks = 1024;
  std::size_t nchunks = std::min(kChunks, total);
  std::vector<double> chunk_sum(nchunks, 0.0);
  std::vector<long long> chunk_dropped(nchunks, 0);

  for_chunks(total, nchunks, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    double sum = 0.0;
    long long dropped = 0;
    std::vector<std::size_t> digit(d);
    for (std::size_t node = b; node < e; ++node) {
      std::size_t rest = node;
      for (int k = d - 1; k >= 0; --k) {
        digit[k] = rest % std::size_t(grid);
        rest /= std::size_t(grid);
      }
      std::complex<double> acc(0.0, 0.0);
      for (std::size_t t = 0; t < nterms; ++t) {
        std::complex<double> mono(coeffs[t], 0.0);
        for (int k = 0; k < d; ++k) mono *= table[t][k][digit[k]];
        acc += mono;
      }
      double n2 = std::norm(acc);
      if (n2 == 0.0) {
        ++dropped;
      } else {
        sum += 0.5 * std::log(n2);
      }
    }
    chunk_sum[chunk] = sum;
    chunk_dropped[chunk] = dropped;
  });

  GridResult out;
  for (long long dcount : chunk_dropped) out.dropped += dcount;
  double kept = double(total) - double(out.dropped);
  out.mean = kept > 0 ? pairwise_sum(chunk_sum) / kept : 0.0;
  return out;
}

}  // namespace

MahlerEstimate mahler_quadrature(const LaurentPoly& f, long long grid) {
  if (f.is_zero()) throw ValidationError("quadrature: zero polynomial has no Mahler measure");
  if (grid < 2) throw ValidationError("quadrature: grid must be at least 2 per axis");
  if (pow_ll(grid, f.vars, 100000000) > 1e8)
    throw ValidationError("quadrature: grid^vars exceeds 1e8 nodes");

  GridResult fine = grid_mean(f, grid);
  GridResult coarse = grid_mean(f, std::max<long long>(1, grid / 2));

  MahlerEstimate est;
  est.method = MahlerMethod::midpoint_grid;
  est.value = fine.mean;
  est.error_bound = std::fabs(fine.mean - coarse.mean);
  est.samples_or_grid = grid;
  return est;
}

MahlerEstimate mahler_monte_carlo(const LaurentPoly& f, long long samples, std::uint64_t seed) {
  if (f.is_zero()) throw ValidationError("monte carlo: zero polynomial has no Mahler measure");
  if (samples < 2) throw ValidationError("monte carlo: need at least 2 samples");
  if (samples > 1000000000) throw ValidationError("monte carlo: sample guard exceeded");

  std::mt19937_64 rng(seed);
  auto unit = [&] { return double(rng() >> 11) * 0x1.0p-53; };

  int d = f.vars;
  std::vector<std::complex<double>> point(d);
  constexpr std::size_t kChunk = 65536;
  std::vector<double> partials;
  double chunk_acc = 0.0, sq_acc = 0.0;
  std::size_t in_chunk = 0;
  long long kept = 0;

  for (long long s = 0; s < samples; ++s) {
    for (int k = 0; k < d; ++k)
      point[k] = std::polar(1.0, 2.0 * std::numbers::pi * unit());
    double mag = std::abs(evaluate(f, point));
    if (mag == 0.0) continue;
    double v = std::log(mag);
    chunk_acc += v;
    sq_acc += v * v;
    ++kept;
    if (++in_chunk == kChunk) {
      partials.push_back(chunk_acc);
      chunk_acc = 0.0;
      in_chunk = 0;
    }
  }
  if (in_chunk > 0) partials.push_back(chunk_acc);

  double mean = kept > 0 ? pairwise_sum(partials) / double(kept) : 0.0;
  double var = kept > 1 ? std::max(0.0, sq_acc / double(kept) - mean * mean) : 0.0;

  MahlerEstimate est;
  est.method = MahlerMethod::monte_carlo;
  est.value = mean;
  est.error_bound = kept > 1 ? 3.0 * std::sqrt(var / double(kept)) : HUGE_VAL;
  est.samples_or_grid = samples;
  return est;
}

namespace {

MahlerEstimate delta_measure(const PeriodicGraph& g, const LaurentPoly& delta, long long grid) {
  if (g.rank == 1) return mahler_jensen(delta);
  return mahler_quadrature(delta, grid);
}

}  // namespace

GrowthRateTable growth_rate_table(const PeriodicGraph& g, const std::vector<Sublattice>& lattices,
                                  long long mahler_grid) {
  auto zero = delta_is_zero(g);
  if (zero.zero)
    throw ValidationError(
        "growth rate: delta is identically zero (graph has a closed component orbit)");

  GrowthRateTable table;
  for (const Sublattice& lat : lattices) {
    FiniteMultigraph q = build_quotient(g, lat);
    ComplexityReport rep = spanning_tree_count(q);
    GrowthRateRow row;
    row.min_length = lat.min_length;
    row.index = lat.index;
    row.log_total = log_abs(rep.total);
    row.rate = row.log_total / lat.index.get_d();
    table.rows.push_back(std::move(row));
  }
  table.mahler = delta_measure(g, laplacian_matrix(g).delta, mahler_grid);
  return table;
}

std::vector<GridBoundRow> grid_bound_report(int rank_max, long long grid) {
  if (rank_max < 1 || rank_max > 4)
    throw ValidationError("grid bound report: rank must be between 1 and 4");
  std::vector<GridBoundRow> rows;
  double prev = -HUGE_VAL;
  for (int d = 1; d <= rank_max; ++d) {
    LaurentPoly delta = laplacian_matrix(grid_graph(d)).delta;
    GridBoundRow row;
    row.rank = d;
    row.measure = mahler_quadrature(delta, grid);
    row.log_2d = std::log(2.0 * d);
    row.deficit = row.log_2d - row.measure.value;
    row.nondecreasing = row.measure.value >= prev;
    prev = row.measure.value;
    rows.push_back(std::move(row));
  }
  return rows;
}

LaurentPoly gap_polynomial(int s) {
  if (s < 1) throw ValidationError("gap polynomial: s must be >= 1");
  LaurentPoly f = LaurentPoly::constant(1, 4);
  f = sub(f, LaurentPoly::monomial(1, {1}));
  f = sub(f, LaurentPoly::monomial(1, {-1}));
  f = sub(f, LaurentPoly::monomial(1, {s}));
  f = sub(f, LaurentPoly::monomial(1, {-s}));
  return f;
}

std::vector<GapRow> gap_report(int s_max) {
  if (s_max < 2) throw ValidationError("gap report: s_max must be >= 2");
  const double floor_log2 = std::log(2.0) - 1e-9;
  std::vector<GapRow> rows;
  for (int s = 2; s <= s_max; ++s) {
    MahlerEstimate est = mahler_jensen(gap_polynomial(s));
    GapRow row;
    row.s = s;
    row.value = est.value;
    row.error_bound = est.error_bound;
    row.at_least_log2 = est.value >= floor_log2;
    rows.push_back(row);
  }
  return rows;
}

RegularBoundReport regular_lower_bound_check(int rank, const Sublattice& lat) {
  PeriodicGraph g = grid_graph(rank);
  FiniteMultigraph q = build_quotient(g, lat);
  if (!is_connected(q))
    throw ValidationError("regular bound check: quotient must be connected");
  ComplexityReport rep = spanning_tree_count(q);

  RegularBoundReport out;
  out.rank = rank;
  out.index = lat.index;
  out.rate = log_abs(rep.total) / lat.index.get_d();
  out.log_2d = std::log(2.0 * rank);
  out.deficit = out.log_2d - out.rate;
  return out;
}

}  // namespace latspan

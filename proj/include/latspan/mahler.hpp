#pragma once

#include <cstdint>
#include <vector>

#include "latspan/laurent.hpp"
#include "latspan/periodic_graph.hpp"
#include "latspan/quotient.hpp"
#include "latspan/sublattice.hpp"

namespace latspan {

enum class MahlerMethod { jensen_roots, midpoint_grid, monte_carlo };

const char* method_name(MahlerMethod m);

/// Numeric logarithmic Mahler measure in nats. error_bound is a heuristic,
/// method-specific proxy: root residuals for jensen_roots, the half-grid
/// difference for midpoint_grid, three standard errors for monte_carlo.
struct MahlerEstimate {
  double value = 0.0;
  MahlerMethod method = MahlerMethod::midpoint_grid;
  double error_bound = 0.0;
  long long samples_or_grid = 0;
};

/// One-variable measure from the roots: write f = x^k p(x) and take
/// log|lead(p)| plus the log of every root modulus outside the unit circle.
/// Roots come from companion-matrix eigenvalues.
MahlerEstimate mahler_jensen(const LaurentPoly& f);

/// Midpoint rule with half-offset nodes (k + 1/2) / grid per axis, so no
/// node can land on the common zero at the all-ones point. Nodes where |f|
/// underflows to zero are dropped and counted. Guarded at grid^vars <= 1e8.
MahlerEstimate mahler_quadrature(const LaurentPoly& f, long long grid);

/// Seeded uniform sampling of the torus; the fallback when a grid is
/// infeasible (vars >= 4).
MahlerEstimate mahler_monte_carlo(const LaurentPoly& f, long long samples, std::uint64_t seed);

struct GrowthRateRow {
  double min_length = 0.0;
  BigInt index;
  double log_total = 0.0;  // exact log T of the quotient
  double rate = 0.0;       // log T / index
};

struct GrowthRateTable {
  std::vector<GrowthRateRow> rows;
  MahlerEstimate mahler;
};

/// Exact complexity growth data per lattice, with the Mahler estimate of
/// delta appended for comparison. Rejects graphs with identically zero
/// delta (closed component). mahler_grid sizes the quadrature when the
/// graph has rank >= 2; rank 1 uses the root method.
GrowthRateTable growth_rate_table(const PeriodicGraph& g, const std::vector<Sublattice>& lattices,
                                  long long mahler_grid);

struct GridBoundRow {
  int rank = 0;
  MahlerEstimate measure;
  double log_2d = 0.0;
  double deficit = 0.0;      // log 2d - measure
  bool nondecreasing = true; // measure >= previous row's measure
};

/// Grid-graph measures m(delta) for ranks 1..rank_max against the log 2d
/// ceiling, quadrature at `grid` nodes per axis.
std::vector<GridBoundRow> grid_bound_report(int rank_max, long long grid);

/// 4 - x - x^-1 - x^s - x^-s
LaurentPoly gap_polynomial(int s);

struct GapRow {
  int s = 0;
  double value = 0.0;
  double error_bound = 0.0;
  bool at_least_log2 = false;  // value >= log 2 - 1e-9
};

/// Root-method measures of the two-orbit family for s = 2..s_max; each is
/// checked against the log 2 floor.
std::vector<GapRow> gap_report(int s_max);

struct RegularBoundReport {
  int rank = 0;
  BigInt index;
  double rate = 0.0;     // log tau / index, exact count
  double log_2d = 0.0;
  double deficit = 0.0;  // log 2d - rate, nonnegative
};

/// Exact per-site complexity of a grid-graph quotient against the log 2d
/// regular-graph ceiling. Requires a connected quotient.
RegularBoundReport regular_lower_bound_check(int rank, const Sublattice& lat);

}  // namespace latspan

#pragma once

#include <complex>
#include <vector>

#include "latspan/periodic_graph.hpp"
#include "latspan/sublattice.hpp"

namespace latspan {

/// The character set of Z^d / lat on the unit torus: all c with c^v = 1 for
/// every lattice vector v. Exactly index(lat) points; contains (1, ..., 1).
struct OmegaSet {
  int rank = 0;
  std::vector<std::vector<std::complex<double>>> points;
};

/// Enumerates the characters through the Smith decomposition: mixed-radix
/// counters over the invariant factors pushed back through the left
/// transform. Every point is verified against the basis columns within
/// 1e-10. Guarded at index <= 10^6.
OmegaSet omega_points(const Sublattice& lat);

struct ProductFormulaResult {
  double log_value = 0.0;       // log of the tree count estimate
  double log_product = 0.0;     // log of the product over kept points
  BigInt n_vertex_product = 1;  // exact normalizer from the quotient graph
  long long points = 0;
  long long skipped = 0;        // near-zero evaluations left out
  double zero_threshold = 0.0;  // absolute cutoff actually applied

  /// exp(log_value); +inf once past double range.
  double value() const;
};

/// Roots-of-unity product formula for the complexity of the finite
/// quotient: (1 / n_vertex_product) * prod |delta(c)| over the characters
/// where |delta(c)| exceeds zero_tol_rel * max |delta(c)|. Accumulated in
/// log space with a fixed-shape reduction. Rejects graphs whose delta is
/// identically zero.
ProductFormulaResult product_formula(const PeriodicGraph& g, const Sublattice& lat,
                                     double zero_tol_rel = 1e-9);

}  // namespace latspan

#pragma once

#include <optional>

#include "latspan/laurent.hpp"
#include "latspan/periodic_graph.hpp"

namespace latspan {

/// Laplacian matrix of a periodic graph over the Laurent ring, and its
/// determinant delta. Row i carries the degree of vertex (i, 0) on the
/// diagonal (loop orbits excluded); an orbit (i, j, s) with i != j
/// subtracts x^s at (i, j) and x^-s at (j, i); a self-orbit (i, i, s) with
/// s != 0 adds 2 to the degree and subtracts x^s + x^-s at (i, i).
struct LaplacianData {
  LaurentMatrix matrix;
  LaurentPoly delta;
};

LaplacianData laplacian_matrix(const PeriodicGraph& g);

/// A cycle-rooted spanning forest of the quotient graph: every vertex
/// covered, each component carrying exactly one cycle. `forest` holds
/// indices into g.edge_orbits; one monodromy vector per component cycle,
/// listed in component order.
struct CrsfTerm {
  std::vector<int> forest;
  std::vector<std::vector<long long>> cycle_monodromies;
};

/// Exhaustive enumeration of the cycle-rooted spanning forests of the
/// quotient multigraph. Guarded at 16 edge orbits.
std::vector<CrsfTerm> enumerate_crsfs(const PeriodicGraph& g);

/// Sum over all CRSFs of prod over cycles of (2 - x^w - x^-w). Independent
/// route to the Laplacian determinant.
LaurentPoly crsf_polynomial(const PeriodicGraph& g);

struct DeltaZeroReport {
  bool zero = false;
  /// A closed component part, present when zero.
  std::optional<ComponentPart> witness;
};

/// Delta vanishes identically iff the graph has a closed (bounded)
/// component; decided structurally from the decomposition.
DeltaZeroReport delta_is_zero(const PeriodicGraph& g);

}  // namespace latspan

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latspan/intmat.hpp"

namespace latspan {

/// One orbit of edges under the translation action: an edge from vertex
/// (i, 0) to vertex (j, shift) together with all its translates.
/// Orbit indices are 1-based. Canonical orientation: i <= j, and for i == j
/// the first nonzero shift entry is positive.
struct EdgeOrbit {
  int from = 0;
  int to = 0;
  std::vector<long long> shift;

  bool operator==(const EdgeOrbit&) const = default;
};

/// Finite quotient description of a graph with cofinite free translation
/// symmetry of rank `rank`: `orbit_count` vertex orbits plus shift-labeled
/// edge orbits. Parallel orbits are distinct edges and appear as repeated
/// entries. Immutable after construction.
struct PeriodicGraph {
  int rank = 0;         // d
  int orbit_count = 0;  // n
  std::vector<EdgeOrbit> edge_orbits;
};

/// Validates, canonicalizes orientations, and sorts the orbit list.
PeriodicGraph make_periodic_graph(int rank, int orbit_count, std::vector<EdgeOrbit> edges);

/// The rank-d grid graph: one vertex orbit, one edge orbit per axis.
PeriodicGraph grid_graph(int rank);

/// Disjoint union; vertex orbits of b are shifted past those of a.
PeriodicGraph disjoint_union(const PeriodicGraph& a, const PeriodicGraph& b);

/// Restriction to a subset of vertex orbits (1-based, sorted); keeps the
/// edge orbits with both ends inside and reindexes them.
PeriodicGraph induced_subgraph(const PeriodicGraph& g, const std::vector<int>& orbits);

/// One connected component of the quotient graph together with the lattice
/// of cycle monodromies of that component.
struct ComponentPart {
  std::vector<int> orbits;  // 1-based, sorted
  IntMat monodromy_basis;   // rank x k, column Hermite form, k = monodromy rank
  bool closed = false;      // trivial monodromy: the component is bounded
  bool full_rank = false;   // monodromy rank == graph rank
};

struct ComponentOrbitDecomposition {
  std::vector<ComponentPart> parts;  // ordered by smallest orbit index
};

/// Connected components of the quotient graph with their monodromy
/// sublattices. Monodromies are measured against a DFS spanning-tree gauge;
/// the Hermite form makes the result independent of that choice.
ComponentOrbitDecomposition decompose(const PeriodicGraph& g);

/// Plain-text graph files. Grammar (one directive per line, '#' comments):
///   d <rank>
///   n <orbit count>
///   edge <i> <j> <s_1> ... <s_d>
/// The writer emits canonical orientation in sorted order.
PeriodicGraph read_graph(std::istream& in);
PeriodicGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const PeriodicGraph& g);

}  // namespace latspan

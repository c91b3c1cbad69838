#pragma once

#include <string>
#include <vector>

#include "latspan/bigint.hpp"
#include "latspan/periodic_graph.hpp"
#include "latspan/sublattice.hpp"

namespace latspan {

/// Finite multigraph with exact edge multiplicities. Loops are recorded per
/// vertex and ignored by every Laplacian-based computation.
struct FiniteMultigraph {
  int vertex_count = 0;
  std::vector<std::vector<long long>> adjacency;  // symmetric, zero diagonal
  std::vector<long long> loops;
  std::vector<std::string> labels;  // optional, for CLI output

  long long degree(int v) const;      // loop-free degree
  long long edge_count() const;       // loop-free, with multiplicity
};

FiniteMultigraph make_multigraph(int vertices);
void add_edge(FiniteMultigraph& h, int u, int v, long long multiplicity = 1);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
/// Isolated vertices are their own components.
std::vector<std::vector<int>> connected_components(const FiniteMultigraph& h);
bool is_connected(const FiniteMultigraph& h);

/// The finite quotient of g by lat: one vertex per (orbit, coset), one edge
/// per (edge orbit, coset) with the shifted endpoint reduced into the coset
/// box. Guarded at 4096 vertices.
FiniteMultigraph build_quotient(const PeriodicGraph& g, const Sublattice& lat);

/// Exact spanning-tree census. tau_per_component follows component order;
/// total is the product; n_vertex_product multiplies the component vertex
/// counts (the normalizer of the spectral product formula).
struct ComplexityReport {
  std::vector<BigInt> tau_per_component;
  BigInt total = 1;
  BigInt n_vertex_product = 1;
};

/// Matrix-Tree count per component: delete one row/column of the integer
/// Laplacian and take the exact fraction-free determinant. An isolated
/// vertex counts 1.
ComplexityReport spanning_tree_count(const FiniteMultigraph& h);

/// Exponential-time oracle: tau(G) = tau(G minus e) + tau(G contract e),
/// multiplicity-aware, loops discarded. Requires a connected graph with at
/// most 24 non-loop edges.
BigInt tau_deletion_contraction(const FiniteMultigraph& h);

/// (1 / n_vertex_product) * product of the nonzero Laplacian eigenvalues,
/// the zero ones being identified as the k smallest where k is the exact
/// component count.
double eigenvalue_product(const FiniteMultigraph& h);

/// Checks tau <= ((2|E| - maxdeg) / (|V| - 1))^(|V| - 1) for a connected
/// graph, by exact integer comparison. Loops play no part.
bool upper_bound_check(const FiniteMultigraph& h);

}  // namespace latspan

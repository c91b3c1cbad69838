#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "latspan/errors.hpp"
#include "latspan/laplacian.hpp"
#include "latspan/quotient.hpp"

using namespace latspan;
using testgen::complete_graph;
using testgen::cycle_graph;

TEST_CASE("quotients of the line") {
  PeriodicGraph g1 = grid_graph(1);

  // Wrap-around identification: C_n for n >= 3.
  FiniteMultigraph c5 = build_quotient(g1, diagonal_lattice(1, 5));
  CHECK(c5.vertex_count == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(is_connected(c5));

  // n = 2 collapses to a doubled edge.
  FiniteMultigraph c2 = build_quotient(g1, diagonal_lattice(1, 2));
  CHECK(c2.vertex_count == 2);
  CHECK(c2.adjacency[0][1] == 2);

  // n = 1 collapses to a loop on one vertex.
  FiniteMultigraph c1 = build_quotient(g1, diagonal_lattice(1, 1));
  CHECK(c1.vertex_count == 1);
  CHECK(c1.loops[0] == 1);
  CHECK(spanning_tree_count(c1).total == 1);
}

TEST_CASE("quotients of the plane grid") {
  PeriodicGraph g2 = grid_graph(2);

  FiniteMultigraph t2 = build_quotient(g2, diagonal_lattice(2, 2));
  CHECK(t2.vertex_count == 4);
  for (int v = 0; v < 4; ++v) CHECK(t2.degree(v) == 4);  // doubled wrap edges

  FiniteMultigraph t4 = build_quotient(g2, diagonal_lattice(2, 4));
  CHECK(t4.vertex_count == 16);
  for (int v = 0; v < 16; ++v) CHECK(t4.degree(v) == 4);
  CHECK(is_connected(t4));
}

TEST_CASE("spanning tree counts, closed forms") {
  // Complete graphs: n^(n-2).
  for (int n = 3; n <= 8; ++n) {
    BigInt expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), (unsigned long)n, (unsigned long)(n - 2));
    CHECK(spanning_tree_count(complete_graph(n)).total == expect);
  }
  // Cycles: n, cross-checked against deletion-contraction below.
  for (int n = 1; n <= 12; ++n)
    CHECK(spanning_tree_count(cycle_graph(n)).total == (n == 1 ? 1 : n));

  // Two disjoint triangles.
  FiniteMultigraph two = make_multigraph(6);
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i) add_edge(two, base + i, base + (i + 1) % 3);
  auto rep = spanning_tree_count(two);
  CHECK(rep.total == 9);
  CHECK(rep.n_vertex_product == 9);
  CHECK(rep.tau_per_component == std::vector<BigInt>{3, 3});
}

TEST_CASE("deletion-contraction oracle") {
  FiniteMultigraph k2 = make_multigraph(2);
  add_edge(k2, 0, 1);
  CHECK(tau_deletion_contraction(k2) == 1);

  FiniteMultigraph doubled = make_multigraph(2);
  add_edge(doubled, 0, 1, 2);
  CHECK(tau_deletion_contraction(doubled) == 2);

  CHECK(tau_deletion_contraction(complete_graph(4)) == 16);

  FiniteMultigraph split = make_multigraph(4);
  add_edge(split, 0, 1);
  add_edge(split, 2, 3);
  CHECK_THROWS_AS(tau_deletion_contraction(split), ValidationError);
}

TEST_CASE("eigenvalue product, closed forms") {
  FiniteMultigraph k2 = make_multigraph(2);
  add_edge(k2, 0, 1);
  CHECK(eigenvalue_product(k2) == doctest::Approx(1.0));

  // C_4: nonzero eigenvalues 2, 4, 2.
  CHECK(eigenvalue_product(cycle_graph(4)) == doctest::Approx(4.0));

  FiniteMultigraph two_k2 = make_multigraph(4);
  add_edge(two_k2, 0, 1);
  add_edge(two_k2, 2, 3);
  CHECK(eigenvalue_product(two_k2) == doctest::Approx(1.0));
}

TEST_CASE("upper bound, worked instances") {
  CHECK(upper_bound_check(complete_graph(5)));  // 125 <= (16/4)^4
  CHECK(upper_bound_check(cycle_graph(4)));     // 4 <= (7/3)^3
  FiniteMultigraph k2 = make_multigraph(2);
  add_edge(k2, 0, 1);
  CHECK(upper_bound_check(k2));  // equality: 1 <= 1
}

TEST_CASE("three counting routes agree on random multigraphs") {
  testgen::Rng rng(192837);
  for (int iter = 0; iter < 40; ++iter) {
    FiniteMultigraph h = testgen::random_connected_multigraph(rng);
    auto rep = spanning_tree_count(h);
    CHECK(rep.total == tau_deletion_contraction(h));

    double ev = eigenvalue_product(h);
    double exact = std::exp(log_abs(rep.total));
    CHECK(std::fabs(ev - exact) / exact < 1e-8);

    CHECK(upper_bound_check(h));
  }
}

TEST_CASE("quotient vertex counts multiply for connected graphs") {
  testgen::Rng rng(56565);
  PeriodicGraph g2 = grid_graph(2);
  for (long long n : {1, 2, 3, 5}) {
    FiniteMultigraph q = build_quotient(g2, diagonal_lattice(2, n));
    auto rep = spanning_tree_count(q);
    CHECK(rep.n_vertex_product == BigInt(n * n));  // one orbit, connected
  }

  // Degenerate symmetry: the quotient splits into n copies of C_n.
  PeriodicGraph no_vertical = make_periodic_graph(2, 1, {{1, 1, {1, 0}}});
  FiniteMultigraph q = build_quotient(no_vertical, diagonal_lattice(2, 4));
  auto comps = connected_components(q);
  CHECK(comps.size() == 4);
  auto rep = spanning_tree_count(q);
  CHECK(rep.total == BigInt(4 * 4 * 4 * 4));
  CHECK(rep.tau_per_component == std::vector<BigInt>(4, BigInt(4)));
}

TEST_CASE("quotient guards") {
  CHECK_THROWS_AS(build_quotient(grid_graph(2), diagonal_lattice(2, 100)), ValidationError);
  CHECK_THROWS_AS(build_quotient(grid_graph(2), diagonal_lattice(1, 4)), ValidationError);
}

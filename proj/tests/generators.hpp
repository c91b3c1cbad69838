#pragma once

// Seeded generators for property tests. Raw mt19937_64 output is mapped to
// ranges by hand so the streams do not depend on the standard library's
// distribution implementations.

#include <random>
#include <vector>

#include "latspan/laurent.hpp"
#include "latspan/periodic_graph.hpp"
#include "latspan/quotient.hpp"

namespace latspan::testgen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  long long range(long long lo, long long hi) {  // inclusive
    return lo + (long long)(rng_() % (unsigned long long)(hi - lo + 1));
  }
  bool coin() { return (rng_() & 1) != 0; }

 private:
  std::mt19937_64 rng_;
};

inline LaurentPoly random_poly(Rng& rng, int vars, int max_terms, long long max_exp,
                               long long max_coeff) {
  LaurentPoly f = LaurentPoly::zero(vars);
  int nterms = int(rng.range(0, max_terms));
  for (int t = 0; t < nterms; ++t) {
    ExpVec e(vars);
    for (int k = 0; k < vars; ++k) e[k] = rng.range(-max_exp, max_exp);
    long long c = rng.range(-max_coeff, max_coeff);
    f = add(f, LaurentPoly::monomial(vars, e, c));
  }
  return f;
}

inline PeriodicGraph random_periodic_graph(Rng& rng, int max_rank = 2, int max_orbits = 3,
                                           int max_edges = 5, long long max_shift = 2) {
  int rank = int(rng.range(1, max_rank));
  int orbits = int(rng.range(1, max_orbits));
  int edges = int(rng.range(0, max_edges));
  std::vector<EdgeOrbit> list;
  for (int t = 0; t < edges; ++t) {
    EdgeOrbit e;
    e.from = int(rng.range(1, orbits));
    e.to = int(rng.range(1, orbits));
    e.shift.resize(rank);
    for (int k = 0; k < rank; ++k) e.shift[k] = rng.range(-max_shift, max_shift);
    list.push_back(std::move(e));
  }
  return make_periodic_graph(rank, orbits, std::move(list));
}

/// Connected multigraph: a random spanning tree plus extra random edges,
/// multiplicities included, occasional loops.
inline FiniteMultigraph random_connected_multigraph(Rng& rng, int max_vertices = 10,
                                                    int max_edges = 24) {
  int n = int(rng.range(2, max_vertices));
  FiniteMultigraph h = make_multigraph(n);
  long long used = 0;
  for (int v = 1; v < n; ++v) {
    add_edge(h, int(rng.range(0, v - 1)), v);
    ++used;
  }
  long long extra = rng.range(0, max_edges - used);
  for (long long t = 0; t < extra; ++t) {
    int u = int(rng.range(0, n - 1)), v = int(rng.range(0, n - 1));
    if (u == v) {
      if (rng.coin()) add_edge(h, u, u);  // loop, sometimes
      continue;
    }
    add_edge(h, u, v);
  }
  return h;
}

inline FiniteMultigraph complete_graph(int n) {
  FiniteMultigraph h = make_multigraph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) add_edge(h, u, v);
  return h;
}

inline FiniteMultigraph cycle_graph(int n) {
  FiniteMultigraph h = make_multigraph(n);
  for (int v = 0; v < n; ++v) add_edge(h, v, (v + 1) % n);
  return h;
}

}  // namespace latspan::testgen

#include "latspan/laplacian.hpp"

#include <algorithm>
#include <numeric>

#include "latspan/errors.hpp"

namespace latspan {

LaplacianData laplacian_matrix(const PeriodicGraph& g) {
  int n = g.orbit_count;
  LaurentMatrix L(n, g.rank);

  auto add_to = [&](int i, int j, const LaurentPoly& p) { L.at(i, j) = add(L.at(i, j), p); };

  for (const EdgeOrbit& e : g.edge_orbits) {
    int i = e.from - 1, j = e.to - 1;
    bool zero_shift = std::all_of(e.shift.begin(), e.shift.end(),
                                  [](long long s) { return s == 0; });
    if (i == j && zero_shift) continue;  // loop orbit: no Laplacian contribution

    ExpVec s(e.shift.begin(), e.shift.end());
    ExpVec ns(g.rank);
    for (int k = 0; k < g.rank; ++k) ns[k] = -s[k];
    if (i == j) {
      // Self-orbit: both orientations touch the same row.
      add_to(i, i, LaurentPoly::constant(g.rank, 2));
      add_to(i, i, LaurentPoly::monomial(g.rank, s, -1));
      add_to(i, i, LaurentPoly::monomial(g.rank, ns, -1));
    } else {
      add_to(i, i, LaurentPoly::constant(g.rank, 1));
      add_to(j, j, LaurentPoly::constant(g.rank, 1));
      add_to(i, j, LaurentPoly::monomial(g.rank, s, -1));
      add_to(j, i, LaurentPoly::monomial(g.rank, ns, -1));
    }
  }

  LaplacianData out;
  out.delta = determinant(L);
  out.matrix = std::move(L);
  return out;
}

namespace {

struct QuotientEdge {
  int u, v;                      // 0-based quotient vertices
  std::vector<long long> shift;  // oriented u -> v
};

// The unique cycle of a unicyclic edge set: prune degree-1 vertices, then
// walk the survivors, summing shifts with orientation.
std::vector<long long> cycle_monodromy(const std::vector<QuotientEdge>& edges,
                                       const std::vector<int>& chosen, int rank) {
  std::vector<char> alive(chosen.size(), 1);
  int maxv = 0;
  for (int t : chosen) maxv = std::max({maxv, edges[t].u, edges[t].v});
  std::vector<int> degree(maxv + 1, 0);
  for (int t : chosen) {
    degree[edges[t].u] += 1;
    degree[edges[t].v] += 1;  // a loop counts twice
  }

  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (std::size_t t = 0; t < chosen.size(); ++t) {
      if (!alive[t]) continue;
      const QuotientEdge& e = edges[chosen[t]];
      if (e.u != e.v && (degree[e.u] == 1 || degree[e.v] == 1)) {
        alive[t] = 0;
        degree[e.u] -= 1;
        degree[e.v] -= 1;
        pruned = true;
      }
    }
  }

  // Walk the remaining cycle starting anywhere on it.
  int start = -1;
  for (std::size_t t = 0; t < chosen.size(); ++t)
    if (alive[t]) {
      start = edges[chosen[t]].u;
      break;
    }
  std::vector<long long> w(rank, 0);
  if (start < 0) return w;  // cannot happen for a unicyclic component

  int here = start;
  int last_edge = -1;
  do {
    int next_t = -1;
    for (std::size_t t = 0; t < chosen.size(); ++t) {
      if (!alive[t] || int(t) == last_edge) continue;
      const QuotientEdge& e = edges[chosen[t]];
      if (e.u == here || e.v == here) {
        next_t = int(t);
        break;
      }
    }
    const QuotientEdge& e = edges[chosen[next_t]];
    if (e.u == here) {
      for (int k = 0; k < rank; ++k) w[k] += e.shift[k];
      here = e.v;
    } else {
      for (int k = 0; k < rank; ++k) w[k] -= e.shift[k];
      here = e.u;
    }
    last_edge = next_t;
  } while (here != start);
  return w;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<CrsfTerm> enumerate_crsfs(const PeriodicGraph& g) {
  int m = int(g.edge_orbits.size());
  int n = g.orbit_count;
  if (m > 16) throw ValidationError("crsf enumeration: more than 16 edge orbits");

  std::vector<QuotientEdge> edges(m);
  for (int t = 0; t < m; ++t) {
    edges[t].u = g.edge_orbits[t].from - 1;
    edges[t].v = g.edge_orbits[t].to - 1;
    edges[t].shift = g.edge_orbits[t].shift;
  }

  std::vector<CrsfTerm> out;
  if (m < n) return out;

  // Every CRSF has exactly n edges: each component carries as many edges as
  // vertices. Walk all n-subsets and keep those whose components balance.
  std::vector<int> chosen(n);
  std::iota(chosen.begin(), chosen.end(), 0);
  for (;;) {
    UnionFind uf(n);
    for (int t : chosen) uf.unite(edges[t].u, edges[t].v);
    std::vector<int> vcount(n, 0), ecount(n, 0);
    for (int v = 0; v < n; ++v) vcount[uf.find(v)] += 1;
    for (int t : chosen) ecount[uf.find(edges[t].u)] += 1;
    bool balanced = true;
    for (int v = 0; v < n && balanced; ++v)
      if (vcount[v] != ecount[v]) balanced = false;

    if (balanced) {
      CrsfTerm term;
      term.forest = chosen;
      // One cycle per component, reported in root order.
      std::vector<int> roots;
      for (int v = 0; v < n; ++v)
        if (vcount[v] > 0) roots.push_back(v);
      for (int r : roots) {
        std::vector<int> comp_edges;
        for (int t : chosen)
          if (uf.find(edges[t].u) == r) comp_edges.push_back(t);
        term.cycle_monodromies.push_back(cycle_monodromy(edges, comp_edges, g.rank));
      }
      out.push_back(std::move(term));
    }

    // next n-combination of {0..m-1}
    int i = n - 1;
    while (i >= 0 && chosen[i] == m - n + i) --i;
    if (i < 0) break;
    ++chosen[i];
    for (int k = i + 1; k < n; ++k) chosen[k] = chosen[k - 1] + 1;
  }
  return out;
}

LaurentPoly crsf_polynomial(const PeriodicGraph& g) {
  LaurentPoly total = LaurentPoly::zero(g.rank);
  for (const CrsfTerm& term : enumerate_crsfs(g)) {
    LaurentPoly prod = LaurentPoly::constant(g.rank, 1);
    for (const auto& w : term.cycle_monodromies) {
      ExpVec e(w.begin(), w.end());
      ExpVec ne(g.rank);
      for (int k = 0; k < g.rank; ++k) ne[k] = -e[k];
      LaurentPoly cyc = LaurentPoly::constant(g.rank, 2);
      cyc = sub(cyc, LaurentPoly::monomial(g.rank, e));
      cyc = sub(cyc, LaurentPoly::monomial(g.rank, ne));
      prod = mul(prod, cyc);
    }
    total = add(total, prod);
  }
  return total;
}

DeltaZeroReport delta_is_zero(const PeriodicGraph& g) {
  DeltaZeroReport rep;
  for (const ComponentPart& part : decompose(g).parts) {
    if (part.closed) {
      rep.zero = true;
      rep.witness = part;
      return rep;
    }
  }
  return rep;
}

}  // namespace latspan

#include "latspan/quotient.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <sstream>

#include "latspan/errors.hpp"

namespace latspan {

long long FiniteMultigraph::degree(int v) const {
  long long d = 0;
  for (long long m : adjacency[v]) d += m;
  return d;
}

long long FiniteMultigraph::edge_count() const {
  long long e = 0;
  for (int u = 0; u < vertex_count; ++u)
    for (int v = u + 1; v < vertex_count; ++v) e += adjacency[u][v];
  return e;
}

FiniteMultigraph make_multigraph(int vertices) {
  FiniteMultigraph h;
  h.vertex_count = vertices;
  h.adjacency.assign(vertices, std::vector<long long>(vertices, 0));
  h.loops.assign(vertices, 0);
  return h;
}

void add_edge(FiniteMultigraph& h, int u, int v, long long multiplicity) {
  if (u == v) {
    h.loops[u] += multiplicity;
    return;
  }
  h.adjacency[u][v] += multiplicity;
  h.adjacency[v][u] += multiplicity;
}

std::vector<std::vector<int>> connected_components(const FiniteMultigraph& h) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(h.vertex_count, 0);
  for (int s = 0; s < h.vertex_count; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < h.vertex_count; ++w)
        if (h.adjacency[v][w] > 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const FiniteMultigraph& h) {
  return h.vertex_count <= 1 || connected_components(h).size() == 1;
}

FiniteMultigraph build_quotient(const PeriodicGraph& g, const Sublattice& lat) {
  if (g.rank != lat.rank) throw ValidationError("quotient: graph and lattice rank differ");
  auto reps = cosets(lat);
  long long vertices = (long long)g.orbit_count * (long long)reps.size();
  if (vertices > 4096) throw ValidationError("quotient: more than 4096 vertices");

  std::map<std::vector<long long>, int> rep_index;
  for (int c = 0; c < int(reps.size()); ++c) rep_index.emplace(reps[c], c);

  int C = int(reps.size());
  FiniteMultigraph h = make_multigraph(int(vertices));
  h.labels.resize(vertices);
  for (int o = 0; o < g.orbit_count; ++o)
    for (int c = 0; c < C; ++c) {
      std::ostringstream lab;
      lab << "v" << (o + 1) << "@(";
      for (int k = 0; k < lat.rank; ++k) lab << (k ? "," : "") << reps[c][k];
      lab << ")";
      h.labels[std::size_t(o) * C + c] = lab.str();
    }

  std::vector<long long> shifted(lat.rank);
  for (const EdgeOrbit& e : g.edge_orbits) {
    for (int c = 0; c < C; ++c) {
      for (int k = 0; k < lat.rank; ++k) shifted[k] = reps[c][k] + e.shift[k];
      int c2 = rep_index.at(reduce(lat, shifted));
      int u = (e.from - 1) * C + c;
      int v = (e.to - 1) * C + c2;
      add_edge(h, u, v);
    }
  }
  return h;
}

namespace {

// Fraction-free elimination on the packed upper triangle. The reduced
// Laplacian of a connected component is positive definite, so diagonal
// pivots stay positive; a zero pivot reports failure and the caller falls
// back to the general routine.
bool bareiss_symmetric(std::vector<BigInt>& a, int n, BigInt& det_out) {
  auto idx = [n](int i, int j) { return std::size_t(i) * n - std::size_t(i) * (i - 1) / 2 + (j - i); };
  if (n == 0) {
    det_out = 1;
    return true;
  }
  BigInt prev = 1, t1, t2;
  for (int k = 0; k + 1 < n; ++k) {
    const BigInt& piv = a[idx(k, k)];
    if (piv == 0) return false;
    for (int i = k + 1; i < n; ++i) {
      const BigInt& aki = a[idx(k, i)];
      for (int j = i; j < n; ++j) {
        BigInt& aij = a[idx(i, j)];
        mpz_mul(t1.get_mpz_t(), aij.get_mpz_t(), piv.get_mpz_t());
        mpz_mul(t2.get_mpz_t(), aki.get_mpz_t(), a[idx(k, j)].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(aij.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
  }
  det_out = a[idx(n - 1, n - 1)];
  return true;
}

BigInt component_tau(const FiniteMultigraph& h, const std::vector<int>& comp) {
  int s = int(comp.size());
  if (s <= 1) return 1;
  int n = s - 1;  // delete the last vertex's row and column

  std::vector<BigInt> packed(std::size_t(n) * (n + 1) / 2);
  auto idx = [n](int i, int j) { return std::size_t(i) * n - std::size_t(i) * (i - 1) / 2 + (j - i); };
  for (int i = 0; i < n; ++i) {
    packed[idx(i, i)] = h.degree(comp[i]);
    for (int j = i + 1; j < n; ++j) packed[idx(i, j)] = -h.adjacency[comp[i]][comp[j]];
  }

  BigInt det;
  if (bareiss_symmetric(packed, n, det)) return det;

  IntMat m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = h.degree(comp[i]);
    for (int j = 0; j < n; ++j)
      if (j != i) m.at(i, j) = -h.adjacency[comp[i]][comp[j]];
  }
  return bareiss_determinant(std::move(m));
}

}  // namespace

ComplexityReport spanning_tree_count(const FiniteMultigraph& h) {
  ComplexityReport rep;
  for (const auto& comp : connected_components(h)) {
    BigInt tau = component_tau(h, comp);
    rep.total *= tau;
    rep.n_vertex_product *= BigInt((unsigned long)comp.size());
    rep.tau_per_component.push_back(std::move(tau));
  }
  return rep;
}

namespace {

struct DcGraph {
  std::vector<int> vertices;                 // active vertex ids
  std::vector<std::vector<long long>> mult;  // dense over original ids
};

BigInt dc_count(DcGraph g);

BigInt dc_count(DcGraph g) {
  int n = int(g.vertices.size());
  if (n <= 1) return 1;

  // Connectivity over the active support.
  {
    std::vector<char> seen(g.mult.size(), 0);
    std::vector<int> stack{g.vertices[0]};
    seen[g.vertices[0]] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : g.vertices)
        if (!seen[w] && g.mult[v][w] > 0) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (reached != n) return 0;
  }

  // Count support edges; a spanning connected support that is a tree
  // contributes the product of its multiplicities.
  int support = 0;
  int eu = -1, ev = -1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int u = g.vertices[a], v = g.vertices[b];
      if (g.mult[u][v] > 0) {
        ++support;
        if (eu < 0) {
          eu = u;
          ev = v;
        }
      }
    }
  if (support == n - 1) {
    BigInt prod = 1;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (g.mult[g.vertices[a]][g.vertices[b]] > 0) prod *= g.mult[g.vertices[a]][g.vertices[b]];
    return prod;
  }

  long long k = g.mult[eu][ev];

  // Delete the whole parallel class ...
  DcGraph del = g;
  del.mult[eu][ev] = del.mult[ev][eu] = 0;
  BigInt total = dc_count(std::move(del));

  // ... and contract it (k ways), merging ev into eu.
  DcGraph con = std::move(g);
  con.mult[eu][ev] = con.mult[ev][eu] = 0;
  for (int w : con.vertices) {
    if (w == eu || w == ev) continue;
    con.mult[eu][w] += con.mult[ev][w];
    con.mult[w][eu] = con.mult[eu][w];
    con.mult[ev][w] = con.mult[w][ev] = 0;
  }
  std::erase(con.vertices, ev);
  total += BigInt(k) * dc_count(std::move(con));
  return total;
}

}  // namespace

BigInt tau_deletion_contraction(const FiniteMultigraph& h) {
  if (!is_connected(h)) throw ValidationError("deletion-contraction: graph must be connected");
  if (h.edge_count() > 24)
    throw ValidationError("deletion-contraction: more than 24 edges (exponential oracle)");
  DcGraph g;
  g.vertices.resize(h.vertex_count);
  for (int v = 0; v < h.vertex_count; ++v) g.vertices[v] = v;
  g.mult = h.adjacency;  // loops never enter the recursion
  return dc_count(std::move(g));
}

double eigenvalue_product(const FiniteMultigraph& h) {
  int n = h.vertex_count;
  if (n == 0) return 1.0;
  auto comps = connected_components(h);

  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    L(i, i) = double(h.degree(i));
    for (int j = 0; j < n; ++j)
      if (j != i) L(i, j) = -double(h.adjacency[i][j]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending

  // Exactly one zero eigenvalue per component; drop the k smallest.
  double prod = 1.0;
  for (int i = int(comps.size()); i < n; ++i) prod *= ev(i);

  double n_product = 1.0;
  for (const auto& c : comps) n_product *= double(c.size());
  return prod / n_product;
}

bool upper_bound_check(const FiniteMultigraph& h) {
  if (!is_connected(h)) throw ValidationError("upper bound check: graph must be connected");
  int v = h.vertex_count;
  if (v <= 1) return true;

  BigInt tau = spanning_tree_count(h).total;
  long long edges = h.edge_count();
  long long maxdeg = 0;
  for (int i = 0; i < v; ++i) maxdeg = std::max(maxdeg, h.degree(i));

  // tau * (v-1)^(v-1) <= (2E - maxdeg)^(v-1), compared exactly.
  BigInt lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), (unsigned long)(v - 1), (unsigned long)(v - 1));
  lhs *= tau;
  BigInt base = 2 * edges - maxdeg;
  mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), (unsigned long)(v - 1));
  return lhs <= rhs;
}

}  // namespace latspan

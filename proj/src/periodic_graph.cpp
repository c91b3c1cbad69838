#include "latspan/periodic_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latspan/errors.hpp"

namespace latspan {

namespace {

EdgeOrbit canonicalize(EdgeOrbit e) {
  if (e.from > e.to) {
    std::swap(e.from, e.to);
    for (auto& s : e.shift) s = -s;
    return e;
  }
  if (e.from == e.to) {
    // Pick the orientation whose first nonzero shift entry is positive.
    for (auto s : e.shift) {
      if (s > 0) break;
      if (s < 0) {
        for (auto& x : e.shift) x = -x;
        break;
      }
    }
  }
  return e;
}

bool orbit_less(const EdgeOrbit& a, const EdgeOrbit& b) {
  if (a.from != b.from) return a.from < b.from;
  if (a.to != b.to) return a.to < b.to;
  return a.shift < b.shift;
}

}  // namespace

PeriodicGraph make_periodic_graph(int rank, int orbit_count, std::vector<EdgeOrbit> edges) {
  if (rank < 1) throw ValidationError("periodic graph: symmetry rank must be >= 1");
  if (orbit_count < 1) throw ValidationError("periodic graph: need at least one vertex orbit");
  for (auto& e : edges) {
    if (e.from < 1 || e.from > orbit_count || e.to < 1 || e.to > orbit_count)
      throw ValidationError("periodic graph: edge orbit index out of range");
    if (int(e.shift.size()) != rank)
      throw ValidationError("periodic graph: shift length != rank");
    e = canonicalize(std::move(e));
  }
  std::sort(edges.begin(), edges.end(), orbit_less);
  PeriodicGraph g;
  g.rank = rank;
  g.orbit_count = orbit_count;
  g.edge_orbits = std::move(edges);
  return g;
}

PeriodicGraph grid_graph(int rank) {
  if (rank < 1) throw ValidationError("grid graph: rank must be >= 1");
  std::vector<EdgeOrbit> edges;
  for (int k = 0; k < rank; ++k) {
    EdgeOrbit e;
    e.from = e.to = 1;
    e.shift.assign(rank, 0);
    e.shift[k] = 1;
    edges.push_back(std::move(e));
  }
  return make_periodic_graph(rank, 1, std::move(edges));
}

PeriodicGraph disjoint_union(const PeriodicGraph& a, const PeriodicGraph& b) {
  if (a.rank != b.rank) throw ValidationError("disjoint union: rank mismatch");
  std::vector<EdgeOrbit> edges = a.edge_orbits;
  for (EdgeOrbit e : b.edge_orbits) {
    e.from += a.orbit_count;
    e.to += a.orbit_count;
    edges.push_back(std::move(e));
  }
  return make_periodic_graph(a.rank, a.orbit_count + b.orbit_count, std::move(edges));
}

PeriodicGraph induced_subgraph(const PeriodicGraph& g, const std::vector<int>& orbits) {
  std::vector<int> remap(g.orbit_count + 1, 0);
  int next = 1;
  for (int o : orbits) {
    if (o < 1 || o > g.orbit_count) throw ValidationError("induced subgraph: orbit out of range");
    remap[o] = next++;
  }
  std::vector<EdgeOrbit> edges;
  for (EdgeOrbit e : g.edge_orbits) {
    if (remap[e.from] == 0 || remap[e.to] == 0) continue;
    e.from = remap[e.from];
    e.to = remap[e.to];
    edges.push_back(std::move(e));
  }
  return make_periodic_graph(g.rank, int(orbits.size()), std::move(edges));
}

ComponentOrbitDecomposition decompose(const PeriodicGraph& g) {
  int n = g.orbit_count;
  std::vector<std::vector<int>> incident(n + 1);  // orbit -> edge indices
  for (int idx = 0; idx < int(g.edge_orbits.size()); ++idx) {
    incident[g.edge_orbits[idx].from].push_back(idx);
    if (g.edge_orbits[idx].to != g.edge_orbits[idx].from)
      incident[g.edge_orbits[idx].to].push_back(idx);
  }

  std::vector<int> part_of(n + 1, 0);
  std::vector<std::vector<long long>> gauge(n + 1);
  std::vector<char> edge_in_tree(g.edge_orbits.size(), 0);
  ComponentOrbitDecomposition out;

  for (int root = 1; root <= n; ++root) {
    if (part_of[root] != 0) continue;
    int part_id = int(out.parts.size()) + 1;
    ComponentPart part;

    // DFS spanning tree; the gauge carries the accumulated shift from root.
    std::vector<int> stack{root};
    part_of[root] = part_id;
    gauge[root].assign(g.rank, 0);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      part.orbits.push_back(v);
      for (int idx : incident[v]) {
        const EdgeOrbit& e = g.edge_orbits[idx];
        int w = e.from == v ? e.to : e.from;
        if (part_of[w] != 0) continue;
        part_of[w] = part_id;
        gauge[w] = gauge[v];
        for (int k = 0; k < g.rank; ++k)
          gauge[w][k] += (e.from == v ? e.shift[k] : -e.shift[k]);
        edge_in_tree[idx] = 1;
        stack.push_back(w);
      }
    }
    std::sort(part.orbits.begin(), part.orbits.end());
    out.parts.push_back(std::move(part));
  }

  // Non-tree edges close cycles; their gauge-corrected shifts generate the
  // monodromy lattice of each part.
  std::vector<std::vector<std::vector<long long>>> generators(out.parts.size());
  for (int idx = 0; idx < int(g.edge_orbits.size()); ++idx) {
    if (edge_in_tree[idx]) continue;
    const EdgeOrbit& e = g.edge_orbits[idx];
    std::vector<long long> w(g.rank);
    for (int k = 0; k < g.rank; ++k) w[k] = gauge[e.from][k] + e.shift[k] - gauge[e.to][k];
    if (std::all_of(w.begin(), w.end(), [](long long x) { return x == 0; })) continue;
    generators[part_of[e.from] - 1].push_back(std::move(w));
  }

  for (std::size_t p = 0; p < out.parts.size(); ++p) {
    const auto& gens = generators[p];
    IntMat m(g.rank, int(gens.size()));
    for (int j = 0; j < int(gens.size()); ++j)
      for (int k = 0; k < g.rank; ++k) m.at(k, j) = gens[j][k];
    IntMat h = hermite_column_form(std::move(m));
    out.parts[p].monodromy_basis = h;
    out.parts[p].closed = h.cols() == 0;
    out.parts[p].full_rank = h.cols() == g.rank;
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  std::ostringstream os;
  os << "graph file line " << line << ": " << what;
  throw ValidationError(os.str());
}

}  // namespace

PeriodicGraph read_graph(std::istream& in) {
  int rank = -1, orbit_count = -1;
  std::vector<EdgeOrbit> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string key;
    if (!(is >> key)) continue;
    if (key == "d") {
      if (!(is >> rank) || rank < 1) parse_fail(lineno, "expected positive integer after 'd'");
    } else if (key == "n") {
      if (!(is >> orbit_count) || orbit_count < 1)
        parse_fail(lineno, "expected positive integer after 'n'");
    } else if (key == "edge") {
      if (rank < 0) parse_fail(lineno, "'edge' before 'd'");
      EdgeOrbit e;
      if (!(is >> e.from >> e.to)) parse_fail(lineno, "expected 'edge i j s_1 .. s_d'");
      e.shift.resize(rank);
      for (int k = 0; k < rank; ++k)
        if (!(is >> e.shift[k])) parse_fail(lineno, "shift entry count != d");
      long long extra;
      if (is >> extra) parse_fail(lineno, "trailing tokens after shift");
      edges.push_back(std::move(e));
    } else {
      parse_fail(lineno, "unknown directive '" + key + "'");
    }
  }
  if (rank < 0) throw ValidationError("graph file: missing 'd' line");
  if (orbit_count < 0) throw ValidationError("graph file: missing 'n' line");
  return make_periodic_graph(rank, orbit_count, std::move(edges));
}

PeriodicGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const PeriodicGraph& g) {
  out << "d " << g.rank << "\n";
  out << "n " << g.orbit_count << "\n";
  for (const auto& e : g.edge_orbits) {
    out << "edge " << e.from << " " << e.to;
    for (long long s : e.shift) out << " " << s;
    out << "\n";
  }
}

}  // namespace latspan

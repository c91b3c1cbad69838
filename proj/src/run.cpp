#include "latspan/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "latspan/errors.hpp"
#include "latspan/laplacian.hpp"
#include "latspan/mahler.hpp"
#include "latspan/parallel.hpp"
#include "latspan/quotient.hpp"
#include "latspan/spectral.hpp"

namespace latspan {

namespace {

std::string fmt(double x, bool csv) {
  char buf[64];
  std::snprintf(buf, sizeof buf, csv ? "%.17g" : "%.10g", x);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct LogUnit {
  bool bits = false;
  double scale() const { return bits ? 1.0 / std::log(2.0) : 1.0; }
  std::string col(const std::string& base) const { return bits ? base + "_bits" : base; }
};

PeriodicGraph load_graph(const RunConfig& cfg) {
  if (cfg.graph_path.empty()) throw ValidationError("no graph file given");
  PeriodicGraph g = read_graph_file(cfg.graph_path);
  // Desk-scale caps at the CLI boundary only; the library has no hard limit.
  if (g.rank > 8) throw ValidationError("graph rank above the CLI cap of 8");
  if (g.orbit_count > 64) throw ValidationError("graph has more than 64 vertex orbits");
  return g;
}

Sublattice load_lattice(const RunConfig& cfg, int rank) {
  Sublattice lat = cfg.diag > 0 ? diagonal_lattice(rank, cfg.diag)
                                : !cfg.lattice_spec.empty()
                                      ? parse_lattice(rank, cfg.lattice_spec)
                                      : throw ValidationError("no lattice given (--lattice or --diag)");
  if (lat.index > cfg.max_index) throw ValidationError("lattice index exceeds --max-index");
  return lat;
}

void check_grid(const RunConfig& cfg, int rank) {
  double nodes = 1.0;
  for (int i = 0; i < rank; ++i) nodes *= double(cfg.grid);
  if (nodes > double(cfg.max_grid)) throw ValidationError("grid^rank exceeds --max-grid");
}

int cmd_delta(const RunConfig& cfg, std::ostream& out) {
  PeriodicGraph g = load_graph(cfg);
  LaplacianData lap = laplacian_matrix(g);
  auto parts = decompose(g).parts;

  out << "delta = " << to_string(lap.delta) << "\n";
  out << "zero: " << yes_no(lap.delta.is_zero()) << "\n";
  out << "reciprocal_symmetric: " << yes_no(reciprocal(lap.delta) == lap.delta) << "\n";
  out << "parts: " << parts.size() << "\n";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    LaurentPoly dp = laplacian_matrix(induced_subgraph(g, part.orbits)).delta;
    out << "part " << (p + 1) << ": orbits =";
    for (int o : part.orbits) out << " " << o;
    out << "; closed = " << yes_no(part.closed) << "; full_rank = " << yes_no(part.full_rank)
        << "; delta = " << to_string(dp) << "\n";
  }
  return 0;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  PeriodicGraph g = load_graph(cfg);
  Sublattice lat = load_lattice(cfg, g.rank);

  auto t0 = std::chrono::steady_clock::now();
  FiniteMultigraph q = build_quotient(g, lat);
  auto comps = connected_components(q);
  ComplexityReport rep = spanning_tree_count(q);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  bool csv = cfg.format == OutputFormat::csv;
  if (csv) {
    out << "record,component,vertices,value\n";
    for (std::size_t i = 0; i < rep.tau_per_component.size(); ++i)
      out << "tau," << (i + 1) << "," << comps[i].size() << ","
          << rep.tau_per_component[i].get_str() << "\n";
    out << "T,,," << rep.total.get_str() << "\n";
    out << "n_vertex_product,,," << rep.n_vertex_product.get_str() << "\n";
  } else {
    out << "vertices: " << q.vertex_count << "\n";
    out << "components: " << comps.size() << "\n";
    for (std::size_t i = 0; i < rep.tau_per_component.size(); ++i)
      out << "tau[" << (i + 1) << "] = " << rep.tau_per_component[i].get_str() << " ("
          << comps[i].size() << " vertices)\n";
    out << "T = " << rep.total.get_str() << "\n";
    out << "n_vertex_product = " << rep.n_vertex_product.get_str() << "\n";
  }
  err << "time_ms: " << fmt(ms, false) << "\n";

  if (cfg.oracle) {
    bool ok = true;
    if (comps.size() == 1 && q.edge_count() <= 24) {
      BigInt dc = tau_deletion_contraction(q);
      bool match = dc == rep.total;
      ok = ok && match;
      out << (csv ? "oracle_deletion_contraction,,," : "oracle deletion_contraction = ")
          << dc.get_str() << (csv ? "" : match ? " (match)" : " (MISMATCH)") << "\n";
    } else if (!csv) {
      out << "oracle deletion_contraction skipped (needs a connected graph, <= 24 edges)\n";
    }
    double ev = eigenvalue_product(q);
    double exact = std::exp(log_abs(rep.total));
    double rel = std::fabs(ev - exact) / std::max(1.0, exact);
    ok = ok && rel <= 1e-8;
    if (csv) {
      out << "oracle_eigenvalue_product,,," << fmt(ev, true) << "\n";
    } else {
      out << "oracle eigenvalue_product = " << fmt(ev, false) << " (rel diff "
          << fmt(rel, false) << ")\n";
    }
    if (!ok) {
      err << "oracle mismatch against the exact count\n";
      return 1;
    }
  }
  return 0;
}

int cmd_verify_product(const RunConfig& cfg, std::ostream& out) {
  PeriodicGraph g = load_graph(cfg);
  Sublattice lat = load_lattice(cfg, g.rank);
  LogUnit u{cfg.bits};

  ComplexityReport rep = spanning_tree_count(build_quotient(g, lat));
  ProductFormulaResult pf = product_formula(g, lat, cfg.zero_tol);
  double log_exact = log_abs(rep.total);
  double diff = std::fabs(log_exact - pf.log_value);

  bool csv = cfg.format == OutputFormat::csv;
  if (csv) {
    out << "index,n_vertex_product," << u.col("log_T_exact") << "," << u.col("log_T_product")
        << "," << u.col("abs_diff") << ",points,skipped,zero_threshold\n";
    out << lat.index.get_str() << "," << pf.n_vertex_product.get_str() << ","
        << fmt(log_exact * u.scale(), true) << "," << fmt(pf.log_value * u.scale(), true) << ","
        << fmt(diff * u.scale(), true) << "," << pf.points << "," << pf.skipped << ","
        << fmt(pf.zero_threshold, true) << "\n";
  } else {
    out << "index = " << lat.index.get_str() << "\n";
    out << "exact log T = " << fmt(log_exact * u.scale(), false) << "\n";
    out << "product-formula log T = " << fmt(pf.log_value * u.scale(), false) << "\n";
    out << "abs diff = " << fmt(diff * u.scale(), false) << "\n";
    out << "points = " << pf.points << ", skipped near-zero = " << pf.skipped
        << " (threshold " << fmt(pf.zero_threshold, false) << ")\n";
  }
  return 0;
}

int cmd_mahler(const RunConfig& cfg, std::ostream& out) {
  PeriodicGraph g = load_graph(cfg);
  LaurentPoly delta = laplacian_matrix(g).delta;
  if (delta.is_zero())
    throw ValidationError("delta is identically zero (graph has a closed component orbit)");
  LogUnit u{cfg.bits};

  MahlerEstimate est;
  if (cfg.mc_samples > 0) {
    est = mahler_monte_carlo(delta, cfg.mc_samples, cfg.seed);
  } else if (g.rank == 1) {
    est = mahler_jensen(delta);
  } else {
    check_grid(cfg, g.rank);
    est = mahler_quadrature(delta, cfg.grid);
  }

  bool csv = cfg.format == OutputFormat::csv;
  if (csv) {
    out << "method," << u.col("value") << "," << u.col("error_bound") << ",samples_or_grid\n";
    out << method_name(est.method) << "," << fmt(est.value * u.scale(), true) << ","
        << fmt(est.error_bound * u.scale(), true) << "," << est.samples_or_grid << "\n";
  } else {
    out << "delta = " << to_string(delta) << "\n";
    out << "mahler = " << fmt(est.value * u.scale(), false) << (cfg.bits ? " bits" : " nats")
        << " (method " << method_name(est.method) << ", error bound "
        << fmt(est.error_bound * u.scale(), false) << ", samples/grid " << est.samples_or_grid
        << ")\n";
  }
  return 0;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  PeriodicGraph g = load_graph(cfg);
  std::vector<Sublattice> lattices;
  for (long long n : cfg.diags) lattices.push_back(diagonal_lattice(g.rank, n));
  if (!cfg.lattice_spec.empty()) lattices.push_back(parse_lattice(g.rank, cfg.lattice_spec));
  if (lattices.empty()) throw ValidationError("converge: no lattices given (--diags or --lattice)");
  for (const auto& lat : lattices)
    if (lat.index > cfg.max_index) throw ValidationError("lattice index exceeds --max-index");
  if (g.rank >= 2) check_grid(cfg, g.rank);

  GrowthRateTable table = growth_rate_table(g, lattices, cfg.grid);
  LogUnit u{cfg.bits};

  bool csv = cfg.format == OutputFormat::csv;
  if (csv) {
    out << "kind,min_length,index," << u.col("log_T") << "," << u.col("rate")
        << ",method,error_bound\n";
    for (const auto& row : table.rows)
      out << "lattice," << fmt(row.min_length, true) << "," << row.index.get_str() << ","
          << fmt(row.log_total * u.scale(), true) << "," << fmt(row.rate * u.scale(), true)
          << ",exact_count,0\n";
    out << "mahler,,,," << fmt(table.mahler.value * u.scale(), true) << ","
        << method_name(table.mahler.method) << ","
        << fmt(table.mahler.error_bound * u.scale(), true) << "\n";
  } else {
    for (const auto& row : table.rows)
      out << "min_length " << fmt(row.min_length, false) << ", index " << row.index.get_str()
          << ": log T = " << fmt(row.log_total * u.scale(), false)
          << ", rate = " << fmt(row.rate * u.scale(), false) << "\n";
    out << "mahler(" << method_name(table.mahler.method)
        << ") = " << fmt(table.mahler.value * u.scale(), false) << " +- "
        << fmt(table.mahler.error_bound * u.scale(), false) << "\n";
  }
  return 0;
}

int cmd_grid_table(const RunConfig& cfg, std::ostream& out) {
  {
    double nodes = 1.0;
    for (int i = 0; i < cfg.dmax; ++i) nodes *= double(cfg.grid);
    if (nodes > double(cfg.max_grid)) throw ValidationError("grid^dmax exceeds --max-grid");
  }
  auto rows = grid_bound_report(cfg.dmax, cfg.grid);
  LogUnit u{cfg.bits};

  bool csv = cfg.format == OutputFormat::csv;
  if (csv) {
    out << "d," << u.col("m_hat") << "," << u.col("error_bound") << ",grid," << u.col("log_2d")
        << "," << u.col("deficit") << ",nondecreasing\n";
    for (const auto& r : rows)
      out << r.rank << "," << fmt(r.measure.value * u.scale(), true) << ","
          << fmt(r.measure.error_bound * u.scale(), true) << "," << r.measure.samples_or_grid
          << "," << fmt(r.log_2d * u.scale(), true) << "," << fmt(r.deficit * u.scale(), true)
          << "," << yes_no(r.nondecreasing) << "\n";
  } else {
    for (const auto& r : rows)
      out << "d = " << r.rank << ": m_hat = " << fmt(r.measure.value * u.scale(), false)
          << " +- " << fmt(r.measure.error_bound * u.scale(), false)
          << ", log 2d = " << fmt(r.log_2d * u.scale(), false)
          << ", deficit = " << fmt(r.deficit * u.scale(), false)
          << ", nondecreasing = " << yes_no(r.nondecreasing) << "\n";
  }
  return 0;
}

int cmd_gap_table(const RunConfig& cfg, std::ostream& out) {
  auto rows = gap_report(cfg.smax);
  LogUnit u{cfg.bits};

  bool csv = cfg.format == OutputFormat::csv;
  if (csv) {
    out << "s," << u.col("value") << "," << u.col("error_bound") << ",at_least_log2\n";
    for (const auto& r : rows)
      out << r.s << "," << fmt(r.value * u.scale(), true) << ","
          << fmt(r.error_bound * u.scale(), true) << "," << yes_no(r.at_least_log2) << "\n";
  } else {
    for (const auto& r : rows)
      out << "s = " << r.s << ": m = " << fmt(r.value * u.scale(), false) << " +- "
          << fmt(r.error_bound * u.scale(), false)
          << ", at_least_log2 = " << yes_no(r.at_least_log2) << "\n";
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.threads > 0) set_worker_threads(cfg.threads);
    switch (cfg.command) {
      case Command::delta: return cmd_delta(cfg, out);
      case Command::count: return cmd_count(cfg, out, err);
      case Command::verify_product: return cmd_verify_product(cfg, out);
      case Command::mahler: return cmd_mahler(cfg, out);
      case Command::converge: return cmd_converge(cfg, out);
      case Command::grid_table: return cmd_grid_table(cfg, out);
      case Command::gap_table: return cmd_gap_table(cfg, out);
    }
    err << "error: unknown command\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace latspan

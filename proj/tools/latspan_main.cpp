#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "latspan/run.hpp"

namespace {

constexpr const char* kGraphGrammar =
    "Graph file grammar (one directive per line, '#' starts a comment):\n"
    "  d <rank>                symmetry rank, required first\n"
    "  n <count>               number of vertex orbits\n"
    "  edge <i> <j> <s1..sd>   edge orbit from (i,0) to (j,s), 1-based orbits\n"
    "Lattices: --lattice \"a,b;c,d\" lists basis rows (columns generate),\n"
    "          --diag N is the diagonal lattice diag(N,...,N).";

}  // namespace

int main(int argc, char** argv) {
  latspan::RunConfig cfg;
  CLI::App app{"latspan: spanning-tree growth of periodic graphs"};
  app.footer(kGraphGrammar);
  app.require_subcommand(1);

  std::string format = "text";
  std::string diags;

  auto add_common = [&](CLI::App* sub, bool graph_needed) {
    if (graph_needed) sub->add_option("graph", cfg.graph_path, "graph file")->required();
    sub->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    sub->add_flag("--bits", cfg.bits, "render log quantities in base 2");
    sub->add_option("--threads", cfg.threads, "worker threads (default: hardware)");
    sub->add_option("--max-index", cfg.max_index, "lattice index guard");
    sub->add_option("--max-grid", cfg.max_grid, "total quadrature node guard");
  };
  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", cfg.lattice_spec, "basis rows \"a,b;c,d\"");
    sub->add_option("--diag", cfg.diag, "diagonal lattice diag(N,...,N)");
  };

  auto* delta = app.add_subcommand("delta", "Laplacian determinant and its factor blocks");
  add_common(delta, true);

  auto* count = app.add_subcommand("count", "exact spanning-tree count of a finite quotient");
  add_common(count, true);
  add_lattice(count);
  count->add_flag("--oracle", cfg.oracle, "cross-check with the slow oracles");

  auto* verify = app.add_subcommand("verify-product", "exact count vs roots-of-unity product");
  add_common(verify, true);
  add_lattice(verify);
  verify->add_option("--zero-tol", cfg.zero_tol, "relative near-zero cutoff");

  auto* mahler = app.add_subcommand("mahler", "Mahler measure of the Laplacian determinant");
  add_common(mahler, true);
  mahler->add_option("--grid", cfg.grid, "quadrature nodes per axis");
  mahler->add_option("--mc-samples", cfg.mc_samples, "Monte Carlo sample count (overrides grid)");
  mahler->add_option("--seed", cfg.seed, "Monte Carlo seed");

  auto* converge = app.add_subcommand("converge", "growth-rate table over a lattice family");
  add_common(converge, true);
  converge->add_option("--diags", diags, "comma list of diagonal sizes, e.g. 4,8,16");
  converge->add_option("--lattice", cfg.lattice_spec, "extra lattice, basis rows \"a,b;c,d\"");
  converge->add_option("--grid", cfg.grid, "quadrature nodes per axis for the measure row");

  auto* grid_table = app.add_subcommand("grid-table", "grid-graph measures against log 2d");
  add_common(grid_table, false);
  grid_table->add_option("--dmax", cfg.dmax, "largest rank (<= 4)");
  grid_table->add_option("--grid", cfg.grid, "quadrature nodes per axis");

  auto* gap_table = app.add_subcommand("gap-table", "two-orbit family against the log 2 floor");
  add_common(gap_table, false);
  gap_table->add_option("--smax", cfg.smax, "largest exponent s (>= 2)");

  CLI11_PARSE(app, argc, argv);

  cfg.format = format == "csv" ? latspan::OutputFormat::csv : latspan::OutputFormat::text;
  if (!diags.empty()) {
    std::string item;
    std::stringstream ss(diags);
    while (std::getline(ss, item, ',')) {
      try {
        cfg.diags.push_back(std::stoll(item));
      } catch (const std::exception&) {
        std::cerr << "error: bad --diags entry '" << item << "'\n";
        return 2;
      }
    }
  }

  if (delta->parsed()) cfg.command = latspan::Command::delta;
  if (count->parsed()) cfg.command = latspan::Command::count;
  if (verify->parsed()) cfg.command = latspan::Command::verify_product;
  if (mahler->parsed()) cfg.command = latspan::Command::mahler;
  if (converge->parsed()) cfg.command = latspan::Command::converge;
  if (grid_table->parsed()) cfg.command = latspan::Command::grid_table;
  if (gap_table->parsed()) cfg.command = latspan::Command::gap_table;

  return latspan::run(cfg, std::cout, std::cerr);
}

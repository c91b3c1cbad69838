#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace latspan {

enum class Command { delta, count, verify_product, mahler, converge, grid_table, gap_table };

enum class OutputFormat { text, csv };

/// One resolved CLI invocation. Exactly one command; guards are positive.
struct RunConfig {
  Command command = Command::delta;
  std::string graph_path;
  std::string lattice_spec;       // row syntax "a,b;c,d", empty if --diag given
  long long diag = 0;             // diag(N,...,N) lattice when > 0
  std::vector<long long> diags;   // converge: list of diagonal sizes
  long long grid = 512;           // quadrature nodes per axis
  long long mc_samples = 0;       // monte carlo sample count (0 = off)
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::text;
  bool bits = false;              // render log quantities in base 2
  bool oracle = false;            // count: run the cross-check oracles
  double zero_tol = 1e-9;         // verify-product relative cutoff
  int smax = 10;
  int dmax = 3;
  int threads = 0;                // 0 = keep default
  long long max_index = 1000000;  // lattice index guard
  long long max_grid = 100000000; // grid node guard (per full grid)
};

/// Dispatches cfg, writing results to out and diagnostics to err.
/// Returns 0 on success, 2 on a validation failure (one-line diagnostic
/// naming the violated precondition).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace latspan

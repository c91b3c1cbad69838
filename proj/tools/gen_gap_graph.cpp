// Emits the rank-1 two-orbit gap-family graph for a given s: one vertex
// orbit with edge orbits at shifts 1 and s. Its Laplacian determinant is
// 4 - x - x^-1 - x^s - x^-s.
#include <fstream>
#include <iostream>
#include <string>

#include "latspan/periodic_graph.hpp"

int main(int argc, char** argv) {
  if (argc < 2 || argc > 3) {
    std::cerr << "usage: gen-gap-graph <s> [output-file]\n";
    return 2;
  }
  long long s = 0;
  try {
    s = std::stoll(argv[1]);
  } catch (const std::exception&) {
    std::cerr << "error: s must be an integer\n";
    return 2;
  }
  if (s < 1) {
    std::cerr << "error: s must be >= 1\n";
    return 2;
  }

  latspan::PeriodicGraph g =
      latspan::make_periodic_graph(1, 1, {{1, 1, {1}}, {1, 1, {s}}});
  if (argc == 3) {
    std::ofstream out(argv[2]);
    if (!out) {
      std::cerr << "error: cannot open " << argv[2] << "\n";
      return 2;
    }
    latspan::write_graph(out, g);
  } else {
    latspan::write_graph(std::cout, g);
  }
  return 0;
}

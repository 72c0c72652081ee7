#pragma once

#include <string>
#include <vector>

#include "core/hypergraph.hpp"

namespace berge {

/// Simple graph with every edge colored blue or red; the two sets are
/// disjoint and their union is the underlying graph.
struct BlueRedGraph {
  int n = 0;
  std::vector<Pair> blue;
  std::vector<Pair> red;
  bool operator==(const BlueRedGraph&) const = default;
};

void validate(const BlueRedGraph& g);
BlueRedGraph normalized(BlueRedGraph g);
Graph underlying(const BlueRedGraph& g);
Graph blue_subgraph(const BlueRedGraph& g);
Graph red_subgraph(const BlueRedGraph& g);

// Number of r-vertex cliques.
long long count_cliques(const Graph& g, int r);

// N(K_r, blue) + t*|red| + (t-1)*(C(n,2) - |E|).
long long g_value(const BlueRedGraph& g, int r, int t);

struct SymStep {
  std::string kind;  // vertex-sym, part-sym, recolor-to-blue, recolor-to-red, move
  int a = -1;
  int b = -1;
  long long g_after = 0;
};

struct SymmetrizeResult {
  BlueRedGraph final;
  std::vector<SymStep> steps;
  long long g_initial = 0;
  long long g_final = 0;
};

// Zykov-style pipeline: vertex symmetrization toward high-potential vertices,
// then part-level symmetrization until red connectivity is an equivalence
// relation, strictly improving recolorings, and part balancing. Every step
// keeps the graph K_k-free and never decreases the g value; the endpoint is
// a monochromatic complete multipartite graph.
SymmetrizeResult symmetrize(const BlueRedGraph& g, int k, int r, int t);

struct BoundReport {
  int n = 0, r = 0, t = 0;
  std::string pattern;
  std::vector<std::pair<std::string, long long>> lower;
  std::vector<std::pair<std::string, long long>> upper;
  std::vector<std::string> notes;
  bool exact = false;
};

// Closed-form bounds plus matching construction sizes for cliques, paths and
// cycles. Pattern names follow the CLI shorthands (K4, P6, C5).
BoundReport theorem_bounds(int n, int r, int t, const std::string& pattern);

}  // namespace berge

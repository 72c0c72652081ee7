#pragma once

#include "core/detect.hpp"

namespace berge {

struct SolveResult {
  long long value = 0;
  Hypergraph extremal;
  long long nodes_explored = 0;
  bool exhausted = true;
};

// Exhaustive check straight from the definitions: every injection of V(F),
// and in Berge mode every disjoint hyperedge assignment. Independent of
// find_copy; used as its oracle.
bool brute_force_detect(const Hypergraph& h, const Graph& f, int t, Mode mode);

struct SolveOptions {
  long long node_budget = 10'000'000;
  bool isomorphism_pruning = false;
};

// Branch and bound over r-sets in lexicographic order, include branch first.
// exhausted=true means value is exactly the Turan number.
SolveResult exact_turan(int n, int r, const Graph& f, int t, Mode mode,
                        const SolveOptions& opts = {});

}  // namespace berge

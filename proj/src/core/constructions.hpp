#pragma once

#include <optional>
#include <string>

#include "core/hypergraph.hpp"

namespace berge {

/// Contiguous vertex intervals covering 0..n-1, larger parts first; sizes
/// differ by at most one.
struct PartitionSpec {
  std::vector<std::pair<int, int>> parts;  // (start, size)
  bool balanced = true;
};

PartitionSpec balanced_parts(int n, int p);

struct RegularSeed {
  Graph g;
  int d = 0;
  std::optional<std::vector<Pair>> matching;
};

// Complete balanced p-partite graph.
Graph gen_turan_graph(int n, int p);

// All r-sets meeting r distinct parts of the balanced p-partition.
Hypergraph gen_turan_hypergraph(int n, int p, int r);

// Turan hypergraph plus, per same-part pair, t-1 support hyperedges built
// from distinct (r-2)-sets meeting r-2 other parts.
Hypergraph gen_Q(int n, int p, int r, int t);

// Disjoint blocks carrying copies of a (t-1)-regular (r-1)-uniform seed;
// hyperedges join an earlier-block vertex with a later-block seed hyperedge.
Hypergraph gen_construction1(int n, const Hypergraph& seed);

// t-1 fixed (r-2)-blocks, each completed by every pair from the residual set.
Hypergraph gen_construction2(int n, int r, int t);

// 3-uniform block construction over a regular seed graph; for even t the
// seed needs a perfect matching which is skipped on the later-block side.
Hypergraph gen_construction3(int n, int t, const RegularSeed& seed);

// Larger of the two block-plus-packing combinations for the pattern f.
Hypergraph gen_construction4(int n, int t, const Graph& f);

// Steiner triple system: Bose construction for n = 3 (mod 6), Skolem
// construction for n = 1 (mod 6).
Hypergraph gen_sts(int n);

// Greedy r-set packing keeping every pair multiplicity at most lambda.
Hypergraph gen_packing(int n, int r, int lambda);

// d-regular seed suitable for trees: K_{d+1} when a perfect matching is not
// required or d+1 is even, else K_{d+2} minus a perfect matching.
RegularSeed builtin_regular_seed(int t);

bool fits_complete_bipartite(const Graph& f, int a, int b);

// Largest t0 <= n/2 such that f does not embed into K_{t0-1, n-t0+1}.
int largest_nonspanning_t0(const Graph& f, int n);

// Closed-form size predictions where one exists (independent arithmetic,
// used to cross-check generator output).
std::optional<long long> predicted_size(const std::string& generator_name, int n,
                                        int p, int r, int t, int lambda,
                                        const Hypergraph* c1_seed,
                                        const RegularSeed* c3_seed);

}  // namespace berge

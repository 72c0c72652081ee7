#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/hypergraph.hpp"

namespace berge {

enum class Mode { Heavy, Berge };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& s);

/// Certificate that a hypergraph contains a t-heavy or t-wise Berge copy of a
/// pattern F: an injective embedding of V(F) plus, per F-edge (in canonical
/// edge order), t hyperedge indices each containing the embedded pair. In
/// Berge mode the t*|E(F)| indices are pairwise distinct overall.
struct Witness {
  Mode mode = Mode::Heavy;
  int t = 1;
  std::vector<int> embedding;
  std::vector<std::vector<int>> assigned;
};

// Enumerates subgraph embeddings of pattern into host, visiting them in a
// fixed canonical order (pattern vertices by descending degree, candidates by
// ascending host vertex). visit returning true stops the search.
bool for_each_embedding(const Graph& host, const Graph& pattern,
                        const std::function<bool(const std::vector<int>&)>& visit);

bool graph_contains(const Graph& host, const Graph& pattern);

std::optional<Witness> find_copy(const Hypergraph& h, const Graph& f, int t, Mode mode);

bool verify_witness(const Hypergraph& h, const Graph& f, int t, Mode mode,
                    const Witness& w);

// Turns a t-heavy copy into a t'-wise Berge copy with the same essence,
// t' = floor(t / min(r(r-1)/2, |E(F)|)), by bipartite matching.
Witness extract_berge_from_heavy(const Hypergraph& h, const Graph& f, int t);

struct Expansion3 {
  Hypergraph expansion;               // the |E(F)| selected hyperedges
  std::vector<int> hyperedge_indices; // positions in the host edge list
  std::vector<int> essence;           // embedding of V(F)
  std::vector<int> apexes;            // third vertex per F-edge
};

// For 3-uniform hosts with t >= |V(F)| + |E(F)| - 2: greedily selects one
// hyperedge per essence edge so the third vertices are distinct and outside
// the essence, producing a copy of the 3-uniform expansion of F.
Expansion3 extract_expansion3(const Hypergraph& h, const Graph& f, int t);

struct StripResult {
  std::vector<Pair> pairs;          // S
  std::vector<int> assigned_edges;  // g(S), parallel to pairs
  Hypergraph remainder;             // host minus the image of g
};

// Maximum matching between shadow pairs and hyperedges containing them.
StripResult strip_representatives(const Hypergraph& h);

/// Greedy pick-or-mark decomposition: processing hyperedges in canonical
/// order, each either picks a contained pair seen fewer than t times or marks
/// a clique. levels[i] holds the pairs picked exactly i times;
/// |H| = marked + sum(i * |levels[i]|).
struct Certificate {
  int t = 1;
  long long marked = 0;
  std::vector<Graph> levels;  // size t+1
};

Certificate greedy_certificate(const Hypergraph& h, int t);

}  // namespace berge

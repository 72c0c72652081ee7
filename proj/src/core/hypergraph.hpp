#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berge {

using Pair = std::pair<int, int>;

enum class ErrorCode {
  DuplicateEdge,
  WrongArity,
  VertexOutOfRange,
  ParseError,
  BadParams,
  BadPattern,
  NoHeavyCopy,
  ThresholdTooSmall,
  TooFewSupportSets,
  SeedNotRegular,
  SeedMismatch,
  BadResidue,
  PreconditionViolated,
  TooLarge,
  InputNotKkFree,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Simple graph on vertices 0..n-1. Edges are stored as (u,v) with u < v,
/// sorted lexicographically.
struct Graph {
  int n = 0;
  std::vector<Pair> edges;
  bool operator==(const Graph&) const = default;
};

/// r-uniform hypergraph on vertices 0..n-1. Each hyperedge is a sorted list
/// of r distinct vertices; the edge list itself is sorted lexicographically.
struct Hypergraph {
  int n = 0;
  int r = 0;
  std::vector<std::vector<int>> edges;
  bool operator==(const Hypergraph&) const = default;
};

/// Vertex pair -> number of hyperedges containing it. Only pairs with a
/// positive count are materialized.
struct MultiplicityMap {
  int n = 0;
  std::map<Pair, int> mult;
  int at(Pair e) const {
    auto it = mult.find(e);
    return it == mult.end() ? 0 : it->second;
  }
};

Pair ordered_pair(int u, int v);

Hypergraph normalized(Hypergraph h);
Graph normalized(Graph g);

// Throws Error on invariant violations, naming the offending edge.
void validate(const Hypergraph& h);
void validate(const Graph& g);

MultiplicityMap shadow_multiplicity(const Hypergraph& h);

// Pairs contained in at least t hyperedges; vertex count preserved.
Graph heavy_graph(const Hypergraph& h, int t);

// Named patterns. Paths and cycles are indexed by vertex count; stars by
// edge count.
Graph make_clique(int k);
Graph make_path(int k);
Graph make_cycle(int k);
Graph make_star(int r);
Graph pattern_from_name(const std::string& name);

std::vector<int> degrees(const Graph& g);
std::vector<std::vector<char>> adjacency_matrix(const Graph& g);
bool has_edge(const Graph& g, int u, int v);

long long binom(long long n, long long k);

// All r-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_r_subsets(int n, int r);

std::string edge_to_string(const std::vector<int>& e);

}  // namespace berge

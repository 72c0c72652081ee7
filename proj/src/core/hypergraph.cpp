#include "core/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace berge {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadPattern: return "BadPattern";
    case ErrorCode::NoHeavyCopy: return "NoHeavyCopy";
    case ErrorCode::ThresholdTooSmall: return "ThresholdTooSmall";
    case ErrorCode::TooFewSupportSets: return "TooFewSupportSets";
    case ErrorCode::SeedNotRegular: return "SeedNotRegular";
    case ErrorCode::SeedMismatch: return "SeedMismatch";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InputNotKkFree: return "InputNotKkFree";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Pair ordered_pair(int u, int v) {
  return u < v ? Pair{u, v} : Pair{v, u};
}

std::string edge_to_string(const std::vector<int>& e) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e[i];
  }
  os << "]";
  return os.str();
}

Hypergraph normalized(Hypergraph h) {
  for (auto& e : h.edges) std::sort(e.begin(), e.end());
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

Graph normalized(Graph g) {
  for (auto& e : g.edges) e = ordered_pair(e.first, e.second);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

void validate(const Hypergraph& h) {
  if (h.n < 0) throw Error(ErrorCode::BadParams, "negative vertex count");
  if (h.r < 2) throw Error(ErrorCode::BadParams, "uniformity must be at least 2");
  for (const auto& e : h.edges) {
    if (static_cast<int>(e.size()) != h.r)
      throw Error(ErrorCode::WrongArity,
                  "edge " + edge_to_string(e) + " has " + std::to_string(e.size()) +
                      " vertices, expected r=" + std::to_string(h.r));
    auto sorted = e;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] < 0 || sorted[i] >= h.n)
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge " + edge_to_string(e) + " contains vertex " +
                        std::to_string(sorted[i]) + " outside 0.." +
                        std::to_string(h.n - 1));
      if (i > 0 && sorted[i] == sorted[i - 1])
        throw Error(ErrorCode::WrongArity,
                    "edge " + edge_to_string(e) + " repeats vertex " +
                        std::to_string(sorted[i]));
    }
  }
  std::set<std::vector<int>> seen;
  for (const auto& e : h.edges) {
    auto sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (!seen.insert(sorted).second)
      throw Error(ErrorCode::DuplicateEdge, "edge " + edge_to_string(e) + " repeated");
  }
}

void validate(const Graph& g) {
  if (g.n < 0) throw Error(ErrorCode::BadParams, "negative vertex count");
  std::set<Pair> seen;
  for (const auto& e : g.edges) {
    if (e.first == e.second)
      throw Error(ErrorCode::WrongArity,
                  "loop at vertex " + std::to_string(e.first));
    auto p = ordered_pair(e.first, e.second);
    if (p.first < 0 || p.second >= g.n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                      ") outside 0.." + std::to_string(g.n - 1));
    if (!seen.insert(p).second)
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + std::to_string(p.first) + "," + std::to_string(p.second) +
                      ") repeated");
  }
}

MultiplicityMap shadow_multiplicity(const Hypergraph& h) {
  MultiplicityMap m;
  m.n = h.n;
  for (const auto& e : h.edges)
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        ++m.mult[ordered_pair(e[i], e[j])];
  return m;
}

Graph heavy_graph(const Hypergraph& h, int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "heaviness threshold must be positive");
  Graph g;
  g.n = h.n;
  for (const auto& [pair, count] : shadow_multiplicity(h).mult)
    if (count >= t) g.edges.push_back(pair);
  return g;  // map iteration order is already lexicographic
}

Graph make_clique(int k) {
  if (k < 1) throw Error(ErrorCode::BadPattern, "clique needs at least 1 vertex");
  Graph g;
  g.n = k;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.edges.push_back({i, j});
  return g;
}

Graph make_path(int k) {
  if (k < 1) throw Error(ErrorCode::BadPattern, "path needs at least 1 vertex");
  Graph g;
  g.n = k;
  for (int i = 0; i + 1 < k; ++i) g.edges.push_back({i, i + 1});
  return g;
}

Graph make_cycle(int k) {
  if (k < 3) throw Error(ErrorCode::BadPattern, "cycle needs at least 3 vertices");
  Graph g;
  g.n = k;
  for (int i = 0; i + 1 < k; ++i) g.edges.push_back({i, i + 1});
  g.edges.push_back({0, k - 1});
  return normalized(g);
}

Graph make_star(int r) {
  if (r < 1) throw Error(ErrorCode::BadPattern, "star needs at least 1 edge");
  Graph g;
  g.n = r + 1;
  for (int i = 1; i <= r; ++i) g.edges.push_back({0, i});
  return g;
}

Graph pattern_from_name(const std::string& name) {
  if (name.size() < 2)
    throw Error(ErrorCode::BadPattern, "unrecognized pattern '" + name + "'");
  char kind = name[0];
  int k = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw Error(ErrorCode::BadPattern, "unrecognized pattern '" + name + "'");
    k = k * 10 + (name[i] - '0');
  }
  switch (kind) {
    case 'K': return make_clique(k);
    case 'P': return make_path(k);
    case 'C': return make_cycle(k);
    case 'S': return make_star(k);
    default:
      throw Error(ErrorCode::BadPattern, "unrecognized pattern '" + name + "'");
  }
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.n, 0);
  for (const auto& e : g.edges) {
    ++d[e.first];
    ++d[e.second];
  }
  return d;
}

std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.n, std::vector<char>(g.n, 0));
  for (const auto& e : g.edges) a[e.first][e.second] = a[e.second][e.first] = 1;
  return a;
}

bool has_edge(const Graph& g, int u, int v) {
  return std::binary_search(g.edges.begin(), g.edges.end(), ordered_pair(u, v));
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (long long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::vector<std::vector<int>> all_r_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace berge

#include "core/detect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "core/matching.hpp"

namespace berge {

const char* mode_name(Mode m) { return m == Mode::Heavy ? "heavy" : "berge"; }

Mode mode_from_name(const std::string& s) {
  if (s == "heavy") return Mode::Heavy;
  if (s == "berge") return Mode::Berge;
  throw Error(ErrorCode::BadParams, "unknown mode '" + s + "'");
}

namespace {

struct EmbeddingSearch {
  const Graph& pattern;
  std::vector<std::vector<char>> host_adj;
  std::vector<std::vector<char>> pat_adj;
  std::vector<int> host_deg, pat_deg;
  std::vector<int> order;  // pattern vertices, degree descending
  std::vector<int> map;    // pattern vertex -> host vertex or -1
  std::vector<char> used;
  const std::function<bool(const std::vector<int>&)>& visit;
  int host_n;

  EmbeddingSearch(const Graph& host, const Graph& pat,
                  const std::function<bool(const std::vector<int>&)>& v)
      : pattern(pat),
        host_adj(adjacency_matrix(host)),
        pat_adj(adjacency_matrix(pat)),
        host_deg(degrees(host)),
        pat_deg(degrees(pat)),
        map(pat.n, -1),
        used(host.n, 0),
        visit(v),
        host_n(host.n) {
    order.resize(pat.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
      return pat_deg[a] != pat_deg[b] ? pat_deg[a] > pat_deg[b] : a < b;
    });
  }

  bool run(size_t depth) {
    if (depth == order.size()) return visit(map);
    int pv = order[depth];
    for (int hv = 0; hv < host_n; ++hv) {
      if (used[hv] || host_deg[hv] < pat_deg[pv]) continue;
      bool ok = true;
      for (size_t d = 0; d < depth && ok; ++d) {
        int qv = order[d];
        if (pat_adj[pv][qv] && !host_adj[hv][map[qv]]) ok = false;
      }
      if (!ok) continue;
      map[pv] = hv;
      used[hv] = 1;
      if (run(depth + 1)) return true;
      used[hv] = 0;
      map[pv] = -1;
    }
    return false;
  }
};

}  // namespace

bool for_each_embedding(const Graph& host, const Graph& pattern,
                        const std::function<bool(const std::vector<int>&)>& visit) {
  if (pattern.n > host.n) return false;
  EmbeddingSearch search(host, pattern, visit);
  return search.run(0);
}

bool graph_contains(const Graph& host, const Graph& pattern) {
  return for_each_embedding(host, pattern,
                            [](const std::vector<int>&) { return true; });
}

namespace {

// Hyperedge indices containing each shadow pair.
std::map<Pair, std::vector<int>> cover_lists(const Hypergraph& h) {
  std::map<Pair, std::vector<int>> covers;
  for (size_t idx = 0; idx < h.edges.size(); ++idx) {
    const auto& e = h.edges[idx];
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        covers[ordered_pair(e[i], e[j])].push_back(static_cast<int>(idx));
  }
  return covers;
}

// Disjoint assignment of t covering hyperedges per pattern edge, if any,
// via matching on (edge,copy) slots.
std::optional<std::vector<std::vector<int>>> disjoint_assignment(
    const std::vector<std::vector<int>>& covers_per_edge, int t) {
  int m = static_cast<int>(covers_per_edge.size());
  int max_edge_index = 0;
  std::vector<std::vector<int>> adj;
  adj.reserve(static_cast<size_t>(m) * t);
  for (const auto& c : covers_per_edge)
    for (int copy = 0; copy < t; ++copy) {
      adj.push_back(c);
      for (int idx : c) max_edge_index = std::max(max_edge_index, idx + 1);
    }
  auto matching = max_bipartite_matching(adj, max_edge_index);
  if (matching.size != m * t) return std::nullopt;
  std::vector<std::vector<int>> assigned(m);
  for (int ei = 0; ei < m; ++ei) {
    for (int copy = 0; copy < t; ++copy)
      assigned[ei].push_back(matching.left_match[ei * t + copy]);
    std::sort(assigned[ei].begin(), assigned[ei].end());
  }
  return assigned;
}

}  // namespace

std::optional<Witness> find_copy(const Hypergraph& h, const Graph& f, int t,
                                 Mode mode) {
  validate(h);
  validate(f);
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  if (f.n > h.n) return std::nullopt;
  if (mode == Mode::Berge &&
      static_cast<long long>(t) * static_cast<long long>(f.edges.size()) >
          static_cast<long long>(h.edges.size()))
    return std::nullopt;

  Graph hg = heavy_graph(h, t);
  auto covers = cover_lists(h);
  std::optional<Witness> found;

  for_each_embedding(hg, f, [&](const std::vector<int>& embedding) {
    std::vector<std::vector<int>> per_edge;
    per_edge.reserve(f.edges.size());
    for (const auto& [u, v] : f.edges)
      per_edge.push_back(covers[ordered_pair(embedding[u], embedding[v])]);
    Witness w;
    w.mode = mode;
    w.t = t;
    w.embedding = embedding;
    if (mode == Mode::Heavy) {
      for (auto& c : per_edge)
        w.assigned.emplace_back(c.begin(), c.begin() + t);
      found = std::move(w);
      return true;
    }
    auto assigned = disjoint_assignment(per_edge, t);
    if (!assigned) return false;  // try the next embedding
    w.assigned = std::move(*assigned);
    found = std::move(w);
    return true;
  });
  return found;
}

bool verify_witness(const Hypergraph& h, const Graph& f, int t, Mode mode,
                    const Witness& w) {
  validate(h);
  validate(f);
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  if (static_cast<int>(w.embedding.size()) != f.n) return false;
  std::set<int> image;
  for (int v : w.embedding) {
    if (v < 0 || v >= h.n) return false;
    if (!image.insert(v).second) return false;  // not injective
  }
  if (w.assigned.size() != f.edges.size()) return false;
  std::set<int> all_indices;
  for (size_t ei = 0; ei < f.edges.size(); ++ei) {
    const auto& [u, v] = f.edges[ei];
    const auto& list = w.assigned[ei];
    if (static_cast<int>(list.size()) != t) return false;
    std::set<int> local;
    for (int idx : list) {
      if (idx < 0 || idx >= static_cast<int>(h.edges.size())) return false;
      if (!local.insert(idx).second) return false;
      if (mode == Mode::Berge && !all_indices.insert(idx).second) return false;
      const auto& e = h.edges[idx];
      if (!std::binary_search(e.begin(), e.end(), w.embedding[u]) ||
          !std::binary_search(e.begin(), e.end(), w.embedding[v]))
        return false;
    }
  }
  return true;
}

Witness extract_berge_from_heavy(const Hypergraph& h, const Graph& f, int t) {
  validate(h);
  validate(f);
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  long long m = std::min<long long>(binom(h.r, 2), f.edges.size());
  if (m == 0) throw Error(ErrorCode::BadPattern, "pattern has no edges");
  int tprime = static_cast<int>(t / m);
  if (tprime < 1)
    throw Error(ErrorCode::ThresholdTooSmall,
                "t=" + std::to_string(t) + " below m=" + std::to_string(m) +
                    ", extracted multiplicity would be 0");
  auto heavy = find_copy(h, f, t, Mode::Heavy);
  if (!heavy) throw Error(ErrorCode::NoHeavyCopy, "no t-heavy copy of the pattern");

  auto covers = cover_lists(h);
  std::vector<std::vector<int>> per_edge;
  for (const auto& [u, v] : f.edges)
    per_edge.push_back(covers[ordered_pair(heavy->embedding[u], heavy->embedding[v])]);
  auto assigned = disjoint_assignment(per_edge, tprime);
  if (!assigned)
    throw Error(ErrorCode::Internal, "matching failed despite the degree guarantee");
  Witness w;
  w.mode = Mode::Berge;
  w.t = tprime;
  w.embedding = heavy->embedding;
  w.assigned = std::move(*assigned);
  return w;
}

Expansion3 extract_expansion3(const Hypergraph& h, const Graph& f, int t) {
  validate(h);
  validate(f);
  if (h.r != 3) throw Error(ErrorCode::BadParams, "host must be 3-uniform");
  int threshold = f.n + static_cast<int>(f.edges.size()) - 2;
  if (t < threshold)
    throw Error(ErrorCode::ThresholdTooSmall,
                "t=" + std::to_string(t) + " below |V(F)|+|E(F)|-2=" +
                    std::to_string(threshold));
  auto heavy = find_copy(h, f, t, Mode::Heavy);
  if (!heavy) throw Error(ErrorCode::NoHeavyCopy, "no t-heavy copy of the pattern");

  std::set<int> essence_set(heavy->embedding.begin(), heavy->embedding.end());
  std::set<int> used_apexes;
  Expansion3 out;
  out.essence = heavy->embedding;
  for (const auto& [u, v] : f.edges) {
    int a = heavy->embedding[u], b = heavy->embedding[v];
    int chosen = -1, apex = -1;
    for (size_t idx = 0; idx < h.edges.size(); ++idx) {
      const auto& e = h.edges[idx];
      if (!std::binary_search(e.begin(), e.end(), a) ||
          !std::binary_search(e.begin(), e.end(), b))
        continue;
      int x = -1;
      for (int w : e)
        if (w != a && w != b) x = w;
      if (essence_set.count(x) || used_apexes.count(x)) continue;
      chosen = static_cast<int>(idx);
      apex = x;
      break;
    }
    if (chosen < 0)
      throw Error(ErrorCode::Internal, "no free apex despite the threshold guarantee");
    used_apexes.insert(apex);
    out.hyperedge_indices.push_back(chosen);
    out.apexes.push_back(apex);
  }
  Hypergraph exp;
  exp.n = h.n;
  exp.r = 3;
  for (int idx : out.hyperedge_indices) exp.edges.push_back(h.edges[idx]);
  out.expansion = normalized(exp);
  return out;
}

StripResult strip_representatives(const Hypergraph& h) {
  validate(h);
  auto covers = cover_lists(h);
  std::vector<Pair> pairs;
  std::vector<std::vector<int>> adj;
  for (const auto& [pair, list] : covers) {
    pairs.push_back(pair);
    adj.push_back(list);
  }
  auto matching = max_bipartite_matching(adj, static_cast<int>(h.edges.size()));
  StripResult out;
  std::set<int> removed;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (matching.left_match[i] < 0) continue;
    out.pairs.push_back(pairs[i]);
    out.assigned_edges.push_back(matching.left_match[i]);
    removed.insert(matching.left_match[i]);
  }
  out.remainder.n = h.n;
  out.remainder.r = h.r;
  for (size_t idx = 0; idx < h.edges.size(); ++idx)
    if (!removed.count(static_cast<int>(idx)))
      out.remainder.edges.push_back(h.edges[idx]);
  out.remainder = normalized(out.remainder);
  return out;
}

Certificate greedy_certificate(const Hypergraph& h, int t) {
  validate(h);
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  Hypergraph canon = normalized(h);
  std::map<Pair, int> picked;
  Certificate cert;
  cert.t = t;
  for (const auto& e : canon.edges) {
    bool advanced = false;
    for (size_t i = 0; i < e.size() && !advanced; ++i)
      for (size_t j = i + 1; j < e.size() && !advanced; ++j) {
        Pair p = ordered_pair(e[i], e[j]);
        if (picked[p] < t) {
          ++picked[p];
          advanced = true;
        }
      }
    if (!advanced) ++cert.marked;
  }
  cert.levels.assign(t + 1, Graph{canon.n, {}});
  for (int u = 0; u < canon.n; ++u)
    for (int v = u + 1; v < canon.n; ++v) {
      auto it = picked.find({u, v});
      int count = it == picked.end() ? 0 : it->second;
      cert.levels[count].edges.push_back({u, v});
    }
  return cert;
}

}  // namespace berge

#include "core/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace berge {

PartitionSpec balanced_parts(int n, int p) {
  if (p < 1 || p > n)
    throw Error(ErrorCode::BadParams,
                "need 1 <= parts <= n, got parts=" + std::to_string(p) +
                    ", n=" + std::to_string(n));
  PartitionSpec spec;
  int q = n / p, s = n % p;
  int start = 0;
  for (int i = 0; i < p; ++i) {
    int size = q + (i < s ? 1 : 0);
    spec.parts.push_back({start, size});
    start += size;
  }
  return spec;
}

namespace {

std::vector<int> part_index_of(int n, const PartitionSpec& spec) {
  std::vector<int> of(n, -1);
  for (size_t i = 0; i < spec.parts.size(); ++i)
    for (int v = spec.parts[i].first; v < spec.parts[i].first + spec.parts[i].second; ++v)
      of[v] = static_cast<int>(i);
  return of;
}

}  // namespace

Graph gen_turan_graph(int n, int p) {
  auto spec = balanced_parts(n, p);
  auto of = part_index_of(n, spec);
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (of[u] != of[v]) g.edges.push_back({u, v});
  return g;
}

Hypergraph gen_turan_hypergraph(int n, int p, int r) {
  if (r < 2 || r > p)
    throw Error(ErrorCode::BadParams,
                "need 2 <= r <= parts, got r=" + std::to_string(r) +
                    ", parts=" + std::to_string(p));
  auto spec = balanced_parts(n, p);
  auto of = part_index_of(n, spec);
  Hypergraph h;
  h.n = n;
  h.r = r;
  for (auto& set : all_r_subsets(n, r)) {
    std::set<int> parts_met;
    for (int v : set) parts_met.insert(of[v]);
    if (static_cast<int>(parts_met.size()) == r) h.edges.push_back(set);
  }
  return normalized(h);
}

Hypergraph gen_Q(int n, int p, int r, int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  Hypergraph h = gen_turan_hypergraph(n, p, r);
  auto spec = balanced_parts(n, p);
  auto of = part_index_of(n, spec);
  auto support_candidates = all_r_subsets(n, r - 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (of[u] != of[v]) continue;
      int needed = t - 1;
      for (const auto& s : support_candidates) {
        if (needed == 0) break;
        std::set<int> parts_met;
        bool ok = true;
        for (int x : s) {
          if (of[x] == of[u] || !parts_met.insert(of[x]).second) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::vector<int> edge = s;
        edge.push_back(u);
        edge.push_back(v);
        std::sort(edge.begin(), edge.end());
        h.edges.push_back(edge);
        --needed;
      }
      if (needed > 0)
        throw Error(ErrorCode::TooFewSupportSets,
                    "pair (" + std::to_string(u) + "," + std::to_string(v) +
                        ") admits fewer than t-1=" + std::to_string(t - 1) +
                        " qualifying support sets");
    }
  return normalized(h);
}

namespace {

std::vector<int> hypergraph_degrees(const Hypergraph& h) {
  std::vector<int> d(h.n, 0);
  for (const auto& e : h.edges)
    for (int v : e) ++d[v];
  return d;
}

}  // namespace

Hypergraph gen_construction1(int n, const Hypergraph& seed) {
  validate(seed);
  if (seed.n < 1 || seed.edges.empty())
    throw Error(ErrorCode::SeedNotRegular, "seed has no hyperedges");
  auto deg = hypergraph_degrees(seed);
  for (int v = 0; v < seed.n; ++v)
    if (deg[v] != deg[0])
      throw Error(ErrorCode::SeedNotRegular,
                  "seed degree differs at vertex " + std::to_string(v));
  int k = seed.n;
  int blocks = n / k;
  if (blocks < 1)
    throw Error(ErrorCode::BadParams, "n smaller than the seed vertex count");
  Hypergraph h;
  h.n = n;
  h.r = seed.r + 1;
  for (int j = 1; j < blocks; ++j)
    for (int v = 0; v < j * k; ++v)
      for (const auto& e : seed.edges) {
        std::vector<int> edge;
        edge.reserve(seed.r + 1);
        edge.push_back(v);
        for (int w : e) edge.push_back(w + j * k);
        std::sort(edge.begin(), edge.end());
        h.edges.push_back(edge);
      }
  return normalized(h);
}

Hypergraph gen_construction2(int n, int r, int t) {
  if (r < 3) throw Error(ErrorCode::BadParams, "r must be at least 3");
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  if (n <= (t - 1) * (r - 2) + 1)
    throw Error(ErrorCode::BadParams,
                "need n > (t-1)(r-2)+1 = " + std::to_string((t - 1) * (r - 2) + 1));
  int block_span = (t - 1) * (r - 2);
  Hypergraph h;
  h.n = n;
  h.r = r;
  for (int i = 0; i < t - 1; ++i) {
    std::vector<int> block;
    for (int v = i * (r - 2); v < (i + 1) * (r - 2); ++v) block.push_back(v);
    for (int x = block_span; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        std::vector<int> edge = block;
        edge.push_back(x);
        edge.push_back(y);
        h.edges.push_back(edge);
      }
  }
  return normalized(h);
}

Hypergraph gen_construction3(int n, int t, const RegularSeed& seed) {
  validate(seed.g);
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  auto deg = degrees(seed.g);
  for (int v = 0; v < seed.g.n; ++v)
    if (deg[v] != seed.d)
      throw Error(ErrorCode::SeedMismatch,
                  "seed graph is not " + std::to_string(seed.d) + "-regular at vertex " +
                      std::to_string(v));
  std::vector<Pair> skip;  // matching edges skipped on the later-block side
  if (t % 2 == 1) {
    if (seed.d != (t - 1) / 2)
      throw Error(ErrorCode::SeedMismatch,
                  "odd t needs degree (t-1)/2 = " + std::to_string((t - 1) / 2));
  } else {
    if (seed.d != t / 2)
      throw Error(ErrorCode::SeedMismatch,
                  "even t needs degree t/2 = " + std::to_string(t / 2));
    if (!seed.matching)
      throw Error(ErrorCode::SeedMismatch, "even t needs a perfect matching");
    std::set<int> covered;
    for (auto [u, v] : *seed.matching) {
      if (!has_edge(seed.g, u, v))
        throw Error(ErrorCode::SeedMismatch, "matching edge not in the seed graph");
      if (!covered.insert(u).second || !covered.insert(v).second)
        throw Error(ErrorCode::SeedMismatch, "matching is not vertex-disjoint");
    }
    if (static_cast<int>(covered.size()) != seed.g.n)
      throw Error(ErrorCode::SeedMismatch, "matching does not cover every vertex");
    for (auto [u, v] : *seed.matching) skip.push_back(ordered_pair(u, v));
  }
  std::sort(skip.begin(), skip.end());
  auto skipped = [&](Pair e) {
    return std::binary_search(skip.begin(), skip.end(), e);
  };

  int m = seed.g.n;
  int blocks = n / m;
  if (blocks < 1)
    throw Error(ErrorCode::BadParams, "n smaller than the seed vertex count");
  Hypergraph h;
  h.n = n;
  h.r = 3;
  for (int i = 0; i < blocks; ++i)
    for (int j = i + 1; j < blocks; ++j) {
      for (const auto& [u, v] : seed.g.edges)
        for (int x = j * m; x < (j + 1) * m; ++x)
          h.edges.push_back({u + i * m, v + i * m, x});
      for (const auto& e : seed.g.edges) {
        if (skipped(e)) continue;
        for (int x = i * m; x < (i + 1) * m; ++x)
          h.edges.push_back({e.first + j * m, e.second + j * m, x});
      }
    }
  return normalized(h);
}

bool fits_complete_bipartite(const Graph& f, int a, int b) {
  if (a < 0 || b < 0) return false;
  if (f.n > a + b) return false;
  // 2-color each component, then try both orientations per component.
  auto adj = adjacency_matrix(f);
  std::vector<int> color(f.n, -1);
  std::vector<Pair> component_sizes;  // (color0 count, color1 count)
  for (int s = 0; s < f.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    int c0 = 1, c1 = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v = 0; v < f.n; ++v) {
        if (!adj[u][v]) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          (color[v] == 0 ? c0 : c1)++;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;  // odd cycle
        }
      }
    }
    component_sizes.push_back({c0, c1});
  }
  // Subset-sum over component orientations: left side total must fit in a
  // with the rest fitting in b.
  std::set<int> reachable{0};
  for (auto [c0, c1] : component_sizes) {
    std::set<int> next;
    for (int left : reachable) {
      next.insert(left + c0);
      next.insert(left + c1);
    }
    reachable = std::move(next);
  }
  for (int left : reachable)
    if (left <= a && f.n - left <= b) return true;
  return false;
}

int largest_nonspanning_t0(const Graph& f, int n) {
  for (int t0 = n / 2; t0 >= 1; --t0)
    if (!fits_complete_bipartite(f, t0 - 1, n - t0 + 1)) return t0;
  return 0;
}

namespace {

// Keeps packing hyperedges that neither duplicate a base hyperedge nor make
// any pair newly t-heavy in the union.
Hypergraph union_with_filtered_packing(const Hypergraph& base,
                                       const Hypergraph& packing, int t) {
  std::set<std::vector<int>> base_set(base.edges.begin(), base.edges.end());
  auto base_mult = shadow_multiplicity(base);
  std::map<Pair, int> union_mult = base_mult.mult;
  Hypergraph out = base;
  for (const auto& e : packing.edges) {
    if (base_set.count(e)) continue;
    bool ok = true;
    for (size_t i = 0; i < e.size() && ok; ++i)
      for (size_t j = i + 1; j < e.size() && ok; ++j) {
        Pair p = ordered_pair(e[i], e[j]);
        if (base_mult.at(p) >= t) continue;  // already heavy in the base
        auto it = union_mult.find(p);
        int cur = it == union_mult.end() ? 0 : it->second;
        if (cur + 1 >= t) ok = false;
      }
    if (!ok) continue;
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        ++union_mult[ordered_pair(e[i], e[j])];
    out.edges.push_back(e);
  }
  return normalized(out);
}

}  // namespace

Hypergraph gen_construction4(int n, int t, const Graph& f) {
  validate(f);
  if (f.edges.empty())
    throw Error(ErrorCode::BadParams, "pattern must have at least one edge");
  int k = f.n;
  int t0 = largest_nonspanning_t0(f, n);
  if (!(t > t0 && t >= 2 * k - 3))
    throw Error(ErrorCode::PreconditionViolated,
                "need t > t0=" + std::to_string(t0) +
                    " and t >= 2k-3=" + std::to_string(2 * k - 3) +
                    ", got t=" + std::to_string(t));

  Hypergraph variant1 = gen_construction2(n, 3, t0);
  if (t - t0 >= 1)
    variant1 = union_with_filtered_packing(variant1, gen_packing(n, 3, t - t0), t);

  RegularSeed seed{make_clique(k - 1), k - 2, std::nullopt};
  Hypergraph variant2 = gen_construction3(n, 2 * k - 3, seed);
  if (t - (2 * k - 3) >= 1)
    variant2 =
        union_with_filtered_packing(variant2, gen_packing(n, 3, t - (2 * k - 3)), t);

  return variant1.edges.size() >= variant2.edges.size() ? variant1 : variant2;
}

namespace {

Hypergraph bose_sts(int q) {
  // Vertices (x,i) -> 3x+i over Z_q x {0,1,2}; idempotent commutative
  // quasigroup x*y = (x+y)/2 mod q.
  int inv2 = (q + 1) / 2;
  Hypergraph h;
  h.n = 3 * q;
  h.r = 3;
  for (int x = 0; x < q; ++x) h.edges.push_back({3 * x, 3 * x + 1, 3 * x + 2});
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y) {
      int z = static_cast<int>((static_cast<long long>(x + y) * inv2) % q);
      for (int i = 0; i < 3; ++i)
        h.edges.push_back({3 * x + i, 3 * y + i, 3 * z + (i + 1) % 3});
    }
  return normalized(h);
}

Hypergraph skolem_sts(int s) {
  // Vertices (x,i) -> 3x+i over Z_{2s} x {0,1,2} plus a point at 6s.
  // Half-idempotent commutative quasigroup x*y = f((x+y) mod 2s) with
  // f(2i) = i and f(2i+1) = s+i.
  int q = 2 * s;
  auto f = [&](int v) { return v % 2 == 0 ? v / 2 : s + (v - 1) / 2; };
  int inf = 6 * s;
  Hypergraph h;
  h.n = 6 * s + 1;
  h.r = 3;
  for (int x = 0; x < s; ++x) h.edges.push_back({3 * x, 3 * x + 1, 3 * x + 2});
  for (int x = s; x < q; ++x) {
    int y = x - s;
    h.edges.push_back({inf, 3 * x, 3 * y + 1});
    h.edges.push_back({inf, 3 * x + 1, 3 * y + 2});
    h.edges.push_back({inf, 3 * x + 2, 3 * y});
  }
  for (int x = 0; x < q; ++x)
    for (int y = x + 1; y < q; ++y) {
      int z = f((x + y) % q);
      for (int i = 0; i < 3; ++i)
        h.edges.push_back({3 * x + i, 3 * y + i, 3 * z + (i + 1) % 3});
    }
  return normalized(h);
}

}  // namespace

Hypergraph gen_sts(int n) {
  if (n % 6 == 3) return bose_sts(n / 3);
  if (n % 6 == 1) return skolem_sts(n / 6);
  throw Error(ErrorCode::BadResidue,
              "n=" + std::to_string(n) + " is not 1 or 3 mod 6");
}

Hypergraph gen_packing(int n, int r, int lambda) {
  if (lambda < 1) throw Error(ErrorCode::BadParams, "lambda must be at least 1");
  if (r < 2 || r > n)
    throw Error(ErrorCode::BadParams, "need 2 <= r <= n");
  std::map<Pair, int> mult;
  Hypergraph h;
  h.n = n;
  h.r = r;
  for (const auto& e : all_r_subsets(n, r)) {
    bool ok = true;
    for (size_t i = 0; i < e.size() && ok; ++i)
      for (size_t j = i + 1; j < e.size() && ok; ++j) {
        auto it = mult.find(ordered_pair(e[i], e[j]));
        if (it != mult.end() && it->second + 1 > lambda) ok = false;
      }
    if (!ok) continue;
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        ++mult[ordered_pair(e[i], e[j])];
    h.edges.push_back(e);
  }
  return h;  // lex generation order is already canonical
}

namespace {

// Perfect matching by backtracking; graphs here are tiny.
std::optional<std::vector<Pair>> find_perfect_matching(const Graph& g) {
  if (g.n % 2 != 0) return std::nullopt;
  auto adj = adjacency_matrix(g);
  std::vector<char> used(g.n, 0);
  std::vector<Pair> chosen;
  std::function<bool()> rec = [&]() {
    int u = -1;
    for (int v = 0; v < g.n; ++v)
      if (!used[v]) {
        u = v;
        break;
      }
    if (u < 0) return true;
    used[u] = 1;
    for (int v = u + 1; v < g.n; ++v) {
      if (used[v] || !adj[u][v]) continue;
      used[v] = 1;
      chosen.push_back({u, v});
      if (rec()) return true;
      chosen.pop_back();
      used[v] = 0;
    }
    used[u] = 0;
    return false;
  };
  if (!rec()) return std::nullopt;
  return chosen;
}

}  // namespace

RegularSeed builtin_regular_seed(int t) {
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  if (t % 2 == 1) {
    int d = (t - 1) / 2;
    return {make_clique(d + 1), d, std::nullopt};
  }
  int d = t / 2;
  Graph g;
  if (d % 2 == 1) {
    g = make_clique(d + 1);  // even order, has a matching
  } else {
    g = make_clique(d + 2);
    Graph pruned{g.n, {}};
    for (auto e : g.edges)
      if (!(e.first % 2 == 0 && e.second == e.first + 1)) pruned.edges.push_back(e);
    g = pruned;
  }
  auto matching = find_perfect_matching(g);
  if (!matching)
    throw Error(ErrorCode::Internal, "builtin seed lacks a perfect matching");
  return {g, d, matching};
}

std::optional<long long> predicted_size(const std::string& name, int n, int p, int r,
                                        int t, int lambda, const Hypergraph* c1_seed,
                                        const RegularSeed* c3_seed) {
  (void)lambda;
  auto part_sizes = [&](int pp) {
    std::vector<long long> sizes;
    for (auto [start, size] : balanced_parts(n, pp).parts) {
      (void)start;
      sizes.push_back(size);
    }
    return sizes;
  };
  auto turan_graph_edges = [&](int pp) {
    auto sizes = part_sizes(pp);
    long long sum = 0;
    for (size_t i = 0; i < sizes.size(); ++i)
      for (size_t j = i + 1; j < sizes.size(); ++j) sum += sizes[i] * sizes[j];
    return sum;
  };
  auto turan_hypergraph_edges = [&](int pp, int rr) {
    auto sizes = part_sizes(pp);
    long long sum = 0;
    for (const auto& subset : all_r_subsets(static_cast<int>(sizes.size()), rr)) {
      long long prod = 1;
      for (int i : subset) prod *= sizes[i];
      sum += prod;
    }
    return sum;
  };
  if (name == "turan") return turan_hypergraph_edges(p, r);
  if (name == "Q")
    return turan_hypergraph_edges(p, r) +
           static_cast<long long>(t - 1) * (binom(n, 2) - turan_graph_edges(p));
  if (name == "c1" && c1_seed) {
    long long k = c1_seed->n, s = static_cast<long long>(c1_seed->edges.size());
    long long b = n / k;
    return s * k * b * (b - 1) / 2;
  }
  if (name == "c2")
    return static_cast<long long>(t - 1) * binom(n - (t - 1) * (r - 2), 2);
  if (name == "c3" && c3_seed) {
    long long m = c3_seed->g.n, e = static_cast<long long>(c3_seed->g.edges.size());
    long long mu = (t % 2 == 0 && c3_seed->matching)
                       ? static_cast<long long>(c3_seed->matching->size())
                       : 0;
    long long b = n / m;
    return binom(b, 2) * m * (2 * e - mu);
  }
  if (name == "sts") return static_cast<long long>(n) * (n - 1) / 6;
  return std::nullopt;
}

}  // namespace berge

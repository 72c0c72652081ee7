#include "core/bounds.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "core/constructions.hpp"

namespace berge {

void validate(const BlueRedGraph& g) {
  Graph all;
  all.n = g.n;
  all.edges = g.blue;
  all.edges.insert(all.edges.end(), g.red.begin(), g.red.end());
  validate(normalized(all));  // catches overlap as a duplicate edge
}

BlueRedGraph normalized(BlueRedGraph g) {
  for (auto& e : g.blue) e = ordered_pair(e.first, e.second);
  for (auto& e : g.red) e = ordered_pair(e.first, e.second);
  std::sort(g.blue.begin(), g.blue.end());
  std::sort(g.red.begin(), g.red.end());
  return g;
}

Graph underlying(const BlueRedGraph& g) {
  Graph all;
  all.n = g.n;
  all.edges = g.blue;
  all.edges.insert(all.edges.end(), g.red.begin(), g.red.end());
  return normalized(all);
}

Graph blue_subgraph(const BlueRedGraph& g) { return normalized(Graph{g.n, g.blue}); }
Graph red_subgraph(const BlueRedGraph& g) { return normalized(Graph{g.n, g.red}); }

long long count_cliques(const Graph& g, int r) {
  if (r < 1) throw Error(ErrorCode::BadParams, "clique size must be positive");
  if (r == 1) return g.n;
  auto adj = adjacency_matrix(g);
  std::function<long long(const std::vector<int>&, int)> rec =
      [&](const std::vector<int>& cands, int need) -> long long {
    if (need == 0) return 1;
    if (static_cast<int>(cands.size()) < need) return 0;
    long long total = 0;
    for (size_t i = 0; i + need <= cands.size(); ++i) {
      int v = cands[i];
      std::vector<int> next;
      for (size_t j = i + 1; j < cands.size(); ++j)
        if (adj[v][cands[j]]) next.push_back(cands[j]);
      total += rec(next, need - 1);
    }
    return total;
  };
  std::vector<int> all(g.n);
  std::iota(all.begin(), all.end(), 0);
  return rec(all, r);
}

long long g_value(const BlueRedGraph& g, int r, int t) {
  validate(g);
  if (r < 1 || t < 1) throw Error(ErrorCode::BadParams, "need r >= 1 and t >= 1");
  long long edges = static_cast<long long>(g.blue.size()) + g.red.size();
  return count_cliques(blue_subgraph(g), r) +
         static_cast<long long>(t) * static_cast<long long>(g.red.size()) +
         static_cast<long long>(t - 1) * (binom(g.n, 2) - edges);
}

namespace {

constexpr int8_t kNone = 0, kBlue = 1, kRed = 2;

struct SymState {
  int n, k, r, t;
  std::vector<std::vector<int8_t>> col;
  std::vector<SymStep> steps;
  long long g_cur = 0;

  Graph colored_graph(int8_t color) const {
    Graph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (col[u][v] == color) g.edges.push_back({u, v});
    return g;
  }

  long long compute_g() const {
    long long blue_cliques = count_cliques(colored_graph(kBlue), r);
    long long reds = 0, edges = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (col[u][v] != kNone) ++edges;
        if (col[u][v] == kRed) ++reds;
      }
    return blue_cliques + static_cast<long long>(t) * reds +
           static_cast<long long>(t - 1) * (binom(n, 2) - edges);
  }

  void log(const std::string& kind, int a, int b) {
    long long g_next = compute_g();
    if (g_next < g_cur)
      throw Error(ErrorCode::Internal,
                  "symmetrization step '" + kind + "' decreased g");
    g_cur = g_next;
    steps.push_back({kind, a, b, g_next});
  }

  // blue r-clique degree + t*red degree - (t-1)*degree
  long long dstar(int v) const {
    Graph blue = colored_graph(kBlue);
    auto adj = adjacency_matrix(blue);
    std::vector<int> nbrs;
    long long rd = 0, deg = 0;
    for (int w = 0; w < n; ++w) {
      if (col[v][w] == kNone || w == v) continue;
      ++deg;
      if (col[v][w] == kRed) ++rd;
      if (col[v][w] == kBlue) nbrs.push_back(w);
    }
    std::function<long long(const std::vector<int>&, int)> rec =
        [&](const std::vector<int>& cands, int need) -> long long {
      if (need == 0) return 1;
      if (static_cast<int>(cands.size()) < need) return 0;
      long long total = 0;
      for (size_t i = 0; i + need <= cands.size(); ++i) {
        std::vector<int> next;
        for (size_t j = i + 1; j < cands.size(); ++j)
          if (adj[cands[i]][cands[j]]) next.push_back(cands[j]);
        total += rec(next, need - 1);
      }
      return total;
    };
    long long bcd = rec(nbrs, r - 1);
    return bcd + static_cast<long long>(t) * rd -
           static_cast<long long>(t - 1) * deg;
  }

  // Delete u's edges and clone v's colored neighbourhood onto u.
  void vertex_symmetrize(int u, int v) {
    for (int w = 0; w < n; ++w) col[u][w] = col[w][u] = kNone;
    for (int w = 0; w < n; ++w)
      if (w != u && col[v][w] != kNone) col[u][w] = col[w][u] = col[v][w];
  }
};

void phase_vertices(SymState& st) {
  std::vector<char> assigned(st.n, 0);
  int remaining = st.n;
  while (remaining > 0) {
    auto argmax_dstar = [&](const std::vector<int>& cands) {
      int best = cands[0];
      long long best_val = st.dstar(best);
      for (int v : cands) {
        long long val = st.dstar(v);
        if (val > best_val) {
          best = v;
          best_val = val;
        }
      }
      return best;
    };
    std::vector<int> unassigned;
    for (int v = 0; v < st.n; ++v)
      if (!assigned[v]) unassigned.push_back(v);
    int active = argmax_dstar(unassigned);
    std::set<int> members{active};
    while (true) {
      std::vector<int> cands;
      for (int v : unassigned)
        if (!members.count(v) && st.col[active][v] == kNone && v != active)
          cands.push_back(v);
      if (cands.empty()) break;
      int u = argmax_dstar(cands);
      if (st.dstar(u) > st.dstar(active)) {
        // u dominates; rebuild the part around it. Its former members are
        // still non-adjacent to u, so they re-enter as candidates.
        members = {u};
        active = u;
        continue;
      }
      st.vertex_symmetrize(u, active);
      members.insert(u);
      st.log("vertex-sym", u, active);
    }
    for (int v : members) {
      assigned[v] = 1;
      --remaining;
    }
  }
}

struct PartView {
  std::vector<std::vector<int>> parts;
  std::vector<std::vector<int8_t>> pcol;
};

PartView derive_parts(const SymState& st) {
  PartView pv;
  std::vector<char> seen(st.n, 0);
  for (int u = 0; u < st.n; ++u) {
    if (seen[u]) continue;
    std::vector<int> part{u};
    seen[u] = 1;
    for (int v = u + 1; v < st.n; ++v)
      if (!seen[v] && st.col[u][v] == kNone) {
        part.push_back(v);
        seen[v] = 1;
      }
    pv.parts.push_back(part);
  }
  int p = static_cast<int>(pv.parts.size());
  pv.pcol.assign(p, std::vector<int8_t>(p, kNone));
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b) {
      int8_t c = st.col[pv.parts[a][0]][pv.parts[b][0]];
      for (int u : pv.parts[a])
        for (int v : pv.parts[b])
          if (st.col[u][v] != c)
            throw Error(ErrorCode::Internal, "part pair is not monochromatic");
      if (c == kNone)
        throw Error(ErrorCode::Internal, "graph is not complete multipartite");
      pv.pcol[a][b] = pv.pcol[b][a] = c;
    }
  for (const auto& part : pv.parts)
    for (size_t i = 0; i < part.size(); ++i)
      for (size_t j = i + 1; j < part.size(); ++j)
        if (st.col[part[i]][part[j]] != kNone)
          throw Error(ErrorCode::Internal, "edge inside a part");
  return pv;
}

// Weighted clique count on the part graph restricted to blue pairs:
// sum over `need`-subsets of candidate parts, pairwise blue, of the size
// product.
long long weighted_blue_cliques(const PartView& pv, const std::vector<int>& cands,
                                int need) {
  if (need == 0) return 1;
  if (static_cast<int>(cands.size()) < need) return 0;
  long long total = 0;
  for (size_t i = 0; i + need <= cands.size(); ++i) {
    std::vector<int> next;
    for (size_t j = i + 1; j < cands.size(); ++j)
      if (pv.pcol[cands[i]][cands[j]] == kBlue) next.push_back(cands[j]);
    total += static_cast<long long>(pv.parts[cands[i]].size()) *
             weighted_blue_cliques(pv, next, need - 1);
  }
  return total;
}

// Per-vertex d* of a part, computed from the part structure.
long long dstar_per_vertex(const SymState& st, const PartView& pv, int p) {
  std::vector<int> blue_parts;
  long long rd = 0;
  int nparts = static_cast<int>(pv.parts.size());
  for (int q = 0; q < nparts; ++q) {
    if (q == p) continue;
    if (pv.pcol[p][q] == kBlue) blue_parts.push_back(q);
    if (pv.pcol[p][q] == kRed) rd += pv.parts[q].size();
  }
  long long bcd = weighted_blue_cliques(pv, blue_parts, st.r - 1);
  long long deg = st.n - static_cast<long long>(pv.parts[p].size());
  return bcd + static_cast<long long>(st.t) * rd -
         static_cast<long long>(st.t - 1) * deg;
}

// Rewrites part b's connections to mirror part a's, keeping a-b red.
void part_symmetrize(SymState& st, PartView& pv, int b, int a) {
  int nparts = static_cast<int>(pv.parts.size());
  for (int c = 0; c < nparts; ++c) {
    if (c == a || c == b) continue;
    int8_t color = pv.pcol[a][c];
    for (int u : pv.parts[b])
      for (int v : pv.parts[c]) st.col[u][v] = st.col[v][u] = color;
    pv.pcol[b][c] = pv.pcol[c][b] = color;
  }
}

// Part-level symmetrization until red connectivity is an equivalence
// relation. Direction per step is chosen so g never decreases.
void phase_parts(SymState& st, PartView& pv) {
  int nparts = static_cast<int>(pv.parts.size());
  std::vector<char> processed(nparts, 0);
  int guard = 0;
  for (int done = 0; done < nparts;) {
    long long best_val = 0;
    int active = -1;
    for (int p = 0; p < nparts; ++p) {
      if (processed[p]) continue;
      long long val = static_cast<long long>(pv.parts[p].size()) *
                      dstar_per_vertex(st, pv, p);
      if (active < 0 || val > best_val) {
        active = p;
        best_val = val;
      }
    }
    std::set<int> members{active};
    while (true) {
      if (++guard > 2000000)
        throw Error(ErrorCode::Internal, "part symmetrization failed to settle");
      int cand = -1;
      long long cand_val = 0;
      for (int p = 0; p < nparts; ++p) {
        if (processed[p] || members.count(p) || pv.pcol[p][active] != kRed) continue;
        long long val = static_cast<long long>(pv.parts[p].size()) *
                        dstar_per_vertex(st, pv, p);
        if (cand < 0 || val > cand_val) {
          cand = p;
          cand_val = val;
        }
      }
      if (cand < 0) break;
      long long delta_per = dstar_per_vertex(st, pv, active) -
                            dstar_per_vertex(st, pv, cand) +
                            static_cast<long long>(pv.parts[active].size()) -
                            static_cast<long long>(pv.parts[cand].size());
      if (delta_per >= 0) {
        part_symmetrize(st, pv, cand, active);
        members.insert(cand);
        st.log("part-sym", cand, active);
      } else {
        // The reverse direction strictly improves; the old members stay
        // red-connected to the new active and are reabsorbed.
        part_symmetrize(st, pv, active, cand);
        st.log("part-sym", active, cand);
        members = {cand, active};
        active = cand;
      }
    }
    for (int p : members) {
      processed[p] = 1;
      ++done;
    }
  }
}

std::vector<int> red_classes(const PartView& pv) {
  int nparts = static_cast<int>(pv.parts.size());
  std::vector<int> cls(nparts, -1);
  int next = 0;
  for (int p = 0; p < nparts; ++p) {
    if (cls[p] != -1) continue;
    cls[p] = next;
    std::vector<int> queue{p};
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int q = 0; q < nparts; ++q)
        if (cls[q] == -1 && pv.pcol[queue[qi]][q] == kRed) {
          cls[q] = next;
          queue.push_back(q);
        }
    ++next;
  }
  // sanity: intra-class pairs must all be red
  for (int p = 0; p < nparts; ++p)
    for (int q = p + 1; q < nparts; ++q)
      if (cls[p] == cls[q] && pv.pcol[p][q] != kRed)
        throw Error(ErrorCode::Internal, "red relation is not an equivalence");
  return cls;
}

long long esym(const std::vector<long long>& vals, int r) {
  if (r < 0) return 0;
  std::vector<long long> dp(r + 1, 0);
  dp[0] = 1;
  for (long long v : vals)
    for (int j = std::min<int>(r, dp.size() - 1); j >= 1; --j) dp[j] += dp[j - 1] * v;
  return dp[r];
}

// One improving recoloring, if any. Returns false when the coloring is
// already monochromatic or no move applies.
bool apply_recoloring(SymState& st, PartView& pv) {
  int nparts = static_cast<int>(pv.parts.size());
  if (nparts < 2) return false;
  auto cls = red_classes(pv);
  int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<long long> class_size(nclasses, 0);
  for (int p = 0; p < nparts; ++p) class_size[cls[p]] += pv.parts[p].size();

  bool has_blue = false, has_red = false;
  for (int p = 0; p < nparts; ++p)
    for (int q = p + 1; q < nparts; ++q) {
      has_blue |= pv.pcol[p][q] == kBlue;
      has_red |= pv.pcol[p][q] == kRed;
    }
  if (!has_blue || !has_red) return false;

  auto other_sizes = [&](int exclude_class) {
    std::vector<long long> out;
    for (int c = 0; c < nclasses; ++c)
      if (c != exclude_class) out.push_back(class_size[c]);
    return out;
  };

  // Red pair -> blue when it gains more cliques than it loses in red weight.
  for (int a = 0; a < nparts; ++a)
    for (int b = a + 1; b < nparts; ++b) {
      if (pv.pcol[a][b] != kRed) continue;
      long long x = esym(other_sizes(cls[a]), st.r - 2);
      long long sa = pv.parts[a].size(), sb = pv.parts[b].size();
      if (sa * sb * x > static_cast<long long>(st.t) * sa * sb) {
        for (int u : pv.parts[a])
          for (int v : pv.parts[b]) st.col[u][v] = st.col[v][u] = kBlue;
        pv.pcol[a][b] = pv.pcol[b][a] = kBlue;
        st.log("recolor-to-blue", a, b);
        return true;
      }
    }

  // Blue edges at one part -> red when that strictly gains.
  for (int a = 0; a < nparts; ++a) {
    bool any_blue = false;
    for (int q = 0; q < nparts; ++q) any_blue |= pv.pcol[a][q] == kBlue;
    if (!any_blue) continue;
    auto sizes = other_sizes(cls[a]);
    long long z = 0;
    for (long long s : sizes) z += s;
    long long y = esym(sizes, st.r - 1);
    if (static_cast<long long>(st.t) * z - y > 0) {
      for (int q = 0; q < nparts; ++q) {
        if (pv.pcol[a][q] != kBlue) continue;
        for (int u : pv.parts[a])
          for (int v : pv.parts[q]) st.col[u][v] = st.col[v][u] = kRed;
        pv.pcol[a][q] = pv.pcol[q][a] = kRed;
      }
      st.log("recolor-to-red", a, -1);
      return true;
    }
  }

  // Mixed with no strict move happens only when g ignores colors (r=2, t=1);
  // a single global recoloring reaches the monochromatic endpoint without
  // oscillating against the part symmetrization.
  for (int a = 0; a < nparts; ++a)
    for (int b = a + 1; b < nparts; ++b) {
      if (pv.pcol[a][b] != kBlue) continue;
      for (int u : pv.parts[a])
        for (int v : pv.parts[b]) st.col[u][v] = st.col[v][u] = kRed;
      pv.pcol[a][b] = pv.pcol[b][a] = kRed;
    }
  st.log("recolor-to-red", -1, -1);
  return true;
}

// Moves single vertices between parts of the monochromatic endpoint while
// that strictly raises g.
void phase_balance(SymState& st) {
  int guard = 0;
  while (true) {
    if (++guard > 100000)
      throw Error(ErrorCode::Internal, "balancing failed to settle");
    PartView pv = derive_parts(st);
    int nparts = static_cast<int>(pv.parts.size());
    if (nparts < 2) return;
    int8_t color = pv.pcol[0][1];
    std::vector<long long> sizes;
    for (const auto& part : pv.parts) sizes.push_back(part.size());
    auto g_for = [&](const std::vector<long long>& s) {
      long long e = 0, total = 0;
      for (long long v : s) total += v;
      for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) e += s[i] * s[j];
      long long blue_cliques = color == kBlue ? esym(s, st.r) : 0;
      long long reds = color == kRed ? e : 0;
      return blue_cliques + static_cast<long long>(st.t) * reds +
             static_cast<long long>(st.t - 1) * (binom(total, 2) - e);
    };
    long long base = g_for(sizes);
    bool moved = false;
    for (int p = 0; p < nparts && !moved; ++p)
      for (int q = 0; q < nparts && !moved; ++q) {
        if (p == q || sizes[p] == 0) continue;
        auto trial = sizes;
        --trial[p];
        ++trial[q];
        if (g_for(trial) <= base) continue;
        int v = pv.parts[p].back();
        for (int w = 0; w < st.n; ++w) st.col[v][w] = st.col[w][v] = kNone;
        for (int c = 0; c < nparts; ++c) {
          if (c == q) continue;
          for (int u : pv.parts[c])
            if (u != v) st.col[v][u] = st.col[u][v] = color;
        }
        st.log("move", v, q);
        moved = true;
      }
    if (!moved) return;
  }
}

}  // namespace

SymmetrizeResult symmetrize(const BlueRedGraph& input, int k, int r, int t) {
  validate(input);
  if (k < 2 || r < 1 || t < 1)
    throw Error(ErrorCode::BadParams, "need k >= 2, r >= 1, t >= 1");
  if (count_cliques(underlying(input), k) > 0)
    throw Error(ErrorCode::InputNotKkFree,
                "input contains a " + std::to_string(k) + "-clique");

  SymState st;
  st.n = input.n;
  st.k = k;
  st.r = r;
  st.t = t;
  st.col.assign(input.n, std::vector<int8_t>(input.n, kNone));
  for (auto [u, v] : input.blue) st.col[u][v] = st.col[v][u] = kBlue;
  for (auto [u, v] : input.red) st.col[u][v] = st.col[v][u] = kRed;
  st.g_cur = st.compute_g();

  SymmetrizeResult result;
  result.g_initial = st.g_cur;

  phase_vertices(st);
  int guard = 0;
  while (true) {
    if (++guard > 100000)
      throw Error(ErrorCode::Internal, "recoloring failed to settle");
    PartView pv = derive_parts(st);
    phase_parts(st, pv);
    if (!apply_recoloring(st, pv)) break;
  }
  phase_balance(st);

  BlueRedGraph out;
  out.n = st.n;
  for (int u = 0; u < st.n; ++u)
    for (int v = u + 1; v < st.n; ++v) {
      if (st.col[u][v] == kBlue) out.blue.push_back({u, v});
      if (st.col[u][v] == kRed) out.red.push_back({u, v});
    }
  if (count_cliques(underlying(out), k) > 0)
    throw Error(ErrorCode::Internal, "output is not K_k-free");
  result.final = out;
  result.steps = std::move(st.steps);
  result.g_final = st.g_cur;
  return result;
}

BoundReport theorem_bounds(int n, int r, int t, const std::string& pattern) {
  if (n < 1 || r < 2 || t < 1)
    throw Error(ErrorCode::BadParams, "need n >= 1, r >= 2, t >= 1");
  if (pattern.size() < 2)
    throw Error(ErrorCode::BadParams, "pattern must be K<k>, P<k> or C<k>");
  char kind = pattern[0];
  Graph f = pattern_from_name(pattern);
  int k = f.n;
  long long pairs = binom(n, 2);

  BoundReport rep;
  rep.n = n;
  rep.r = r;
  rep.t = t;
  rep.pattern = pattern;

  if (kind == 'K') {
    if (k < 2 || k - 1 > n)
      throw Error(ErrorCode::BadParams, "clique size out of range for n");
    Graph turan = gen_turan_graph(n, k - 1);
    long long ex_f = static_cast<long long>(turan.edges.size());
    long long ex_kr = count_cliques(turan, r);
    rep.upper.push_back({"bluered_symmetrization",
                         (t - 1) * pairs + std::max(ex_kr - (t - 1) * ex_f, ex_f)});
    rep.upper.push_back({"pick_or_mark", ex_kr + ex_f + (t - 1) * pairs});
    rep.lower.push_back({"clique_blowup", ex_kr});
    if (r <= k - 1) {
      rep.lower.push_back(
          {"transversal",
           static_cast<long long>(gen_turan_hypergraph(n, k - 1, r).edges.size())});
      try {
        long long q = static_cast<long long>(gen_Q(n, k - 1, r, t).edges.size());
        rep.lower.push_back({"q_construction", q});
        long long sym_upper = rep.upper[0].second;
        rep.exact = q == sym_upper;
        if (rep.exact)
          rep.notes.push_back("q_construction meets the symmetrization bound");
      } catch (const Error& e) {
        rep.notes.push_back(std::string("q_construction unavailable: ") + e.what());
      }
    } else {
      rep.notes.push_back("r exceeds k-1; transversal constructions are empty");
    }
  } else if (kind == 'P' || kind == 'C') {
    long long all_sets = binom(n, r);
    rep.upper.push_back({"all_r_sets", all_sets});
    int path_vertices = kind == 'P' ? k : k + 1;
    int threshold = 2 * (t - 1) * (r - 2) + 2;
    if (path_vertices >= threshold && n > (t - 1) * (r - 2) + 1) {
      rep.lower.push_back(
          {"cross_pair_blocks",
           static_cast<long long>(gen_construction2(n, r, t).edges.size())});
      rep.notes.push_back(
          "cross_pair_blocks is free: its t-heavy edges are covered by the fixed blocks");
    } else {
      rep.notes.push_back("pattern below the block threshold 2(t-1)(r-2)+2 = " +
                          std::to_string(threshold));
    }
    rep.notes.push_back(
        "for long paths and cycles the value is (t-1)*C(n,2) up to lower-order terms");
  } else {
    throw Error(ErrorCode::BadParams, "pattern must be K<k>, P<k> or C<k>");
  }
  for (auto& [ln, lv] : rep.lower)
    for (auto& [un, uv] : rep.upper)
      if (lv > uv)
        throw Error(ErrorCode::Internal,
                    "lower bound " + ln + " exceeds upper bound " + un);
  return rep;
}

}  // namespace berge

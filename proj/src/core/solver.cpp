#include "core/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace berge {

namespace {

bool berge_assignment_exists(const std::vector<std::vector<int>>& covers, int t,
                             std::vector<char>& used, size_t edge_index) {
  if (edge_index == covers.size()) return true;
  std::vector<int> available;
  for (int idx : covers[edge_index])
    if (!used[idx]) available.push_back(idx);
  if (static_cast<int>(available.size()) < t) return false;
  std::vector<int> combo(t);
  std::function<bool(int, int)> choose = [&](int start, int picked) {
    if (picked == t) {
      for (int i = 0; i < t; ++i) used[combo[i]] = 1;
      bool ok = berge_assignment_exists(covers, t, used, edge_index + 1);
      for (int i = 0; i < t; ++i) used[combo[i]] = 0;
      return ok;
    }
    for (int i = start; i <= static_cast<int>(available.size()) - (t - picked); ++i) {
      combo[picked] = available[i];
      if (choose(i + 1, picked + 1)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

}  // namespace

bool brute_force_detect(const Hypergraph& h, const Graph& f, int t, Mode mode) {
  validate(h);
  validate(f);
  if (t < 1) throw Error(ErrorCode::BadParams, "t must be at least 1");
  if (f.n > 8) throw Error(ErrorCode::TooLarge, "pattern capped at 8 vertices");
  if (h.edges.size() > 64)
    throw Error(ErrorCode::TooLarge, "host capped at 64 hyperedges");
  if (f.n > h.n) return false;

  // multiplicity of every pair, plus covering hyperedges
  std::vector<std::vector<std::vector<int>>> covering(
      h.n, std::vector<std::vector<int>>(h.n));
  for (size_t idx = 0; idx < h.edges.size(); ++idx) {
    const auto& e = h.edges[idx];
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        covering[e[i]][e[j]].push_back(static_cast<int>(idx));
        covering[e[j]][e[i]].push_back(static_cast<int>(idx));
      }
  }

  std::vector<int> image(f.n, -1);
  std::vector<char> taken(h.n, 0);
  std::function<bool(int)> inject = [&](int fv) -> bool {
    if (fv == f.n) {
      for (const auto& [u, v] : f.edges)
        if (static_cast<int>(covering[image[u]][image[v]].size()) < t) return false;
      if (mode == Mode::Heavy) return true;
      std::vector<std::vector<int>> covers;
      for (const auto& [u, v] : f.edges)
        covers.push_back(covering[image[u]][image[v]]);
      std::vector<char> used(h.edges.size(), 0);
      return berge_assignment_exists(covers, t, used, 0);
    }
    for (int hv = 0; hv < h.n; ++hv) {
      if (taken[hv]) continue;
      image[fv] = hv;
      taken[hv] = 1;
      if (inject(fv + 1)) return true;
      taken[hv] = 0;
      image[fv] = -1;
    }
    return false;
  };
  return inject(0);
}

namespace {

struct TuranSearch {
  int n, r, t;
  Mode mode;
  const Graph& f;
  const SolveOptions& opts;
  std::vector<std::vector<int>> rsets;
  long long nodes = 0;
  bool budget_hit = false;
  long long best = -1;
  std::vector<int> best_edges;
  std::vector<int> current;  // indices of included r-sets
  std::vector<std::vector<int>> mult;
  bool heavy_has_f = false;

  // isomorphism pruning precomputation: for each vertex permutation, the
  // induced permutation of r-set indices
  std::vector<std::vector<int>> rset_perms;
  std::vector<char> decision;  // per r-set: 1 include, 0 exclude (valid < idx)

  TuranSearch(int n_, int r_, const Graph& f_, int t_, Mode mode_,
              const SolveOptions& o)
      : n(n_), r(r_), t(t_), mode(mode_), f(f_), opts(o) {
    rsets = all_r_subsets(n, r);
    mult.assign(n, std::vector<int>(n, 0));
    decision.assign(rsets.size(), 0);
    if (opts.isomorphism_pruning && n <= 7) prepare_perms();
  }

  void prepare_perms() {
    std::map<std::vector<int>, int> index_of;
    for (size_t i = 0; i < rsets.size(); ++i) index_of[rsets[i]] = static_cast<int>(i);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<int> mapped(rsets.size());
      for (size_t i = 0; i < rsets.size(); ++i) {
        std::vector<int> img;
        img.reserve(r);
        for (int v : rsets[i]) img.push_back(perm[v]);
        std::sort(img.begin(), img.end());
        mapped[i] = index_of[img];
      }
      rset_perms.push_back(std::move(mapped));
    }
  }

  bool dominated_by_symmetry(int idx) {
    for (const auto& p : rset_perms) {
      bool stabilizes = true;
      for (int j = 0; j < idx && stabilizes; ++j)
        if (p[j] >= idx) stabilizes = false;
      if (!stabilizes) continue;
      // earlier-visited assignments are lexicographically larger with
      // include=1; prune when the image is strictly larger
      int cmp = 0;
      std::vector<char> image(idx);
      for (int j = 0; j < idx; ++j) image[p[j]] = decision[j];
      for (int j = 0; j < idx; ++j) {
        if (image[j] != decision[j]) {
          cmp = image[j] > decision[j] ? 1 : -1;
          break;
        }
      }
      if (cmp == 1) return true;
    }
    return false;
  }

  Graph heavy_now() const {
    Graph g;
    g.n = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (mult[u][v] >= t) g.edges.push_back({u, v});
    return g;
  }

  // For a single-edge pattern, freeness caps every pair multiplicity at t-1
  // in both modes, bounding the total edge count outright.
  long long global_cap() const {
    if (f.edges.size() != 1) return -1;
    return static_cast<long long>(t - 1) * binom(n, 2) / binom(r, 2);
  }

  Hypergraph current_hypergraph() const {
    Hypergraph h;
    h.n = n;
    h.r = r;
    for (int idx : current) h.edges.push_back(rsets[idx]);
    return h;
  }

  bool include_is_feasible(bool crossed) {
    if (crossed) heavy_has_f = heavy_has_f || graph_contains(heavy_now(), f);
    if (!heavy_has_f) return true;
    if (mode == Mode::Heavy) return false;
    return !find_copy(current_hypergraph(), f, t, Mode::Berge).has_value();
  }

  void branch(size_t idx) {
    if (budget_hit) return;
    if (++nodes > opts.node_budget) {
      budget_hit = true;
      return;
    }
    long long cur = static_cast<long long>(current.size());
    if (idx == rsets.size()) {
      if (cur > best) {
        best = cur;
        best_edges = current;
      }
      return;
    }
    long long reachable = cur + static_cast<long long>(rsets.size() - idx);
    if (long long cap = global_cap(); cap >= 0) reachable = std::min(reachable, cap);
    if (reachable <= best) return;
    if (!rset_perms.empty() && idx <= 14 && dominated_by_symmetry(static_cast<int>(idx)))
      return;

    const auto& e = rsets[idx];
    bool crossed = false;
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        if (++mult[e[i]][e[j]] == t) crossed = true;
        ++mult[e[j]][e[i]];
      }
    current.push_back(static_cast<int>(idx));
    bool saved_flag = heavy_has_f;
    if (include_is_feasible(crossed)) {
      decision[idx] = 1;
      branch(idx + 1);
    }
    heavy_has_f = saved_flag;
    current.pop_back();
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        --mult[e[i]][e[j]];
        --mult[e[j]][e[i]];
      }

    decision[idx] = 0;
    branch(idx + 1);
  }
};

}  // namespace

SolveResult exact_turan(int n, int r, const Graph& f, int t, Mode mode,
                        const SolveOptions& opts) {
  validate(f);
  if (f.edges.empty())
    throw Error(ErrorCode::BadPattern, "pattern must have at least one edge");
  if (n < 1 || r < 2 || t < 1)
    throw Error(ErrorCode::BadParams, "need n >= 1, r >= 2, t >= 1");
  if (r > n) throw Error(ErrorCode::BadParams, "r exceeds n");
  if (binom(n, r) > 5000)
    throw Error(ErrorCode::TooLarge, "search space capped at 5000 r-sets");

  TuranSearch search(n, r, f, t, mode, opts);
  search.branch(0);
  SolveResult result;
  result.value = std::max<long long>(search.best, 0);
  result.nodes_explored = search.nodes;
  result.exhausted = !search.budget_hit;
  Hypergraph extremal;
  extremal.n = n;
  extremal.r = r;
  for (int idx : search.best_edges) extremal.edges.push_back(search.rsets[idx]);
  result.extremal = normalized(extremal);
  return result;
}

}  // namespace berge

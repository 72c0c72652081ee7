#include "core/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "core/bounds.hpp"
#include "core/constructions.hpp"
#include "core/detect.hpp"
#include "core/hypergraph.hpp"
#include "core/solver.hpp"

namespace berge {

namespace {

std::mt19937 make_rng(int criterion) {
  return std::mt19937(0xbe46e000u + static_cast<unsigned>(criterion));
}

std::vector<std::pair<std::string, Graph>> test_patterns() {
  return {{"S2", make_star(2)},
          {"P4", make_path(4)},
          {"K3", make_clique(3)},
          {"C4", make_cycle(4)},
          {"K4", make_clique(4)}};
}

Hypergraph random_hypergraph(std::mt19937& rng, int n, int r, int max_edges) {
  auto all = all_r_subsets(n, r);
  int cap = std::min<int>(max_edges, static_cast<int>(all.size()));
  int m = std::uniform_int_distribution<int>(0, cap)(rng);
  std::vector<int> idx(all.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  Hypergraph h;
  h.n = n;
  h.r = r;
  for (int i = 0; i < m; ++i) h.edges.push_back(all[idx[i]]);
  return normalized(h);
}

// 3-uniform hypergraph guaranteed to contain a t-heavy triangle, plus noise.
Hypergraph planted_heavy_triangle(std::mt19937& rng, int n, int t) {
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::shuffle(verts.begin(), verts.end(), rng);
  int a = verts[0], b = verts[1], c = verts[2];
  std::set<std::vector<int>> edges;
  for (auto [u, v] : {Pair{a, b}, Pair{a, c}, Pair{b, c}}) {
    std::vector<int> thirds;
    for (int x = 0; x < n; ++x)
      if (x != u && x != v) thirds.push_back(x);
    std::shuffle(thirds.begin(), thirds.end(), rng);
    int covered = 0;
    for (int x : thirds) {
      if (covered >= t) break;
      std::vector<int> e{u, v, x};
      std::sort(e.begin(), e.end());
      if (edges.insert(e).second) ++covered;
      else ++covered;  // an existing edge still covers the pair
    }
  }
  int noise = std::uniform_int_distribution<int>(0, 8)(rng);
  auto all = all_r_subsets(n, 3);
  for (int i = 0; i < noise; ++i) {
    const auto& e = all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
    edges.insert(e);
  }
  Hypergraph h;
  h.n = n;
  h.r = 3;
  h.edges.assign(edges.begin(), edges.end());
  return normalized(h);
}

BlueRedGraph random_k4free_bluered(std::mt19937& rng, int n) {
  auto coin = [&](double p) {
    return std::uniform_real_distribution<double>(0, 1)(rng) < p;
  };
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(0.5)) g.edges.push_back({u, v});
  Graph k4 = make_clique(4);
  while (true) {
    std::vector<int> found;
    for_each_embedding(g, k4, [&](const std::vector<int>& emb) {
      found = emb;
      return true;
    });
    if (found.empty()) break;
    std::vector<Pair> clique_edges;
    for (size_t i = 0; i < found.size(); ++i)
      for (size_t j = i + 1; j < found.size(); ++j)
        clique_edges.push_back(ordered_pair(found[i], found[j]));
    Pair victim =
        clique_edges[std::uniform_int_distribution<size_t>(0, 5)(rng)];
    g.edges.erase(std::find(g.edges.begin(), g.edges.end(), victim));
  }
  BlueRedGraph out;
  out.n = n;
  for (auto e : g.edges) (coin(0.5) ? out.blue : out.red).push_back(e);
  return normalized(out);
}

bool is_complete_multipartite(const Graph& g) {
  auto adj = adjacency_matrix(g);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      for (int w = 0; w < g.n; ++w) {
        if (u == v || v == w || u == w) continue;
        if (!adj[u][v] && !adj[v][w] && adj[u][w]) return false;
      }
  return true;
}

std::vector<std::pair<std::string, Hypergraph>> generator_gallery() {
  std::vector<std::pair<std::string, Hypergraph>> out;
  out.push_back({"turan(7,3,3)", gen_turan_hypergraph(7, 3, 3)});
  out.push_back({"Q(6,3,3,2)", gen_Q(6, 3, 3, 2)});
  out.push_back({"Q(8,3,3,2)", gen_Q(8, 3, 3, 2)});
  Hypergraph matching_seed{2, 2, {{0, 1}}};
  out.push_back({"c1(6,matching)", gen_construction1(6, matching_seed)});
  out.push_back({"c2(10,3,2)", gen_construction2(10, 3, 2)});
  out.push_back({"c2(9,4,2)", gen_construction2(9, 4, 2)});
  RegularSeed c4seed{make_cycle(4), 2, std::vector<Pair>{{0, 1}, {2, 3}}};
  out.push_back({"c3(8,4,C4)", gen_construction3(8, 4, c4seed)});
  out.push_back({"c3(12,3,builtin)", gen_construction3(12, 3, builtin_regular_seed(3))});
  out.push_back({"c4(16,4,S2)", gen_construction4(16, 4, make_star(2))});
  for (int n : {7, 9, 13, 15})
    out.push_back({"sts(" + std::to_string(n) + ")", gen_sts(n)});
  out.push_back({"packing(7,3,1)", gen_packing(7, 3, 1)});
  out.push_back({"packing(9,3,2)", gen_packing(9, 3, 2)});
  return out;
}

CriterionResult criterion1() {
  CriterionResult res{1, "q-construction exactness at small n", false, "", 0};
  std::ostringstream details;
  bool ok = true;
  for (int n : {6, 7, 8}) {
    Hypergraph q = gen_Q(n, 3, 3, 2);
    long long predicted = *predicted_size("Q", n, 3, 3, 2, 0, nullptr, nullptr);
    bool size_ok = static_cast<long long>(q.edges.size()) == predicted;
    bool free_heavy = !find_copy(q, make_clique(4), 2, Mode::Heavy).has_value();
    bool free_berge = !find_copy(q, make_clique(4), 2, Mode::Berge).has_value();
    ok = ok && size_ok && free_heavy && free_berge;
    details << "n=" << n << " size=" << q.edges.size() << "/" << predicted
            << (free_heavy && free_berge ? " free" : " VIOLATION") << "; ";
  }
  SolveOptions opts;
  opts.node_budget = 10'000'000;
  SolveResult solved = exact_turan(6, 3, make_clique(4), 2, Mode::Heavy, opts);
  long long q6 = static_cast<long long>(gen_Q(6, 3, 3, 2).edges.size());
  ok = ok && solved.value >= q6;
  details << "solver(n=6,heavy): value=" << solved.value << " gap=" << solved.value - q6
          << " nodes=" << solved.nodes_explored
          << " exhausted=" << (solved.exhausted ? "yes" : "no");
  res.pass = ok;
  res.details = details.str();
  return res;
}

CriterionResult criterion2() {
  CriterionResult res{2, "detection oracle equivalence", false, "", 0};
  auto rng = make_rng(2);
  auto patterns = test_patterns();
  int instances = 1500, mismatches = 0, contained = 0;
  for (int i = 0; i < instances; ++i) {
    int n = std::uniform_int_distribution<int>(4, 7)(rng);
    Hypergraph h = random_hypergraph(rng, n, 3, 20);
    const auto& [name, f] = patterns[std::uniform_int_distribution<size_t>(
        0, patterns.size() - 1)(rng)];
    (void)name;
    int t = std::uniform_int_distribution<int>(1, 3)(rng);
    for (Mode mode : {Mode::Heavy, Mode::Berge}) {
      bool fast = find_copy(h, f, t, mode).has_value();
      bool slow = brute_force_detect(h, f, t, mode);
      if (fast != slow) ++mismatches;
      if (fast) ++contained;
    }
  }
  res.pass = mismatches == 0;
  std::ostringstream details;
  details << instances << " instances, both modes, " << contained
          << " containments, " << mismatches << " mismatches";
  res.details = details.str();
  return res;
}

CriterionResult criterion3() {
  CriterionResult res{3, "linear hypergraphs have no 2-heavy copies", false, "", 0};
  int violations = 0;
  std::ostringstream details;
  for (int n : {7, 9, 13, 15}) {
    Hypergraph h = gen_sts(n);
    for (const auto& [name, f] : test_patterns())
      if (find_copy(h, f, 2, Mode::Heavy).has_value()) {
        ++violations;
        details << "sts(" << n << ") contains 2-heavy " << name << "; ";
      }
  }
  res.pass = violations == 0;
  details << violations << " violations over sts{7,9,13,15} x 5 patterns";
  res.details = details.str();
  return res;
}

CriterionResult criterion4() {
  CriterionResult res{4, "berge extraction from heavy copies", false, "", 0};
  auto rng = make_rng(4);
  int failures = 0;
  const int runs = 200;
  Graph k3 = make_clique(3);
  for (int i = 0; i < runs; ++i) {
    Hypergraph h = planted_heavy_triangle(rng, 9, 6);
    try {
      Witness w = extract_berge_from_heavy(h, k3, 6);
      if (w.t != 2 || w.mode != Mode::Berge || !verify_witness(h, k3, 2, Mode::Berge, w))
        ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  res.pass = failures == 0;
  res.details = std::to_string(runs) + " planted instances, " +
                std::to_string(failures) + " failures";
  return res;
}

CriterionResult criterion5() {
  CriterionResult res{5, "expansion extraction on 3-uniform hosts", false, "", 0};
  auto rng = make_rng(5);
  int failures = 0;
  const int runs = 200;
  Graph k3 = make_clique(3);
  for (int i = 0; i < runs; ++i) {
    Hypergraph h = planted_heavy_triangle(rng, 10, 4);
    try {
      Expansion3 e = extract_expansion3(h, k3, 4);
      std::set<int> essence(e.essence.begin(), e.essence.end());
      std::set<int> apexes(e.apexes.begin(), e.apexes.end());
      bool ok = e.expansion.edges.size() == 3 && e.apexes.size() == 3 &&
                apexes.size() == 3;
      for (int apex : e.apexes)
        if (essence.count(apex)) ok = false;
      if (!ok) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  res.pass = failures == 0;
  res.details = std::to_string(runs) + " planted instances, " +
                std::to_string(failures) + " failures";
  return res;
}

CriterionResult criterion6() {
  CriterionResult res{6, "block construction path/cycle freeness", false, "", 0};
  bool ok = true;
  std::ostringstream details;
  Graph p4 = make_path(4), c3 = make_cycle(3);
  for (int n = 8; n <= 14; ++n) {
    Hypergraph h = gen_construction2(n, 3, 2);
    bool size_ok = static_cast<long long>(h.edges.size()) == binom(n - 1, 2);
    bool free = !find_copy(h, p4, 2, Mode::Heavy).has_value() &&
                !find_copy(h, c3, 2, Mode::Heavy).has_value();
    ok = ok && size_ok && free;
    if (!size_ok || !free) details << "n=" << n << " VIOLATION; ";
  }
  details << "n=8..14 sizes C(n-1,2), detector clean";
  res.pass = ok;
  res.details = details.str();
  return res;
}

CriterionResult criterion7() {
  CriterionResult res{7, "symmetrization monotonicity and clique bound", false, "", 0};
  auto rng = make_rng(7);
  int violations = 0;
  const int runs = 500;
  for (int i = 0; i < runs; ++i) {
    int n = std::uniform_int_distribution<int>(4, 10)(rng);
    BlueRedGraph g = random_k4free_bluered(rng, n);
    SymmetrizeResult sym = symmetrize(g, 4, 3, 2);
    long long prev = sym.g_initial;
    for (const auto& step : sym.steps) {
      if (step.g_after < prev) ++violations;
      prev = step.g_after;
    }
    bool mono_chromatic = sym.final.blue.empty() || sym.final.red.empty();
    if (!mono_chromatic) ++violations;
    if (!is_complete_multipartite(underlying(sym.final))) ++violations;
    if (count_cliques(underlying(sym.final), 4) != 0) ++violations;
    Graph turan = gen_turan_graph(n, 3);
    long long bound =
        binom(n, 2) + std::max(count_cliques(turan, 3) -
                                   static_cast<long long>(turan.edges.size()),
                               static_cast<long long>(turan.edges.size()));
    if (sym.g_final > bound) ++violations;
  }
  // the monochromatic Turan graphs attain the bound
  for (int n = 4; n <= 10; ++n) {
    Graph turan = gen_turan_graph(n, 3);
    BlueRedGraph mono_blue{n, turan.edges, {}}, mono_red{n, {}, turan.edges};
    long long bound =
        binom(n, 2) + std::max(count_cliques(turan, 3) -
                                   static_cast<long long>(turan.edges.size()),
                               static_cast<long long>(turan.edges.size()));
    if (std::max(g_value(mono_blue, 3, 2), g_value(mono_red, 3, 2)) != bound)
      ++violations;
  }
  res.pass = violations == 0;
  res.details = std::to_string(runs) + " random starts, " +
                std::to_string(violations) + " violations";
  return res;
}

CriterionResult criterion8() {
  CriterionResult res{8, "greedy certificate identity", false, "", 0};
  auto rng = make_rng(8);
  int violations = 0, berge_checks = 0;
  auto patterns = test_patterns();
  auto check = [&](const Hypergraph& h, bool run_berge_checks) {
    for (int t = 1; t <= 3; ++t) {
      Certificate cert = greedy_certificate(h, t);
      long long sum = cert.marked;
      for (int i = 0; i <= t; ++i)
        sum += static_cast<long long>(i) * cert.levels[i].edges.size();
      if (sum != static_cast<long long>(h.edges.size())) ++violations;
      if (!run_berge_checks) continue;
      for (const auto& [name, f] : patterns) {
        (void)name;
        if (find_copy(h, f, t, Mode::Berge).has_value()) continue;
        ++berge_checks;
        if (graph_contains(cert.levels[t], f)) ++violations;
      }
    }
  };
  for (int i = 0; i < 500; ++i) {
    int n = std::uniform_int_distribution<int>(4, 8)(rng);
    check(random_hypergraph(rng, n, 3, 25), true);
  }
  for (const auto& [name, h] : generator_gallery()) {
    (void)name;
    check(h, h.edges.size() <= 60 && h.n <= 20);
  }
  res.pass = violations == 0;
  res.details = "500 random hypergraphs plus generator outputs, " +
                std::to_string(berge_checks) + " berge-free level checks, " +
                std::to_string(violations) + " violations";
  return res;
}

CriterionResult criterion9() {
  CriterionResult res{9, "threshold recursion at desk scale", false, "", 0};
  Graph s2 = make_star(2);
  long long pairs = binom(5, 2);
  bool ok = true;
  std::ostringstream details;
  std::vector<long long> heavy_vals, berge_vals;
  for (int t = 1; t <= 3; ++t) {
    SolveResult h = exact_turan(5, 3, s2, t, Mode::Heavy);
    SolveResult b = exact_turan(5, 3, s2, t, Mode::Berge);
    ok = ok && h.exhausted && b.exhausted;
    heavy_vals.push_back(h.value);
    berge_vals.push_back(b.value);
    details << "t=" << t << " heavy=" << h.value << " berge=" << b.value << "; ";
  }
  for (int t = 2; t <= 3; ++t)
    ok = ok && berge_vals[t - 1] <= berge_vals[t - 2] + pairs;
  for (int t = 1; t <= 3; ++t) ok = ok && heavy_vals[t - 1] <= berge_vals[t - 1];
  res.pass = ok;
  res.details = details.str();
  return res;
}

CriterionResult criterion10() {
  CriterionResult res{10, "quadratic trend of the star construction", false, "", 0};
  const int n = 48, t = 3;
  Graph s2 = make_star(2);
  Hypergraph h = gen_construction4(n, t, s2);
  double floor_size = 0.7 * t * n * n / 6.0;
  bool size_ok = static_cast<double>(h.edges.size()) >= floor_size;
  bool free = !find_copy(h, s2, t, Mode::Heavy).has_value();
  res.pass = size_ok && free;
  std::ostringstream details;
  details << "n=" << n << " size=" << h.edges.size() << " floor=" << floor_size
          << (free ? " free" : " VIOLATION");
  res.details = details.str();
  return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::set<int>& which) {
  using Clock = std::chrono::steady_clock;
  std::vector<CriterionResult (*)()> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 10; ++id) {
    if (!which.empty() && !which.count(id)) continue;
    auto start = Clock::now();
    CriterionResult res;
    try {
      res = criteria[id - 1]();
    } catch (const std::exception& e) {
      res.id = id;
      res.name = "criterion " + std::to_string(id);
      res.pass = false;
      res.details = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    // runtime gates
    if (res.id == 1 && res.seconds >= 300) {
      res.pass = false;
      res.details += " (runtime limit 300s exceeded)";
    }
    if (res.id == 2 && res.seconds >= 120) {
      res.pass = false;
      res.details += " (runtime limit 120s exceeded)";
    }
    results.push_back(res);
  }
  return results;
}

}  // namespace berge

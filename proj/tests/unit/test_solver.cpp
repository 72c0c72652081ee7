#include <doctest.h>

#include <random>

#include "core/constructions.hpp"
#include "core/detect.hpp"
#include "core/bounds.hpp"
#include "core/solver.hpp"

using namespace berge;

namespace {

Hypergraph random_hypergraph(std::mt19937& rng, int n, int r, int max_edges) {
  auto all = all_r_subsets(n, r);
  std::shuffle(all.begin(), all.end(), rng);
  int cap = std::min<int>(max_edges, static_cast<int>(all.size()));
  int m = std::uniform_int_distribution<int>(0, cap)(rng);
  Hypergraph h{n, r, {all.begin(), all.begin() + m}};
  return normalized(h);
}

Hypergraph berge_triangle_fixture() {
  return normalized(Hypergraph{
      9, 3, {{0, 1, 3}, {0, 1, 4}, {1, 2, 5}, {1, 2, 6}, {0, 2, 7}, {0, 2, 8}}});
}

// Full enumeration over all subsets of r-sets; the second, fully independent
// route to small Turan numbers.
long long turan_by_enumeration(int n, int r, const Graph& f, int t, Mode mode) {
  auto all = all_r_subsets(n, r);
  long long best = 0;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    Hypergraph h{n, r, {}};
    for (size_t i = 0; i < all.size(); ++i)
      if (mask & (1u << i)) h.edges.push_back(all[i]);
    if (static_cast<long long>(h.edges.size()) <= best) continue;
    if (!brute_force_detect(h, f, t, mode))
      best = static_cast<long long>(h.edges.size());
  }
  return best;
}

}  // namespace

TEST_CASE("brute force detects the constructed berge triangle") {
  CHECK(brute_force_detect(berge_triangle_fixture(), make_clique(3), 2, Mode::Berge));
}

TEST_CASE("brute force clears the Fano plane at t=2") {
  Hypergraph fano = gen_sts(7);
  for (const auto& f : {make_star(2), make_clique(3), make_path(4)})
    CHECK_FALSE(brute_force_detect(fano, f, 2, Mode::Heavy));
}

TEST_CASE("brute force enforces its size caps") {
  Hypergraph big{70, 3, {}};
  for (const auto& e : all_r_subsets(12, 3)) {
    if (big.edges.size() >= 65) break;
    big.edges.push_back(e);
  }
  big.n = 12;
  CHECK_THROWS_AS(brute_force_detect(big, make_clique(3), 1, Mode::Heavy), Error);
}

TEST_CASE("oracle battery: find_copy agrees with brute force") {
  std::mt19937 rng(41);
  std::vector<Graph> fs = {make_star(2), make_path(4), make_clique(3),
                           make_cycle(4), make_clique(4)};
  int checked = 0;
  for (int round = 0; round < 250; ++round) {
    int n = std::uniform_int_distribution<int>(4, 8)(rng);
    Hypergraph h = random_hypergraph(rng, n, 3, 18);
    const Graph& f = fs[std::uniform_int_distribution<size_t>(0, fs.size() - 1)(rng)];
    int t = std::uniform_int_distribution<int>(1, 3)(rng);
    for (Mode mode : {Mode::Heavy, Mode::Berge}) {
      CHECK(find_copy(h, f, t, mode).has_value() ==
            brute_force_detect(h, f, t, mode));
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("single-edge patterns: value matches enumeration, cap prunes") {
  Graph edge = make_path(2);
  long long expected = turan_by_enumeration(5, 3, edge, 2, Mode::Heavy);
  CHECK(expected == 2);  // the largest pairwise edge-disjoint triple packing
  for (Mode mode : {Mode::Heavy, Mode::Berge}) {
    SolveResult res = exact_turan(5, 3, edge, 2, mode);
    CHECK(res.exhausted);
    CHECK(res.value == expected);
  }
}

TEST_CASE("oracle battery extends to 4-uniform hosts") {
  std::mt19937 rng(42);
  std::vector<Graph> fs = {make_star(2), make_clique(3), make_path(4)};
  for (int round = 0; round < 120; ++round) {
    int n = std::uniform_int_distribution<int>(5, 7)(rng);
    Hypergraph h = random_hypergraph(rng, n, 4, 14);
    const Graph& f = fs[std::uniform_int_distribution<size_t>(0, fs.size() - 1)(rng)];
    int t = std::uniform_int_distribution<int>(1, 3)(rng);
    for (Mode mode : {Mode::Heavy, Mode::Berge})
      CHECK(find_copy(h, f, t, mode).has_value() ==
            brute_force_detect(h, f, t, mode));
  }
}

TEST_CASE("exact turan rejects edgeless patterns") {
  Graph lone{3, {}};
  CHECK_THROWS_AS(exact_turan(5, 3, lone, 1, Mode::Heavy), Error);
  try {
    exact_turan(5, 3, lone, 1, Mode::Heavy);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadPattern);
  }
}

TEST_CASE("exact turan for 1-heavy K4 at n=6 matches the turan hypergraph") {
  SolveResult res = exact_turan(6, 3, make_clique(4), 1, Mode::Heavy);
  CHECK(res.exhausted);
  CHECK(res.value == 8);
  CHECK_FALSE(find_copy(res.extremal, make_clique(4), 1, Mode::Heavy).has_value());
  CHECK_FALSE(brute_force_detect(res.extremal, make_clique(4), 1, Mode::Heavy));
}

TEST_CASE("exact turan agrees with full enumeration on the cherry") {
  Graph s2 = make_star(2);
  long long enumerated = turan_by_enumeration(5, 3, s2, 2, Mode::Heavy);
  SolveResult res = exact_turan(5, 3, s2, 2, Mode::Heavy);
  CHECK(res.exhausted);
  CHECK(res.value == enumerated);

  long long enumerated_berge = turan_by_enumeration(5, 3, s2, 2, Mode::Berge);
  SolveResult res_berge = exact_turan(5, 3, s2, 2, Mode::Berge);
  CHECK(res_berge.exhausted);
  CHECK(res_berge.value == enumerated_berge);
}

TEST_CASE("exact turan extremal hypergraphs verify as free") {
  for (Mode mode : {Mode::Heavy, Mode::Berge})
    for (int t : {1, 2}) {
      SolveResult res = exact_turan(5, 3, make_clique(3), t, mode);
      CHECK(res.exhausted);
      CHECK(static_cast<long long>(res.extremal.edges.size()) == res.value);
      CHECK_FALSE(find_copy(res.extremal, make_clique(3), t, mode).has_value());
      CHECK_FALSE(brute_force_detect(res.extremal, make_clique(3), t, mode));
    }
}

TEST_CASE("mode and t monotonicity of solver values") {
  Graph k3 = make_clique(3);
  long long prev_heavy = -1, prev_berge = -1;
  for (int t = 1; t <= 3; ++t) {
    SolveResult heavy = exact_turan(5, 3, k3, t, Mode::Heavy);
    SolveResult berge = exact_turan(5, 3, k3, t, Mode::Berge);
    CHECK(heavy.exhausted);
    CHECK(berge.exhausted);
    CHECK(heavy.value <= berge.value);
    CHECK(heavy.value >= prev_heavy);
    CHECK(berge.value >= prev_berge);
    prev_heavy = heavy.value;
    prev_berge = berge.value;
  }
}

TEST_CASE("construction sizes never beat the solver") {
  SolveResult res = exact_turan(6, 3, make_clique(4), 2, Mode::Heavy,
                                SolveOptions{10'000'000, false});
  CHECK(res.exhausted);
  CHECK(res.value >= static_cast<long long>(gen_Q(6, 3, 3, 2).edges.size()));
  // the Q-construction is already extremal here
  CHECK(res.value == 11);
}

TEST_CASE("solver values sit inside the closed-form sandwich") {
  BoundReport rep = theorem_bounds(6, 3, 2, "K4");
  auto find = [&](const std::vector<std::pair<std::string, long long>>& entries,
                  const std::string& name) {
    for (const auto& [key, value] : entries)
      if (key == name) return value;
    return -1LL;
  };
  SolveResult heavy = exact_turan(6, 3, make_clique(4), 2, Mode::Heavy,
                                  SolveOptions{10'000'000, false});
  REQUIRE(heavy.exhausted);
  CHECK(heavy.value >= find(rep.lower, "clique_blowup"));
  CHECK(heavy.value >= find(rep.lower, "q_construction"));
  CHECK(heavy.value <= find(rep.upper, "pick_or_mark"));
  CHECK(heavy.value <= find(rep.upper, "bluered_symmetrization"));
}

TEST_CASE("budget exhaustion reports best-so-far") {
  SolveResult res =
      exact_turan(6, 3, make_clique(4), 2, Mode::Heavy, SolveOptions{50, false});
  CHECK_FALSE(res.exhausted);
  CHECK(res.nodes_explored <= 51);
  CHECK_FALSE(find_copy(res.extremal, make_clique(4), 2, Mode::Heavy).has_value());
}

TEST_CASE("isomorphism pruning keeps the value") {
  for (Mode mode : {Mode::Heavy, Mode::Berge}) {
    SolveResult plain =
        exact_turan(5, 3, make_clique(3), 2, mode, SolveOptions{10'000'000, false});
    SolveResult pruned =
        exact_turan(5, 3, make_clique(3), 2, mode, SolveOptions{10'000'000, true});
    CHECK(plain.exhausted);
    CHECK(pruned.exhausted);
    CHECK(plain.value == pruned.value);
    CHECK(pruned.nodes_explored <= plain.nodes_explored);
  }
}

TEST_CASE("berge copies can appear without newly heavy pairs") {
  // Adding {0,1,4} to the triple star creates a 2-wise Berge cherry even
  // though no pair multiplicity crosses t=2; the solver must re-check.
  Hypergraph base{5, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}};
  Graph s2 = make_star(2);
  CHECK_FALSE(find_copy(base, s2, 2, Mode::Berge).has_value());
  Hypergraph grown = base;
  grown.edges.push_back({0, 1, 4});
  grown = normalized(grown);
  auto heavy_before = heavy_graph(base, 2);
  auto heavy_after = heavy_graph(grown, 2);
  CHECK(heavy_before == heavy_after);
  CHECK(find_copy(grown, s2, 2, Mode::Berge).has_value());
}

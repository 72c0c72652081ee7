#include <doctest.h>

#include <random>
#include <set>

#include "core/constructions.hpp"
#include "core/detect.hpp"
#include "core/hypergraph.hpp"
#include "core/matching.hpp"

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

// The 2-wise Berge triangle fixture: pairs {0,1},{1,2},{0,2} each covered by
// two private hyperedges using the extra vertices 3..8.
Hypergraph berge_triangle_fixture() {
  return normalized(Hypergraph{
      9, 3, {{0, 1, 3}, {0, 1, 4}, {1, 2, 5}, {1, 2, 6}, {0, 2, 7}, {0, 2, 8}}});
}

std::vector<std::pair<std::string, Graph>> patterns() {
  return {{"S2", make_star(2)},
          {"P4", make_path(4)},
          {"K3", make_clique(3)},
          {"C4", make_cycle(4)},
          {"K4", make_clique(4)}};
}

}  // namespace

TEST_CASE("bipartite matching saturates when possible") {
  // 3 left slots over 3 rights in a cycle-ish pattern
  auto m = max_bipartite_matching({{0, 1}, {1, 2}, {0, 2}}, 3);
  CHECK(m.size == 3);
  auto blocked = max_bipartite_matching({{0}, {0}, {0}}, 1);
  CHECK(blocked.size == 1);
}

TEST_CASE("find_copy locates the constructed 2-wise Berge triangle") {
  Hypergraph h = berge_triangle_fixture();
  auto w = find_copy(h, make_clique(3), 2, Mode::Berge);
  REQUIRE(w.has_value());
  CHECK(verify_witness(h, make_clique(3), 2, Mode::Berge, *w));
  // a Berge witness is in particular a heavy witness
  auto heavy = find_copy(h, make_clique(3), 2, Mode::Heavy);
  CHECK(heavy.has_value());
}

TEST_CASE("find_copy heavy cherry in the triple star") {
  Hypergraph h{4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}};
  auto w = find_copy(h, make_star(2), 2, Mode::Heavy);
  REQUIRE(w.has_value());
  CHECK(w->embedding == std::vector<int>{0, 1, 2});  // center 0, first leaves
  CHECK(verify_witness(h, make_star(2), 2, Mode::Heavy, *w));
}

TEST_CASE("berge cherry needs four distinct hyperedges") {
  Hypergraph h{4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}};
  CHECK_FALSE(find_copy(h, make_star(2), 2, Mode::Berge).has_value());
}

TEST_CASE("pattern larger than host yields none, not an error") {
  Hypergraph h{3, 3, {{0, 1, 2}}};
  CHECK_FALSE(find_copy(h, make_clique(4), 1, Mode::Heavy).has_value());
}

TEST_CASE("verify_witness rejects broken witnesses") {
  Hypergraph h = berge_triangle_fixture();
  Graph k3 = make_clique(3);
  auto w = find_copy(h, k3, 2, Mode::Berge);
  REQUIRE(w.has_value());

  Witness non_injective = *w;
  non_injective.embedding[1] = non_injective.embedding[0];
  CHECK_FALSE(verify_witness(h, k3, 2, Mode::Berge, non_injective));

  Witness reused = *w;
  reused.assigned[1] = reused.assigned[0];  // shares hyperedges across edges
  CHECK_FALSE(verify_witness(h, k3, 2, Mode::Berge, reused));

  Witness wrong_cover = *w;
  wrong_cover.assigned[0][0] = wrong_cover.assigned[2][0];
  CHECK_FALSE(verify_witness(h, k3, 2, Mode::Berge, wrong_cover));
}

TEST_CASE("witness at level t implies witnesses at lower levels") {
  std::mt19937 rng(21);
  for (int round = 0; round < 60; ++round) {
    Hypergraph h = random_hypergraph(rng, 7, 3, 20);
    for (const auto& [name, f] : patterns()) {
      (void)name;
      for (Mode mode : {Mode::Heavy, Mode::Berge}) {
        if (!find_copy(h, f, 3, mode).has_value()) continue;
        CHECK(find_copy(h, f, 2, mode).has_value());
        CHECK(find_copy(h, f, 1, mode).has_value());
      }
    }
  }
}

TEST_CASE("berge witnesses imply heavy witnesses") {
  std::mt19937 rng(22);
  for (int round = 0; round < 60; ++round) {
    Hypergraph h = random_hypergraph(rng, 7, 3, 20);
    for (const auto& [name, f] : patterns()) {
      (void)name;
      for (int t = 1; t <= 2; ++t) {
        auto w = find_copy(h, f, t, Mode::Berge);
        if (!w) continue;
        CHECK(verify_witness(h, f, t, Mode::Berge, *w));
        CHECK(find_copy(h, f, t, Mode::Heavy).has_value());
      }
    }
  }
}

TEST_CASE("linear hypergraphs contain no 2-heavy copies") {
  for (int n : {7, 9, 13}) {
    Hypergraph sts = gen_sts(n);
    for (const auto& [name, f] : patterns()) {
      (void)name;
      CHECK_FALSE(find_copy(sts, f, 2, Mode::Heavy).has_value());
    }
  }
}

TEST_CASE("extract_berge_from_heavy: 6-heavy triangle to 2-wise Berge") {
  // every pair of {0,1,2} covered six times with private third vertices
  Hypergraph h{21, 3, {}};
  int next = 3;
  for (auto [u, v] : std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}})
    for (int copy = 0; copy < 6; ++copy) {
      h.edges.push_back({u, v, next});
      ++next;
    }
  h = normalized(h);
  Witness w = extract_berge_from_heavy(h, make_clique(3), 6);
  CHECK(w.t == 2);
  CHECK(w.mode == Mode::Berge);
  CHECK(verify_witness(h, make_clique(3), 2, Mode::Berge, w));
}

TEST_CASE("extract_berge_from_heavy refuses t below m") {
  Hypergraph h = berge_triangle_fixture();
  try {
    extract_berge_from_heavy(h, make_clique(3), 2);  // m = 3 > t
    FAIL("expected ThresholdTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ThresholdTooSmall);
  }
}

TEST_CASE("extract_berge_from_heavy reports missing heavy copies") {
  Hypergraph fano = gen_sts(7);
  try {
    extract_berge_from_heavy(fano, make_clique(3), 3);
    FAIL("expected NoHeavyCopy");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoHeavyCopy);
  }
}

TEST_CASE("extract_berge_from_heavy on a generated star host") {
  // construction 2 hosts a t-heavy star at each fixed vertex
  Hypergraph h = gen_construction2(10, 3, 3);
  Graph s2 = make_star(2);
  REQUIRE(find_copy(h, s2, 2, Mode::Heavy).has_value());
  Witness w = extract_berge_from_heavy(h, s2, 2);  // m = 2, t' = 1
  CHECK(w.t == 1);
  CHECK(verify_witness(h, s2, 1, Mode::Berge, w));
}

TEST_CASE("extract_expansion3 on an explicit 4-heavy triangle") {
  Hypergraph h{15, 3, {}};
  int next = 3;
  for (auto [u, v] : std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}})
    for (int copy = 0; copy < 4; ++copy) {
      h.edges.push_back({u, v, next});
      ++next;
    }
  h = normalized(h);
  Expansion3 e = extract_expansion3(h, make_clique(3), 4);
  CHECK(e.expansion.edges.size() == 3);
  std::set<int> essence(e.essence.begin(), e.essence.end());
  std::set<int> apexes(e.apexes.begin(), e.apexes.end());
  CHECK(apexes.size() == 3);
  for (int a : e.apexes) CHECK_FALSE(essence.count(a));
}

TEST_CASE("extract_expansion3 single edge pattern") {
  Hypergraph h{4, 3, {{0, 1, 2}}};
  Graph edge = make_path(2);
  Expansion3 e = extract_expansion3(h, edge, 1);  // threshold |V|+|E|-2 = 1
  CHECK(e.expansion.edges == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("extract_expansion3 survives adversarially overlapping thirds") {
  // Brute-force over small hosts that contain a 4-heavy triangle with heavily
  // shared third vertices: the greedy must still finish.
  std::mt19937 rng(23);
  Graph k3 = make_clique(3);
  int tested = 0;
  for (int round = 0; round < 300; ++round) {
    Hypergraph h = random_hypergraph(rng, 7, 3, 30);
    if (!find_copy(h, k3, 4, Mode::Heavy).has_value()) continue;
    ++tested;
    Expansion3 e = extract_expansion3(h, k3, 4);
    std::set<int> essence(e.essence.begin(), e.essence.end());
    std::set<int> apexes(e.apexes.begin(), e.apexes.end());
    CHECK(apexes.size() == 3);
    for (int a : e.apexes) CHECK_FALSE(essence.count(a));
  }
  CHECK(tested > 5);
}

TEST_CASE("extract_expansion3 threshold and uniformity guards") {
  Hypergraph h{4, 3, {{0, 1, 2}}};
  try {
    extract_expansion3(h, make_clique(3), 3);  // needs t >= 4
    FAIL("expected ThresholdTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ThresholdTooSmall);
  }
  Hypergraph quad{5, 4, {{0, 1, 2, 3}}};
  CHECK_THROWS_AS(extract_expansion3(quad, make_clique(3), 4), Error);
}

TEST_CASE("strip_representatives on a single hyperedge") {
  Hypergraph h{3, 3, {{0, 1, 2}}};
  StripResult s = strip_representatives(h);
  CHECK(s.pairs.size() == 1);
  CHECK(s.remainder.edges.empty());
}

TEST_CASE("strip_representatives empties the Fano plane") {
  StripResult s = strip_representatives(gen_sts(7));
  CHECK(s.pairs.size() == 7);
  CHECK(s.remainder.edges.empty());
  // the assignment is injective and each pair sits inside its hyperedge
  std::set<int> used(s.assigned_edges.begin(), s.assigned_edges.end());
  CHECK(used.size() == 7);
}

TEST_CASE("strip_representatives on the shared-pair sunflower") {
  Hypergraph h{5, 3, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}};
  StripResult s = strip_representatives(h);
  CHECK(s.pairs.size() == 3);
  CHECK(s.remainder.edges.empty());
}

TEST_CASE("strip assignment always nests pairs inside hyperedges") {
  std::mt19937 rng(24);
  for (int round = 0; round < 50; ++round) {
    Hypergraph h = random_hypergraph(rng, 7, 3, 25);
    StripResult s = strip_representatives(h);
    CHECK(h.edges.size() == s.remainder.edges.size() + s.pairs.size());
    for (size_t i = 0; i < s.pairs.size(); ++i) {
      const auto& e = h.edges[s.assigned_edges[i]];
      CHECK(std::binary_search(e.begin(), e.end(), s.pairs[i].first));
      CHECK(std::binary_search(e.begin(), e.end(), s.pairs[i].second));
    }
  }
}

TEST_CASE("strip maximality: level t-1 copies inside S lift back to level t") {
  std::mt19937 rng(25);
  Graph s2 = make_star(2);
  int lifted = 0;
  for (int round = 0; round < 200; ++round) {
    Hypergraph h = random_hypergraph(rng, 6, 3, 18);
    StripResult s = strip_representatives(h);
    std::set<Pair> in_s(s.pairs.begin(), s.pairs.end());
    for (int t = 2; t <= 3; ++t) {
      auto w = find_copy(s.remainder, s2, t - 1, Mode::Berge);
      if (!w) continue;
      bool essence_in_s = true;
      for (const auto& [u, v] : s2.edges)
        essence_in_s &=
            in_s.count(ordered_pair(w->embedding[u], w->embedding[v])) > 0;
      if (!essence_in_s) continue;
      ++lifted;
      CHECK(find_copy(h, s2, t, Mode::Berge).has_value());
    }
  }
  CHECK(lifted > 10);
}

TEST_CASE("greedy certificate traces the two-edge example") {
  Hypergraph h{4, 3, {{0, 1, 2}, {0, 1, 3}}};
  Certificate c = greedy_certificate(h, 1);
  CHECK(c.marked == 0);
  CHECK(c.levels[1].edges == std::vector<Pair>{{0, 1}, {0, 3}});
  CHECK(2 == c.marked + 1 * static_cast<long long>(c.levels[1].edges.size()));
}

TEST_CASE("greedy certificate on all triples of four vertices") {
  Hypergraph h{4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  Certificate c = greedy_certificate(h, 1);
  CHECK(c.marked == 0);  // four distinct pairs get picked
  CHECK(c.levels[1].edges.size() == 4);
}

TEST_CASE("greedy certificate of an empty hypergraph") {
  Certificate c = greedy_certificate(Hypergraph{5, 3, {}}, 2);
  CHECK(c.marked == 0);
  CHECK(c.levels[1].edges.empty());
  CHECK(c.levels[2].edges.empty());
  CHECK(c.levels[0].edges.size() == 10);  // every pair was picked zero times
}

TEST_CASE("greedy certificate counting identity holds everywhere") {
  std::mt19937 rng(26);
  for (int round = 0; round < 100; ++round) {
    Hypergraph h = random_hypergraph(rng, 7, 3, 30);
    for (int t = 1; t <= 3; ++t) {
      Certificate c = greedy_certificate(h, t);
      long long sum = c.marked;
      for (int i = 0; i <= t; ++i)
        sum += static_cast<long long>(i) * c.levels[i].edges.size();
      CHECK(sum == static_cast<long long>(h.edges.size()));
    }
  }
}

TEST_CASE("berge-free hosts give pattern-free top levels") {
  std::mt19937 rng(27);
  for (int round = 0; round < 120; ++round) {
    Hypergraph h = random_hypergraph(rng, 6, 3, 18);
    for (const auto& [name, f] : patterns()) {
      (void)name;
      for (int t = 1; t <= 2; ++t) {
        if (find_copy(h, f, t, Mode::Berge).has_value()) continue;
        Certificate c = greedy_certificate(h, t);
        CHECK_FALSE(graph_contains(c.levels[t], f));
      }
    }
  }
}

TEST_CASE("star-free hosts have bounded heavy degree") {
  // a 2-wise-Berge-S_r-free 3-graph has no 3r-star among its 2-heavy pairs
  std::mt19937 rng(28);
  for (int r : {2, 3}) {
    Graph star = make_star(r);
    Graph big_star = make_star(3 * r);
    for (int round = 0; round < 80; ++round) {
      Hypergraph h = random_hypergraph(rng, 7, 3, 30);
      if (find_copy(h, star, 2, Mode::Berge).has_value()) continue;
      Graph heavy = heavy_graph(h, 2);
      CHECK_FALSE(graph_contains(heavy, big_star));
    }
  }
}

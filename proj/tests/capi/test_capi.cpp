#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "berge.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  berge_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("hypergraph parse, accessors and canonical round trip") {
  berge_hypergraph* h = nullptr;
  REQUIRE(berge_hypergraph_parse(R"({"n":4,"r":3,"edges":[[2,1,0],[0,1,3]]})", &h) ==
          BERGE_OK);
  CHECK(berge_hypergraph_n(h) == 4);
  CHECK(berge_hypergraph_r(h) == 3);
  CHECK(berge_hypergraph_edge_count(h) == 2);
  char* text = nullptr;
  REQUIRE(berge_hypergraph_to_json(h, &text) == BERGE_OK);
  CHECK(take(text) == R"({"edges":[[0,1,2],[0,1,3]],"n":4,"r":3})");
  berge_hypergraph_free(h);
}

TEST_CASE("parse failures set status and message") {
  berge_hypergraph* h = nullptr;
  CHECK(berge_hypergraph_parse("{", &h) == BERGE_E_PARSE);
  CHECK(berge_hypergraph_parse(R"({"n":3,"r":3,"edges":[[0,1,3]]})", &h) ==
        BERGE_E_PARSE);
  std::string message = berge_last_error();
  CHECK(message.find("VertexOutOfRange") != std::string::npos);
  CHECK(berge_hypergraph_parse(nullptr, &h) == BERGE_E_INVALID);
}

TEST_CASE("create from flat arrays validates") {
  const int edges[] = {0, 1, 2, 0, 1, 2};
  berge_hypergraph* h = nullptr;
  CHECK(berge_hypergraph_create(4, 3, edges, 2, &h) == BERGE_E_VALIDATE);
  CHECK(berge_hypergraph_create(4, 3, edges, 1, &h) == BERGE_OK);
  berge_hypergraph_free(h);
}

TEST_CASE("named graphs and clique counting") {
  berge_graph* g = nullptr;
  REQUIRE(berge_graph_named("K4", &g) == BERGE_OK);
  CHECK(berge_graph_n(g) == 4);
  CHECK(berge_graph_edge_count(g) == 6);
  int64_t cliques = 0;
  CHECK(berge_count_cliques(g, 3, &cliques) == BERGE_OK);
  CHECK(cliques == 4);
  berge_graph_free(g);
  CHECK(berge_graph_named("Z9", &g) == BERGE_E_INVALID);
}

TEST_CASE("generate Q with report") {
  berge_hypergraph* h = nullptr;
  char* report_text = nullptr;
  REQUIRE(berge_generate_with_report("Q", R"({"n":6,"parts":3,"r":3,"t":2})", &h,
                                     &report_text) == BERGE_OK);
  CHECK(berge_hypergraph_edge_count(h) == 11);
  json report = json::parse(take(report_text));
  CHECK(report["size"] == 11);
  CHECK(report["predicted_size"] == 11);
  CHECK(report["freeness"]["free"] == true);
  CHECK(report["freeness"]["pattern"] == "K4");
  berge_hypergraph_free(h);
}

TEST_CASE("generate sts and packing") {
  berge_hypergraph* h = nullptr;
  REQUIRE(berge_generate("sts", R"({"n":7})", &h) == BERGE_OK);
  CHECK(berge_hypergraph_edge_count(h) == 7);
  berge_hypergraph_free(h);
  CHECK(berge_generate("sts", R"({"n":8})", &h) == BERGE_E_PRECONDITION);
  REQUIRE(berge_generate("packing", R"({"n":7,"r":3,"lambda":1})", &h) == BERGE_OK);
  berge_hypergraph_free(h);
  CHECK(berge_generate("nope", R"({"n":7})", &h) == BERGE_E_INVALID);
}

TEST_CASE("shadow and heavy graph through the C API") {
  berge_hypergraph* h = nullptr;
  REQUIRE(berge_hypergraph_parse(
              R"({"n":4,"r":3,"edges":[[0,1,2],[0,1,3],[0,2,3]]})", &h) == BERGE_OK);
  char* shadow = nullptr;
  REQUIRE(berge_shadow_multiplicity_json(h, &shadow) == BERGE_OK);
  json mult = json::parse(take(shadow));
  CHECK(mult.size() == 6);
  berge_graph* heavy = nullptr;
  REQUIRE(berge_heavy_graph(h, 2, &heavy) == BERGE_OK);
  CHECK(berge_graph_edge_count(heavy) == 3);
  berge_graph_free(heavy);
  berge_hypergraph_free(h);
}

TEST_CASE("find, verify and brute-force detection agree") {
  berge_hypergraph* h = nullptr;
  REQUIRE(berge_hypergraph_parse(
              R"({"n":9,"r":3,"edges":[[0,1,3],[0,1,4],[1,2,5],[1,2,6],[0,2,7],[0,2,8]]})",
              &h) == BERGE_OK);
  berge_graph* k3 = nullptr;
  REQUIRE(berge_graph_named("K3", &k3) == BERGE_OK);
  int found = 0;
  char* witness = nullptr;
  REQUIRE(berge_find_copy(h, k3, 2, "berge", &found, &witness) == BERGE_OK);
  CHECK(found == 1);
  std::string witness_text = take(witness);
  int valid = 0;
  CHECK(berge_verify_witness(h, k3, 2, "berge", witness_text.c_str(), &valid) ==
        BERGE_OK);
  CHECK(valid == 1);
  int slow = 0;
  CHECK(berge_brute_force_detect(h, k3, 2, "berge", &slow) == BERGE_OK);
  CHECK(slow == 1);
  CHECK(berge_find_copy(h, k3, 2, "sideways", &found, &witness) == BERGE_E_INVALID);
  berge_graph_free(k3);
  berge_hypergraph_free(h);
}

TEST_CASE("extraction endpoints emit JSON") {
  berge_hypergraph* h = nullptr;
  REQUIRE(berge_hypergraph_parse(R"({"n":5,"r":3,"edges":[[0,1,2],[0,1,3],[0,1,4]]})",
                                 &h) == BERGE_OK);
  char* strip = nullptr;
  REQUIRE(berge_strip_representatives(h, &strip) == BERGE_OK);
  json s = json::parse(take(strip));
  CHECK(s["pairs"].size() == 3);
  CHECK(s["remainder"]["edges"].empty());
  char* cert = nullptr;
  REQUIRE(berge_greedy_certificate(h, 1, &cert) == BERGE_OK);
  json c = json::parse(take(cert));
  CHECK(c["marked"] == 0);
  berge_hypergraph_free(h);
}

TEST_CASE("exact turan through the C API") {
  berge_graph* k4 = nullptr;
  REQUIRE(berge_graph_named("K4", &k4) == BERGE_OK);
  char* result = nullptr;
  REQUIRE(berge_exact_turan(6, 3, k4, 1, "heavy", 10'000'000, &result) == BERGE_OK);
  json res = json::parse(take(result));
  CHECK(res["value"] == 8);
  CHECK(res["exhausted"] == true);
  berge_graph_free(k4);
}

TEST_CASE("symmetrize and g_value through the C API") {
  berge_bluered* g = nullptr;
  REQUIRE(berge_bluered_parse(R"({"n":4,"blue":[],"red":[[0,3],[1,3],[2,3]]})", &g) ==
          BERGE_OK);
  int64_t value = 0;
  REQUIRE(berge_g_value(g, 3, 2, &value) == BERGE_OK);
  CHECK(value == 9);
  char* result = nullptr;
  REQUIRE(berge_symmetrize(g, 3, 3, 2, &result) == BERGE_OK);
  json res = json::parse(take(result));
  CHECK(res["g_final"] >= 10);
  berge_bluered_free(g);
}

TEST_CASE("bounds report through the C API") {
  char* report = nullptr;
  REQUIRE(berge_theorem_bounds(6, 3, 2, "K4", &report) == BERGE_OK);
  json rep = json::parse(take(report));
  CHECK(rep["upper"]["bluered_symmetrization"] == 27);
  CHECK(rep["lower"]["q_construction"] == 11);
}

TEST_CASE("version and status names") {
  CHECK(std::string(berge_version()) == "0.1.0");
  CHECK(std::string(berge_status_name(BERGE_OK)) == "ok");
  CHECK(std::string(berge_status_name(BERGE_E_PARSE)) == "parse");
}

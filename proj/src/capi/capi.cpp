#include "berge.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "core/bounds.hpp"
#include "core/constructions.hpp"
#include "core/detect.hpp"
#include "core/hypergraph.hpp"
#include "core/json_io.hpp"
#include "core/selftest.hpp"
#include "core/solver.hpp"

using nlohmann::json;

struct berge_hypergraph {
  berge::Hypergraph value;
};
struct berge_graph {
  berge::Graph value;
};
struct berge_bluered {
  berge::BlueRedGraph value;
};

namespace {

thread_local std::string g_last_error;

berge_status status_of(berge::ErrorCode code) {
  using EC = berge::ErrorCode;
  switch (code) {
    case EC::ParseError:
      return BERGE_E_PARSE;
    case EC::DuplicateEdge:
    case EC::WrongArity:
    case EC::VertexOutOfRange:
      return BERGE_E_VALIDATE;
    case EC::BadParams:
    case EC::BadPattern:
      return BERGE_E_INVALID;
    case EC::BadResidue:
    case EC::NoHeavyCopy:
    case EC::ThresholdTooSmall:
    case EC::TooFewSupportSets:
    case EC::SeedNotRegular:
    case EC::SeedMismatch:
    case EC::PreconditionViolated:
    case EC::InputNotKkFree:
      return BERGE_E_PRECONDITION;
    case EC::TooLarge:
      return BERGE_E_TOO_LARGE;
    case EC::Internal:
      return BERGE_E_INTERNAL;
  }
  return BERGE_E_INTERNAL;
}

template <typename Fn>
berge_status guarded(Fn&& fn) {
  try {
    fn();
    return BERGE_OK;
  } catch (const berge::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BERGE_E_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

berge_status require(bool cond, const char* msg) {
  if (cond) return BERGE_OK;
  g_last_error = msg;
  return BERGE_E_INVALID;
}

}  // namespace

extern "C" {

const char* berge_version(void) { return "0.1.0"; }

const char* berge_status_name(berge_status s) {
  switch (s) {
    case BERGE_OK: return "ok";
    case BERGE_E_INVALID: return "invalid";
    case BERGE_E_PARSE: return "parse";
    case BERGE_E_VALIDATE: return "validate";
    case BERGE_E_PRECONDITION: return "precondition";
    case BERGE_E_TOO_LARGE: return "too-large";
    case BERGE_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* berge_last_error(void) { return g_last_error.c_str(); }

void berge_string_free(char* s) { delete[] s; }

berge_status berge_hypergraph_parse(const char* text, berge_hypergraph** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new berge_hypergraph{berge::parse_hypergraph(text)}; });
}

berge_status berge_hypergraph_create(int n, int r, const int* vertices,
                                     int edge_count, berge_hypergraph** out) {
  if (auto st = require(out && (vertices || edge_count == 0), "null argument"))
    return st;
  if (auto st = require(r >= 2 || edge_count == 0, "uniformity must be at least 2"))
    return st;
  return guarded([&] {
    berge::Hypergraph h;
    h.n = n;
    h.r = r;
    for (int e = 0; e < edge_count; ++e)
      h.edges.emplace_back(vertices + e * r, vertices + (e + 1) * r);
    h = berge::normalized(h);
    berge::validate(h);
    *out = new berge_hypergraph{std::move(h)};
  });
}

berge_status berge_hypergraph_to_json(const berge_hypergraph* h, char** out) {
  if (auto st = require(h && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(berge::serialize(h->value)); });
}

int berge_hypergraph_n(const berge_hypergraph* h) { return h ? h->value.n : -1; }
int berge_hypergraph_r(const berge_hypergraph* h) { return h ? h->value.r : -1; }
int berge_hypergraph_edge_count(const berge_hypergraph* h) {
  return h ? static_cast<int>(h->value.edges.size()) : -1;
}
void berge_hypergraph_free(berge_hypergraph* h) { delete h; }

berge_status berge_graph_parse(const char* text, berge_graph** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new berge_graph{berge::parse_graph(text)}; });
}

berge_status berge_graph_create(int n, const int* endpoints, int edge_count,
                                berge_graph** out) {
  if (auto st = require(out && (endpoints || edge_count == 0), "null argument"))
    return st;
  return guarded([&] {
    berge::Graph g;
    g.n = n;
    for (int e = 0; e < edge_count; ++e)
      g.edges.push_back({endpoints[2 * e], endpoints[2 * e + 1]});
    g = berge::normalized(g);
    berge::validate(g);
    *out = new berge_graph{std::move(g)};
  });
}

berge_status berge_graph_named(const char* name, berge_graph** out) {
  if (auto st = require(name && out, "null argument")) return st;
  return guarded([&] { *out = new berge_graph{berge::pattern_from_name(name)}; });
}

berge_status berge_graph_to_json(const berge_graph* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(berge::serialize(g->value)); });
}

int berge_graph_n(const berge_graph* g) { return g ? g->value.n : -1; }
int berge_graph_edge_count(const berge_graph* g) {
  return g ? static_cast<int>(g->value.edges.size()) : -1;
}
void berge_graph_free(berge_graph* g) { delete g; }

berge_status berge_shadow_multiplicity_json(const berge_hypergraph* h, char** out) {
  if (auto st = require(h && out, "null argument")) return st;
  return guarded([&] {
    berge::validate(h->value);
    auto mult = berge::shadow_multiplicity(h->value);
    json arr = json::array();
    for (const auto& [pair, count] : mult.mult)
      arr.push_back(json::array({pair.first, pair.second, count}));
    *out = copy_string(arr.dump());
  });
}

berge_status berge_heavy_graph(const berge_hypergraph* h, int t, berge_graph** out) {
  if (auto st = require(h && out, "null argument")) return st;
  return guarded([&] {
    berge::validate(h->value);
    *out = new berge_graph{berge::heavy_graph(h->value, t)};
  });
}

berge_status berge_find_copy(const berge_hypergraph* h, const berge_graph* f,
                             int t, const char* mode, int* found,
                             char** witness_json) {
  if (auto st = require(h && f && mode && found, "null argument")) return st;
  return guarded([&] {
    auto witness = berge::find_copy(h->value, f->value, t, berge::mode_from_name(mode));
    *found = witness.has_value() ? 1 : 0;
    if (witness && witness_json) *witness_json = copy_string(berge::serialize(*witness));
  });
}

berge_status berge_verify_witness(const berge_hypergraph* h, const berge_graph* f,
                                  int t, const char* mode,
                                  const char* witness_json, int* valid) {
  if (auto st = require(h && f && mode && witness_json && valid, "null argument"))
    return st;
  return guarded([&] {
    berge::Witness w = berge::parse_witness(witness_json);
    *valid = berge::verify_witness(h->value, f->value, t,
                                   berge::mode_from_name(mode), w)
                 ? 1
                 : 0;
  });
}

berge_status berge_extract_berge_from_heavy(const berge_hypergraph* h,
                                            const berge_graph* f, int t,
                                            char** witness_json) {
  if (auto st = require(h && f && witness_json, "null argument")) return st;
  return guarded([&] {
    *witness_json =
        copy_string(berge::serialize(berge::extract_berge_from_heavy(h->value, f->value, t)));
  });
}

berge_status berge_extract_expansion3(const berge_hypergraph* h,
                                      const berge_graph* f, int t,
                                      char** result_json) {
  if (auto st = require(h && f && result_json, "null argument")) return st;
  return guarded([&] {
    *result_json =
        copy_string(berge::serialize(berge::extract_expansion3(h->value, f->value, t)));
  });
}

berge_status berge_strip_representatives(const berge_hypergraph* h,
                                         char** result_json) {
  if (auto st = require(h && result_json, "null argument")) return st;
  return guarded([&] {
    *result_json = copy_string(berge::serialize(berge::strip_representatives(h->value)));
  });
}

berge_status berge_greedy_certificate(const berge_hypergraph* h, int t,
                                      char** result_json) {
  if (auto st = require(h && result_json, "null argument")) return st;
  return guarded([&] {
    *result_json = copy_string(berge::serialize(berge::greedy_certificate(h->value, t)));
  });
}

berge_status berge_brute_force_detect(const berge_hypergraph* h,
                                      const berge_graph* f, int t,
                                      const char* mode, int* found) {
  if (auto st = require(h && f && mode && found, "null argument")) return st;
  return guarded([&] {
    *found = berge::brute_force_detect(h->value, f->value, t,
                                       berge::mode_from_name(mode))
                 ? 1
                 : 0;
  });
}

namespace {

struct GenerateRequest {
  std::string name;
  int n = 0, p = 0, r = 0, t = 0, lambda = 0;
  berge::Hypergraph c1_seed;
  bool has_c1_seed = false;
  berge::RegularSeed c3_seed;
  bool has_c3_seed = false;
  berge::Graph pattern;
  bool has_pattern = false;
};

int param_int(const json& j, const std::string& field, bool required,
              int fallback = 0) {
  if (!j.contains(field)) {
    if (required)
      throw berge::Error(berge::ErrorCode::BadParams,
                         "missing parameter '" + field + "'");
    return fallback;
  }
  if (!j[field].is_number_integer())
    throw berge::Error(berge::ErrorCode::BadParams,
                       "parameter '" + field + "' must be an integer");
  return j[field].get<int>();
}

GenerateRequest parse_generate_request(const char* name, const char* params_json) {
  GenerateRequest req;
  req.name = name;
  json params;
  try {
    params = json::parse(params_json ? params_json : "{}");
  } catch (const json::exception& e) {
    throw berge::Error(berge::ErrorCode::ParseError, e.what());
  }
  if (!params.is_object())
    throw berge::Error(berge::ErrorCode::BadParams, "params must be a JSON object");

  req.n = param_int(params, "n", true);
  req.p = param_int(params, "parts", req.name == "turan" || req.name == "Q");
  req.r = param_int(params, "r",
                    req.name == "turan" || req.name == "Q" || req.name == "c2" ||
                        req.name == "packing");
  req.t = param_int(params, "t",
                    req.name == "Q" || req.name == "c2" || req.name == "c3" ||
                        req.name == "c4");
  req.lambda = param_int(params, "lambda", req.name == "packing");

  if (req.name == "c1") {
    if (!params.contains("seed"))
      throw berge::Error(berge::ErrorCode::BadParams, "c1 needs a 'seed' hypergraph");
    req.c1_seed = berge::parse_hypergraph(params["seed"].dump());
    req.has_c1_seed = true;
  }
  if (req.name == "c3") {
    if (params.contains("seed")) {
      berge::RegularSeed seed;
      seed.g = berge::parse_graph(params["seed"].dump());
      auto deg = berge::degrees(seed.g);
      seed.d = deg.empty() ? 0 : deg[0];
      if (params.contains("matching")) {
        std::vector<berge::Pair> m;
        for (const auto& e : params["matching"])
          m.push_back(berge::ordered_pair(e[0].get<int>(), e[1].get<int>()));
        seed.matching = m;
      }
      req.c3_seed = seed;
    } else {
      req.c3_seed = berge::builtin_regular_seed(req.t);
    }
    req.has_c3_seed = true;
  }
  if (req.name == "c4") {
    if (params.contains("pattern"))
      req.pattern = berge::parse_graph(params["pattern"].dump());
    else if (params.contains("pattern_name"))
      req.pattern = berge::pattern_from_name(params["pattern_name"].get<std::string>());
    else
      throw berge::Error(berge::ErrorCode::BadParams,
                         "c4 needs 'pattern' or 'pattern_name'");
    req.has_pattern = true;
  }
  return req;
}

berge::Hypergraph dispatch_generate(const GenerateRequest& req) {
  if (req.name == "turan") return berge::gen_turan_hypergraph(req.n, req.p, req.r);
  if (req.name == "Q") return berge::gen_Q(req.n, req.p, req.r, req.t);
  if (req.name == "c1") return berge::gen_construction1(req.n, req.c1_seed);
  if (req.name == "c2") return berge::gen_construction2(req.n, req.r, req.t);
  if (req.name == "c3") return berge::gen_construction3(req.n, req.t, req.c3_seed);
  if (req.name == "c4") return berge::gen_construction4(req.n, req.t, req.pattern);
  if (req.name == "sts") return berge::gen_sts(req.n);
  if (req.name == "packing") return berge::gen_packing(req.n, req.r, req.lambda);
  throw berge::Error(berge::ErrorCode::BadParams,
                     "unknown generator '" + req.name + "'");
}

// Freeness check matching each generator's contract, when one is defined.
json freeness_report(const GenerateRequest& req, const berge::Hypergraph& h) {
  std::string pattern;
  int t = 1;
  if (req.name == "turan" && req.p + 1 >= 2) {
    pattern = "K" + std::to_string(req.p + 1);
    t = 1;
  } else if (req.name == "Q") {
    pattern = "K" + std::to_string(req.p + 1);
    t = req.t;
  } else if (req.name == "c2") {
    pattern = "P" + std::to_string(2 * (req.t - 1) * (req.r - 2) + 2);
    t = req.t;
  } else if (req.name == "c4") {
    json rep;
    rep["pattern"] = "custom";
    rep["t"] = req.t;
    rep["mode"] = "heavy";
    rep["free"] =
        !berge::find_copy(h, req.pattern, req.t, berge::Mode::Heavy).has_value();
    return rep;
  } else if (req.name == "sts") {
    pattern = "S2";
    t = 2;
  } else if (req.name == "packing") {
    pattern = "S2";
    t = req.lambda + 1;
  } else {
    return json();  // seed-dependent contracts need an explicit pattern
  }
  json rep;
  rep["pattern"] = pattern;
  rep["t"] = t;
  rep["mode"] = "heavy";
  rep["free"] = !berge::find_copy(h, berge::pattern_from_name(pattern), t,
                                  berge::Mode::Heavy)
                     .has_value();
  return rep;
}

}  // namespace

berge_status berge_generate(const char* name, const char* params_json,
                            berge_hypergraph** out) {
  if (auto st = require(name && out, "null argument")) return st;
  return guarded([&] {
    auto req = parse_generate_request(name, params_json);
    *out = new berge_hypergraph{dispatch_generate(req)};
  });
}

berge_status berge_generate_with_report(const char* name, const char* params_json,
                                        berge_hypergraph** out,
                                        char** report_json) {
  if (auto st = require(name && out && report_json, "null argument")) return st;
  return guarded([&] {
    auto req = parse_generate_request(name, params_json);
    berge::Hypergraph h = dispatch_generate(req);
    json report;
    report["generator"] = req.name;
    report["size"] = h.edges.size();
    auto predicted = berge::predicted_size(
        req.name, req.n, req.p, req.r, req.t, req.lambda,
        req.has_c1_seed ? &req.c1_seed : nullptr,
        req.has_c3_seed ? &req.c3_seed : nullptr);
    report["predicted_size"] = predicted ? json(*predicted) : json();
    if (req.name == "packing")
      report["design_target"] =
          static_cast<double>(req.lambda) * static_cast<double>(berge::binom(req.n, 2)) /
          static_cast<double>(berge::binom(req.r, 2));
    json freeness = freeness_report(req, h);
    report["freeness"] = freeness.is_null() ? json() : freeness;
    *report_json = copy_string(report.dump());
    *out = new berge_hypergraph{std::move(h)};
  });
}

berge_status berge_bluered_parse(const char* text, berge_bluered** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new berge_bluered{berge::parse_bluered(text)}; });
}

berge_status berge_bluered_to_json(const berge_bluered* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = copy_string(berge::serialize(g->value)); });
}

void berge_bluered_free(berge_bluered* g) { delete g; }

berge_status berge_count_cliques(const berge_graph* g, int r, int64_t* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] {
    berge::validate(g->value);
    *out = berge::count_cliques(g->value, r);
  });
}

berge_status berge_g_value(const berge_bluered* g, int r, int t, int64_t* out) {
  if (auto st = require(g && out, "null argument")) return st;
  return guarded([&] { *out = berge::g_value(g->value, r, t); });
}

berge_status berge_symmetrize(const berge_bluered* g, int k, int r, int t,
                              char** result_json) {
  if (auto st = require(g && result_json, "null argument")) return st;
  return guarded([&] {
    *result_json = copy_string(berge::serialize(berge::symmetrize(g->value, k, r, t)));
  });
}

berge_status berge_theorem_bounds(int n, int r, int t, const char* pattern,
                                  char** report_json) {
  if (auto st = require(pattern && report_json, "null argument")) return st;
  return guarded([&] {
    *report_json = copy_string(berge::serialize(berge::theorem_bounds(n, r, t, pattern)));
  });
}

berge_status berge_exact_turan(int n, int r, const berge_graph* f, int t,
                               const char* mode, int64_t node_budget,
                               char** result_json) {
  if (auto st = require(f && mode && result_json, "null argument")) return st;
  return guarded([&] {
    berge::SolveOptions opts;
    if (node_budget > 0) opts.node_budget = node_budget;
    *result_json = copy_string(berge::serialize(berge::exact_turan(
        n, r, f->value, t, berge::mode_from_name(mode), opts)));
  });
}

berge_status berge_selftest(const char* criteria, int include_timing,
                            char** report_json) {
  if (auto st = require(report_json != nullptr, "null argument")) return st;
  return guarded([&] {
    std::set<int> which;
    if (criteria) {
      std::string spec(criteria);
      size_t pos = 0;
      while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        try {
          which.insert(std::stoi(spec.substr(pos, comma - pos)));
        } catch (const std::exception&) {
          throw berge::Error(berge::ErrorCode::BadParams,
                             "criteria must be a comma-separated list of integers");
        }
        pos = comma + 1;
      }
    }
    auto results = berge::run_acceptance(which);
    json arr = json::array();
    bool all_pass = true;
    for (const auto& res : results) {
      json item;
      item["id"] = res.id;
      item["name"] = res.name;
      item["pass"] = res.pass;
      item["details"] = res.details;
      if (include_timing) item["seconds"] = res.seconds;
      arr.push_back(item);
      all_pass = all_pass && res.pass;
    }
    json report;
    report["criteria"] = arr;
    report["all_pass"] = all_pass;
    *report_json = copy_string(report.dump());
  });
}

}  // extern "C"

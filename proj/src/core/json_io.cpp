#include "core/json_io.hpp"

#include <json.hpp>

namespace berge {

using nlohmann::json;

namespace {

json pairs_to_json(const std::vector<Pair>& pairs) {
  json arr = json::array();
  for (auto [u, v] : pairs) arr.push_back(json::array({u, v}));
  return arr;
}

std::vector<Pair> pairs_from_json(const json& arr, const std::string& field) {
  if (!arr.is_array())
    throw Error(ErrorCode::ParseError, "'" + field + "' must be an array");
  std::vector<Pair> out;
  for (size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error(ErrorCode::ParseError,
                  field + "[" + std::to_string(i) + "] must be a pair of integers");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

// The parse operations report every failure as ParseError; the inner
// validation message (naming code and edge) is preserved.
template <typename T>
T validated_as_parse(T value) {
  try {
    validate(value);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return value;
}

int require_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw Error(ErrorCode::ParseError, "missing integer field '" + field + "'");
  return j[field].get<int>();
}

json hypergraph_json(const Hypergraph& h) {
  Hypergraph canon = normalized(h);
  json j;
  j["n"] = canon.n;
  j["r"] = canon.r;
  j["edges"] = canon.edges;
  return j;
}

json graph_json(const Graph& g) {
  Graph canon = normalized(g);
  json j;
  j["n"] = canon.n;
  j["edges"] = pairs_to_json(canon.edges);
  return j;
}

json bluered_json(const BlueRedGraph& g) {
  BlueRedGraph canon = normalized(g);
  json j;
  j["n"] = canon.n;
  j["blue"] = pairs_to_json(canon.blue);
  j["red"] = pairs_to_json(canon.red);
  return j;
}

json witness_json(const Witness& w) {
  json j;
  j["mode"] = mode_name(w.mode);
  j["t"] = w.t;
  j["i"] = w.embedding;
  j["h"] = w.assigned;
  return j;
}

}  // namespace

std::string serialize(const Hypergraph& h) { return hypergraph_json(h).dump(); }
std::string serialize(const Graph& g) { return graph_json(g).dump(); }
std::string serialize(const BlueRedGraph& g) { return bluered_json(g).dump(); }
std::string serialize(const Witness& w) { return witness_json(w).dump(); }

std::string serialize(const Certificate& c) {
  json j;
  j["t"] = c.t;
  j["marked"] = c.marked;
  json levels = json::array();
  for (const auto& level : c.levels) levels.push_back(graph_json(level));
  j["levels"] = levels;
  return j.dump();
}

std::string serialize(const StripResult& s) {
  json j;
  j["pairs"] = pairs_to_json(s.pairs);
  j["edges"] = s.assigned_edges;
  j["remainder"] = hypergraph_json(s.remainder);
  return j.dump();
}

std::string serialize(const Expansion3& e) {
  json j;
  j["expansion"] = hypergraph_json(e.expansion);
  j["hyperedges"] = e.hyperedge_indices;
  j["essence"] = e.essence;
  j["apexes"] = e.apexes;
  return j.dump();
}

std::string serialize(const SolveResult& s) {
  json j;
  j["value"] = s.value;
  j["nodes_explored"] = s.nodes_explored;
  j["exhausted"] = s.exhausted;
  j["extremal"] = hypergraph_json(s.extremal);
  return j.dump();
}

std::string serialize(const BoundReport& r) {
  json j;
  j["n"] = r.n;
  j["r"] = r.r;
  j["t"] = r.t;
  j["pattern"] = r.pattern;
  json lower = json::object(), upper = json::object();
  for (const auto& [name, value] : r.lower) lower[name] = value;
  for (const auto& [name, value] : r.upper) upper[name] = value;
  j["lower"] = lower;
  j["upper"] = upper;
  j["exact"] = r.exact;
  j["notes"] = r.notes;
  return j.dump();
}

std::string serialize(const SymmetrizeResult& r) {
  json j;
  j["g_initial"] = r.g_initial;
  j["g_final"] = r.g_final;
  j["final"] = bluered_json(r.final);
  json steps = json::array();
  for (const auto& s : r.steps) {
    json step;
    step["kind"] = s.kind;
    step["a"] = s.a;
    step["b"] = s.b;
    step["g"] = s.g_after;
    steps.push_back(step);
  }
  j["steps"] = steps;
  return j.dump();
}

Hypergraph parse_hypergraph(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  Hypergraph h;
  h.n = require_int(j, "n");
  h.r = require_int(j, "r");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw Error(ErrorCode::ParseError, "missing array field 'edges'");
  for (size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    if (!e.is_array())
      throw Error(ErrorCode::ParseError,
                  "edges[" + std::to_string(i) + "] must be an array");
    std::vector<int> edge;
    for (const auto& v : e) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError,
                    "edges[" + std::to_string(i) + "] must hold integers");
      edge.push_back(v.get<int>());
    }
    h.edges.push_back(edge);
  }
  return validated_as_parse(normalized(h));
}

Graph parse_graph(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  if (j.contains("r") && j["r"].is_number_integer() && j["r"].get<int>() != 2)
    throw Error(ErrorCode::ParseError, "graph must have r=2");
  Graph g;
  g.n = require_int(j, "n");
  g.edges = pairs_from_json(j.value("edges", json::array()), "edges");
  return validated_as_parse(normalized(g));
}

BlueRedGraph parse_bluered(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  BlueRedGraph g;
  g.n = require_int(j, "n");
  g.blue = pairs_from_json(j.value("blue", json::array()), "blue");
  g.red = pairs_from_json(j.value("red", json::array()), "red");
  return validated_as_parse(normalized(g));
}

Witness parse_witness(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  Witness w;
  if (!j.contains("mode") || !j["mode"].is_string())
    throw Error(ErrorCode::ParseError, "missing string field 'mode'");
  w.mode = mode_from_name(j["mode"].get<std::string>());
  w.t = require_int(j, "t");
  if (!j.contains("i") || !j["i"].is_array())
    throw Error(ErrorCode::ParseError, "missing array field 'i'");
  for (const auto& v : j["i"]) {
    if (!v.is_number_integer())
      throw Error(ErrorCode::ParseError, "'i' must hold integers");
    w.embedding.push_back(v.get<int>());
  }
  if (!j.contains("h") || !j["h"].is_array())
    throw Error(ErrorCode::ParseError, "missing array field 'h'");
  for (const auto& lst : j["h"]) {
    if (!lst.is_array())
      throw Error(ErrorCode::ParseError, "'h' must hold arrays of indices");
    std::vector<int> indices;
    for (const auto& v : lst) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError, "'h' must hold integers");
      indices.push_back(v.get<int>());
    }
    w.assigned.push_back(indices);
  }
  return w;
}

}  // namespace berge

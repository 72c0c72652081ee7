// Command line front end; talks to the library exclusively through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "berge.h"

using nlohmann::json;

namespace {

constexpr int kExitFree = 0;
constexpr int kExitContained = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context;
  const char* detail = berge_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  std::exit(kExitError);
}

void check_status(berge_status st, const std::string& context) {
  if (st != BERGE_OK) die(context + " (" + berge_status_name(st) + ")");
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  berge_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die("cannot write '" + path + "'");
  out << content;
}

berge_graph* load_pattern(const std::string& spec) {
  berge_graph* g = nullptr;
  if (spec.find('.') != std::string::npos || spec.find('/') != std::string::npos) {
    check_status(berge_graph_parse(read_file(spec).c_str(), &g),
                 "parsing pattern file '" + spec + "'");
  } else {
    check_status(berge_graph_named(spec.c_str(), &g), "pattern '" + spec + "'");
  }
  return g;
}

berge_hypergraph* load_hypergraph(const std::string& path) {
  berge_hypergraph* h = nullptr;
  check_status(berge_hypergraph_parse(read_file(path).c_str(), &h),
               "parsing hypergraph '" + path + "'");
  return h;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << "\n";
  else
    write_file(out_path, text + "\n");
}

std::string bounds_table(const json& rep) {
  std::ostringstream os;
  os << "bounds for " << rep["pattern"].get<std::string>() << " (n="
     << rep["n"].get<long long>() << ", r=" << rep["r"].get<long long>() << ", t="
     << rep["t"].get<long long>() << ")\n";
  size_t width = 4;
  for (const auto& section : {"lower", "upper"})
    for (auto it = rep[section].begin(); it != rep[section].end(); ++it)
      width = std::max(width, it.key().size());
  char line[256];
  for (const auto& section : {"lower", "upper"})
    for (auto it = rep[section].begin(); it != rep[section].end(); ++it) {
      std::snprintf(line, sizeof(line), "%-*s  %-5s  %lld",
                    static_cast<int>(width), it.key().c_str(), section,
                    it.value().get<long long>());
      os << line << "\n";
    }
  os << "exact: " << (rep["exact"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& note : rep["notes"]) os << "note: " << note.get<std::string>() << "\n";
  return os.str();
}

std::string bounds_csv(const json& rep) {
  std::ostringstream os;
  os << "name,kind,value\n";
  for (const auto& section : {"lower", "upper"})
    for (auto it = rep[section].begin(); it != rep[section].end(); ++it)
      os << it.key() << "," << section << "," << it.value().get<long long>() << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal hypergraph toolkit: constructions, detection, bounds, search"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "emit a construction as hypergraph JSON");
  std::string gen_name, gen_seed_file, gen_matching, gen_pattern, gen_out;
  int gen_n = 0, gen_parts = 0, gen_r = 3, gen_t = 1, gen_lambda = 1;
  generate->add_option("name", gen_name, "turan|Q|c1|c2|c3|c4|sts|packing")->required();
  generate->add_option("--n", gen_n, "vertex count")->required();
  generate->add_option("--parts", gen_parts, "partition classes (turan, Q)");
  generate->add_option("--r", gen_r, "uniformity");
  generate->add_option("--t", gen_t, "heaviness threshold");
  generate->add_option("--lambda", gen_lambda, "pair multiplicity cap (packing)");
  generate->add_option("--seed-file", gen_seed_file,
                       "seed hypergraph (c1) or seed graph (c3) JSON file");
  generate->add_option("--matching", gen_matching,
                       "perfect matching for c3 seeds, e.g. \"0-1,2-3\"");
  generate->add_option("--pattern", gen_pattern, "pattern for c4 (name or file)");
  generate->add_option("--out", gen_out, "output file (default: stdout)");

  // check
  auto* check = app.add_subcommand("check", "decide containment of a pattern copy");
  std::string chk_input, chk_pattern, chk_mode = "heavy", chk_out;
  int chk_t = 1;
  check->add_option("--input", chk_input, "hypergraph JSON file")->required();
  check->add_option("--pattern", chk_pattern, "pattern name or file")->required();
  check->add_option("--t", chk_t, "heaviness threshold");
  check->add_option("--mode", chk_mode, "heavy|berge");
  check->add_option("--out", chk_out, "witness output file");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and construction sizes");
  std::string bnd_pattern, bnd_format = "table", bnd_out;
  int bnd_n = 0, bnd_r = 3, bnd_t = 1;
  bounds->add_option("--n", bnd_n, "vertex count")->required();
  bounds->add_option("--r", bnd_r, "uniformity");
  bounds->add_option("--t", bnd_t, "heaviness threshold");
  bounds->add_option("--pattern", bnd_pattern, "K<k>, P<k> or C<k>")->required();
  bounds->add_option("--format", bnd_format, "table|json|csv");
  bounds->add_option("--out", bnd_out, "output file");

  // turan-exact
  auto* exact = app.add_subcommand("turan-exact", "branch-and-bound Turan numbers");
  std::string ext_pattern, ext_mode = "heavy", ext_out;
  int ext_n = 0, ext_r = 3, ext_t = 1;
  long long ext_budget = 10'000'000;
  exact->add_option("--n", ext_n, "vertex count")->required();
  exact->add_option("--r", ext_r, "uniformity");
  exact->add_option("--pattern", ext_pattern, "pattern name or file")->required();
  exact->add_option("--t", ext_t, "heaviness threshold");
  exact->add_option("--mode", ext_mode, "heavy|berge");
  exact->add_option("--budget", ext_budget, "node budget");
  exact->add_option("--out", ext_out, "output file");

  // symmetrize
  auto* symmetrize = app.add_subcommand("symmetrize", "blue-red symmetrization pipeline");
  std::string sym_input, sym_out;
  int sym_k = 0, sym_r = 3, sym_t = 1;
  symmetrize->add_option("--input", sym_input, "blue-red graph JSON file")->required();
  symmetrize->add_option("--k", sym_k, "forbidden clique size")->required();
  symmetrize->add_option("--r", sym_r, "clique size counted in g");
  symmetrize->add_option("--t", sym_t, "heaviness threshold");
  symmetrize->add_option("--out", sym_out, "output file");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the acceptance battery");
  std::string st_criteria;
  bool st_json = false, st_timing = false;
  selftest->add_option("--criteria", st_criteria, "subset, e.g. \"1,3,7\"");
  selftest->add_flag("--json", st_json, "emit the JSON report");
  selftest->add_flag("--timing", st_timing, "include per-criterion seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  if (generate->parsed()) {
    json params;
    params["n"] = gen_n;
    if (generate->count("--parts")) params["parts"] = gen_parts;
    if (generate->count("--r")) params["r"] = gen_r;
    if (generate->count("--t")) params["t"] = gen_t;
    if (generate->count("--lambda")) params["lambda"] = gen_lambda;
    if (!gen_seed_file.empty()) {
      json seed = json::parse(read_file(gen_seed_file), nullptr, false);
      if (seed.is_discarded()) die("seed file is not valid JSON");
      params["seed"] = seed;
    }
    if (!gen_matching.empty()) {
      json m = json::array();
      std::stringstream ss(gen_matching);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) die("matching entries look like 0-1");
        m.push_back(json::array(
            {std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))}));
      }
      params["matching"] = m;
    }
    if (!gen_pattern.empty()) {
      if (gen_pattern.find('.') != std::string::npos ||
          gen_pattern.find('/') != std::string::npos) {
        json p = json::parse(read_file(gen_pattern), nullptr, false);
        if (p.is_discarded()) die("pattern file is not valid JSON");
        params["pattern"] = p;
      } else {
        params["pattern_name"] = gen_pattern;
      }
    }
    berge_hypergraph* h = nullptr;
    char* report = nullptr;
    check_status(berge_generate_with_report(gen_name.c_str(), params.dump().c_str(),
                                            &h, &report),
                 "generate " + gen_name);
    char* hjson = nullptr;
    check_status(berge_hypergraph_to_json(h, &hjson), "serializing output");
    std::string hypergraph_text = take_string(hjson);
    std::string report_text = take_string(report);
    if (gen_out.empty()) {
      std::cout << hypergraph_text << "\n";
      std::cerr << report_text << "\n";
    } else {
      write_file(gen_out, hypergraph_text + "\n");
      write_file(gen_out + ".report.json", report_text + "\n");
      std::cout << report_text << "\n";
    }
    berge_hypergraph_free(h);
    return 0;
  }

  if (check->parsed()) {
    berge_hypergraph* h = load_hypergraph(chk_input);
    berge_graph* f = load_pattern(chk_pattern);
    int found = 0;
    char* witness = nullptr;
    check_status(berge_find_copy(h, f, chk_t, chk_mode.c_str(), &found, &witness),
                 "detection");
    int code = kExitFree;
    if (found) {
      std::string w = take_string(witness);
      emit(w, chk_out);
      std::cout << "contained\n";
      code = kExitContained;
    } else {
      std::cout << "free\n";
    }
    berge_graph_free(f);
    berge_hypergraph_free(h);
    return code;
  }

  if (bounds->parsed()) {
    char* report = nullptr;
    check_status(berge_theorem_bounds(bnd_n, bnd_r, bnd_t, bnd_pattern.c_str(), &report),
                 "bounds");
    json rep = json::parse(take_string(report));
    std::string text;
    if (bnd_format == "json")
      text = rep.dump();
    else if (bnd_format == "csv")
      text = bounds_csv(rep);
    else if (bnd_format == "table")
      text = bounds_table(rep);
    else
      die("unknown format '" + bnd_format + "'");
    if (bnd_format != "json" && !text.empty() && text.back() == '\n') text.pop_back();
    emit(text, bnd_out);
    return 0;
  }

  if (exact->parsed()) {
    berge_graph* f = load_pattern(ext_pattern);
    char* result = nullptr;
    check_status(berge_exact_turan(ext_n, ext_r, f, ext_t, ext_mode.c_str(),
                                   ext_budget, &result),
                 "turan-exact");
    emit(take_string(result), ext_out);
    berge_graph_free(f);
    return 0;
  }

  if (symmetrize->parsed()) {
    berge_bluered* g = nullptr;
    check_status(berge_bluered_parse(read_file(sym_input).c_str(), &g),
                 "parsing blue-red graph '" + sym_input + "'");
    char* result = nullptr;
    check_status(berge_symmetrize(g, sym_k, sym_r, sym_t, &result), "symmetrize");
    emit(take_string(result), sym_out);
    berge_bluered_free(g);
    return 0;
  }

  if (selftest->parsed()) {
    char* report = nullptr;
    check_status(berge_selftest(st_criteria.empty() ? nullptr : st_criteria.c_str(),
                                st_timing ? 1 : 0, &report),
                 "selftest");
    json rep = json::parse(take_string(report));
    if (st_json) {
      std::cout << rep.dump() << "\n";
    } else {
      for (const auto& item : rep["criteria"]) {
        std::cout << "criterion " << item["id"].get<int>() << ": "
                  << (item["pass"].get<bool>() ? "PASS" : "FAIL") << " — "
                  << item["name"].get<std::string>() << " ("
                  << item["details"].get<std::string>() << ")";
        if (item.contains("seconds"))
          std::cout << " [" << item["seconds"].get<double>() << "s]";
        std::cout << "\n";
      }
      std::cout << (rep["all_pass"].get<bool>() ? "all criteria passed"
                                                : "FAILURES present")
                << "\n";
    }
    return rep["all_pass"].get<bool>() ? 0 : 1;
  }

  return kExitError;
}

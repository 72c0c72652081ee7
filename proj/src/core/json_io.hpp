#pragma once

#include <string>

#include "core/bounds.hpp"
#include "core/detect.hpp"
#include "core/hypergraph.hpp"
#include "core/solver.hpp"

namespace berge {

// Canonical JSON forms. serialize() output is stable: sorted edges, compact
// encoding; parse(serialize(x)) == x on canonical values.
std::string serialize(const Hypergraph& h);
std::string serialize(const Graph& g);
std::string serialize(const BlueRedGraph& g);
std::string serialize(const Witness& w);
std::string serialize(const Certificate& c);
std::string serialize(const StripResult& s);
std::string serialize(const Expansion3& e);
std::string serialize(const SolveResult& s);
std::string serialize(const BoundReport& r);
std::string serialize(const SymmetrizeResult& r);

Hypergraph parse_hypergraph(const std::string& text);
Graph parse_graph(const std::string& text);
BlueRedGraph parse_bluered(const std::string& text);
Witness parse_witness(const std::string& text);

}  // namespace berge

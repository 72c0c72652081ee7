#pragma once

#include <set>
#include <string>
#include <vector>

namespace berge {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

// Runs the acceptance battery with fixed seeds. An empty set runs every
// criterion.
std::vector<CriterionResult> run_acceptance(const std::set<int>& which = {});

}  // namespace berge

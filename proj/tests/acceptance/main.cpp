// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "core/selftest.hpp"

int main() {
  auto results = berge::run_acceptance();
  bool all_pass = true;
  for (const auto& res : results) {
    std::printf("criterion %2d: %s — %s (%s) [%.1fs]\n", res.id,
                res.pass ? "PASS" : "FAIL", res.name.c_str(), res.details.c_str(),
                res.seconds);
    all_pass = all_pass && res.pass;
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}

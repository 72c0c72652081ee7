#pragma once

#include <vector>

namespace berge {

struct BipartiteMatching {
  std::vector<int> left_match;   // left index -> right index or -1
  std::vector<int> right_match;  // right index -> left index or -1
  int size = 0;
};

// Maximum matching via augmenting paths. adj[l] lists the right-side
// neighbours of left vertex l. Deterministic for a fixed input.
BipartiteMatching max_bipartite_matching(const std::vector<std::vector<int>>& adj,
                                         int n_right);

}  // namespace berge

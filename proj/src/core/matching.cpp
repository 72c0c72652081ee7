#include "core/matching.hpp"

namespace berge {

namespace {

bool try_augment(int l, const std::vector<std::vector<int>>& adj,
                 std::vector<int>& left_match, std::vector<int>& right_match,
                 std::vector<char>& visited) {
  for (int r : adj[l]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (right_match[r] == -1 ||
        try_augment(right_match[r], adj, left_match, right_match, visited)) {
      left_match[l] = r;
      right_match[r] = l;
      return true;
    }
  }
  return false;
}

}  // namespace

BipartiteMatching max_bipartite_matching(const std::vector<std::vector<int>>& adj,
                                         int n_right) {
  BipartiteMatching m;
  m.left_match.assign(adj.size(), -1);
  m.right_match.assign(n_right, -1);
  for (size_t l = 0; l < adj.size(); ++l) {
    std::vector<char> visited(n_right, 0);
    if (try_augment(static_cast<int>(l), adj, m.left_match, m.right_match, visited))
      ++m.size;
  }
  return m;
}

}  // namespace berge

#pragma once

// Hand-transcribed small diagrams shared across the test suites.

#include <vector>

namespace fixtures {

// 2x2 grid (the four-element Boolean lattice).
inline std::vector<std::vector<int>> b2_up() { return {{1, 2}, {3}, {3}, {}}; }

// Pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4.
inline std::vector<std::vector<int>> n5_up() { return {{1, 3}, {2}, {4}, {4}, {}}; }

// Diamond: three atoms under a common top.
inline std::vector<std::vector<int>> m3_up() { return {{1, 2, 3}, {4}, {4}, {4}, {}}; }

// The seven-element lattice obtained by forking the square:
// 0; atoms 1, 2; coatoms 3 (left), 4 (middle), 5 (right); top 6.
inline std::vector<std::vector<int>> s7_up() {
  return {{1, 2}, {3, 4}, {4, 5}, {6}, {6}, {6}, {}};
}

// Chain with n elements.
inline std::vector<std::vector<int>> chain_up(int n) {
  std::vector<std::vector<int>> up(n);
  for (int i = 0; i + 1 < n; ++i) up[i].push_back(i + 1);
  return up;
}

// Eight-element distributive lattice with join-irreducible poset
// {a < c, b < c, b < d}; the built-in non-representability target.
inline std::vector<std::vector<int>> d8_up() {
  return {{1, 2}, {3}, {3, 4}, {5, 6}, {6}, {7}, {7}, {}};
}

}  // namespace fixtures

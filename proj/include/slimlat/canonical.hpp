#pragma once

#include <cstdio>
#include <map>
#include <tuple>

#include "slimlat/lattice.hpp"

namespace slimlat {

namespace detail {

// Colour refinement on the cover digraph. Initial colours come from order
// invariants; a colour class splits whenever the multisets of neighbour
// colours (upwards and downwards separately) differ.
struct Canonicalizer {
  const PlanarLattice& L;
  int n;
  std::vector<int> depth;

  explicit Canonicalizer(const PlanarLattice& lat) : L(lat), n(lat.size()), depth(lat.size(), 0) {
    for (auto it = L.topo_order().rbegin(); it != L.topo_order().rend(); ++it)
      for (int u : L.up(*it)) depth[*it] = std::max(depth[*it], depth[u] + 1);
  }

  std::vector<int> initial_colors() const {
    std::vector<std::tuple<int, int, int, int>> key(n);
    for (int x = 0; x < n; ++x)
      key[x] = {L.height(x), depth[x], static_cast<int>(L.up(x).size()),
                static_cast<int>(L.down(x).size())};
    auto sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> color(n);
    for (int x = 0; x < n; ++x)
      color[x] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[x]) -
                                  sorted.begin());
    return color;
  }

  void refine(std::vector<int>& color) const {
    using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
    while (true) {
      std::vector<Key> key(n);
      for (int x = 0; x < n; ++x) {
        std::vector<int> ups, downs;
        for (int u : L.up(x)) ups.push_back(color[u]);
        for (int d : L.down(x)) downs.push_back(color[d]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        key[x] = {color[x], std::move(ups), std::move(downs)};
      }
      std::map<Key, int> rank;
      for (int x = 0; x < n; ++x) rank.emplace(key[x], 0);
      int next = 0;
      for (auto& [k, r] : rank) r = next++;
      bool changed = false;
      for (int x = 0; x < n; ++x) {
        int c = rank[key[x]];
        if (c != color[x]) changed = true;
        color[x] = c;
      }
      if (!changed) break;
    }
  }

  bool discrete(const std::vector<int>& color) const {
    std::vector<char> seen(n, 0);
    for (int c : color) {
      if (seen[c]) return false;
      seen[c] = 1;
    }
    return true;
  }

  std::string encode(const std::vector<int>& color) const {
    // color is discrete: colour ranks are a permutation of 0..n-1
    std::vector<int> at(n);
    for (int x = 0; x < n; ++x) at[color[x]] = x;
    char buf[16];
    std::snprintf(buf, sizeof buf, "n=%04d;", n);
    std::string out = buf;
    for (int c = 0; c < n; ++c) {
      std::vector<int> ups;
      for (int u : L.up(at[c])) ups.push_back(color[u]);
      std::sort(ups.begin(), ups.end());
      out += 'u';
      for (std::size_t i = 0; i < ups.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ups[i]);
      }
      out += ';';
    }
    return out;
  }

  // Individualisation-refinement search for the minimal encoding. The target
  // class (first non-singleton colour) is an isomorphism invariant, so the
  // minimum over its members is a canonical form.
  std::string search(std::vector<int> color) const {
    refine(color);
    if (discrete(color)) return encode(color);
    std::vector<int> count(n, 0);
    for (int c : color) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    std::string best;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      auto forked = color;
      for (int x = 0; x < n; ++x)
        forked[x] = 2 * forked[x] + (x == v ? 0 : 1);
      std::string cand = search(std::move(forked));
      if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
  }
};

}  // namespace detail

/// Canonical byte string of the abstract lattice: two lattices get the same
/// string exactly when they are isomorphic (the planar embedding is ignored,
/// so mirror images coincide).
inline std::string canonical_form(const PlanarLattice& L) {
  detail::Canonicalizer c(L);
  return c.search(c.initial_colors());
}

inline bool isomorphic(const PlanarLattice& a, const PlanarLattice& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Short stable identifier used in reports and cache file names.
inline std::string canonical_key(const PlanarLattice& L) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(canonical_form(L))));
  return buf;
}

}  // namespace slimlat

#pragma once

#include <optional>
#include <set>

#include "slimlat/lattice.hpp"

namespace slimlat {

struct SemimodularityWitness {
  int x, y;  // x ∧ y is a lower cover of x, but y is not a lower cover of x ∨ y
};

/// Returns a violating pair if the lattice is not (upper) semimodular.
inline std::optional<SemimodularityWitness> semimodularity_witness(const PlanarLattice& L) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (L.covers(L.meet(x, y), x) && !L.covers(y, L.join(x, y)))
        return SemimodularityWitness{x, y};
    }
  return std::nullopt;
}

inline bool is_semimodular(const PlanarLattice& L) { return !semimodularity_witness(L); }

struct SlimnessWitness {
  int x, y, z;  // a diamond triple: pairwise meets and joins all agree
};

/// A lattice is slim when it has no M3 sublattice, i.e. no three pairwise
/// incomparable elements with a common meet and a common join taken pairwise.
inline std::optional<SlimnessWitness> slimness_witness(const PlanarLattice& L) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (L.leq(x, y) || L.leq(y, x)) continue;
      const int m = L.meet(x, y), j = L.join(x, y);
      for (int z = y + 1; z < n; ++z) {
        if (L.leq(x, z) || L.leq(z, x) || L.leq(y, z) || L.leq(z, y)) continue;
        if (L.meet(x, z) == m && L.meet(y, z) == m && L.join(x, z) == j && L.join(y, z) == j)
          return SlimnessWitness{x, y, z};
      }
    }
  return std::nullopt;
}

inline bool is_slim(const PlanarLattice& L) { return !slimness_witness(L); }

/// A covering square that bounds an empty region of the diagram: left and right
/// are adjacent in both up(o) and down(top), with left immediately to the left.
struct FourCell {
  int o, left, right, top;
  friend bool operator==(const FourCell& a, const FourCell& b) {
    return a.o == b.o && a.left == b.left && a.right == b.right && a.top == b.top;
  }
};

/// An adjacent upper-cover pair whose cell does not close into a 4-cell;
/// diagnostic output for inputs that are not planar semimodular.
struct CellDefect {
  int o;  // cell bottom
  int k;  // index of the left wall entry in up(o)
};

namespace detail {

inline int index_in(const std::vector<int>& xs, int v) {
  for (int i = 0; i < static_cast<int>(xs.size()); ++i)
    if (xs[i] == v) return i;
  return -1;
}

inline bool adjacent_in(const std::vector<int>& xs, int a, int b) {
  int i = index_in(xs, a);
  return i >= 0 && i + 1 < static_cast<int>(xs.size()) && xs[i + 1] == b;
}

}  // namespace detail

/// Scans every adjacent upper-cover pair. For 4-cell lattices this enumerates
/// all cells of the diagram; pairs that do not close are returned as defects.
inline void scan_cells(const PlanarLattice& L, std::vector<FourCell>& cells,
                       std::vector<CellDefect>& defects) {
  cells.clear();
  defects.clear();
  for (int o = 0; o < L.size(); ++o) {
    const auto& ups = L.up(o);
    for (int k = 0; k + 1 < static_cast<int>(ups.size()); ++k) {
      const int a = ups[k], b = ups[k + 1];
      const int t = L.join(a, b);
      if (L.covers(a, t) && L.covers(b, t) && detail::adjacent_in(L.down(t), a, b))
        cells.push_back(FourCell{o, a, b, t});
      else
        defects.push_back(CellDefect{o, k});
    }
  }
}

inline std::vector<FourCell> four_cells(const PlanarLattice& L) {
  std::vector<FourCell> cells;
  std::vector<CellDefect> defects;
  scan_cells(L, cells, defects);
  return cells;
}

inline std::vector<CellDefect> cell_defects(const PlanarLattice& L) {
  std::vector<FourCell> cells;
  std::vector<CellDefect> defects;
  scan_cells(L, cells, defects);
  return defects;
}

/// Leftmost maximal chain from bottom to top.
inline std::vector<int> left_boundary_chain(const PlanarLattice& L) {
  std::vector<int> chain{L.bottom()};
  while (chain.back() != L.top()) chain.push_back(L.up(chain.back()).front());
  return chain;
}

inline std::vector<int> right_boundary_chain(const PlanarLattice& L) {
  std::vector<int> chain{L.bottom()};
  while (chain.back() != L.top()) chain.push_back(L.up(chain.back()).back());
  return chain;
}

/// Boundary data of a rectangular diagram: the four boundary chains, the two
/// doubly irreducible corners, and t_len = length[c_l,1] + length[c_r,1].
struct BoundaryProfile {
  std::vector<int> lower_left, upper_left, lower_right, upper_right;
  int c_l = -1, c_r = -1;
  int t_len = 0;
};

namespace detail {

inline std::optional<int> unique_corner(const PlanarLattice& L, const std::vector<int>& chain) {
  int corner = -1;
  for (int x : chain) {
    if (x == L.bottom() || x == L.top()) continue;
    if (L.up(x).size() == 1 && L.down(x).size() == 1) {
      if (corner >= 0) return std::nullopt;  // two doubly irreducible elements
      corner = x;
    }
  }
  if (corner < 0) return std::nullopt;
  return corner;
}

inline std::vector<int> chain_prefix(const std::vector<int>& chain, int through) {
  std::vector<int> out;
  for (int x : chain) {
    out.push_back(x);
    if (x == through) break;
  }
  return out;
}

inline std::vector<int> chain_suffix(const std::vector<int>& chain, int from) {
  std::vector<int> out;
  bool on = false;
  for (int x : chain) {
    if (x == from) on = true;
    if (on) out.push_back(x);
  }
  return out;
}

}  // namespace detail

inline std::optional<BoundaryProfile> try_rectangular_profile(const PlanarLattice& L) {
  if (L.size() < 4) return std::nullopt;
  const auto left = left_boundary_chain(L);
  const auto right = right_boundary_chain(L);
  const auto cl = detail::unique_corner(L, left);
  const auto cr = detail::unique_corner(L, right);
  if (!cl || !cr) return std::nullopt;
  if (L.meet(*cl, *cr) != L.bottom() || L.join(*cl, *cr) != L.top()) return std::nullopt;
  BoundaryProfile p;
  p.c_l = *cl;
  p.c_r = *cr;
  p.lower_left = detail::chain_prefix(left, p.c_l);
  p.upper_left = detail::chain_suffix(left, p.c_l);
  p.lower_right = detail::chain_prefix(right, p.c_r);
  p.upper_right = detail::chain_suffix(right, p.c_r);
  p.t_len = L.interval_length(p.c_l, L.top()) + L.interval_length(p.c_r, L.top());
  return p;
}

inline BoundaryProfile rectangular_profile(const PlanarLattice& L) {
  auto p = try_rectangular_profile(L);
  if (!p)
    fail(errc::not_rectangular,
         "boundary chains do not have exactly one doubly irreducible complementary corner each");
  return *p;
}

constexpr unsigned kUpperBoundary = 1;
constexpr unsigned kMeetReducible = 2;
constexpr unsigned kMiddle = 4;

/// True when x sits strictly between the extremes of some down(t) with three or
/// more entries; such an element is the centre of an S7 configuration.
inline bool is_middle_element(const PlanarLattice& L, int x) {
  for (int t : L.up(x)) {
    const auto& ds = L.down(t);
    if (ds.size() < 3) continue;
    const int i = detail::index_in(ds, x);
    if (i > 0 && i + 1 < static_cast<int>(ds.size())) return true;
  }
  return false;
}

/// Labels every element of a slim rectangular lattice as upper-boundary,
/// meet-reducible or middle (an element may carry several labels). An
/// unlabelled element would contradict the trichotomy and raises
/// ClassificationGap.
inline std::vector<unsigned> classify_elements(const PlanarLattice& L) {
  const auto profile = rectangular_profile(L);
  std::vector<unsigned> cls(L.size(), 0);
  for (int x : profile.upper_left) cls[x] |= kUpperBoundary;
  for (int x : profile.upper_right) cls[x] |= kUpperBoundary;
  for (int x = 0; x < L.size(); ++x) {
    if (L.up(x).size() >= 2) cls[x] |= kMeetReducible;
    if (is_middle_element(L, x)) cls[x] |= kMiddle;
    if (cls[x] == 0)
      fail(errc::classification_gap,
           "element " + std::to_string(x) + " is neither on the upper boundary, "
           "meet-reducible, nor a middle element");
  }
  return cls;
}

/// Closure of `seed` under meet and join.
inline std::vector<int> generated_sublattice(const PlanarLattice& L, std::vector<int> seed) {
  std::set<int> have(seed.begin(), seed.end());
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<int> cur(have.begin(), have.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        if (have.insert(L.meet(cur[i], cur[j])).second) grown = true;
        if (have.insert(L.join(cur[i], cur[j])).second) grown = true;
      }
  }
  return {have.begin(), have.end()};
}

/// First structural violation of the slim planar semimodular contract, if any:
/// an element with more than two upper covers, a cell that is not a 4-cell, or
/// a semimodularity/slimness failure.
inline std::optional<std::string> sps_violation(const PlanarLattice& L) {
  for (int x = 0; x < L.size(); ++x)
    if (L.up(x).size() > 2)
      return "element " + std::to_string(x) + " has more than two upper covers";
  const auto defects = cell_defects(L);
  if (!defects.empty())
    return "cell above element " + std::to_string(defects.front().o) + " at position " +
           std::to_string(defects.front().k) + " is not a 4-cell";
  if (auto w = semimodularity_witness(L))
    return "semimodularity fails at (" + std::to_string(w->x) + ", " + std::to_string(w->y) + ")";
  if (auto w = slimness_witness(L))
    return "M3 sublattice on {" + std::to_string(w->x) + ", " + std::to_string(w->y) + ", " +
           std::to_string(w->z) + "}";
  return std::nullopt;
}

inline bool is_sps(const PlanarLattice& L) { return !sps_violation(L); }

}  // namespace slimlat

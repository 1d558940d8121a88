#pragma once

#include <deque>
#include <future>
#include <map>
#include <random>

#include "slimlat/canonical.hpp"
#include "slimlat/structure.hpp"

namespace slimlat {

/// Addresses the 4-cell below `top` whose left/right walls start at positions
/// k, k+1 of down(top), in the deterministic replay numbering.
struct ForkSite {
  int top = -1;
  int k = -1;
};

/// A replayable construction script: a grid C_p x C_q followed by a sequence
/// of fork insertions.
struct CzedliSchmidtSequence {
  int p = 2, q = 2;
  std::vector<ForkSite> forks;
};

/// Direct product of two chains with the product embedding. Element ids are
/// i*q + j for 0 <= i < p (up-left direction), 0 <= j < q (up-right direction).
inline PlanarLattice make_grid(int p, int q) {
  if (p < 2 || q < 2)
    fail(errc::bad_dims, "grid requires p, q >= 2, got " + std::to_string(p) + " x " +
                             std::to_string(q));
  const auto id = [q](int i, int j) { return i * q + j; };
  std::vector<std::vector<int>> up(static_cast<std::size_t>(p) * q), down(up.size());
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      if (i + 1 < p) up[id(i, j)].push_back(id(i + 1, j));
      if (j + 1 < q) up[id(i, j)].push_back(id(i, j + 1));
      if (j > 0) down[id(i, j)].push_back(id(i, j - 1));
      if (i > 0) down[id(i, j)].push_back(id(i - 1, j));
    }
  return build_diagram(std::move(up), std::move(down));
}

inline PlanarLattice make_chain(int n) {
  if (n < 1) fail(errc::bad_dims, "chain needs at least one element");
  std::vector<std::vector<int>> up(n);
  for (int i = 0; i + 1 < n; ++i) up[i].push_back(i + 1);
  return build_diagram(std::move(up));
}

/// Boolean lattice with k atoms; subsets ordered by popcount then value.
inline PlanarLattice make_boolean(int k) {
  if (k < 0 || k > 16) fail(errc::bad_dims, "boolean lattice atom count out of range");
  const int n = 1 << k;
  std::vector<int> masks(n);
  for (int m = 0; m < n; ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](int a, int b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[masks[i]] = i;
  std::vector<std::vector<int>> up(n);
  for (int i = 0; i < n; ++i)
    for (int bit = 0; bit < k; ++bit)
      if (!(masks[i] & (1 << bit))) up[i].push_back(pos[masks[i] | (1 << bit)]);
  return build_diagram(std::move(up));
}

namespace detail {

inline void validate_four_cell(const PlanarLattice& L, const FourCell& c) {
  const bool ok = c.o >= 0 && c.o < L.size() && c.top >= 0 && c.top < L.size() &&
                  L.covers(c.o, c.left) && L.covers(c.o, c.right) && L.covers(c.left, c.top) &&
                  L.covers(c.right, c.top) && adjacent_in(L.up(c.o), c.left, c.right) &&
                  adjacent_in(L.down(c.top), c.left, c.right);
  if (!ok)
    fail(errc::not_a_four_cell, "quadruple (" + std::to_string(c.o) + ", " +
                                    std::to_string(c.left) + ", " + std::to_string(c.right) +
                                    ", " + std::to_string(c.top) + ") is not a 4-cell");
}

/// The 4-cell sitting to the lower left of the edge u -> v, i.e. the cell
/// whose upper-right edge is (u, v). Returns nothing when the edge has no cell
/// on that side (it then must lie on the left boundary).
inline std::optional<FourCell> cell_with_upper_right_edge(const PlanarLattice& L, int u, int v) {
  const auto& ds = L.down(v);
  const int i = index_in(ds, u);
  if (i <= 0) return std::nullopt;
  const int l = ds[i - 1];
  const int o = L.meet(l, u);
  if (!(L.covers(o, l) && L.covers(o, u) && adjacent_in(L.up(o), l, u)))
    fail(errc::check_failed, "no coherent 4-cell left of edge " + std::to_string(u) + " -> " +
                                 std::to_string(v));
  return FourCell{o, l, u, v};
}

inline std::optional<FourCell> cell_with_upper_left_edge(const PlanarLattice& L, int u, int v) {
  const auto& ds = L.down(v);
  const int i = index_in(ds, u);
  if (i < 0 || i + 1 >= static_cast<int>(ds.size())) return std::nullopt;
  const int r = ds[i + 1];
  const int o = L.meet(u, r);
  if (!(L.covers(o, u) && L.covers(o, r) && adjacent_in(L.up(o), u, r)))
    fail(errc::check_failed, "no coherent 4-cell right of edge " + std::to_string(u) + " -> " +
                                 std::to_string(v));
  return FourCell{o, u, r, v};
}

inline bool consecutive_in_chain(const std::vector<int>& chain, int a, int b) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i] == a && chain[i + 1] == b) return true;
  return false;
}

inline void replace_entry(std::vector<int>& xs, int from, int to) {
  const int i = index_in(xs, from);
  if (i < 0) fail(errc::check_failed, "expected cover entry missing during fork edit");
  xs[i] = to;
}

}  // namespace detail

/// Inserts a fork at the 4-cell S of a slim rectangular lattice.
///
/// A new apex m is placed below top(S) between the cell walls. Each leg then
/// descends through the maximal run of 4-cells reachable through lower wall
/// edges: on the left, C_1 = S and C_{j+1} is the cell whose upper-right edge
/// is the lower-left edge (o_j, l_j) of C_j; the run ends when that edge lies
/// on the lower boundary. The leg element w_j splits the edge (o_j, l_j), so
/// up(w_j) = (l_j, w_{j-1}) with w_0 = m, down(w_j) gains o_j, and the last
/// w_n lands on the lower boundary chain. The right leg is the mirror image.
///
/// New elements are numbered apex first, then the left leg top-down, then the
/// right leg top-down, which keeps replays byte-reproducible.
inline PlanarLattice insert_fork(const PlanarLattice& L, const FourCell& cell) {
  detail::validate_four_cell(L, cell);
  auto profile = try_rectangular_profile(L);
  if (!profile || !is_semimodular(L) || !is_slim(L))
    fail(errc::input_not_slim_rectangular, "fork insertion requires a slim rectangular lattice");

  // Collect the two cell walks before touching anything.
  std::vector<FourCell> lwalk{cell}, rwalk{cell};
  while (true) {
    const auto& c = lwalk.back();
    auto next = detail::cell_with_upper_right_edge(L, c.o, c.left);
    if (!next) {
      if (!detail::consecutive_in_chain(profile->lower_left, c.o, c.left))
        fail(errc::check_failed, "left leg walk ended off the lower-left boundary");
      break;
    }
    lwalk.push_back(*next);
  }
  while (true) {
    const auto& c = rwalk.back();
    auto next = detail::cell_with_upper_left_edge(L, c.o, c.right);
    if (!next) {
      if (!detail::consecutive_in_chain(profile->lower_right, c.o, c.right))
        fail(errc::check_failed, "right leg walk ended off the lower-right boundary");
      break;
    }
    rwalk.push_back(*next);
  }

  const int n0 = L.size();
  const int nl = static_cast<int>(lwalk.size());
  const int nr = static_cast<int>(rwalk.size());
  const int m = n0;
  const auto wl = [&](int j) { return n0 + j; };            // 1-based leg index
  const auto wr = [&](int j) { return n0 + nl + j; };

  std::vector<std::vector<int>> up(n0 + 1 + nl + nr), down(up.size());
  for (int x = 0; x < n0; ++x) {
    up[x] = L.up(x);
    down[x] = L.down(x);
  }

  // Apex between the cell walls.
  const int pos = detail::index_in(down[cell.top], cell.left);
  down[cell.top].insert(down[cell.top].begin() + pos + 1, m);
  up[m] = {cell.top};
  down[m] = {wl(1), wr(1)};

  for (int j = 1; j <= nl; ++j) {
    const auto& c = lwalk[j - 1];
    up[wl(j)] = {c.left, j == 1 ? m : wl(j - 1)};
    down[wl(j)] = j < nl ? std::vector<int>{wl(j + 1), c.o} : std::vector<int>{c.o};
    detail::replace_entry(up[c.o], c.left, wl(j));
    detail::replace_entry(down[c.left], c.o, wl(j));
  }
  for (int j = 1; j <= nr; ++j) {
    const auto& c = rwalk[j - 1];
    up[wr(j)] = {j == 1 ? m : wr(j - 1), c.right};
    down[wr(j)] = j < nr ? std::vector<int>{c.o, wr(j + 1)} : std::vector<int>{c.o};
    detail::replace_entry(up[c.o], c.right, wr(j));
    detail::replace_entry(down[c.right], c.o, wr(j));
  }

  PlanarLattice out = build_diagram(std::move(up), std::move(down));

  // Structural postconditions; any failure here is a hard bug, not bad input.
  if (out.size() != n0 + 1 + nl + nr)
    fail(errc::check_failed, "fork insertion produced an unexpected element count");
  if (!is_semimodular(out) || !is_slim(out))
    fail(errc::check_failed, "fork insertion broke semimodularity or slimness");
  auto after = try_rectangular_profile(out);
  if (!after) fail(errc::check_failed, "fork insertion broke rectangularity");
  if (after->c_l != profile->c_l || after->c_r != profile->c_r)
    fail(errc::check_failed, "fork insertion moved a corner");
  if (after->upper_left != profile->upper_left || after->upper_right != profile->upper_right)
    fail(errc::check_failed, "fork insertion changed an upper boundary chain");
  if (after->lower_left.size() != profile->lower_left.size() + 1 ||
      after->lower_right.size() != profile->lower_right.size() + 1)
    fail(errc::check_failed, "fork insertion did not grow each lower boundary chain by one");
  return out;
}

inline FourCell resolve_fork_site(const PlanarLattice& L, const ForkSite& site) {
  if (site.top < 0 || site.top >= L.size())
    fail(errc::not_a_four_cell, "fork site references element " + std::to_string(site.top));
  const auto& ds = L.down(site.top);
  if (site.k < 0 || site.k + 1 >= static_cast<int>(ds.size()))
    fail(errc::not_a_four_cell, "fork site index " + std::to_string(site.k) +
                                    " out of range below element " + std::to_string(site.top));
  const int a = ds[site.k], b = ds[site.k + 1];
  FourCell cell{L.meet(a, b), a, b, site.top};
  detail::validate_four_cell(L, cell);
  return cell;
}

inline PlanarLattice insert_fork(const PlanarLattice& L, const ForkSite& site) {
  return insert_fork(L, resolve_fork_site(L, site));
}

inline ForkSite fork_site_of(const PlanarLattice& L, const FourCell& cell) {
  return ForkSite{cell.top, detail::index_in(L.down(cell.top), cell.left)};
}

/// Replays a construction script: make_grid followed by its fork insertions.
inline PlanarLattice replay(const CzedliSchmidtSequence& seq) {
  PlanarLattice L = make_grid(seq.p, seq.q);
  for (std::size_t i = 0; i < seq.forks.size(); ++i) {
    try {
      L = insert_fork(L, seq.forks[i]);
    } catch (const Error& e) {
      fail(e.code(), "replay step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return L;
}

struct Enumerated {
  PlanarLattice lattice;
  std::string canon;
  CzedliSchmidtSequence seq;  // one witness script reaching the lattice
};

struct EnumerationLimits {
  int max_elements = 16;
  int max_grid = 8;
  int max_forks = 8;
  int safety_cap = 26;
  int jobs = 1;
};

/// Breadth-first search over grids and fork sites, deduplicated by canonical
/// form. Every slim rectangular lattice within the bounds is emitted exactly
/// once up to isomorphism, in sorted canonical order. The number of forks
/// needed to reach a lattice is asserted to be path-independent.
inline std::vector<Enumerated> enumerate_slim_rectangular(const EnumerationLimits& lim) {
  if (lim.max_elements > lim.safety_cap)
    fail(errc::bounds_too_large, "element bound " + std::to_string(lim.max_elements) +
                                     " exceeds the safety cap " + std::to_string(lim.safety_cap));
  if (lim.max_elements < 4 || lim.max_grid < 2 || lim.max_forks < 0)
    fail(errc::bounds_too_large, "enumeration bounds below the trivial minima");

  struct Record {
    int forks;
    int p, q;
  };
  std::map<std::string, Record> seen;
  std::map<std::string, Enumerated> out;
  std::deque<Enumerated> frontier;

  auto admit = [&](Enumerated e, int forks) {
    auto it = seen.find(e.canon);
    if (it != seen.end()) {
      // The length of a construction sequence and its grid are invariants of
      // the lattice; a second route must agree.
      if (it->second.forks != forks || it->second.p != e.seq.p || it->second.q != e.seq.q)
        fail(errc::check_failed, "construction invariants disagree across routes to " + e.canon);
      return;
    }
    seen.emplace(e.canon, Record{forks, e.seq.p, e.seq.q});
    out.emplace(e.canon, e);
    frontier.push_back(std::move(e));
  };

  for (int p = 2; p <= lim.max_grid; ++p)
    for (int q = p; q <= lim.max_grid; ++q) {
      if (p * q > lim.max_elements) continue;
      PlanarLattice g = make_grid(p, q);
      admit(Enumerated{g, canonical_form(g), {p, q, {}}}, 0);
    }

  auto expand = [&lim](const Enumerated& e) {
    std::vector<Enumerated> kids;
    if (static_cast<int>(e.seq.forks.size()) >= lim.max_forks) return kids;
    if (e.lattice.size() + 3 > lim.max_elements) return kids;
    for (const FourCell& cell : four_cells(e.lattice)) {
      PlanarLattice child = insert_fork(e.lattice, cell);
      if (child.size() > lim.max_elements) continue;
      CzedliSchmidtSequence s = e.seq;
      s.forks.push_back(fork_site_of(e.lattice, cell));
      kids.push_back(Enumerated{std::move(child), {}, std::move(s)});
    }
    for (auto& k : kids) k.canon = canonical_form(k.lattice);
    return kids;
  };

  while (!frontier.empty()) {
    std::vector<Enumerated> layer(std::make_move_iterator(frontier.begin()),
                                  std::make_move_iterator(frontier.end()));
    frontier.clear();
    std::vector<std::vector<Enumerated>> results(layer.size());
    if (lim.jobs > 1) {
      std::vector<std::future<std::vector<Enumerated>>> futs;
      futs.reserve(layer.size());
      for (const auto& e : layer)
        futs.push_back(std::async(std::launch::async, expand, std::cref(e)));
      for (std::size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
      for (std::size_t i = 0; i < layer.size(); ++i) results[i] = expand(layer[i]);
    }
    // Merge in frontier order: output is independent of worker scheduling.
    for (auto& kids : results)
      for (auto& k : kids) {
        const int forks = static_cast<int>(k.seq.forks.size());
        admit(std::move(k), forks);
      }
  }

  std::vector<Enumerated> sorted;
  sorted.reserve(out.size());
  for (auto& [canon, e] : out) sorted.push_back(std::move(e));
  return sorted;
}

/// Deterministic pseudo-random construction scripts for stress corpora.
inline std::vector<CzedliSchmidtSequence> random_sequences(int count, int max_grid, int min_forks,
                                                           int max_forks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CzedliSchmidtSequence> result;
  result.reserve(count);
  std::uniform_int_distribution<int> dim(2, max_grid);
  std::uniform_int_distribution<int> nforks(min_forks, max_forks);
  for (int i = 0; i < count; ++i) {
    CzedliSchmidtSequence seq{dim(rng), dim(rng), {}};
    PlanarLattice L = make_grid(seq.p, seq.q);
    const int k = nforks(rng);
    for (int f = 0; f < k; ++f) {
      auto cells = four_cells(L);
      std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
      const FourCell& cell = cells[pick(rng)];
      seq.forks.push_back(fork_site_of(L, cell));
      L = insert_fork(L, cell);
    }
    result.push_back(std::move(seq));
  }
  return result;
}

}  // namespace slimlat

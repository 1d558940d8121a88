#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slimlat {

/// Failure categories surfaced by the library. Validation failures carry the
/// offending elements in the message text.
enum class errc {
  not_a_lattice,
  not_reduced,
  inconsistent,
  no_bounds,
  not_rectangular,
  bad_dims,
  not_a_four_cell,
  input_not_slim_rectangular,
  too_large,
  bounds_too_large,
  not_prime_ideal,
  classification_gap,
  parse_error,
  check_failed,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_lattice: return "NotALattice";
    case errc::not_reduced: return "NotReduced";
    case errc::inconsistent: return "Inconsistent";
    case errc::no_bounds: return "NoBounds";
    case errc::not_rectangular: return "NotRectangular";
    case errc::bad_dims: return "BadDims";
    case errc::not_a_four_cell: return "NotAFourCell";
    case errc::input_not_slim_rectangular: return "InputNotSlimRectangular";
    case errc::too_large: return "TooLarge";
    case errc::bounds_too_large: return "BoundsTooLarge";
    case errc::not_prime_ideal: return "NotPrimeIdeal";
    case errc::classification_gap: return "ClassificationGap";
    case errc::parse_error: return "ParseError";
    case errc::check_failed: return "CheckFailed";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

/// Fixed-size boolean matrix stored as 64-bit words, one row per element.
class BitRows {
 public:
  BitRows() = default;
  BitRows(int rows, int cols)
      : rows_(rows), words_((cols + 63) / 64), bits_(static_cast<std::size_t>(rows) * words_) {}

  bool get(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(int r, int c) {
    bits_[static_cast<std::size_t>(r) * words_ + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  void or_row(int dst, int src) {
    auto* d = row(dst);
    const auto* s = row(src);
    for (int w = 0; w < words_; ++w) d[w] |= s[w];
  }
  int count_and(int r1, int r2) const {
    const auto* a = row(r1);
    const auto* b = row(r2);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
  }
  /// popcount(A.row(r1) & B.row(r2)); the matrices must share their geometry.
  static int count_and(const BitRows& A, int r1, const BitRows& B, int r2) {
    const auto* a = A.row(r1);
    const auto* b = B.row(r2);
    int c = 0;
    for (int w = 0; w < A.words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
    return c;
  }
  /// Calls f(i) for every i set in row(r1) & row(r2).
  template <class F>
  void for_each_and(int r1, int r2, F f) const {
    const auto* a = row(r1);
    const auto* b = row(r2);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t m = a[w] & b[w];
      while (m) {
        int bit = __builtin_ctzll(m);
        f(w * 64 + bit);
        m &= m - 1;
      }
    }
  }
  bool rows_equal_and(int r1, int r2, int r3) const {
    // row(r1) & row(r2) == row(r3)
    const auto* a = row(r1);
    const auto* b = row(r2);
    const auto* c = row(r3);
    for (int w = 0; w < words_; ++w)
      if ((a[w] & b[w]) != c[w]) return false;
    return true;
  }

 private:
  std::uint64_t* row(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_; }
  const std::uint64_t* row(int r) const {
    return bits_.data() + static_cast<std::size_t>(r) * words_;
  }

  int rows_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A finite bounded lattice given by its cover diagram. Cover lists are kept in
/// left-to-right order, which is how the planar embedding is represented; for
/// lattices that are not diagrams of planar constructions the order is just a
/// fixed presentation order. Instances are immutable after validation and safe
/// to share across threads.
class PlanarLattice {
 public:
  int size() const { return n_; }
  const std::vector<int>& up(int x) const { return up_[x]; }
  const std::vector<int>& down(int x) const { return down_[x]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return upsets_.get(x, y); }
  bool covers(int x, int y) const {  // x is a lower cover of y
    for (int u : up_[x])
      if (u == y) return true;
    return false;
  }
  int meet(int x, int y) const { return meet_[static_cast<std::size_t>(x) * n_ + y]; }
  int join(int x, int y) const { return join_[static_cast<std::size_t>(x) * n_ + y]; }
  /// Longest-chain height above bottom.
  int height(int x) const { return height_[x]; }
  int length() const { return height_[top_]; }

  /// Longest chain length (edge count) inside the interval [x, y]; requires x <= y.
  int interval_length(int x, int y) const {
    if (!leq(x, y)) fail(errc::check_failed, "interval_length on non-comparable pair");
    std::vector<int> best(n_, -1);
    best[x] = 0;
    for (int z : topo_) {
      if (best[z] < 0 || !leq(z, y)) continue;
      for (int u : up_[z])
        if (leq(u, y)) best[u] = std::max(best[u], best[z] + 1);
    }
    return best[y];
  }

  const BitRows& upsets() const { return upsets_; }
  const BitRows& downsets() const { return downsets_; }
  /// Elements in a fixed topological order (lower covers first).
  const std::vector<int>& topo_order() const { return topo_; }

  friend PlanarLattice build_diagram(std::vector<std::vector<int>> up);
  friend PlanarLattice build_diagram(std::vector<std::vector<int>> up,
                                     std::vector<std::vector<int>> down);

 private:
  PlanarLattice() = default;

  static void check_lists(const std::vector<std::vector<int>>& lists, int n, const char* what) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> seen;
      for (int v : lists[i]) {
        if (v < 0 || v >= n)
          fail(errc::inconsistent, std::string(what) + " list of " + std::to_string(i) +
                                       " references out-of-range element " + std::to_string(v));
        if (v == i) fail(errc::not_a_lattice, "self-loop at element " + std::to_string(i));
        seen.push_back(v);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        fail(errc::inconsistent,
             std::string(what) + " list of " + std::to_string(i) + " has a duplicate entry");
    }
  }

  // Shared tail of the two build_diagram overloads. `down` entries are already
  // ordered; consistency with `up` has been established.
  static PlanarLattice finish(std::vector<std::vector<int>> up, std::vector<std::vector<int>> down);

  int n_ = 0;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> height_;
  std::vector<int> topo_;
  BitRows upsets_, downsets_;
  std::vector<std::int32_t> meet_, join_;
};

namespace detail {

/// Kahn topological order over the cover digraph; throws on cycles.
inline std::vector<int> topo_order_or_fail(const std::vector<std::vector<int>>& up, int n) {
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int v : up[i]) ++indeg[v];
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack;
  for (int i = n - 1; i >= 0; --i)
    if (indeg[i] == 0) stack.push_back(i);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (int v : up[x])
      if (--indeg[v] == 0) stack.push_back(v);
  }
  if (static_cast<int>(order.size()) != n)
    fail(errc::not_a_lattice, "cover graph contains a cycle");
  return order;
}

/// First-visit order of a leftmost depth-first search from `root` following the
/// ordered up lists. For a coherently embedded planar diagram this sorts any
/// set of pairwise incomparable elements left to right.
inline std::vector<int> dfs_visit_order(const std::vector<std::vector<int>>& up, int n, int root) {
  std::vector<int> index(n, -1);
  std::vector<std::pair<int, std::size_t>> stack;
  int next = 0;
  index[root] = next++;
  stack.emplace_back(root, 0);
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i == up[x].size()) {
      stack.pop_back();
      continue;
    }
    int child = up[x][i++];
    if (index[child] < 0) {
      index[child] = next++;
      stack.emplace_back(child, 0);
    }
  }
  return index;
}

}  // namespace detail

inline PlanarLattice PlanarLattice::finish(std::vector<std::vector<int>> up,
                                           std::vector<std::vector<int>> down) {
  PlanarLattice L;
  const int n = static_cast<int>(up.size());
  L.n_ = n;
  L.topo_ = detail::topo_order_or_fail(up, n);

  int sources = 0, sinks = 0;
  for (int i = 0; i < n; ++i) {
    if (down[i].empty()) ++sources, L.bottom_ = i;
    if (up[i].empty()) ++sinks, L.top_ = i;
  }
  if (sources != 1 || sinks != 1)
    fail(errc::no_bounds, "expected unique bottom and top, found " + std::to_string(sources) +
                              " minimal and " + std::to_string(sinks) + " maximal elements");

  // Reachability closures over the covers.
  L.upsets_ = BitRows(n, n);
  L.downsets_ = BitRows(n, n);
  for (auto it = L.topo_.rbegin(); it != L.topo_.rend(); ++it) {
    int x = *it;
    L.upsets_.set(x, x);
    for (int v : up[x]) L.upsets_.or_row(x, v);
  }
  for (int x : L.topo_) {
    L.downsets_.set(x, x);
    for (int v : down[x]) L.downsets_.or_row(x, v);
  }

  // Every cover edge must be irredundant: the interval [x, y] of a cover pair
  // contains exactly the two endpoints.
  for (int x = 0; x < n; ++x)
    for (int y : up[x])
      if (BitRows::count_and(L.upsets_, x, L.downsets_, y) != 2)
        fail(errc::not_reduced, "edge " + std::to_string(x) + " -> " + std::to_string(y) +
                                    " is implied by a longer chain");

  L.height_.assign(n, 0);
  for (int x : L.topo_)
    for (int v : down[x]) L.height_[x] = std::max(L.height_[x], L.height_[v] + 1);

  // Meet and join tables; existence of both for every pair is the lattice test.
  L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
  L.join_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      int lo = -1;
      L.downsets_.for_each_and(x, y, [&](int z) {
        if (lo < 0 || L.height_[z] > L.height_[lo]) lo = z;
      });
      if (lo < 0 || !L.downsets_.rows_equal_and(x, y, lo))
        fail(errc::not_a_lattice,
             "elements " + std::to_string(x) + ", " + std::to_string(y) + " have no meet");
      int hi = -1;
      L.upsets_.for_each_and(x, y, [&](int z) {
        if (hi < 0 || L.height_[z] < L.height_[hi]) hi = z;
      });
      if (hi < 0 || !L.upsets_.rows_equal_and(x, y, hi))
        fail(errc::not_a_lattice,
             "elements " + std::to_string(x) + ", " + std::to_string(y) + " have no join");
      L.meet_[static_cast<std::size_t>(x) * n + y] = lo;
      L.meet_[static_cast<std::size_t>(y) * n + x] = lo;
      L.join_[static_cast<std::size_t>(x) * n + y] = hi;
      L.join_[static_cast<std::size_t>(y) * n + x] = hi;
    }
  }

  L.up_ = std::move(up);
  L.down_ = std::move(down);
  return L;
}

/// Validates ordered cover lists and builds the lattice. The `down` lists, when
/// given, must agree with `up` as sets; their order is taken as the embedding.
inline PlanarLattice build_diagram(std::vector<std::vector<int>> up,
                                   std::vector<std::vector<int>> down) {
  const int n = static_cast<int>(up.size());
  if (n == 0) fail(errc::no_bounds, "empty diagram");
  if (down.size() != up.size()) fail(errc::inconsistent, "up/down list counts differ");
  PlanarLattice::check_lists(up, n, "up");
  PlanarLattice::check_lists(down, n, "down");
  std::vector<std::vector<int>> derived(n);
  for (int i = 0; i < n; ++i)
    for (int v : up[i]) derived[v].push_back(i);
  for (int i = 0; i < n; ++i) {
    auto a = derived[i];
    auto b = down[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(errc::inconsistent, "up and down lists disagree at element " + std::to_string(i));
  }
  return PlanarLattice::finish(std::move(up), std::move(down));
}

/// Builds from up lists alone; down-list order is recovered as the left-to-right
/// order of a leftmost depth-first traversal from the bottom.
inline PlanarLattice build_diagram(std::vector<std::vector<int>> up) {
  const int n = static_cast<int>(up.size());
  if (n == 0) fail(errc::no_bounds, "empty diagram");
  PlanarLattice::check_lists(up, n, "up");
  (void)detail::topo_order_or_fail(up, n);
  std::vector<std::vector<int>> down(n);
  for (int i = 0; i < n; ++i)
    for (int v : up[i]) down[v].push_back(i);
  int sources = 0, root = -1;
  for (int i = 0; i < n; ++i)
    if (down[i].empty()) ++sources, root = i;
  if (sources != 1) fail(errc::no_bounds, "expected a unique bottom element");
  auto visit = detail::dfs_visit_order(up, n, root);
  for (int i = 0; i < n; ++i)
    std::sort(down[i].begin(), down[i].end(),
              [&](int a, int b) { return visit[a] < visit[b]; });
  return PlanarLattice::finish(std::move(up), std::move(down));
}

}  // namespace slimlat

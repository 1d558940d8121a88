#pragma once

#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "slimlat/structure.hpp"

namespace slimlat {

/// A lattice congruence as a partition of the element set. The class array is
/// normalised (classes numbered by first occurrence), so partitions compare
/// with plain == / <.
class Congruence {
 public:
  Congruence() = default;

  static Congruence identity(int n) {
    Congruence c;
    c.cls_.resize(n);
    std::iota(c.cls_.begin(), c.cls_.end(), 0);
    c.blocks_ = n;
    return c;
  }
  static Congruence full(int n) {
    Congruence c;
    c.cls_.assign(n, 0);
    c.blocks_ = n ? 1 : 0;
    return c;
  }
  static Congruence from_classes(const std::vector<int>& raw) {
    Congruence c;
    c.cls_.assign(raw.size(), -1);
    std::map<int, int> remap;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      auto [it, fresh] = remap.emplace(raw[i], c.blocks_);
      if (fresh) ++c.blocks_;
      c.cls_[i] = it->second;
    }
    return c;
  }

  int size() const { return static_cast<int>(cls_.size()); }
  int block_count() const { return blocks_; }
  int block_of(int x) const { return cls_[x]; }
  bool same(int x, int y) const { return cls_[x] == cls_[y]; }
  bool is_identity() const { return blocks_ == size(); }
  bool is_full() const { return blocks_ <= 1; }
  const std::vector<int>& classes() const { return cls_; }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(blocks_);
    for (int x = 0; x < size(); ++x) out[cls_[x]].push_back(x);
    return out;
  }

  /// Partition refinement order: *this <= o in Con L.
  bool refines(const Congruence& o) const {
    std::vector<int> image(blocks_, -1);
    for (int x = 0; x < size(); ++x) {
      int& img = image[cls_[x]];
      if (img < 0)
        img = o.cls_[x];
      else if (img != o.cls_[x])
        return false;
    }
    return true;
  }

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.cls_ == b.cls_; }
  friend bool operator<(const Congruence& a, const Congruence& b) { return a.cls_ < b.cls_; }

 private:
  std::vector<int> cls_;
  int blocks_ = 0;
};

namespace detail {

struct DSU {
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

inline Congruence to_congruence(DSU& d) {
  std::vector<int> raw(d.parent.size());
  for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = d.find(static_cast<int>(i));
  return Congruence::from_classes(raw);
}

}  // namespace detail

/// Smallest congruence collapsing a and b: seed the pair and close under the
/// translations z∧· and z∨·, with transitivity handled by union-find.
inline Congruence principal_congruence(const PlanarLattice& L, int a, int b) {
  const int n = L.size();
  detail::DSU dsu(n);
  std::queue<std::pair<int, int>> work;
  auto merge = [&](int x, int y) {
    if (dsu.unite(x, y)) work.emplace(x, y);
  };
  merge(L.meet(a, b), L.join(a, b));
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop();
    for (int z = 0; z < n; ++z) {
      merge(L.meet(x, z), L.meet(y, z));
      merge(L.join(x, z), L.join(y, z));
    }
  }
  return detail::to_congruence(dsu);
}

inline Congruence join_congruence(const Congruence& a, const Congruence& b) {
  detail::DSU dsu(a.size());
  std::vector<int> first_a(a.block_count(), -1), first_b(b.block_count(), -1);
  for (int x = 0; x < a.size(); ++x) {
    int& fa = first_a[a.block_of(x)];
    if (fa < 0)
      fa = x;
    else
      dsu.unite(fa, x);
    int& fb = first_b[b.block_of(x)];
    if (fb < 0)
      fb = x;
    else
      dsu.unite(fb, x);
  }
  return detail::to_congruence(dsu);
}

inline Congruence meet_congruence(const Congruence& a, const Congruence& b) {
  std::vector<int> raw(a.size());
  std::map<std::pair<int, int>, int> remap;
  for (int x = 0; x < a.size(); ++x) {
    auto [it, fresh] =
        remap.emplace(std::make_pair(a.block_of(x), b.block_of(x)), static_cast<int>(remap.size()));
    raw[x] = it->second;
  }
  return Congruence::from_classes(raw);
}

/// Exhaustive compatibility test, plus the convexity/interval block shape that
/// congruence blocks of a finite lattice always have.
inline bool congruence_compatible(const PlanarLattice& L, const Congruence& c,
                                  std::string* why = nullptr) {
  const int n = L.size();
  if (c.size() != n) {
    if (why) *why = "partition size mismatch";
    return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!c.same(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!c.same(L.meet(x, z), L.meet(y, z)) || !c.same(L.join(x, z), L.join(y, z))) {
          if (why)
            *why = "translation by " + std::to_string(z) + " separates " + std::to_string(x) +
                   " ~ " + std::to_string(y);
          return false;
        }
      }
    }
  for (const auto& block : c.blocks()) {
    int lo = block.front(), hi = block.front();
    for (int x : block) {
      lo = L.meet(lo, x);
      hi = L.join(hi, x);
    }
    std::size_t interval = 0;
    for (int x = 0; x < n; ++x)
      if (L.leq(lo, x) && L.leq(x, hi)) ++interval;
    if (!c.same(lo, hi) || interval != block.size()) {
      if (why) *why = "a block is not an interval";
      return false;
    }
  }
  return true;
}

struct PrimeInterval {
  int lo = -1, hi = -1;
  friend bool operator==(const PrimeInterval& a, const PrimeInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator<(const PrimeInterval& a, const PrimeInterval& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  }
};

inline std::vector<PrimeInterval> prime_intervals(const PlanarLattice& L) {
  std::vector<PrimeInterval> out;
  for (int x = 0; x < L.size(); ++x)
    for (int y : L.up(x)) out.push_back({x, y});
  std::sort(out.begin(), out.end());
  return out;
}

/// The poset of join-irreducible congruences: the distinct principal
/// congruences of prime intervals, ordered by refinement.
struct JiPoset {
  std::vector<Congruence> elems;                 // sorted, deterministic
  std::vector<PrimeInterval> witness;            // one generating prime interval each
  std::vector<std::vector<char>> leq;            // refinement order
  std::vector<std::pair<int, int>> cover_pairs;  // (i, j) with elems[i] covered by elems[j]
  std::vector<int> cover_counts() const {
    std::vector<int> c(elems.size(), 0);
    for (auto& [lo, hi] : cover_pairs) (void)hi, ++c[lo];
    return c;
  }
  std::vector<int> maximal() const {
    std::vector<char> has_upper(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (i != j && leq[i][j]) has_upper[i] = 1;
    std::vector<int> out;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (!has_upper[i]) out.push_back(static_cast<int>(i));
    return out;
  }
};

inline JiPoset join_irreducible_congruences(const PlanarLattice& L) {
  std::map<Congruence, PrimeInterval> distinct;
  for (const auto& p : prime_intervals(L)) {
    Congruence c = principal_congruence(L, p.lo, p.hi);
    distinct.emplace(std::move(c), p);
  }
  JiPoset poset;
  for (auto& [c, p] : distinct) {
    poset.elems.push_back(c);
    poset.witness.push_back(p);
  }
  const std::size_t k = poset.elems.size();
  poset.leq.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      poset.leq[i][j] = poset.elems[i].refines(poset.elems[j]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !poset.leq[i][j]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < k && cover; ++z)
        if (z != i && z != j && poset.leq[i][z] && poset.leq[z][j]) cover = false;
      if (cover) poset.cover_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return poset;
}

struct ConLimits {
  int max_elements = 40;
  int max_join_irreducibles = 20;
};

/// Every congruence of L, as the join closure of the join-irreducible ones.
/// Sorted deterministically; guarded by the size caps.
inline std::vector<Congruence> all_congruences(const PlanarLattice& L, ConLimits caps = {}) {
  if (L.size() > caps.max_elements)
    fail(errc::too_large, "congruence lattice enumeration capped at " +
                              std::to_string(caps.max_elements) + " elements");
  const JiPoset ji = join_irreducible_congruences(L);
  if (static_cast<int>(ji.elems.size()) > caps.max_join_irreducibles)
    fail(errc::too_large, "more than " + std::to_string(caps.max_join_irreducibles) +
                              " join-irreducible congruences");
  std::set<Congruence> seen;
  std::queue<Congruence> work;
  auto push = [&](Congruence c) {
    if (seen.insert(c).second) work.push(std::move(c));
  };
  push(Congruence::identity(L.size()));
  while (!work.empty()) {
    Congruence cur = work.front();
    work.pop();
    for (const auto& g : ji.elems) push(join_congruence(cur, g));
  }
  return {seen.begin(), seen.end()};
}

/// The filter [delta, full] of Con L, enumerated directly: every congruence
/// above delta is the join of delta with the join-irreducibles below it, so a
/// join closure seeded at delta covers the whole interval. Stops with a
/// TooLarge error past the cap.
inline std::vector<Congruence> congruence_filter_above(const PlanarLattice& L,
                                                       const Congruence& delta,
                                                       std::size_t max_size) {
  const JiPoset ji = join_irreducible_congruences(L);
  std::set<Congruence> seen;
  std::queue<Congruence> work;
  auto push = [&](Congruence c) {
    if (seen.insert(c).second) work.push(std::move(c));
  };
  push(delta);
  while (!work.empty()) {
    if (seen.size() > max_size)
      fail(errc::too_large, "congruence filter exceeded " + std::to_string(max_size));
    Congruence cur = work.front();
    work.pop();
    for (const auto& g : ji.elems) push(join_congruence(cur, g));
  }
  return {seen.begin(), seen.end()};
}

/// Coatoms of Con L: one for each maximal join-irreducible congruence g, namely
/// the join of all join-irreducibles not above g. Needs no full enumeration.
inline std::vector<Congruence> dual_atoms(const PlanarLattice& L) {
  const JiPoset ji = join_irreducible_congruences(L);
  std::vector<Congruence> out;
  for (int mi : ji.maximal()) {
    Congruence acc = Congruence::identity(L.size());
    for (std::size_t j = 0; j < ji.elems.size(); ++j)
      if (!ji.leq[mi][j]) acc = join_congruence(acc, ji.elems[j]);
    out.push_back(std::move(acc));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of downsets of the join-irreducible poset (Birkhoff count).
inline std::uint64_t count_downsets(const JiPoset& ji) {
  const int k = static_cast<int>(ji.elems.size());
  if (k > 63) fail(errc::too_large, "downset counting capped at 63 join-irreducibles");
  std::map<std::uint64_t, std::uint64_t> memo;
  const std::uint64_t all = k == 64 ? ~0ull : (1ull << k) - 1;
  auto rec = [&](auto&& self, std::uint64_t alive) -> std::uint64_t {
    if (!alive) return 1;
    auto it = memo.find(alive);
    if (it != memo.end()) return it->second;
    const int x = __builtin_ctzll(alive);
    std::uint64_t upx = 0, downx = 0;
    for (int j = 0; j < k; ++j) {
      if (!(alive & (1ull << j))) continue;
      if (ji.leq[x][j]) upx |= 1ull << j;
      if (ji.leq[j][x]) downx |= 1ull << j;
    }
    const std::uint64_t r = self(self, alive & ~upx) + self(self, alive & ~downx);
    memo.emplace(alive, r);
    return r;
  };
  return rec(rec, all);
}

/// Quotient lattice L/theta on the blocks, as an abstract cover diagram.
/// Blocks are numbered by their smallest member; the embedding order of the
/// result carries no geometric meaning.
inline PlanarLattice quotient(const PlanarLattice& L, const Congruence& theta) {
  const auto blocks = theta.blocks();
  const int k = theta.block_count();
  std::vector<int> rep(k);
  for (int b = 0; b < k; ++b) {
    int lo = blocks[b].front();
    for (int x : blocks[b]) lo = L.meet(lo, x);
    rep[b] = lo;
  }
  std::vector<std::vector<char>> le(k, std::vector<char>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      le[a][b] = theta.block_of(L.join(rep[a], rep[b])) == theta.block_of(rep[b]);
  std::vector<std::vector<int>> up(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !le[a][b]) continue;
      bool cover = true;
      for (int z = 0; z < k && cover; ++z)
        if (z != a && z != b && le[a][z] && le[z][b]) cover = false;
      if (cover) up[a].push_back(b);
    }
  return build_diagram(std::move(up));
}

inline bool is_prime_congruence(const Congruence& c) { return c.block_count() == 2; }

/// The two-block congruence with classes P and L \ P, for a prime ideal P.
inline Congruence prime_congruence_of(const PlanarLattice& L, const std::vector<int>& ideal) {
  const int n = L.size();
  std::vector<char> in(n, 0);
  for (int x : ideal) {
    if (x < 0 || x >= n) fail(errc::not_prime_ideal, "ideal references an unknown element");
    in[x] = 1;
  }
  int inside = 0;
  for (int x = 0; x < n; ++x) inside += in[x];
  if (inside == 0 || inside == n)
    fail(errc::not_prime_ideal, "a prime ideal is a proper nonempty subset");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (in[x] && L.leq(y, x) && !in[y])
        fail(errc::not_prime_ideal, "set is not down-closed at " + std::to_string(y));
      if (in[x] && in[y] && !in[L.join(x, y)])
        fail(errc::not_prime_ideal, "set is not join-closed");
      if (!in[x] && !in[y] && in[L.meet(x, y)])
        fail(errc::not_prime_ideal, "complement is not meet-closed");
    }
  std::vector<int> raw(n);
  for (int x = 0; x < n; ++x) raw[x] = in[x] ? 0 : 1;
  Congruence c = Congruence::from_classes(raw);
  std::string why;
  if (!congruence_compatible(L, c, &why))
    fail(errc::not_prime_ideal, "induced partition is not a congruence: " + why);
  return c;
}

inline Congruence prime_congruence_below(const PlanarLattice& L, int a) {
  std::vector<int> ideal;
  for (int x = 0; x < L.size(); ++x)
    if (L.leq(x, a)) ideal.push_back(x);
  return prime_congruence_of(L, ideal);
}

/// Brute-force distributivity test.
inline bool is_distributive(const PlanarLattice& L) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

/// The least congruence with a distributive quotient, computed along distinct
/// routes and cross-checked on every call:
///   - the congruence generated by all distributivity defect pairs
///     (x ^ (y v z), (x ^ y) v (x ^ z)) -- a quotient is distributive exactly
///     when it collapses every such pair;
///   - the meet of the dual atoms whose quotient is the two-element chain;
///   - on small lattices additionally the minimum over all congruences with a
///     distributive quotient, by exhaustive scan.
inline Congruence least_distributive_congruence(const PlanarLattice& L, ConLimits caps = {}) {
  const int n = L.size();
  detail::DSU dsu(n);
  std::queue<std::pair<int, int>> work;
  auto merge = [&](int x, int y) {
    if (dsu.unite(x, y)) work.emplace(x, y);
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y; z < n; ++z)
        merge(L.meet(x, L.join(y, z)), L.join(L.meet(x, y), L.meet(x, z)));
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop();
    for (int z = 0; z < n; ++z) {
      merge(L.meet(x, z), L.meet(y, z));
      merge(L.join(x, z), L.join(y, z));
    }
  }
  const Congruence by_defects = detail::to_congruence(dsu);
  if (!is_distributive(quotient(L, by_defects)))
    fail(errc::check_failed, "defect closure did not reach a distributive quotient");

  Congruence by_formula = Congruence::full(n);
  for (const auto& da : dual_atoms(L))
    if (da.block_count() == 2) by_formula = meet_congruence(by_formula, da);
  if (!(by_formula == by_defects))
    fail(errc::check_failed,
         "meet of two-block dual atoms differs from the least distributive-quotient congruence");

  if (n <= caps.max_elements) {
    bool scan_ok = true;
    std::vector<Congruence> all;
    try {
      all = all_congruences(L, caps);
    } catch (const Error&) {
      scan_ok = false;  // past the join-irreducible cap; skip the scan route
    }
    if (scan_ok) {
      Congruence by_scan = Congruence::full(n);
      bool any = false;
      for (const auto& c : all) {
        if (!is_distributive(quotient(L, c))) continue;
        by_scan = any ? meet_congruence(by_scan, c) : c;
        any = true;
      }
      if (!any || !(by_scan == by_defects))
        fail(errc::check_failed, "exhaustive scan disagrees on the least distributive quotient");
    }
  }
  return by_defects;
}

/// Aggregated congruence data of one lattice, with the structural facts that
/// hold for every finite lattice re-checked on construction: Con L is
/// distributive (so the Birkhoff downset count matches), the join-irreducible
/// congruences are exactly the distinct principal congruences of prime
/// intervals, and the dual atoms correspond to the maximal join-irreducibles.
struct ConSummary {
  JiPoset join_irreducibles;
  std::vector<Congruence> all;         // the whole of Con L, sorted
  std::vector<Congruence> dual_atoms;  // coatoms of Con L
  int t_expected = -1;                 // boundary t when rectangular, else -1
};

inline ConSummary con_summary(const PlanarLattice& L, ConLimits caps = {}) {
  ConSummary s;
  s.join_irreducibles = join_irreducible_congruences(L);
  s.all = all_congruences(L, caps);
  s.dual_atoms = slimlat::dual_atoms(L);
  if (auto p = try_rectangular_profile(L)) s.t_expected = p->t_len;

  if (count_downsets(s.join_irreducibles) != s.all.size())
    fail(errc::check_failed, "congruence lattice is not distributive");
  if (s.dual_atoms.size() != s.join_irreducibles.maximal().size())
    fail(errc::check_failed, "dual atoms do not correspond to the maximal join-irreducibles");
  for (const auto& da : s.dual_atoms)
    if (!std::binary_search(s.all.begin(), s.all.end(), da))
      fail(errc::check_failed, "a dual atom is missing from the congruence list");
  for (const auto& g : s.join_irreducibles.elems) {
    // Exactly one lower cover within Con L.
    int lower_covers = 0;
    for (const auto& c : s.all) {
      if (!(c.refines(g)) || c == g) continue;
      bool covered = true;
      for (const auto& z : s.all)
        if (!(z == c) && !(z == g) && c.refines(z) && z.refines(g)) covered = false;
      lower_covers += covered;
    }
    if (lower_covers != 1)
      fail(errc::check_failed, "a principal congruence of a prime interval is not join-irreducible");
  }
  return s;
}

struct ConLattice {
  std::vector<Congruence> nodes;  // node i of the diagram is nodes[i]
  PlanarLattice lattice;          // Con L as an abstract lattice
};

/// Con L as an abstract lattice over the sorted congruence list.
inline ConLattice congruence_lattice(const PlanarLattice& L, ConLimits caps = {}) {
  auto nodes = all_congruences(L, caps);
  const int k = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> up(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b || !nodes[a].refines(nodes[b])) continue;
      bool cover = true;
      for (int z = 0; z < k && cover; ++z)
        if (z != a && z != b && nodes[a].refines(nodes[z]) && nodes[z].refines(nodes[b]))
          cover = false;
      if (cover) up[a].push_back(b);
    }
  return ConLattice{std::move(nodes), build_diagram(std::move(up))};
}

}  // namespace slimlat

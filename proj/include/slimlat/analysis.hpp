#pragma once

#include <chrono>
#include <cstdio>

#include "slimlat/congruence.hpp"
#include "slimlat/construction.hpp"

namespace slimlat {

// ---------------------------------------------------------------------------
// Perspectivity and swings
// ---------------------------------------------------------------------------

/// [a,b] transposes up to [c,d]: b v c = d and b ^ c = a.
inline bool up_perspective(const PlanarLattice& L, const PrimeInterval& p,
                           const PrimeInterval& q) {
  return L.join(p.hi, q.lo) == q.hi && L.meet(p.hi, q.lo) == p.lo;
}

inline bool down_perspective(const PlanarLattice& L, const PrimeInterval& p,
                             const PrimeInterval& q) {
  return up_perspective(L, q, p);
}

/// p swings to q: same top, the top covers at least three elements, and the
/// bottom of q is neither the leftmost nor the rightmost of them.
inline bool swings_to(const PlanarLattice& L, const PrimeInterval& p, const PrimeInterval& q) {
  if (p.hi != q.hi) return false;
  const auto& ds = L.down(p.hi);
  if (ds.size() < 3) return false;
  return q.lo != ds.front() && q.lo != ds.back();
}

/// All swing pairs (p, q), p != q, in prime-interval order.
inline std::vector<std::pair<PrimeInterval, PrimeInterval>> swings(const PlanarLattice& L) {
  const auto ps = prime_intervals(L);
  std::vector<std::pair<PrimeInterval, PrimeInterval>> out;
  for (const auto& p : ps)
    for (const auto& q : ps)
      if (!(p == q) && swings_to(L, p, q)) out.emplace_back(p, q);
  return out;
}

namespace detail {

/// Per-source swing reachability: BFS over "down-perspective or swing" steps
/// from every up-perspective image of p. BFS parent paths are simple, so the
/// pairwise-distinctness requirement on witness sequences holds by
/// construction, and each step keeps the interval top from rising.
struct SwingSearch {
  const PlanarLattice& L;
  std::vector<PrimeInterval> ps;
  std::vector<std::vector<int>> step;  // r -> intervals reachable in one step

  explicit SwingSearch(const PlanarLattice& lat) : L(lat), ps(prime_intervals(lat)) {
    const int k = static_cast<int>(ps.size());
    step.assign(k, {});
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) {
        if (r == s) continue;
        if (down_perspective(L, ps[r], ps[s]) || swings_to(L, ps[r], ps[s]))
          step[r].push_back(s);
      }
  }

  int index_of(const PrimeInterval& p) const {
    auto it = std::lower_bound(ps.begin(), ps.end(), p);
    if (it == ps.end() || !(*it == p)) fail(errc::check_failed, "not a prime interval");
    return static_cast<int>(it - ps.begin());
  }

  /// parent[i] = predecessor interval index, or -2 for a BFS source, -1 unseen.
  std::vector<int> reach_from(int p) const {
    const int k = static_cast<int>(ps.size());
    std::vector<int> parent(k, -1);
    std::vector<int> queue;
    for (int r = 0; r < k; ++r)
      if (up_perspective(L, ps[p], ps[r])) {
        parent[r] = -2;
        queue.push_back(r);
      }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int r = queue[head];
      for (int s : step[r])
        if (parent[s] == -1) {
          parent[s] = r;
          queue.push_back(s);
        }
    }
    return parent;
  }

  std::vector<PrimeInterval> path_to(const std::vector<int>& parent, int q) const {
    std::vector<PrimeInterval> seq;
    for (int cur = q; cur != -2; cur = parent[cur]) seq.push_back(ps[cur]);
    std::reverse(seq.begin(), seq.end());
    return seq;
  }
};

inline bool valid_swing_witness(const PlanarLattice& L, const PrimeInterval& p,
                                const std::vector<PrimeInterval>& seq) {
  if (seq.empty()) return false;
  if (!up_perspective(L, p, seq.front())) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] == seq[j]) return false;
    if (i + 1 < seq.size()) {
      if (!down_perspective(L, seq[i], seq[i + 1]) && !swings_to(L, seq[i], seq[i + 1]))
        return false;
      if (!L.leq(seq[i + 1].hi, seq[i].hi)) return false;  // tops never rise
    }
  }
  return true;
}

}  // namespace detail

/// A witness sequence r_0, ..., r_n with p up-perspective to r_0, each step a
/// down-perspectivity or a swing, all intervals distinct, and r_n = q; or
/// nothing when q is unreachable. swing_reachable(p, p) holds with the
/// one-element sequence (p).
inline std::optional<std::vector<PrimeInterval>> swing_reachable(const PlanarLattice& L,
                                                                 const PrimeInterval& p,
                                                                 const PrimeInterval& q) {
  detail::SwingSearch search(L);
  const int pi = search.index_of(p), qi = search.index_of(q);
  const auto parent = search.reach_from(pi);
  if (parent[qi] == -1) return std::nullopt;
  auto seq = search.path_to(parent, qi);
  if (!detail::valid_swing_witness(L, p, seq))
    fail(errc::check_failed, "swing search produced an invalid witness");
  return seq;
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

/// Outcome of one executable check. The witness is nonempty exactly when the
/// check failed.
struct CheckReport {
  std::string name;
  std::string lattice_key;
  bool pass = true;
  std::string witness;
  double millis = 0.0;
};

namespace detail {

template <class F>
CheckReport timed_check(const std::string& name, const std::string& key, F body) {
  CheckReport r;
  r.name = name;
  r.lattice_key = key;
  const auto t0 = std::chrono::steady_clock::now();
  std::string witness;
  r.pass = body(witness);
  r.witness = r.pass ? std::string{} : witness;
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string interval_str(const PrimeInterval& p) {
  return "[" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "]";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Prime ideals
// ---------------------------------------------------------------------------

/// Elements a != 1 whose principal ideal is prime, by the brute-force
/// definition: the complement of the down-set must be closed under meets.
inline std::vector<int> prime_ideals(const PlanarLattice& L) {
  std::vector<int> out;
  const int n = L.size();
  for (int a = 0; a < n; ++a) {
    if (a == L.top()) continue;
    bool prime = true;
    for (int x = 0; x < n && prime; ++x) {
      if (L.leq(x, a)) continue;
      for (int y = x; y < n && prime; ++y) {
        if (L.leq(y, a)) continue;
        if (L.leq(L.meet(x, y), a)) prime = false;
      }
    }
    if (prime) out.push_back(a);
  }
  return out;
}

/// On a slim rectangular lattice the prime ideals are exactly the principal
/// ideals of non-top upper-boundary elements; any discrepancy fails the check.
inline CheckReport check_prime_ideals(const PlanarLattice& L, const std::string& key) {
  return detail::timed_check("prime-ideals", key, [&](std::string& w) {
    const auto profile = rectangular_profile(L);
    std::vector<int> expected;
    for (int x : profile.upper_left)
      if (x != L.top()) expected.push_back(x);
    for (int x : profile.upper_right)
      if (x != L.top()) expected.push_back(x);
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    const auto actual = prime_ideals(L);
    if (actual == expected) return true;
    w = "prime ideals differ from the non-top upper-boundary elements";
    return false;
  });
}

// ---------------------------------------------------------------------------
// Dual-atom theorem
// ---------------------------------------------------------------------------

/// For a slim rectangular lattice: Con L has exactly t = length[c_l,1] +
/// length[c_r,1] dual atoms, each with exactly two blocks, and the filter above
/// their meet is Boolean with 2^t elements.
inline CheckReport check_theorem_main(const PlanarLattice& L, const std::string& key) {
  return detail::timed_check("dual-atoms", key, [&](std::string& w) {
    const auto profile = rectangular_profile(L);
    const int t = profile.t_len;
    const auto das = dual_atoms(L);
    if (static_cast<int>(das.size()) != t) {
      w = "expected " + std::to_string(t) + " dual atoms, found " + std::to_string(das.size());
      return false;
    }
    for (const auto& da : das)
      if (da.block_count() != 2) {
        w = "a dual atom has " + std::to_string(da.block_count()) + " blocks";
        return false;
      }
    if (t > 20) {
      w = "top filter too large to verify";
      return false;
    }
    Congruence bottom = Congruence::full(L.size());
    for (const auto& da : das) bottom = meet_congruence(bottom, da);
    std::vector<Congruence> filter;
    try {
      filter = congruence_filter_above(L, bottom, (std::size_t{1} << t) + 1);
    } catch (const Error& e) {
      w = e.what();
      return false;
    }
    if (filter.size() != (std::size_t{1} << t)) {
      w = "filter above the meet of the dual atoms has " + std::to_string(filter.size()) +
          " elements, expected 2^" + std::to_string(t);
      return false;
    }
    // The filter is Boolean iff theta <-> { dual atoms above theta } is an
    // order anti-isomorphism onto the powerset.
    std::vector<std::uint64_t> mask(filter.size(), 0);
    std::set<std::uint64_t> distinct;
    for (std::size_t i = 0; i < filter.size(); ++i) {
      for (std::size_t d = 0; d < das.size(); ++d)
        if (filter[i].refines(das[d])) mask[i] |= std::uint64_t{1} << d;
      distinct.insert(mask[i]);
    }
    if (distinct.size() != filter.size()) {
      w = "two filter congruences lie below the same dual atoms";
      return false;
    }
    for (std::size_t i = 0; i < filter.size(); ++i)
      for (std::size_t j = 0; j < filter.size(); ++j) {
        const bool le = filter[i].refines(filter[j]);
        const bool superset = (mask[i] & mask[j]) == mask[j];
        if (le != superset) {
          w = "top filter is not Boolean";
          return false;
        }
      }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Swing Lemma
// ---------------------------------------------------------------------------

/// For all prime-interval pairs (p, q): q is collapsed by con(p) iff q is
/// swing-reachable from p; every witness is re-validated against the
/// distinctness and monotone-top conditions.
inline CheckReport check_swing_lemma(const PlanarLattice& L, const std::string& key) {
  return detail::timed_check("swing-lemma", key, [&](std::string& w) {
    detail::SwingSearch search(L);
    const auto& ps = search.ps;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const Congruence con = principal_congruence(L, ps[i].lo, ps[i].hi);
      const auto parent = search.reach_from(static_cast<int>(i));
      for (std::size_t j = 0; j < ps.size(); ++j) {
        const bool collapsed = con.same(ps[j].lo, ps[j].hi);
        bool reachable = i == j || parent[j] != -1;
        if (i != j && parent[j] != -1) {
          const auto seq = search.path_to(parent, static_cast<int>(j));
          if (!detail::valid_swing_witness(L, ps[i], seq)) {
            w = "invalid witness for " + detail::interval_str(ps[i]) + " -> " +
                detail::interval_str(ps[j]);
            return false;
          }
        }
        if (collapsed != reachable) {
          w = detail::interval_str(ps[i]) + " -> " + detail::interval_str(ps[j]) +
              (collapsed ? ": collapsed but not swing-reachable" : ": swing-reachable but not collapsed");
          return false;
        }
      }
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Two-cover property
// ---------------------------------------------------------------------------

/// Every join-irreducible congruence has at most two covers in the
/// join-irreducible order.
inline CheckReport check_two_cover(const PlanarLattice& L, const std::string& key) {
  return detail::timed_check("two-cover", key, [&](std::string& w) {
    const auto ji = join_irreducible_congruences(L);
    std::vector<int> covers(ji.elems.size(), 0);
    for (const auto& [lo, hi] : ji.cover_pairs) (void)hi, ++covers[lo];
    for (std::size_t i = 0; i < covers.size(); ++i)
      if (covers[i] > 2) {
        w = "join-irreducible congruence " + std::to_string(i) + " has " +
            std::to_string(covers[i]) + " covers";
        return false;
      }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Meet-semidistributivity
// ---------------------------------------------------------------------------

struct MeetSdWitness {
  int x, y, z;
};

inline std::optional<MeetSdWitness> meet_sd_witness(const PlanarLattice& L) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int m = L.meet(x, y);
        if (m == L.meet(x, z) && m != L.meet(x, L.join(y, z)))
          return MeetSdWitness{x, y, z};
      }
  return std::nullopt;
}

inline bool is_meet_semidistributive(const PlanarLattice& L) { return !meet_sd_witness(L); }

inline CheckReport check_meet_sd(const PlanarLattice& L, const std::string& key) {
  return detail::timed_check("meet-semidistributivity", key, [&](std::string& w) {
    if (auto wit = meet_sd_witness(L)) {
      w = "SD-meet fails at (" + std::to_string(wit->x) + ", " + std::to_string(wit->y) + ", " +
          std::to_string(wit->z) + ")";
      return false;
    }
    return true;
  });
}

/// A nontrivial meet-semidistributive lattice has the two-element chain as a
/// homomorphic image, i.e. some congruence with exactly two blocks.
inline CheckReport check_c2_quotient(const PlanarLattice& L, const std::string& key) {
  return detail::timed_check("c2-quotient", key, [&](std::string& w) {
    if (L.size() < 2) return true;  // vacuous for the one-element lattice
    for (const auto& da : dual_atoms(L))
      if (da.block_count() == 2) return true;
    w = "no two-block congruence exists";
    return false;
  });
}

/// For a meet-semidistributive lattice: the meet of all dual atoms is the
/// least congruence with a distributive quotient, and every dual atom has a
/// two-element quotient.
inline CheckReport check_theorem_main_prime(const PlanarLattice& L, const std::string& key,
                                            ConLimits caps = {}) {
  return detail::timed_check("least-distributive", key, [&](std::string& w) {
    const auto das = dual_atoms(L);
    for (const auto& da : das)
      if (da.block_count() != 2) {
        w = "a dual atom has a quotient with " + std::to_string(da.block_count()) + " elements";
        return false;
      }
    Congruence meet_all = Congruence::full(L.size());
    for (const auto& da : das) meet_all = meet_congruence(meet_all, da);
    Congruence least;
    try {
      least = least_distributive_congruence(L, caps);
    } catch (const Error& e) {
      w = e.what();
      return false;
    }
    if (!(meet_all == least)) {
      w = "meet of the dual atoms is not the least distributive-quotient congruence";
      return false;
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Ladders between adjacent congruence blocks
// ---------------------------------------------------------------------------

/// Facing maximal chains between blocks A < B adjacent in L/theta, with the
/// rung maps x -> x v 0_B and y -> y ^ 1_A inverse to each other.
struct Ladder {
  int block_a = -1, block_b = -1;
  std::vector<int> chain_a, chain_b;
  bool singleton = false;
};

namespace detail {

inline std::optional<std::vector<int>> monotone_chain(const PlanarLattice& L, int from, int to,
                                                      bool rightmost) {
  std::vector<int> chain{from};
  while (chain.back() != to) {
    int next = -1;
    const auto& ups = L.up(chain.back());
    if (rightmost) {
      for (auto it = ups.rbegin(); it != ups.rend(); ++it)
        if (L.leq(*it, to)) {
          next = *it;
          break;
        }
    } else {
      for (int u : ups)
        if (L.leq(u, to)) {
          next = u;
          break;
        }
    }
    if (next < 0) return std::nullopt;
    chain.push_back(next);
  }
  return chain;
}

inline bool galois_properties(const PlanarLattice& L, const Congruence& theta, int block_a,
                              int block_b, int top_a, int bot_b, std::string& w) {
  for (int x = 0; x < L.size(); ++x) {
    if (theta.block_of(x) == block_a) {
      const int xb = L.join(x, bot_b);
      int least = -1;
      for (int y = 0; y < L.size(); ++y)
        if (theta.block_of(y) == block_b && L.leq(x, y) && (least < 0 || L.leq(y, least)))
          least = y;
      if (least != xb) {
        w = "x v 0_B is not the least element of B above x = " + std::to_string(x);
        return false;
      }
      const int xba = L.meet(xb, top_a);
      int greatest = -1;
      for (int z = 0; z < L.size(); ++z)
        if (theta.block_of(z) == block_a && L.leq(z, xb) && (greatest < 0 || L.leq(greatest, z)))
          greatest = z;
      if (greatest != xba || !L.covers(xba, xb)) {
        w = "Galois neighbour of " + std::to_string(xb) + " in A is wrong or not a lower cover";
        return false;
      }
    } else if (theta.block_of(x) == block_b) {
      const int xa = L.meet(x, top_a);
      int greatest = -1;
      for (int z = 0; z < L.size(); ++z)
        if (theta.block_of(z) == block_a && L.leq(z, x) && (greatest < 0 || L.leq(greatest, z)))
          greatest = z;
      if (greatest != xa) {
        w = "y ^ 1_A is not the greatest element of A below y = " + std::to_string(x);
        return false;
      }
    }
  }
  return true;
}

inline bool try_ladder_side(const PlanarLattice& L, const Congruence& theta, int block_b, int a0,
                            int top_a, int bot_b, bool rightmost, Ladder& out) {
  const auto chain = monotone_chain(L, a0, top_a, rightmost);
  if (!chain) return false;
  std::vector<int> chain_b;
  for (int a : *chain) chain_b.push_back(L.join(a, bot_b));
  if (chain_b.front() != bot_b || chain_b.back() != L.join(top_a, bot_b)) return false;
  for (std::size_t i = 0; i < chain->size(); ++i) {
    if (theta.block_of(chain_b[i]) != block_b) return false;
    if (!L.covers((*chain)[i], chain_b[i])) return false;         // rungs are prime
    if (L.meet(chain_b[i], top_a) != (*chain)[i]) return false;   // inverse map
    if (i + 1 < chain->size()) {
      if (!L.covers(chain_b[i], chain_b[i + 1])) return false;
      // consecutive steps of the two chains are up-perspective
      if (L.join((*chain)[i + 1], chain_b[i]) != chain_b[i + 1]) return false;
      if (L.meet((*chain)[i + 1], chain_b[i]) != (*chain)[i]) return false;
    }
  }
  out.chain_a = *chain;
  out.chain_b = std::move(chain_b);
  return true;
}

}  // namespace detail

/// Ladders of all covering block pairs of L/theta. Throws CheckFailed when a
/// ladder cannot be validated; use check_ladders for a reporting variant.
inline std::vector<Ladder> ladders(const PlanarLattice& L, const Congruence& theta) {
  std::vector<Ladder> out;
  const PlanarLattice q = quotient(L, theta);
  const auto blocks = theta.blocks();
  // Block b of theta is element b of the quotient: both are numbered by first
  // occurrence, which is the order quotient() uses.
  for (int a = 0; a < q.size(); ++a)
    for (int b : q.up(a)) {
      Ladder ladder;
      ladder.block_a = a;
      ladder.block_b = b;
      int top_a = blocks[a].front(), bot_b = blocks[b].front();
      for (int x : blocks[a]) top_a = L.join(top_a, x);
      for (int x : blocks[b]) bot_b = L.meet(bot_b, x);
      std::string why;
      if (L.leq(top_a, bot_b)) {
        if (!L.covers(top_a, bot_b))
          fail(errc::check_failed, "comparable adjacent blocks without a covering rung");
        ladder.singleton = true;
        ladder.chain_a = {top_a};
        ladder.chain_b = {bot_b};
      } else {
        const int a0 = L.meet(top_a, bot_b);
        if (theta.block_of(a0) != a || !L.covers(a0, bot_b))
          fail(errc::check_failed, "ladder foot is not a covering pair into B");
        if (!detail::try_ladder_side(L, theta, b, a0, top_a, bot_b, true, ladder) &&
            !detail::try_ladder_side(L, theta, b, a0, top_a, bot_b, false, ladder))
          fail(errc::check_failed, "no boundary chain of A lifts to a ladder");
      }
      std::string w;
      if (!detail::galois_properties(L, theta, a, b, top_a, bot_b, w))
        fail(errc::check_failed, w);
      out.push_back(std::move(ladder));
    }
  return out;
}

/// Runs the ladder construction for every join-irreducible congruence.
inline CheckReport check_ladders(const PlanarLattice& L, const std::string& key) {
  return detail::timed_check("ladders", key, [&](std::string& w) {
    for (const auto& theta : join_irreducible_congruences(L).elems) {
      try {
        (void)ladders(L, theta);
      } catch (const Error& e) {
        w = e.what();
        return false;
      }
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Structural suite over a construction script
// ---------------------------------------------------------------------------

namespace detail {

inline bool boundary_sets_ok(const PlanarLattice& L, const BoundaryProfile& p, std::string& w) {
  auto set_of = [](const std::vector<int>& xs) { return std::set<int>(xs.begin(), xs.end()); };
  auto ideal_of = [&L](int a) {
    std::set<int> s;
    for (int x = 0; x < L.size(); ++x)
      if (L.leq(x, a)) s.insert(x);
    return s;
  };
  auto filter_of = [&L](int a) {
    std::set<int> s;
    for (int x = 0; x < L.size(); ++x)
      if (L.leq(a, x)) s.insert(x);
    return s;
  };
  if (set_of(p.lower_left) != ideal_of(p.c_l) || set_of(p.lower_right) != ideal_of(p.c_r)) {
    w = "a lower boundary chain is not the ideal below its corner";
    return false;
  }
  if (set_of(p.upper_left) != filter_of(p.c_l) || set_of(p.upper_right) != filter_of(p.c_r)) {
    w = "an upper boundary chain is not the filter above its corner";
    return false;
  }
  const auto ur = set_of(p.upper_right), ul = set_of(p.upper_left);
  for (int x = 0; x < L.size(); ++x) {
    if (!ur.count(L.join(x, p.c_r)) || !ul.count(L.join(x, p.c_l))) {
      w = "join with a corner left the corresponding upper boundary at x = " + std::to_string(x);
      return false;
    }
  }
  const int d_lower = L.interval_length(L.bottom(), p.c_l) - L.interval_length(L.bottom(), p.c_r);
  const int d_upper = L.interval_length(p.c_r, L.top()) - L.interval_length(p.c_l, L.top());
  if (d_lower != d_upper) {
    w = "boundary length identity fails";
    return false;
  }
  return true;
}

}  // namespace detail

/// Replays a script, asserting after every step: corner stability, upper
/// boundary preservation, lower boundary growth by exactly one per side, the
/// boundary length identity, and the ideal/filter boundary properties.
inline CheckReport structural_suite(const CzedliSchmidtSequence& seq, const std::string& key) {
  return detail::timed_check("structural-suite", key, [&](std::string& w) {
    PlanarLattice L = make_grid(seq.p, seq.q);
    auto profile = rectangular_profile(L);
    if (!detail::boundary_sets_ok(L, profile, w)) {
      w = "grid: " + w;
      return false;
    }
    for (std::size_t i = 0; i < seq.forks.size(); ++i) {
      PlanarLattice next = [&] {
        try {
          return insert_fork(L, seq.forks[i]);
        } catch (const Error& e) {
          w = "step " + std::to_string(i + 1) + ": " + e.what();
          return L;
        }
      }();
      if (!w.empty()) return false;
      const auto after = rectangular_profile(next);
      const auto step = [&](const std::string& msg) {
        w = "step " + std::to_string(i + 1) + ": " + msg;
        return false;
      };
      if (after.c_l != profile.c_l || after.c_r != profile.c_r) return step("corner moved");
      if (after.upper_left != profile.upper_left || after.upper_right != profile.upper_right)
        return step("upper boundary changed");
      if (after.lower_left.size() != profile.lower_left.size() + 1 ||
          after.lower_right.size() != profile.lower_right.size() + 1)
        return step("lower boundary growth is not one element per side");
      if (!is_semimodular(next) || !is_slim(next))
        return step("slimness or semimodularity lost");
      std::string why;
      if (!detail::boundary_sets_ok(next, after, why)) return step(why);
      L = std::move(next);
      profile = after;
    }
    return true;
  });
}

// ---------------------------------------------------------------------------
// Representability search
// ---------------------------------------------------------------------------

struct SearchOutcome {
  bool found = false;
  std::string witness_canon;      // canonical form of the carrier lattice
  CzedliSchmidtSequence witness_seq;
  int witness_size = 0;
  // Exhaustion certificate: the exact finite range that was covered.
  EnumerationLimits bounds;
  std::size_t corpus_size = 0;
  std::string corpus_hash;
};

/// Scans all slim rectangular lattices within the bounds for one whose
/// congruence lattice is isomorphic to the target. A negative answer comes
/// with a certificate recording the searched range.
inline SearchOutcome representability_search(const PlanarLattice& target,
                                             const EnumerationLimits& bounds) {
  SearchOutcome out;
  out.bounds = bounds;
  const std::string target_canon = canonical_form(target);
  std::uint64_t h = 1469598103934665603ull;
  const auto corpus = enumerate_slim_rectangular(bounds);
  out.corpus_size = corpus.size();
  for (const auto& e : corpus) {
    for (unsigned char c : e.canon) {
      h ^= c;
      h *= 1099511628211ull;
    }
    if (out.found) continue;
    const auto con = congruence_lattice(e.lattice);
    if (con.lattice.size() != target.size()) continue;
    if (canonical_form(con.lattice) == target_canon) {
      out.found = true;
      out.witness_canon = e.canon;
      out.witness_seq = e.seq;
      out.witness_size = e.lattice.size();
    }
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  out.corpus_hash = buf;
  return out;
}

// ---------------------------------------------------------------------------
// The full battery
// ---------------------------------------------------------------------------

/// Every lemma/theorem check on one slim rectangular lattice; the structural
/// suite is included when the construction script is known. The first report
/// failing means the input is outside the battery's scope.
inline std::vector<CheckReport> run_check_battery(const PlanarLattice& L,
                                                  const CzedliSchmidtSequence* seq = nullptr) {
  const std::string key = canonical_key(L);
  std::vector<CheckReport> out;
  out.push_back(detail::timed_check("slim-rectangular", key, [&](std::string& w) {
    if (auto v = sps_violation(L)) {
      w = *v;
      return false;
    }
    if (!try_rectangular_profile(L)) {
      w = "lattice is not rectangular";
      return false;
    }
    return true;
  }));
  if (!out.back().pass) return out;
  if (seq) out.push_back(structural_suite(*seq, key));
  out.push_back(check_theorem_main(L, key));
  out.push_back(check_prime_ideals(L, key));
  out.push_back(check_swing_lemma(L, key));
  out.push_back(check_two_cover(L, key));
  out.push_back(check_meet_sd(L, key));
  out.push_back(check_c2_quotient(L, key));
  out.push_back(check_theorem_main_prime(L, key));
  out.push_back(check_ladders(L, key));
  return out;
}

}  // namespace slimlat

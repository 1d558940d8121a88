#pragma once

// Brute-force reference implementations, independent of the library's code
// paths. Everything here is recomputed from raw cover lists: reachability by
// relaxation, meets and joins by scanning bound sets, congruences by filtering
// all set partitions. Slow on purpose; used to pin expected values.

#include <optional>
#include <set>
#include <vector>

namespace oracle {

struct Tables {
  int n = 0;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<int>> meet, join;  // -1 where no unique bound exists
  bool is_lattice = true;
};

inline Tables tables(const std::vector<std::vector<int>>& up) {
  Tables t;
  t.n = static_cast<int>(up.size());
  t.leq.assign(t.n, std::vector<char>(t.n, 0));
  for (int x = 0; x < t.n; ++x) {
    t.leq[x][x] = 1;
    for (int y : up[x]) t.leq[x][y] = 1;
  }
  for (int k = 0; k < t.n; ++k)
    for (int x = 0; x < t.n; ++x)
      for (int y = 0; y < t.n; ++y)
        if (t.leq[x][k] && t.leq[k][y]) t.leq[x][y] = 1;

  t.meet.assign(t.n, std::vector<int>(t.n, -1));
  t.join.assign(t.n, std::vector<int>(t.n, -1));
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      std::vector<int> lower, upper;
      for (int z = 0; z < t.n; ++z) {
        if (t.leq[z][x] && t.leq[z][y]) lower.push_back(z);
        if (t.leq[x][z] && t.leq[y][z]) upper.push_back(z);
      }
      for (int z : lower) {
        bool top = true;
        for (int w : lower)
          if (!t.leq[w][z]) top = false;
        if (top) t.meet[x][y] = z;
      }
      for (int z : upper) {
        bool bot = true;
        for (int w : upper)
          if (!t.leq[z][w]) bot = false;
        if (bot) t.join[x][y] = z;
      }
      if (t.meet[x][y] < 0 || t.join[x][y] < 0) t.is_lattice = false;
    }
  return t;
}

inline bool covers(const Tables& t, int x, int y) {
  if (x == y || !t.leq[x][y]) return false;
  for (int z = 0; z < t.n; ++z)
    if (z != x && z != y && t.leq[x][z] && t.leq[z][y]) return false;
  return true;
}

inline bool semimodular(const Tables& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      if (covers(t, t.meet[x][y], x) && !covers(t, y, t.join[x][y])) return false;
  return true;
}

inline bool slim(const Tables& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = x + 1; y < t.n; ++y)
      for (int z = y + 1; z < t.n; ++z) {
        if (t.leq[x][y] || t.leq[y][x] || t.leq[x][z] || t.leq[z][x] || t.leq[y][z] ||
            t.leq[z][y])
          continue;
        if (t.meet[x][y] == t.meet[y][z] && t.meet[x][y] == t.meet[x][z] &&
            t.join[x][y] == t.join[y][z] && t.join[x][y] == t.join[x][z])
          return false;
      }
  return true;
}

inline bool compatible_partition(const Tables& t, const std::vector<int>& cls) {
  for (int x = 0; x < t.n; ++x)
    for (int y = x + 1; y < t.n; ++y) {
      if (cls[x] != cls[y]) continue;
      for (int z = 0; z < t.n; ++z) {
        if (cls[t.meet[x][z]] != cls[t.meet[y][z]]) return false;
        if (cls[t.join[x][z]] != cls[t.join[y][z]]) return false;
      }
    }
  return true;
}

/// All compatible partitions, by filtering every set partition of {0..n-1}
/// (restricted-growth enumeration). Exponential; fine up to n = 12.
inline std::vector<std::vector<int>> all_congruence_partitions(const Tables& t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cls(t.n, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == t.n) {
      if (compatible_partition(t, cls)) out.push_back(cls);
      return;
    }
    for (int c = 0; c <= max_used + 1; ++c) {
      cls[i] = c;
      self(self, i + 1, std::max(max_used, c));
    }
  };
  if (t.n > 0) rec(rec, 1, 0);
  if (t.n == 1) out.push_back({0});
  return out;
}

/// Normalises a class array to first-occurrence numbering.
inline std::vector<int> normalize(const std::vector<int>& cls) {
  std::vector<int> map(cls.size(), -1), out(cls.size());
  int next = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (map[cls[i]] < 0) map[cls[i]] = next++;
    out[i] = map[cls[i]];
  }
  return out;
}

inline bool partition_refines(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j] && b[i] != b[j]) return false;
  return true;
}

/// Coatoms of the congruence lattice from the full partition list.
inline std::vector<std::vector<int>> coatoms(const std::vector<std::vector<int>>& all) {
  std::vector<std::vector<int>> out;
  for (const auto& c : all) {
    std::set<int> blocks(c.begin(), c.end());
    if (blocks.size() <= 1) continue;  // the full congruence
    bool coatom = true;
    for (const auto& d : all) {
      std::set<int> db(d.begin(), d.end());
      if (db.size() <= 1 || d == c) continue;
      if (partition_refines(c, d) && !partition_refines(d, c)) coatom = false;
    }
    if (coatom) out.push_back(normalize(c));
  }
  return out;
}

inline std::vector<int> prime_ideal_elements(const Tables& t, int top) {
  std::vector<int> out;
  for (int a = 0; a < t.n; ++a) {
    if (a == top) continue;
    bool prime = true;
    for (int x = 0; x < t.n && prime; ++x)
      for (int y = 0; y < t.n && prime; ++y)
        if (!t.leq[x][a] && !t.leq[y][a] && t.leq[t.meet[x][y]][a]) prime = false;
    if (prime) out.push_back(a);
  }
  return out;
}

inline bool distributive(const Tables& t) {
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y)
      for (int z = 0; z < t.n; ++z)
        if (t.meet[x][t.join[y][z]] != t.join[t.meet[x][y]][t.meet[x][z]]) return false;
  return true;
}

}  // namespace oracle

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>

#include "slimlat/analysis.hpp"

namespace slimlat {

struct LatticeFlags {
  bool sps = false;
  bool slim = false;
  bool rectangular = false;
};

struct LatticeFile {
  PlanarLattice lattice;
  LatticeFlags flags;
};

// ---------------------------------------------------------------------------
// Lattice files
// ---------------------------------------------------------------------------
//
//   latfile 1
//   elements 7
//   flags sps slim rectangular
//   up 0: 1 2
//   ...
//
// Only the ordered upper-cover lists are stored; lower covers are recovered
// from the leftmost-DFS order on load. Claimed flags are re-verified, never
// trusted.

inline std::string serialize_lattice(const PlanarLattice& L, LatticeFlags flags = {}) {
  std::string out = "latfile 1\n";
  out += "elements " + std::to_string(L.size()) + "\n";
  out += "flags";
  if (flags.sps) out += " sps";
  if (flags.slim) out += " slim";
  if (flags.rectangular) out += " rectangular";
  out += "\n";
  for (int x = 0; x < L.size(); ++x) {
    out += "up " + std::to_string(x) + ":";
    for (int u : L.up(x)) out += " " + std::to_string(u);
    out += "\n";
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected integer, got '" +
                                tok + "'");
  }
}

}  // namespace detail

inline LatticeFile parse_lattice(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line))
      fail(errc::parse_error, "unexpected end of file, expected " + std::string(what));
    ++line_no;
    return detail::split_ws(line);
  };

  auto header = next_line("header");
  if (header.size() != 2 || header[0] != "latfile" || header[1] != "1")
    fail(errc::parse_error, "line 1: expected 'latfile 1'");
  auto count = next_line("element count");
  if (count.size() != 2 || count[0] != "elements")
    fail(errc::parse_error, "line 2: expected 'elements <n>'");
  const int n = detail::parse_int(count[1], line_no);
  if (n <= 0) fail(errc::parse_error, "line 2: element count must be positive");

  LatticeFlags flags;
  auto flag_line = next_line("flags");
  if (flag_line.empty() || flag_line[0] != "flags")
    fail(errc::parse_error, "line 3: expected 'flags ...'");
  for (std::size_t i = 1; i < flag_line.size(); ++i) {
    if (flag_line[i] == "sps")
      flags.sps = true;
    else if (flag_line[i] == "slim")
      flags.slim = true;
    else if (flag_line[i] == "rectangular")
      flags.rectangular = true;
    else
      fail(errc::parse_error, "line 3: unknown flag '" + flag_line[i] + "'");
  }

  std::vector<std::vector<int>> up(n);
  for (int x = 0; x < n; ++x) {
    auto toks = next_line("an 'up' line");
    if (toks.size() < 2 || toks[0] != "up" || toks[1] != std::to_string(x) + ":")
      fail(errc::parse_error,
           "line " + std::to_string(line_no) + ": expected 'up " + std::to_string(x) + ": ...'");
    for (std::size_t i = 2; i < toks.size(); ++i)
      up[x].push_back(detail::parse_int(toks[i], line_no));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::split_ws(line).empty())
      fail(errc::parse_error, "line " + std::to_string(line_no) + ": trailing content");
  }

  LatticeFile file{build_diagram(std::move(up)), flags};
  if (flags.slim && !is_slim(file.lattice))
    fail(errc::parse_error, "file claims 'slim' but the lattice has an M3 sublattice");
  if (flags.rectangular &&
      (!is_semimodular(file.lattice) || !try_rectangular_profile(file.lattice)))
    fail(errc::parse_error, "file claims 'rectangular' but the lattice is not");
  if (flags.sps) {
    if (auto v = sps_violation(file.lattice))
      fail(errc::parse_error, "file claims 'sps' but " + *v);
  }
  return file;
}

// ---------------------------------------------------------------------------
// Sequence scripts
// ---------------------------------------------------------------------------
//
//   grid 2 2
//   fork 3 0

inline std::string serialize_sequence(const CzedliSchmidtSequence& seq) {
  std::string out = "grid " + std::to_string(seq.p) + " " + std::to_string(seq.q) + "\n";
  for (const auto& f : seq.forks)
    out += "fork " + std::to_string(f.top) + " " + std::to_string(f.k) + "\n";
  return out;
}

inline CzedliSchmidtSequence parse_sequence(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  CzedliSchmidtSequence seq;
  bool have_grid = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "grid") {
      if (have_grid) fail(errc::parse_error, "line " + std::to_string(line_no) + ": second grid");
      if (toks.size() != 3)
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'grid p q'");
      seq.p = detail::parse_int(toks[1], line_no);
      seq.q = detail::parse_int(toks[2], line_no);
      have_grid = true;
    } else if (toks[0] == "fork") {
      if (!have_grid)
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": fork before grid");
      if (toks.size() != 3)
        fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'fork t k'");
      seq.forks.push_back(
          ForkSite{detail::parse_int(toks[1], line_no), detail::parse_int(toks[2], line_no)});
    } else {
      fail(errc::parse_error,
           "line " + std::to_string(line_no) + ": unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_grid) fail(errc::parse_error, "script has no grid line");
  return seq;
}

// ---------------------------------------------------------------------------
// DOT export
// ---------------------------------------------------------------------------

/// Hasse diagram in DOT: one rank per height, elements ordered within a rank
/// by the embedding (leftmost-DFS first-visit order). Deterministic output.
inline std::string export_dot(const PlanarLattice& L) {
  std::vector<std::vector<int>> up(L.size());
  for (int x = 0; x < L.size(); ++x) up[x] = L.up(x);
  const auto visit = detail::dfs_visit_order(up, L.size(), L.bottom());
  std::vector<std::vector<int>> ranks(L.length() + 1);
  for (int x = 0; x < L.size(); ++x) ranks[L.height(x)].push_back(x);
  for (auto& r : ranks)
    std::sort(r.begin(), r.end(), [&](int a, int b) { return visit[a] < visit[b]; });

  std::string out = "digraph lattice {\n  rankdir=BT;\n  edge [arrowhead=none];\n"
                    "  node [shape=circle, fontsize=10, fixedsize=true, width=0.35];\n";
  for (const auto& r : ranks) {
    out += "  { rank=same;";
    for (int x : r) out += " " + std::to_string(x) + ";";
    out += " }\n";
  }
  for (int x = 0; x < L.size(); ++x)
    for (int u : L.up(x)) out += "  " + std::to_string(x) + " -> " + std::to_string(u) + ";\n";
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Built-in search targets
// ---------------------------------------------------------------------------

/// The eight-element distributive lattice whose join-irreducible poset is
/// {a < c, b < c, b < d}. It satisfies the two-cover property; distributivity
/// and the cover bound are re-checked by the test suite rather than trusted.
inline PlanarLattice make_d8() {
  return build_diagram({{1, 2}, {3}, {3, 4}, {5, 6}, {6}, {7}, {7}, {}});
}

/// Named targets accepted by the search command: cN (chain), bn:K (Boolean),
/// b2, d8.
inline PlanarLattice builtin_target(const std::string& name) {
  if (name == "d8") return make_d8();
  if (name == "b2") return make_boolean(2);
  if (name.rfind("bn:", 0) == 0) return make_boolean(detail::parse_int(name.substr(3), 0));
  if (name.size() >= 2 && name[0] == 'c') return make_chain(detail::parse_int(name.substr(1), 0));
  fail(errc::parse_error, "unknown built-in target '" + name + "'");
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

inline std::string render_report(const CheckReport& r, bool timings = false) {
  std::string out = r.pass ? "PASS" : "FAIL";
  out += " " + r.name + " [" + r.lattice_key + "]";
  if (!r.pass) out += ": " + r.witness;
  if (timings) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2f ms)", r.millis);
    out += buf;
  }
  return out;
}

inline std::string render_reports(const std::vector<CheckReport>& rs, bool timings = false) {
  std::string out;
  for (const auto& r : rs) out += render_report(r, timings) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration cache
// ---------------------------------------------------------------------------
//
// A cache directory holds one lattice file per canonical key plus an index per
// bound triple. It is purely an accelerator: a warm read reproduces exactly
// what a cold enumeration emits (keys are recomputed and verified on load).

namespace detail {

inline std::string cache_index_name(const EnumerationLimits& lim) {
  return "enum-" + std::to_string(lim.max_elements) + "-" + std::to_string(lim.max_grid) + "-" +
         std::to_string(lim.max_forks) + ".idx";
}

}  // namespace detail

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot write " + path.string());
  out << text;
}

inline void write_corpus_cache(const std::filesystem::path& dir, const EnumerationLimits& lim,
                               const std::vector<Enumerated>& corpus) {
  std::filesystem::create_directories(dir);
  std::string index;
  for (const auto& e : corpus) {
    const std::string key = canonical_key(e.lattice);
    write_file(dir / (key + ".lat"),
               serialize_lattice(e.lattice, {true, true, true}));
    index += key + " grid " + std::to_string(e.seq.p) + " " + std::to_string(e.seq.q);
    for (const auto& f : e.seq.forks)
      index += " fork " + std::to_string(f.top) + " " + std::to_string(f.k);
    index += "\n";
  }
  write_file(dir / detail::cache_index_name(lim), index);
}

inline std::optional<std::vector<Enumerated>> try_read_corpus_cache(
    const std::filesystem::path& dir, const EnumerationLimits& lim) {
  const auto index_path = dir / detail::cache_index_name(lim);
  if (!std::filesystem::exists(index_path)) return std::nullopt;
  std::vector<Enumerated> out;
  std::istringstream in(read_file(index_path));
  std::string line;
  while (std::getline(in, line)) {
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() < 4 || toks[1] != "grid")
      fail(errc::parse_error, "corrupt cache index line: " + line);
    Enumerated e{parse_lattice(read_file(dir / (toks[0] + ".lat"))).lattice,
                 {},
                 {detail::parse_int(toks[2], 0), detail::parse_int(toks[3], 0), {}}};
    for (std::size_t i = 4; i < toks.size(); i += 3) {
      if (toks[i] != "fork" || i + 2 >= toks.size())
        fail(errc::parse_error, "corrupt cache index line: " + line);
      e.seq.forks.push_back(
          ForkSite{detail::parse_int(toks[i + 1], 0), detail::parse_int(toks[i + 2], 0)});
    }
    e.canon = canonical_form(e.lattice);
    if (canonical_key(e.lattice) != toks[0])
      fail(errc::parse_error, "cache entry " + toks[0] + " does not match its lattice");
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const Enumerated& a, const Enumerated& b) { return a.canon < b.canon; });
  return out;
}

}  // namespace slimlat

// Command-line front end: build lattices from scripts, analyze and verify
// them, enumerate the slim rectangular lattices within a bound, and search
// for congruence-lattice representations.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or
// input errors.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "slimlat/slimlat.hpp"

namespace {

using namespace slimlat;

struct LoadedInput {
  PlanarLattice lattice;
  std::optional<CzedliSchmidtSequence> seq;
};

LoadedInput load_input(const std::string& script_path, const std::string& lattice_path) {
  if (!script_path.empty()) {
    CzedliSchmidtSequence seq = parse_sequence(read_file(script_path));
    return {replay(seq), seq};
  }
  return {parse_lattice(read_file(lattice_path)).lattice, std::nullopt};
}

std::string describe(const PlanarLattice& L) {
  std::string out;
  out += "elements " + std::to_string(L.size()) + "\n";
  out += "length " + std::to_string(L.length()) + "\n";
  out += "cover-edges " + std::to_string(prime_intervals(L).size()) + "\n";
  out += "four-cells " + std::to_string(four_cells(L).size()) + "\n";
  out += "semimodular " + std::string(is_semimodular(L) ? "yes" : "no") + "\n";
  out += "slim " + std::string(is_slim(L) ? "yes" : "no") + "\n";
  if (auto p = try_rectangular_profile(L)) {
    out += "rectangular yes\n";
    out += "corners c_l=" + std::to_string(p->c_l) + " c_r=" + std::to_string(p->c_r) + "\n";
    out += "t " + std::to_string(p->t_len) + "\n";
    const auto chain = [](const std::vector<int>& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
      return s;
    };
    out += "lower-left " + chain(p->lower_left) + "\n";
    out += "upper-left " + chain(p->upper_left) + "\n";
    out += "lower-right " + chain(p->lower_right) + "\n";
    out += "upper-right " + chain(p->upper_right) + "\n";
  } else {
    out += "rectangular no\n";
  }
  const auto ji = join_irreducible_congruences(L);
  out += "join-irreducible-congruences " + std::to_string(ji.elems.size()) + "\n";
  out += "congruences " + std::to_string(all_congruences(L).size()) + "\n";
  const auto das = dual_atoms(L);
  out += "dual-atoms " + std::to_string(das.size()) + "\n";
  const auto primes = prime_ideals(L);
  std::string ps;
  for (std::size_t i = 0; i < primes.size(); ++i) ps += (i ? " " : "") + std::to_string(primes[i]);
  out += "prime-ideals " + ps + "\n";
  if (try_rectangular_profile(L)) {
    const auto cls = classify_elements(L);
    int ub = 0, mr = 0, mid = 0;
    for (unsigned c : cls) {
      if (c & kUpperBoundary) ++ub;
      if (c & kMeetReducible) ++mr;
      if (c & kMiddle) ++mid;
    }
    out += "classification upper-boundary=" + std::to_string(ub) +
           " meet-reducible=" + std::to_string(mr) + " middle=" + std::to_string(mid) + "\n";
  }
  out += "canonical-key " + canonical_key(L) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slim rectangular lattices: construction, congruences, verification"};
  app.require_subcommand(1);

  std::string script, lattice_path, out_path, dot_path, cache_dir, target;
  int max_elements = 16, max_grid = -1, max_forks = -1, jobs = 1, safety_cap = 26;
  bool timings = false;

  auto* build = app.add_subcommand("build", "replay a script into a lattice file and DOT");
  build->add_option("--script", script, "sequence script")->required();
  build->add_option("--out", out_path, "output lattice file");
  build->add_option("--dot", dot_path, "output DOT file");

  auto* analyze = app.add_subcommand("analyze", "print structural and congruence data");
  analyze->add_option("--script", script, "sequence script");
  analyze->add_option("--lattice", lattice_path, "lattice file");

  auto* verify = app.add_subcommand("verify", "run the full check battery");
  verify->add_option("--script", script, "sequence script");
  verify->add_option("--lattice", lattice_path, "lattice file");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_flag("--timings", timings, "append per-check timings");

  auto* enumerate = app.add_subcommand("enumerate", "emit all slim rectangular lattices in range");
  enumerate->add_option("--max-elements", max_elements, "element bound")->required();
  enumerate->add_option("--max-grid", max_grid, "largest chain length of the base grid");
  enumerate->add_option("--max-forks", max_forks, "fork bound");
  enumerate->add_option("--safety-cap", safety_cap, "hard bound guard");
  enumerate->add_option("--jobs", jobs, "worker threads");
  enumerate->add_option("--cache", cache_dir, "cache directory");
  enumerate->add_option("--emit", out_path, "write lattice files into this directory");

  auto* search = app.add_subcommand("search", "look for a congruence-lattice representation");
  search->add_option("--target", target, "c<N>, b2, bn:<k>, d8, or a lattice file")->required();
  search->add_option("--max-elements", max_elements, "element bound")->required();
  search->add_option("--max-grid", max_grid, "largest chain length of the base grid");
  search->add_option("--max-forks", max_forks, "fork bound");
  search->add_option("--safety-cap", safety_cap, "hard bound guard");
  search->add_option("--jobs", jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  // Defaults that keep the enumeration complete for the element bound: a grid
  // chain can reach max_elements/2, and every fork adds at least 3 elements.
  if (max_grid < 0) max_grid = std::max(2, max_elements / 2);
  if (max_forks < 0) max_forks = std::max(0, (max_elements - 4) / 3);

  try {
    if (build->parsed()) {
      const auto seq = slimlat::parse_sequence(slimlat::read_file(script));
      const auto L = slimlat::replay(seq);
      if (!out_path.empty())
        slimlat::write_file(out_path, slimlat::serialize_lattice(L, {true, true, true}));
      if (!dot_path.empty()) slimlat::write_file(dot_path, slimlat::export_dot(L));
      std::cout << "built " << L.size() << " elements, key " << slimlat::canonical_key(L) << "\n";
      return 0;
    }

    if (analyze->parsed()) {
      if (script.empty() == lattice_path.empty()) {
        std::cerr << "analyze needs exactly one of --script / --lattice\n";
        return 2;
      }
      std::cout << describe(load_input(script, lattice_path).lattice);
      return 0;
    }

    if (verify->parsed()) {
      if (script.empty() == lattice_path.empty()) {
        std::cerr << "verify needs exactly one of --script / --lattice\n";
        return 2;
      }
      const auto input = load_input(script, lattice_path);
      const auto reports =
          slimlat::run_check_battery(input.lattice, input.seq ? &*input.seq : nullptr);
      std::cout << slimlat::render_reports(reports, timings);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.pass;
      if (ok) {
        if (auto p = slimlat::try_rectangular_profile(input.lattice))
          std::cout << "all checks passed, t=" << p->t_len << "\n";
        else
          std::cout << "all checks passed\n";
      }
      return ok ? 0 : 1;
    }

    if (enumerate->parsed()) {
      slimlat::EnumerationLimits lim{max_elements, max_grid, max_forks, safety_cap, jobs};
      std::vector<slimlat::Enumerated> corpus;
      bool from_cache = false;
      if (!cache_dir.empty()) {
        if (auto cached = slimlat::try_read_corpus_cache(cache_dir, lim)) {
          corpus = std::move(*cached);
          from_cache = true;
        }
      }
      if (!from_cache) {
        corpus = slimlat::enumerate_slim_rectangular(lim);
        if (!cache_dir.empty()) slimlat::write_corpus_cache(cache_dir, lim, corpus);
      }
      if (!out_path.empty()) {
        std::filesystem::create_directories(out_path);
        for (const auto& e : corpus)
          slimlat::write_file(std::filesystem::path(out_path) /
                                  (slimlat::canonical_key(e.lattice) + ".lat"),
                              slimlat::serialize_lattice(e.lattice, {true, true, true}));
      }
      for (const auto& e : corpus) {
        std::cout << slimlat::canonical_key(e.lattice) << " n=" << e.lattice.size() << " grid="
                  << e.seq.p << "x" << e.seq.q << " forks=" << e.seq.forks.size() << " seq=\""
                  << "grid " << e.seq.p << " " << e.seq.q;
        for (const auto& f : e.seq.forks) std::cout << "; fork " << f.top << " " << f.k;
        std::cout << "\"\n";
      }
      std::cout << "total " << corpus.size() << "\n";
      return 0;
    }

    if (search->parsed()) {
      PlanarLattice target_lattice = std::filesystem::exists(target)
                                         ? slimlat::parse_lattice(slimlat::read_file(target)).lattice
                                         : slimlat::builtin_target(target);
      slimlat::EnumerationLimits lim{max_elements, max_grid, max_forks, safety_cap, jobs};
      const auto outcome = slimlat::representability_search(target_lattice, lim);
      if (outcome.found) {
        std::cout << "witness: n=" << outcome.witness_size << " seq=\"grid "
                  << outcome.witness_seq.p << " " << outcome.witness_seq.q;
        for (const auto& f : outcome.witness_seq.forks)
          std::cout << "; fork " << f.top << " " << f.k;
        std::cout << "\"\n";
      } else {
        std::cout << "exhausted: no witness with <= " << lim.max_elements
                  << " elements (corpus " << outcome.corpus_size << " lattices, hash "
                  << outcome.corpus_hash << ")\n";
      }
      return 0;
    }
  } catch (const slimlat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

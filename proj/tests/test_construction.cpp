#include <catch2/catch_amalgamated.hpp>

#include "slimlat/canonical.hpp"
#include "slimlat/construction.hpp"
#include "support/fixtures.hpp"

using namespace slimlat;

TEST_CASE("make_grid basics") {
  const auto B2 = make_grid(2, 2);
  REQUIRE(B2.size() == 4);
  REQUIRE(four_cells(B2).size() == 1);

  const auto L = make_grid(3, 4);
  REQUIRE(L.size() == 12);
  REQUIRE(four_cells(L).size() == 6);
  REQUIRE(rectangular_profile(L).t_len == 5);
  REQUIRE(is_slim(L));
  REQUIRE(is_semimodular(L));

  REQUIRE_THROWS_MATCHES(make_grid(1, 3), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::bad_dims; }));
}

TEST_CASE("forking the square yields S7") {
  const auto B2 = make_grid(2, 2);
  const auto cells = four_cells(B2);
  REQUIRE(cells.size() == 1);
  const auto S7 = insert_fork(B2, cells[0]);
  REQUIRE(S7.size() == 7);
  REQUIRE(isomorphic(S7, build_diagram(fixtures::s7_up())));
  // Deterministic numbering: apex 4, left leg 5, right leg 6.
  REQUIRE(S7.up(4) == std::vector<int>{3});
  REQUIRE(S7.down(3) == std::vector<int>{2, 4, 1});
  REQUIRE(S7.up(5) == std::vector<int>{2, 4});
  REQUIRE(S7.up(6) == std::vector<int>{4, 1});
  REQUIRE(S7.up(0) == std::vector<int>{5, 6});
  REQUIRE(S7.down(5) == std::vector<int>{0});
}

TEST_CASE("fork sites address cells in replay numbering") {
  const auto B2 = make_grid(2, 2);
  const auto S7 = insert_fork(B2, ForkSite{3, 0});
  REQUIRE(isomorphic(S7, build_diagram(fixtures::s7_up())));

  REQUIRE_THROWS_MATCHES(insert_fork(B2, ForkSite{99, 0}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_a_four_cell; }));
  REQUIRE_THROWS_MATCHES(insert_fork(B2, ForkSite{3, 5}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_a_four_cell; }));
}

TEST_CASE("fork legs descend to the lower boundary") {
  // Forking the cell incident to the top of a 3x3 grid: both legs have two
  // steps, so the result has 9 + 1 + 2 + 2 = 14 elements.
  const auto G = make_grid(3, 3);
  const auto before = rectangular_profile(G);
  const auto L = insert_fork(G, ForkSite{8, 0});
  REQUIRE(L.size() == 14);
  const auto after = rectangular_profile(L);
  REQUIRE(after.lower_left.size() == before.lower_left.size() + 1);
  REQUIRE(after.lower_right.size() == before.lower_right.size() + 1);
  REQUIRE(L.interval_length(L.bottom(), after.c_l) == 3);
  REQUIRE(L.interval_length(L.bottom(), after.c_r) == 3);
  REQUIRE(is_slim(L));
  REQUIRE(is_semimodular(L));
}

TEST_CASE("two successive forks grow each lower boundary chain twice") {
  const auto B2 = make_grid(2, 2);
  const auto S7 = insert_fork(B2, ForkSite{3, 0});
  for (const auto& cell : four_cells(S7)) {
    const auto L = insert_fork(S7, cell);
    const auto p = rectangular_profile(L);
    REQUIRE(L.interval_length(L.bottom(), p.c_l) == 3);  // 1 + (s - 1) with s = 3
    REQUIRE(L.interval_length(L.bottom(), p.c_r) == 3);
    REQUIRE(p.t_len == 2);  // upper boundaries never change
  }
}

TEST_CASE("forking S7 at its upper-left cell matches the hand construction") {
  const auto S7 = insert_fork(make_grid(2, 2), ForkSite{3, 0});
  // Cell {5; 2, 4; 3}: left leg splices the boundary edge immediately, the
  // right leg walks through the bottom cell, 7 + 4 = 11 elements.
  const auto L = insert_fork(S7, ForkSite{3, 0});
  REQUIRE(L.size() == 11);
  REQUIRE(L.down(3) == std::vector<int>{2, 7, 4, 1});  // new apex 7 beside the old one
  REQUIRE(L.up(8) == std::vector<int>{2, 7});          // left leg below the old corner
  REQUIRE(L.up(9) == std::vector<int>{7, 4});          // right leg, first step
  REQUIRE(L.up(10) == std::vector<int>{9, 6});         // right leg, boundary splice
  REQUIRE(L.down(9) == std::vector<int>{5, 10});       // interior leg covers cell bottom too
  REQUIRE(L.up(0) == std::vector<int>{5, 10});
}

TEST_CASE("replay is deterministic and byte-reproducible") {
  const CzedliSchmidtSequence seq{2, 3, {{4, 0}, {4, 1}}};
  const auto L1 = replay(seq);
  const auto L2 = replay(seq);
  REQUIRE(L1.size() == L2.size());
  for (int x = 0; x < L1.size(); ++x) {
    REQUIRE(L1.up(x) == L2.up(x));
    REQUIRE(L1.down(x) == L2.down(x));
  }
}

TEST_CASE("replay reports the failing step") {
  try {
    replay({2, 2, {{3, 0}, {99, 0}}});
    FAIL("expected an error");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::not_a_four_cell);
    REQUIRE(std::string(e.what()).find("step 2") != std::string::npos);
  }
}

TEST_CASE("fork insertion rejects inputs that are not slim rectangular") {
  const auto M3 = build_diagram(fixtures::m3_up());
  const auto cells = four_cells(M3);
  REQUIRE_FALSE(cells.empty());
  REQUIRE_THROWS_MATCHES(
      insert_fork(M3, cells[0]), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
        return e.code() == errc::input_not_slim_rectangular;
      }));
}

TEST_CASE("transpose-related fork sites give isomorphic lattices") {
  // The transpose automorphism of the 3x3 grid swaps the two off-diagonal
  // cells; forking either gives the same abstract lattice.
  const auto a = replay({3, 3, {{5, 0}}});
  const auto b = replay({3, 3, {{7, 0}}});
  REQUIRE(canonical_form(a) == canonical_form(b));

  // Mirror images across transposed grids agree as well.
  const auto c = replay({2, 3, {{4, 0}}});
  const auto d = replay({3, 2, {{3, 0}}});
  REQUIRE(canonical_form(c) == canonical_form(d));
}

TEST_CASE("the two cells of the 2x3 grid produce different extensions") {
  // The lower cell splices both legs immediately (9 elements); the upper
  // cell's left leg walks through the lower cell first (10 elements).
  const auto a = replay({2, 3, {{4, 0}}});
  const auto b = replay({2, 3, {{5, 0}}});
  REQUIRE(a.size() == 9);
  REQUIRE(b.size() == 10);
  REQUIRE_FALSE(isomorphic(a, b));
}

TEST_CASE("enumeration counts for small bounds") {
  REQUIRE(enumerate_slim_rectangular({7, 3, 2, 26, 1}).size() == 3);    // B2, C2xC3, S7
  REQUIRE(enumerate_slim_rectangular({9, 4, 2, 26, 1}).size() == 6);
  REQUIRE(enumerate_slim_rectangular({10, 5, 2, 26, 1}).size() == 9);
  REQUIRE(enumerate_slim_rectangular({16, 8, 4, 26, 1}).size() == 57);
}

TEST_CASE("enumeration output is sorted, reproducible, and replayable") {
  const EnumerationLimits lim{12, 6, 3, 26, 1};
  const auto corpus = enumerate_slim_rectangular(lim);
  REQUIRE(std::is_sorted(corpus.begin(), corpus.end(),
                         [](const Enumerated& a, const Enumerated& b) { return a.canon < b.canon; }));
  for (const auto& e : corpus) {
    const auto L = replay(e.seq);
    REQUIRE(L.size() == e.lattice.size());
    for (int x = 0; x < L.size(); ++x) REQUIRE(L.up(x) == e.lattice.up(x));
    REQUIRE(is_slim(e.lattice));
    REQUIRE(is_semimodular(e.lattice));
    REQUIRE(try_rectangular_profile(e.lattice).has_value());
  }
}

TEST_CASE("enumeration is independent of the worker count") {
  const auto seq1 = enumerate_slim_rectangular({14, 7, 3, 26, 1});
  const auto seq4 = enumerate_slim_rectangular({14, 7, 3, 26, 4});
  REQUIRE(seq1.size() == seq4.size());
  for (std::size_t i = 0; i < seq1.size(); ++i) {
    REQUIRE(seq1[i].canon == seq4[i].canon);
    REQUIRE(seq1[i].seq.p == seq4[i].seq.p);
    REQUIRE(seq1[i].seq.q == seq4[i].seq.q);
    REQUIRE(seq1[i].seq.forks.size() == seq4[i].seq.forks.size());
    for (std::size_t f = 0; f < seq1[i].seq.forks.size(); ++f) {
      REQUIRE(seq1[i].seq.forks[f].top == seq4[i].seq.forks[f].top);
      REQUIRE(seq1[i].seq.forks[f].k == seq4[i].seq.forks[f].k);
    }
  }
}

TEST_CASE("the grid of a lattice is recoverable from its upper boundaries") {
  for (const auto& e : enumerate_slim_rectangular({14, 7, 3, 26, 1})) {
    const auto p = rectangular_profile(e.lattice);
    const int ql = e.lattice.interval_length(p.c_l, e.lattice.top()) + 1;
    const int pr = e.lattice.interval_length(p.c_r, e.lattice.top()) + 1;
    REQUIRE(ql == e.seq.q);
    REQUIRE(pr == e.seq.p);
  }
}

TEST_CASE("enumeration bounds are guarded") {
  REQUIRE_THROWS_MATCHES(enumerate_slim_rectangular({100, 8, 8, 26, 1}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::bounds_too_large; }));
}

TEST_CASE("random sequences are deterministic in the seed") {
  const auto a = random_sequences(25, 4, 0, 5, 12345);
  const auto b = random_sequences(25, 4, 0, 5, 12345);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].p == b[i].p);
    REQUIRE(a[i].q == b[i].q);
    REQUIRE(a[i].forks.size() == b[i].forks.size());
  }
  for (const auto& seq : a) REQUIRE(replay(seq).size() >= seq.p * seq.q);
}

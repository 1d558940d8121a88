#include <catch2/catch_amalgamated.hpp>

#include "slimlat/construction.hpp"
#include "slimlat/lattice.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace slimlat;

namespace {

void check_tables_against_oracle(const std::vector<std::vector<int>>& up) {
  const auto L = build_diagram(up);
  const auto t = oracle::tables(up);
  REQUIRE(t.is_lattice);
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) {
      REQUIRE(L.leq(x, y) == static_cast<bool>(t.leq[x][y]));
      REQUIRE(L.meet(x, y) == t.meet[x][y]);
      REQUIRE(L.join(x, y) == t.join[x][y]);
    }
}

}  // namespace

TEST_CASE("one-element diagram is a valid bounded lattice") {
  const auto L = build_diagram({{}});
  REQUIRE(L.size() == 1);
  REQUIRE(L.bottom() == L.top());
  REQUIRE(L.meet(0, 0) == 0);
  REQUIRE(L.join(0, 0) == 0);
}

TEST_CASE("B2 builds and has the diamond order") {
  const auto L = build_diagram(fixtures::b2_up());
  REQUIRE(L.size() == 4);
  REQUIRE(L.bottom() == 0);
  REQUIRE(L.top() == 3);
  REQUIRE(L.meet(1, 2) == 0);
  REQUIRE(L.join(1, 2) == 3);
  REQUIRE(L.up(0) == std::vector<int>{1, 2});
  REQUIRE(L.down(3) == std::vector<int>{1, 2});
}

TEST_CASE("meet and join tables match the brute-force oracle") {
  check_tables_against_oracle(fixtures::b2_up());
  check_tables_against_oracle(fixtures::n5_up());
  check_tables_against_oracle(fixtures::m3_up());
  check_tables_against_oracle(fixtures::s7_up());
  check_tables_against_oracle(fixtures::d8_up());
  check_tables_against_oracle(fixtures::chain_up(6));
}

TEST_CASE("lattice operation laws hold on S7") {
  const auto L = build_diagram(fixtures::s7_up());
  for (int x = 0; x < L.size(); ++x) {
    REQUIRE(L.meet(x, x) == x);
    REQUIRE(L.join(x, L.bottom()) == x);
    REQUIRE(L.meet(x, L.top()) == x);
    for (int y = 0; y < L.size(); ++y) {
      REQUIRE(L.meet(x, y) == L.meet(y, x));
      REQUIRE(L.join(x, L.meet(x, y)) == x);  // absorption
      for (int z = 0; z < L.size(); ++z)
        REQUIRE(L.meet(L.meet(x, y), z) == L.meet(x, L.meet(y, z)));
    }
  }
}

TEST_CASE("grid meets and joins are componentwise") {
  const auto L = make_grid(3, 3);
  const auto id = [](int i, int j) { return i * 3 + j; };
  REQUIRE(L.meet(id(1, 2), id(2, 1)) == id(1, 1));
  REQUIRE(L.join(id(1, 2), id(2, 1)) == id(2, 2));
}

TEST_CASE("a poset without joins is rejected") {
  // Two maximal elements: no top.
  REQUIRE_THROWS_MATCHES(build_diagram({{1, 2}, {}, {}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::no_bounds; }));
  // Bounded but 1 and 2 have no join: hexagon with two incomparable mid pairs.
  // 0 < {1,2}; 1 < {3,4}; 2 < {3,4}; {3,4} < 5: join(1,2) has two minimal
  // upper bounds.
  REQUIRE_THROWS_MATCHES(build_diagram({{1, 2}, {3, 4}, {3, 4}, {5}, {5}, {}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_a_lattice; }));
}

TEST_CASE("transitive edges are rejected") {
  REQUIRE_THROWS_MATCHES(build_diagram({{1, 2}, {2}, {}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_reduced; }));
}

TEST_CASE("cycles are rejected") {
  REQUIRE_THROWS_MATCHES(build_diagram({{1}, {2}, {1}, {0}}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == errc::not_a_lattice ||
                                  e.code() == errc::no_bounds;
                         }));
}

TEST_CASE("mismatched up and down lists are rejected") {
  REQUIRE_THROWS_MATCHES(
      build_diagram({{1, 2}, {3}, {3}, {}}, {{}, {0}, {0}, {1}}), Error,
      Catch::Matchers::Predicate<Error>(
          [](const Error& e) { return e.code() == errc::inconsistent; }));
}

TEST_CASE("explicit down lists are preserved") {
  const auto L = build_diagram({{1, 2}, {3}, {3}, {}}, {{}, {0}, {0}, {1, 2}});
  REQUIRE(L.down(3) == std::vector<int>{1, 2});
}

TEST_CASE("interval lengths count longest chains") {
  const auto L = make_grid(3, 4);
  REQUIRE(L.length() == 5);
  REQUIRE(L.interval_length(L.bottom(), L.top()) == 5);
  REQUIRE(L.interval_length(0, 4) == 1);  // (0,0) to (1,0): q = 4
  const auto N5 = build_diagram(fixtures::n5_up());
  REQUIRE(N5.interval_length(0, 4) == 3);  // the long side of the pentagon
}

TEST_CASE("heights follow longest chains") {
  const auto N5 = build_diagram(fixtures::n5_up());
  REQUIRE(N5.height(0) == 0);
  REQUIRE(N5.height(2) == 2);
  REQUIRE(N5.height(3) == 1);
  REQUIRE(N5.height(4) == 3);
}

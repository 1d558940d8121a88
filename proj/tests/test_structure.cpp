#include <catch2/catch_amalgamated.hpp>

#include "slimlat/construction.hpp"
#include "slimlat/structure.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace slimlat;

TEST_CASE("semimodularity: grids pass, the pentagon fails with a valid witness") {
  REQUIRE(is_semimodular(make_grid(3, 4)));
  REQUIRE(is_semimodular(make_grid(2, 2)));

  const auto N5 = build_diagram(fixtures::n5_up());
  const auto w = semimodularity_witness(N5);
  REQUIRE(w.has_value());
  // The witness must violate the defining implication.
  REQUIRE(N5.covers(N5.meet(w->x, w->y), w->x));
  REQUIRE_FALSE(N5.covers(w->y, N5.join(w->x, w->y)));
  REQUIRE(oracle::semimodular(oracle::tables(fixtures::n5_up())) == false);
}

TEST_CASE("slimness: M3 fails on its atoms, grids and S7 pass") {
  const auto M3 = build_diagram(fixtures::m3_up());
  const auto w = slimness_witness(M3);
  REQUIRE(w.has_value());
  std::vector<int> triple{w->x, w->y, w->z};
  std::sort(triple.begin(), triple.end());
  REQUIRE(triple == std::vector<int>{1, 2, 3});
  REQUIRE(is_slim(make_grid(4, 4)));
  REQUIRE(is_slim(build_diagram(fixtures::s7_up())));
  REQUIRE(oracle::slim(oracle::tables(fixtures::m3_up())) == false);
  REQUIRE(oracle::slim(oracle::tables(fixtures::s7_up())) == true);
}

TEST_CASE("four-cell scan") {
  REQUIRE(four_cells(build_diagram(fixtures::b2_up())).size() == 1);
  for (int p = 2; p <= 4; ++p)
    for (int q = 2; q <= 4; ++q)
      REQUIRE(four_cells(make_grid(p, q)).size() ==
              static_cast<std::size_t>((p - 1) * (q - 1)));
  // The three diagram regions of S7, enumerated by hand: one below the apex,
  // one on each side of it.
  const auto S7 = build_diagram(fixtures::s7_up());
  const auto cells = four_cells(S7);
  REQUIRE(cells.size() == 3);
  REQUIRE(cells[0] == FourCell{0, 1, 2, 4});
  REQUIRE(cells[1] == FourCell{1, 3, 4, 6});
  REQUIRE(cells[2] == FourCell{2, 4, 5, 6});
  REQUIRE(cell_defects(S7).empty());
}

TEST_CASE("non-4-cell regions are reported as defects") {
  const auto N5 = build_diagram(fixtures::n5_up());
  const auto defects = cell_defects(N5);
  REQUIRE(defects.size() == 1);
  REQUIRE(defects[0].o == 0);
}

TEST_CASE("boundary chains and rectangular profile of a grid") {
  const auto L = make_grid(3, 4);
  const auto id = [](int i, int j) { return i * 4 + j; };
  const auto p = rectangular_profile(L);
  REQUIRE(p.c_l == id(2, 0));
  REQUIRE(p.c_r == id(0, 3));
  REQUIRE(p.t_len == 5);
  REQUIRE(p.lower_left == std::vector<int>{id(0, 0), id(1, 0), id(2, 0)});
  REQUIRE(p.upper_left == std::vector<int>{id(2, 0), id(2, 1), id(2, 2), id(2, 3)});
  REQUIRE(p.lower_right == std::vector<int>{id(0, 0), id(0, 1), id(0, 2), id(0, 3)});
  REQUIRE(p.upper_right == std::vector<int>{id(0, 3), id(1, 3), id(2, 3)});
}

TEST_CASE("rectangular profile of S7") {
  const auto S7 = build_diagram(fixtures::s7_up());
  const auto p = rectangular_profile(S7);
  REQUIRE(p.c_l == 3);
  REQUIRE(p.c_r == 5);
  REQUIRE(p.t_len == 2);
  REQUIRE(p.lower_left == std::vector<int>{0, 1, 3});
  REQUIRE(p.upper_left == std::vector<int>{3, 6});
}

TEST_CASE("chains and trivial lattices are not rectangular") {
  REQUIRE_FALSE(try_rectangular_profile(make_chain(5)).has_value());
  REQUIRE_FALSE(try_rectangular_profile(make_chain(3)).has_value());
  REQUIRE_FALSE(try_rectangular_profile(make_chain(1)).has_value());
  REQUIRE_FALSE(try_rectangular_profile(make_chain(2)).has_value());
  REQUIRE_THROWS_MATCHES(rectangular_profile(make_chain(5)), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == errc::not_rectangular; }));
}

TEST_CASE("corner joins stay on the upper boundaries") {
  for (const auto& L : {make_grid(3, 4), build_diagram(fixtures::s7_up())}) {
    const auto p = rectangular_profile(L);
    const std::set<int> ur(p.upper_right.begin(), p.upper_right.end());
    const std::set<int> ul(p.upper_left.begin(), p.upper_left.end());
    for (int x = 0; x < L.size(); ++x) {
      REQUIRE(ur.count(L.join(x, p.c_r)) == 1);
      REQUIRE(ul.count(L.join(x, p.c_l)) == 1);
    }
  }
}

TEST_CASE("boundary length identity") {
  for (const auto& L : {make_grid(2, 5), make_grid(3, 3), build_diagram(fixtures::s7_up())}) {
    const auto p = rectangular_profile(L);
    const int lhs = L.interval_length(L.bottom(), p.c_l) - L.interval_length(L.bottom(), p.c_r);
    const int rhs = L.interval_length(p.c_r, L.top()) - L.interval_length(p.c_l, L.top());
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("classification: grids have no middle elements") {
  const auto L = make_grid(3, 3);
  const auto cls = classify_elements(L);
  for (int x = 0; x < L.size(); ++x) {
    REQUIRE((cls[x] & kMiddle) == 0);
    REQUIRE(cls[x] != 0);
  }
}

TEST_CASE("classification of S7") {
  const auto S7 = build_diagram(fixtures::s7_up());
  const auto cls = classify_elements(S7);
  REQUIRE(cls[4] == kMiddle);         // the apex
  REQUIRE(cls[1] == kMeetReducible);  // left leg foot
  REQUIRE(cls[2] == kMeetReducible);  // right leg foot
  REQUIRE(cls[0] == kMeetReducible);  // bottom
  REQUIRE((cls[3] & kUpperBoundary) != 0);
  REQUIRE((cls[5] & kUpperBoundary) != 0);
  REQUIRE((cls[6] & kUpperBoundary) != 0);
}

TEST_CASE("a triple of covers below one element generates S7") {
  const auto S7 = build_diagram(fixtures::s7_up());
  const auto& ds = S7.down(6);
  REQUIRE(ds.size() == 3);
  const auto sub = generated_sublattice(S7, {ds[0], ds[1], ds[2]});
  REQUIRE(sub.size() == 7);  // all of S7
}

TEST_CASE("sps violations") {
  REQUIRE_FALSE(sps_violation(build_diagram(fixtures::s7_up())).has_value());
  REQUIRE_FALSE(sps_violation(make_grid(4, 4)).has_value());
  REQUIRE(sps_violation(build_diagram(fixtures::m3_up())).has_value());  // not slim
  REQUIRE(sps_violation(build_diagram(fixtures::n5_up())).has_value());  // not semimodular
}

TEST_CASE("boolean lattice helper") {
  const auto B3 = make_boolean(3);
  REQUIRE(B3.size() == 8);
  REQUIRE(B3.length() == 3);
  REQUIRE(is_slim(B3));  // B3 has no M3 sublattice
  REQUIRE(is_semimodular(B3));
}

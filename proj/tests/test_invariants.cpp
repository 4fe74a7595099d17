#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linklab/invariants.hpp"
#include "linklab/moves.hpp"
#include "linklab/pd_format.hpp"
#include "oracles.hpp"

using namespace linklab;

namespace {

PlanarDiagram trefoil() { return oracles::braid_closure({1, 1, 1}, 2, "K"); }
PlanarDiagram figure8() { return oracles::braid_closure({1, -2, 1, -2}, 3, "K"); }
PlanarDiagram hopf() { return oracles::braid_closure({1, 1}, 2); }
PlanarDiagram unknot0() { return parse_diagram("C K: 1\n"); }

LaurentPoly poly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p = p + LaurentPoly::monomial(c, e);
  return p;
}

}  // namespace

TEST_CASE("linking numbers") {
  PlanarDiagram h = hopf();
  const auto& names = h.components();
  REQUIRE(names.size() == 2);
  const std::string a = names[0].name, b = names[1].name;
  // braid closure of two positive generator letters: both crossings negative
  CHECK(linking_number(h, a, b) == -1);
  CHECK(linking_number(h, b, a) == -1);
  PlanarDiagram split = parse_diagram("C A: 1\nC B: 2\n");
  CHECK(linking_number(split, "A", "B") == 0);
  CHECK_THROWS_AS(linking_number(h, a, a), DiagramError);
}

TEST_CASE("Seifert algorithm counts") {
  SUBCASE("0-crossing unknot: one circle, genus 0") {
    SeifertData s = seifert_algorithm(unknot0());
    CHECK(s.seifert_circle_count == 1);
    CHECK(s.genus == 0);
    CHECK(seifert_matrix(s).rows() == 0);
  }
  SUBCASE("trefoil: 2 circles, genus 1") {
    SeifertData s = seifert_algorithm(trefoil());
    CHECK(s.seifert_circle_count == 2);
    CHECK(s.crossing_count == 3);
    CHECK(s.genus == 1);
    CHECK(seifert_matrix(s).rows() == 2);
  }
  SUBCASE("kinked unknot from one R1: 2 circles, genus 0") {
    PlanarDiagram k = parse_diagram("X 1 u_in=1 o_in=2 u_out=2 o_out=1 sign=+\nC K: 1 2\n");
    SeifertData s = seifert_algorithm(k);
    CHECK(s.seifert_circle_count == 2);
    CHECK(s.genus == 0);
  }
  SUBCASE("disconnected input is rejected") {
    CHECK_THROWS_AS(seifert_algorithm(parse_diagram("C A: 1\nC B: 2\n")), DiagramError);
  }
}

TEST_CASE("determinant_from_seifert on pinned matrices") {
  CHECK(determinant_from_seifert(IntMatrix(0, 0)) == 1);
  IntMatrix w = IntMatrix::from_rows({{-1, 1}, {0, -1}});
  CHECK(determinant_from_seifert(w) == 3);
  IntMatrix v = IntMatrix::from_rows({{0, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, -1, 0}, {0, 0, 1, -1}});
  CHECK(determinant_from_seifert(v) == 13);
}

TEST_CASE("alexander_from_seifert on pinned matrices") {
  CHECK(alexander_from_seifert(IntMatrix(0, 0)) == LaurentPoly(1));
  IntMatrix w = IntMatrix::from_rows({{-1, 1}, {0, -1}});
  CHECK(alexander_from_seifert(w).equals_up_to_units(poly({{2, 1}, {1, -1}, {0, 1}})));
  IntMatrix v = IntMatrix::from_rows({{0, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, -1, 0}, {0, 0, 1, -1}});
  LaurentPoly a = alexander_from_seifert(v);
  CHECK(a.evaluate(-1) == 13);
}

TEST_CASE("knot pipeline: trefoil and figure eight") {
  CHECK(knot_determinant(unknot0()) == 1);
  CHECK(knot_determinant(trefoil()) == 3);
  CHECK(knot_alexander(trefoil()).equals_up_to_units(poly({{2, 1}, {1, -1}, {0, 1}})));
  CHECK(knot_determinant(figure8()) == 5);
  CHECK(knot_alexander(figure8()).equals_up_to_units(poly({{2, 1}, {1, -3}, {0, 1}})));
}

TEST_CASE("oracles agree on small knots") {
  CHECK(oracles::wirtinger_alexander(trefoil()).equals_up_to_units(poly({{2, 1}, {1, -1}, {0, 1}})));
  CHECK(oracles::wirtinger_alexander(figure8())
            .equals_up_to_units(poly({{2, 1}, {1, -3}, {0, 1}})));
  CHECK(oracles::goeritz_determinant(trefoil()) == 3);
  CHECK(oracles::goeritz_determinant(figure8()) == 5);
}

TEST_CASE("pipeline matches oracles on torus and twist knots") {
  std::vector<std::vector<int>> words = {
      {1, 1, 1},          // trefoil
      {1, 1, 1, 1, 1},    // cinquefoil, det 5, Alexander t^4-t^3+t^2-t+1
      {1, 1, 1, 1, 1, 1, 1},  // (2,7) torus, det 7
      {-1, -1, -1},       // mirror trefoil
      {1, -2, 1, -2},     // figure eight
      {1, 1, -2, 1, -2},  // 5_2-like closure
      {1, 1, 1, -2, 1, -2},
      {1, 1, -2, -2, 1, -2},
  };
  for (const auto& w : words) {
    PlanarDiagram k = oracles::braid_closure(w, 1 + *std::max_element(w.begin(), w.end(),
                                              [](int a, int b) { return std::abs(a) < std::abs(b); })
                                              , "K");
    if (k.components().size() != 1) continue;  // only knots here
    CAPTURE(w);
    LaurentPoly mine = knot_alexander(k);
    LaurentPoly theirs = oracles::wirtinger_alexander(k);
    CHECK(mine.equals_up_to_units(theirs));
    CHECK(knot_determinant(k) == oracles::goeritz_determinant(k));
    // classical sanity: |Alexander(1)| = 1 for knots
    CHECK(std::abs(mine.evaluate(1)) == 1);
  }
}

TEST_CASE("component determinants through sublinks") {
  PlanarDiagram h = hopf();
  for (const auto& comp : h.components()) CHECK(component_determinant(h, comp.name) == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linklab/diagram.hpp"
#include "linklab/pd_format.hpp"

using namespace linklab;

namespace {

const char* kHopf = R"(# positive Hopf link
X 1 u_in=4 o_in=1 u_out=3 o_out=2 sign=+
X 2 u_in=2 o_in=3 u_out=1 o_out=4 sign=+
C A: 1 2
C B: 3 4
)";

const char* kTrefoil = R"(X 1 u_in=4 o_in=1 u_out=5 o_out=2 sign=-
X 2 u_in=2 o_in=5 u_out=3 o_out=6 sign=-
X 3 u_in=6 o_in=3 u_out=1 o_out=4 sign=-
C K: 1 2 3 4 5 6
)";

const char* kKink = R"(X 1 u_in=1 o_in=2 u_out=2 o_out=1 sign=+
C K: 1 2
)";

}  // namespace

TEST_CASE("parsing the Hopf encoding") {
  PlanarDiagram d = parse_diagram(kHopf);
  CHECK(d.arc_count() == 4);
  CHECK(d.crossings().size() == 2);
  CHECK(d.components().size() == 2);
  CHECK(d.component_of_arc(1) == "A");
  CHECK(d.component_of_arc(3) == "B");
}

TEST_CASE("zero-crossing unknot") {
  PlanarDiagram d = parse_diagram("C K: 1\n");
  CHECK(d.arc_count() == 1);
  CHECK(d.crossings().empty());
  CHECK(split_partition(d).size() == 1);
}

TEST_CASE("arc multiplicity error carries the bad arc") {
  const char* bad = R"(X 1 u_in=3 o_in=1 u_out=3 o_out=2 sign=+
X 2 u_in=2 o_in=3 u_out=1 o_out=4 sign=+
C A: 1 2
C B: 3 4
)";
  CHECK_THROWS_AS(parse_diagram(bad), DiagramError);
}

TEST_CASE("syntax errors report line numbers") {
  try {
    parse_diagram("X 1 nonsense\n");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("crossing change is an involution and flips handedness") {
  PlanarDiagram d = parse_diagram(kHopf);
  PlanarDiagram once = crossing_change(d, 1);
  CHECK(once.crossing_by_id(1).sign == Sign::negative);
  CHECK(once.crossing_by_id(1).under_in == 1);
  PlanarDiagram twice = crossing_change(once, 1);
  CHECK(twice == d);
  CHECK_THROWS_AS(crossing_change(d, 99), DiagramError);
}

TEST_CASE("classify_crossing tags strand owners") {
  PlanarDiagram hopf = parse_diagram(kHopf);
  CHECK(classify_crossing(hopf, 1) == ComponentPairTag("A", "B"));
  PlanarDiagram tre = parse_diagram(kTrefoil);
  CHECK(classify_crossing(tre, 2) == ComponentPairTag("K", "K"));
  CHECK(classify_crossing(tre, 2).self());
}

TEST_CASE("sublink keeps, smooths, renumbers") {
  PlanarDiagram hopf = parse_diagram(kHopf);
  SUBCASE("keep all is identity up to structure") {
    PlanarDiagram s = sublink(hopf, {"A", "B"});
    CHECK(structurally_equal(s, hopf));
  }
  SUBCASE("keep one component of the Hopf link gives the 0-crossing unknot") {
    PlanarDiagram s = sublink(hopf, {"A"});
    CHECK(s.crossings().empty());
    CHECK(s.arc_count() == 1);
    CHECK(s.components().size() == 1);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(sublink(hopf, {}), DiagramError);
    CHECK_THROWS_AS(sublink(hopf, {"Z"}), DiagramError);
  }
}

TEST_CASE("sublink nesting: B subset of A") {
  PlanarDiagram tre = parse_diagram(kTrefoil);
  PlanarDiagram hopf = parse_diagram(kHopf);
  PlanarDiagram once = sublink(hopf, {"B"});
  PlanarDiagram twice = sublink(sublink(hopf, {"A", "B"}), {"B"});
  CHECK(structurally_equal(once, twice));
  CHECK(structurally_equal(sublink(tre, {"K"}), tre));
}

TEST_CASE("visibly split detection") {
  PlanarDiagram two = parse_diagram("C A: 1\nC B: 2\n");
  CHECK(split_partition(two).size() == 2);
  CHECK(is_fully_split(two));
  PlanarDiagram hopf = parse_diagram(kHopf);
  CHECK(split_partition(hopf).size() == 1);
  CHECK_FALSE(is_visibly_split(hopf));
}

TEST_CASE("canonical form: same diagram under rotation of labels") {
  PlanarDiagram tre = parse_diagram(kTrefoil);
  // relabel arcs by shifting the cycle start; same knot diagram
  const char* shifted = R"(X 1 u_in=2 o_in=5 u_out=3 o_out=6 sign=-
X 2 u_in=6 o_in=3 u_out=1 o_out=4 sign=-
X 3 u_in=4 o_in=1 u_out=5 o_out=2 sign=-
C K: 1 2 3 4 5 6
)";
  CHECK(structurally_equal(tre, parse_diagram(shifted)));
  CHECK(canonical_key(tre) == canonical_key(parse_diagram(shifted)));
}

TEST_CASE("canonical form distinguishes sign data") {
  PlanarDiagram tre = parse_diagram(kTrefoil);
  PlanarDiagram changed = crossing_change(tre, 1);
  CHECK_FALSE(structurally_equal(tre, changed));
}

TEST_CASE("kink diagram parses and classifies") {
  PlanarDiagram k = parse_diagram(kKink);
  CHECK(k.arc_count() == 2);
  CHECK(classify_crossing(k, 1) == ComponentPairTag("K", "K"));
}

TEST_CASE("serialize then parse is structurally equal") {
  for (const char* text : {kHopf, kTrefoil, kKink}) {
    PlanarDiagram d = parse_diagram(text);
    PlanarDiagram back = parse_diagram(serialize_diagram(d));
    CHECK(structurally_equal(d, back));
  }
}

TEST_CASE("rename components") {
  PlanarDiagram hopf = parse_diagram(kHopf);
  PlanarDiagram renamed = rename_components(hopf, {{"A", "B"}, {"B", "A"}});
  CHECK(renamed.component_of_arc(1) == "B");
  CHECK(structurally_equal(hopf, rename_components(renamed, {{"A", "B"}, {"B", "A"}})));
}

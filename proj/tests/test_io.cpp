#include <sstream>

#include "digitop/io.hpp"
#include "doctest.h"

using namespace digitop;

TEST_CASE("point files") {
  std::istringstream in("# ring\n0 0\n\n1 0   # trailing\n  2 -3\n1 0\n");
  const PointSet m = io::parse_points(in, "in");
  CHECK(m == PointSet{{0, 0}, {1, 0}, {2, -3}});

  std::istringstream mixed("0 0\n1 0 0\n");
  try {
    io::parse_points(mixed, "mixed.txt");
    FAIL("expected InputError");
  } catch (const io::InputError& e) {
    CHECK(std::string(e.what()) == "mixed.txt:2: expected 2 coordinates, got 3");
  }
  std::istringstream word("0 0\n# ok\n1 1x\n");
  CHECK_THROWS_WITH_AS(io::parse_points(word, "w"), "w:3: '1x' is not an integer", io::InputError);
  std::istringstream three("0 0\n");
  CHECK_THROWS_AS(io::parse_points(three, "t", 3), io::InputError);
  std::istringstream empty("# nothing\n");
  CHECK(io::parse_points(empty, "e").empty());

  std::ostringstream out;
  io::write_points(out, m);
  std::istringstream back(out.str());
  CHECK(io::parse_points(back, "back") == m);
}

TEST_CASE("adjacency arguments") {
  CHECK(io::parse_adjacency("axis", 3) == AdjacencySpec::axis(3));
  CHECK(io::parse_adjacency("full", 2) == AdjacencySpec::full(2));
  CHECK_THROWS_AS(io::parse_adjacency("diag", 2), io::InputError);
  CHECK_THROWS_AS(io::parse_adjacency("custom:/nonexistent/file", 2), io::InputError);
  std::istringstream offs("1 0\n-1 0\n0 1\n0 -1\n1 1\n-1 -1\n");
  const auto spec = AdjacencySpec::custom(2, io::parse_offsets(offs, "o", 2));
  CHECK(spec.offsets().size() == 6);
  CHECK(io::adjacency_json(spec).contains("custom"));
  CHECK(io::adjacency_json(AdjacencySpec::axis(2)) == "axis");
}

TEST_CASE("json round trips") {
  const Cube c({1, 2, 3}, {0, 2});
  CHECK(io::cube_from_json(io::to_json(c)) == c);
  CHECK(io::to_json(c).dump() == R"({"axes":[0,2],"base":[1,2,3]})");

  const SeparationWitness w{Cube({0, 0, 0}, {0, 1, 2}), Cube({0, 1, 0}, {2}), {1, 0, 0}, {0, -1, 0}, {0, 1, 0}};
  const SeparationWitness back = io::separation_witness_from_json(io::to_json(w));
  CHECK(back.cube == w.cube);
  CHECK(back.cstar == w.cstar);
  CHECK(back.tau1 == w.tau1);
  CHECK(back.tau2 == w.tau2);
  CHECK(back.point == w.point);

  const DoublePointWitness d{{0, 0}, {1, 1}, {1, 0}, {0, 1}, {-1, 0}};
  CHECK(io::double_point_from_json(io::to_json(d)) == d);

  PropertyVerdict v;
  v.holds = false;
  v.cube = Cube({0, 0}, {0, 1});
  v.points = {{0, 0}, {1, 1}};
  v.note = "x";
  const PropertyVerdict pv = io::property_from_json(io::to_json(v));
  CHECK_FALSE(pv.holds);
  CHECK(pv.cube == v.cube);
  CHECK(pv.points == v.points);
}

TEST_CASE("complex export") {
  const AdjacencyPair pair{AdjacencySpec::axis(2), AdjacencySpec::full(2)};
  const auto k = build_complex(PointSet{{0, 0}, {1, 0}}, pair);
  const auto j = io::complex_json(k);
  CHECK(j["n"] == 2);
  CHECK(j["vertices"].dump() == "[[0,0],[1,0],[2,0]]");
  CHECK(j["simplices"].dump() == "[[0],[0,1],[1],[1,2],[2]]");
  CHECK(j["provenance"].dump() == R"({"1":{"axes":[0],"base":[0,0]}})");

  std::ostringstream bad;
  CHECK_THROWS_AS(io::write_off(bad, k), std::invalid_argument);

  SimplicialComplex t;
  t.n = 3;
  t.insert_with_faces(Simplex({{-1, 0, 0}, {2, 0, 0}, {0, 3, 0}}));
  t.insert_with_faces(Simplex({{8, 8, 8}}));
  std::ostringstream off;
  const auto warnings = io::write_off(off, t);
  CHECK(off.str() == "OFF\n4 1 0\n-0.5 0 0\n0 1.5 0\n1 0 0\n4 4 4\n3 0 1 2\n");
  REQUIRE(warnings.size() == 1);
}

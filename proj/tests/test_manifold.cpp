#include <functional>

#include "digitop/manifold.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace digitop;

namespace {

using Adj = std::function<bool(const oracle::Pt&, const oracle::Pt&)>;

PointSet to_set(const std::vector<oracle::Pt>& pts) {
  PointSet s;
  for (const auto& p : pts) s.insert(LatticePoint(std::span<const int>(p)));
  return s;
}

std::vector<oracle::Pt> to_raw(const PointSet& s) {
  std::vector<oracle::Pt> out;
  for (const auto& p : s) out.push_back(p.to_vector());
  return out;
}

// Properties 1-3 straight from the definition, on raw vectors.
bool oracle_props_123(const std::vector<oracle::Pt>& m, Adj alpha, Adj beta) {
  if (oracle::component_sizes(m, alpha).size() != 1) return false;
  const std::size_t n = m.front().size();
  oracle::Pt lo = m.front(), hi = m.front();
  for (const auto& p : m)
    for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], p[i] - 1), hi[i] = std::max(hi[i], p[i]);
  for (const auto& base : oracle::box(lo, hi)) {
    std::vector<oracle::Pt> inside;
    for (const auto& d : oracle::box(oracle::Pt(n, 0), oracle::Pt(n, 1))) {
      oracle::Pt v = base;
      for (std::size_t i = 0; i < n; ++i) v[i] += d[i];
      if (oracle::contains(m, v)) inside.push_back(v);
    }
    if (oracle::component_sizes(inside, alpha).size() > 1) return false;
  }
  for (const auto& p : m) {
    const auto parts = oracle::local_parts(p, m, beta);
    if (parts.size() != 2) return false;
    for (const auto& q : m) {
      if (!alpha(p, q)) continue;
      for (const auto& part : parts) {
        bool touch = false;
        for (const auto& x : part) touch = touch || beta(q, x);
        if (!touch) return false;
      }
    }
  }
  return true;
}

const AdjacencyPair p84{AdjacencySpec::full(2), AdjacencySpec::axis(2)};
const AdjacencyPair p48{AdjacencySpec::axis(2), AdjacencySpec::full(2)};
const AdjacencyPair p88{AdjacencySpec::full(2), AdjacencySpec::full(2)};
const AdjacencyPair p44{AdjacencySpec::axis(2), AdjacencySpec::axis(2)};
const AdjacencyPair p6_26{AdjacencySpec::axis(3), AdjacencySpec::full(3)};
const AdjacencyPair p26_6{AdjacencySpec::full(3), AdjacencySpec::axis(3)};

}  // namespace

TEST_CASE("local components") {
  CHECK(local_components({0, 0}, PointSet{{0, 0}}, p84).size() == 1);
  const PointSet line{{-2, 0}, {-1, 0}, {0, 0}, {1, 0}, {2, 0}};
  auto parts = local_components({0, 0}, line, p84);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 3);
  CHECK(parts[1].size() == 3);
  const PointSet spur{{0, 0}, {1, 0}, {2, 0}};
  CHECK(local_components({2, 0}, spur, p84).size() == 1);
}

TEST_CASE("rectangle boundaries") {
  // Full rings are 4-curves: certified under (4,8).
  for (auto [w, h] : {std::pair{5, 5}, std::pair{7, 3}, std::pair{4, 4}, std::pair{3, 3}, std::pair{7, 7}}) {
    const auto raw = oracle::rect_ring(w, h);
    CHECK(oracle_props_123(raw, oracle::axis_adj, oracle::full_adj));
    const ManifoldReport rep = check_manifold(to_set(raw), p48);
    CHECK(rep.certified());
    CHECK(rep.local.size() == raw.size());
  }
  // Under (8,4) the corner is redundant: q = (0,1) is an alpha-neighbour of
  // p = (1,0) but has no axis neighbour on the outer side of p.
  for (auto [w, h] : {std::pair{5, 5}, std::pair{7, 3}}) {
    const auto raw = oracle::rect_ring(w, h);
    CHECK_FALSE(oracle_props_123(raw, oracle::full_adj, oracle::axis_adj));
    const ManifoldReport rep = check_manifold(to_set(raw), p84);
    CHECK(rep.alpha_connected.holds);
    CHECK(rep.two_components.holds);
    CHECK_FALSE(rep.component_unity.holds);
    CHECK(rep.first_failure() == "component-unity");
  }
  // With the corners cut off the ring is an 8-curve.
  for (auto [w, h] : {std::pair{5, 5}, std::pair{7, 3}, std::pair{6, 4}}) {
    auto raw = oracle::rect_ring(w, h);
    std::erase_if(raw, [&](const oracle::Pt& p) { return (p[0] == 0 || p[0] == w - 1) && (p[1] == 0 || p[1] == h - 1); });
    CHECK(oracle_props_123(raw, oracle::full_adj, oracle::axis_adj));
    CHECK(check_manifold(to_set(raw), p84).certified());
  }
  // A diamond is an 8-curve but no 4-curve.
  const std::vector<oracle::Pt> diamond{{0, 0}, {1, 1}, {2, 0}, {1, -1}};
  CHECK_FALSE(oracle_props_123(diamond, oracle::axis_adj, oracle::full_adj));
  CHECK_FALSE(check_manifold(to_set(diamond), p48).certified());
  CHECK(oracle_props_123(diamond, oracle::full_adj, oracle::axis_adj));
  CHECK(check_manifold(to_set(diamond), p84).certified());
}

TEST_CASE("deleting any point breaks certification") {
  for (const auto& raw : {oracle::rect_ring(5, 5), oracle::rect_ring(7, 3)}) {
    const PointSet m = to_set(raw);
    for (const auto& p : m) {
      PointSet cut = m;
      cut.erase(p);
      const ManifoldReport rep = check_manifold(cut, p48);
      CHECK_FALSE(rep.certified());
      CHECK(oracle_props_123(to_raw(cut), oracle::axis_adj, oracle::full_adj) == rep.certified());
    }
  }
}

TEST_CASE("box surface is a 2-manifold under (6,26) but not (26,6)") {
  const auto raw = oracle::box_shell(3, 3, 3);
  REQUIRE(raw.size() == 26);
  const PointSet m = to_set(raw);
  CHECK(oracle_props_123(raw, oracle::axis_adj, oracle::full_adj));
  CHECK(check_manifold(m, p6_26).certified());

  CHECK_FALSE(oracle_props_123(raw, oracle::full_adj, oracle::axis_adj));
  const ManifoldReport bad = check_manifold(m, p26_6);
  CHECK(bad.alpha_connected.holds);
  CHECK(bad.cube_connected.holds);
  CHECK(bad.two_components.holds);
  CHECK_FALSE(bad.component_unity.holds);
  REQUIRE(bad.component_unity.points.size() == 2);
  const LatticePoint p = bad.component_unity.points[0], q = bad.component_unity.points[1];
  CHECK(p == LatticePoint{0, 0, 0});
  // Replay: q misses one of the local sides of p.
  const auto& sides = bad.local.at(p);
  auto touches = [&](const PointSet& s) {
    for (const auto& x : s)
      if (AdjacencySpec::axis(3).adjacent(q, x)) return true;
    return false;
  };
  const bool both = touches(sides.first) && touches(sides.second);
  CHECK_FALSE(both);

  const auto bigger = to_set(oracle::box_shell(5, 4, 3));
  CHECK(check_manifold(bigger, p6_26).certified());
}

TEST_CASE("separation failure is reported with a witness") {
  // Not a closed surface, so property 2 fails too; property 4 is decided
  // on its own.
  const PointSet plate{{1, 0, 0}, {1, 0, 1}, {0, 1, 0}, {0, 1, 1}};
  const ManifoldReport rep = check_manifold(plate, p26_6);
  CHECK_FALSE(rep.separation.holds);
  REQUIRE(rep.separation.separation.has_value());
  CHECK(replay_separation_witness(plate, p26_6, Region::around(plate, 2), *rep.separation.separation));
  CHECK_THROWS_AS(check_manifold(PointSet{}, p84), std::invalid_argument);
  CHECK_THROWS_AS(check_manifold(plate, p26_6, 1), std::invalid_argument);
}

TEST_CASE("global sides") {
  for (auto [w, h] : {std::pair{5, 5}, std::pair{7, 7}, std::pair{7, 3}}) {
    const PointSet m = to_set(oracle::rect_ring(w, h));
    const auto sides = global_sides(m, p48, check_manifold(m, p48));
    // Oracle: omega(M)\M, which misses interior points two steps from M.
    const auto ring = oracle::rect_ring(w, h);
    std::vector<oracle::Pt> shell;
    for (const auto& p : oracle::box({-1, -1}, {w, h})) {
      bool near = false;
      for (const auto& q : ring) near = near || oracle::full_adj(p, q);
      if (near && !oracle::contains(ring, p)) shell.push_back(p);
    }
    const int inner = (w - 2) * (h - 2) - std::max(0, w - 4) * std::max(0, h - 4);
    CHECK(oracle::component_sizes(shell, oracle::full_adj) ==
          std::vector<int>{inner, static_cast<int>(shell.size()) - inner});
    CHECK(sides.d.size() == static_cast<std::size_t>(inner));
    CHECK(sides.c.count({-1, -1}));
    CHECK(sides.c.size() + sides.d.size() == shell.size());
  }
  const PointSet box = to_set(oracle::box_shell(3, 3, 3));
  const auto sides = global_sides(box, p6_26, check_manifold(box, p6_26));
  CHECK(sides.d == PointSet{{1, 1, 1}});
  CHECK(sides.c.size() == 5 * 5 * 5 - 27);

  CHECK_THROWS_AS(global_sides(box, p26_6, check_manifold(box, p26_6)), std::invalid_argument);
}

TEST_CASE("simple points") {
  const PointSet arc{{0, 0}, {1, 1}, {2, 1}, {3, 0}};
  const Region r = Region::around(arc, 2);
  CHECK(is_simple_point({0, 0}, arc, p84, r));
  CHECK(is_simple_point({3, 0}, arc, p84, r));
  CHECK_FALSE(is_simple_point({1, 1}, arc, p84, r));
  CHECK_FALSE(is_simple_point({0, 0}, PointSet{{0, 0}}, p84, Region({-2, -2}, {2, 2})));
  CHECK_THROWS(is_simple_point({9, 9}, arc, p84, r));

  // Corners of the full ring are simple under (8,4), one reason it is no 8-curve.
  const PointSet ring = to_set(oracle::rect_ring(5, 5));
  CHECK(is_simple_point({0, 0}, ring, p84, Region::around(ring, 2)));

  for (const auto& [m, pair] : {std::pair{ring, p48},
                                std::pair{to_set(oracle::box_shell(3, 3, 3)), p6_26}}) {
    const Region reg = Region::around(m, 2);
    for (const auto& p : m) CHECK_FALSE(is_simple_point(p, m, pair, reg));
  }
}

TEST_CASE("double points") {
  // Oracle: every (p, q, r) in the 3x3 block around z with unit tau.
  auto brute = [](Adj alpha, Adj beta) {
    std::set<std::vector<int>> found;
    const oracle::Pt z{0, 0};
    const auto block = oracle::box({-2, -2}, {2, 2});
    for (const auto& p : block)
      for (const auto& q : block)
        for (const auto& r : block) {
          if (!beta(z, p) || !oracle::axis_adj(z, q) || !alpha(p, q)) continue;
          if (!beta(z, r) || !oracle::axis_adj(p, r) || !alpha(q, r)) continue;
          oracle::Pt tau{q[0] - p[0], q[1] - p[1]};
          if (std::abs(tau[0]) + std::abs(tau[1]) != 1) continue;
          if (r[0] + tau[0] != 0 || r[1] + tau[1] != 0) continue;
          found.insert({p[0], p[1], q[0], q[1], r[0], r[1]});
        }
    return found;
  };
  auto mine = [](const AdjacencyPair& pair) {
    std::set<std::vector<int>> found;
    for (const auto& w : double_points({0, 0}, pair)) {
      CHECK(validate_double_point(w, pair));
      found.insert({w.p[0], w.p[1], w.q[0], w.q[1], w.r[0], w.r[1]});
    }
    return found;
  };
  CHECK(mine(p88) == brute(oracle::full_adj, oracle::full_adj));
  CHECK(mine(p48) == brute(oracle::axis_adj, oracle::full_adj));
  CHECK(mine(p84) == brute(oracle::full_adj, oracle::axis_adj));
  CHECK(mine(p44) == brute(oracle::axis_adj, oracle::axis_adj));
  CHECK(mine(p48).empty());
  CHECK(mine(p44).empty());

  const DoublePointWitness classic{{0, 0}, {1, 1}, {1, 0}, {0, 1}, {0, -1}};
  CHECK(validate_double_point(classic, p88));
  CHECK_FALSE(validate_double_point(classic, p48));
  const auto all = double_points({0, 0}, p88);
  CHECK(std::find(all.begin(), all.end(), classic) != all.end());

  // Translating z translates every witness.
  const Translation t{4, -7};
  std::vector<DoublePointWitness> moved;
  for (auto w : all) moved.push_back({w.z + t, w.p + t, w.q + t, w.r + t, w.tau});
  std::sort(moved.begin(), moved.end());
  CHECK(double_points(LatticePoint{0, 0} + t, p88) == moved);
}

TEST_CASE("separating and good pairs in the plane") {
  auto g48 = is_good_pair(p48, 2, 100000);
  CHECK(g48.verdict == Decision::yes);
  CHECK(g48.separating.n_used >= 2);
  auto g84 = is_good_pair(p84, 2, 100000);
  CHECK(g84.verdict == Decision::yes);
  auto g88 = is_good_pair(p88, 2, 100000);
  CHECK(g88.verdict == Decision::no);
  CHECK_FALSE(g88.doubles.empty());
  for (const auto& w : g88.doubles) CHECK(validate_double_point(w, p88));
  auto g44 = is_good_pair(p44, 2, 100000);
  CHECK(g44.verdict == Decision::no);
  CHECK_FALSE(g44.separating.sphere.alpha_connected.holds);

  // A tiny budget leaves the contraction undecided.
  auto starved = is_separating_pair(p48, 1, 0);
  CHECK(starved.verdict == Decision::unknown);
  CHECK_THROWS(is_separating_pair(p48, 0, 10));
}

TEST_CASE("good pairs in space") {
  CHECK(is_good_pair(p6_26, 2, 100000).verdict == Decision::yes);
  CHECK(is_good_pair(p26_6, 2, 100000).verdict == Decision::yes);
  const AdjacencyPair p26_26{AdjacencySpec::full(3), AdjacencySpec::full(3)};
  CHECK(is_good_pair(p26_26, 2, 100000).verdict == Decision::no);
}

TEST_CASE("rotation regularity") {
  CHECK(is_regular_rotation(AdjacencySpec::axis(3)));
  CHECK(is_regular_rotation(AdjacencySpec::full(3)));
  CHECK_FALSE(is_regular_rotation(
      AdjacencySpec::custom(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}})));
  // 18-adjacency: faces and edges of the unit cube.
  std::vector<Translation> offs;
  for (const auto& t : neighbors(AdjacencySpec::full(3), {0, 0, 0}))
    if (std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]) <= 2) offs.push_back(t - LatticePoint{0, 0, 0});
  CHECK(is_regular_rotation(AdjacencySpec::custom(3, offs)));
}

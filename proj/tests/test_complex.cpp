#include <random>

#include "digitop/complex.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace digitop;

namespace {

const AdjacencyPair p84{AdjacencySpec::full(2), AdjacencySpec::axis(2)};
const AdjacencyPair p48{AdjacencySpec::axis(2), AdjacencySpec::full(2)};
const AdjacencyPair p88{AdjacencySpec::full(2), AdjacencySpec::full(2)};
const AdjacencyPair p6_26{AdjacencySpec::axis(3), AdjacencySpec::full(3)};

PointSet to_set(const std::vector<oracle::Pt>& pts) {
  PointSet s;
  for (const auto& p : pts) s.insert(LatticePoint(std::span<const int>(p)));
  return s;
}

// Independent enumeration: every strict chain of cubes that pass the test.
// Cubes are (base, mask) on raw vectors; the test is re-derived here.
struct RawCube {
  oracle::Pt base;
  unsigned mask;
  bool operator<(const RawCube& o) const { return std::tie(base, mask) < std::tie(o.base, o.mask); }
};

std::vector<oracle::Pt> raw_vertices(const RawCube& c) {
  std::vector<oracle::Pt> out;
  const std::size_t n = c.base.size();
  for (unsigned sub = 0; sub < (1u << n); ++sub) {
    if ((sub & ~c.mask) != 0) continue;
    oracle::Pt v = c.base;
    for (std::size_t a = 0; a < n; ++a) v[a] += (sub >> a) & 1u;
    out.push_back(v);
  }
  return out;
}

template <class Adj>
bool raw_test(const RawCube& c, const std::vector<oracle::Pt>& m, Adj alpha, Adj beta) {
  const auto verts = raw_vertices(c);
  bool any = false, all = true;
  for (const auto& v : verts) {
    any = any || oracle::contains(m, v);
    all = all && oracle::contains(m, v);
  }
  if (!any) return false;
  if (c.mask == 0) return true;
  int k = 0;
  for (unsigned x = c.mask; x; x &= x - 1) ++k;
  if (all && k >= 2) return true;
  for (const auto& p : verts) {
    oracle::Pt q = p;
    for (std::size_t a = 0; a < p.size(); ++a)
      if ((c.mask >> a) & 1u) q[a] = 2 * c.base[a] + 1 - p[a];
    const bool pin = oracle::contains(m, p), qin = oracle::contains(m, q);
    if (pin && qin && alpha(p, q)) return true;
    if (!pin && !qin && !beta(p, q)) return true;
  }
  return false;
}

bool raw_sub(const RawCube& a, const RawCube& b) {
  if ((a.mask & ~b.mask) != 0) return false;
  for (std::size_t i = 0; i < a.base.size(); ++i) {
    const int lo = b.base[i], hi = b.base[i] + ((b.mask >> i) & 1u);
    const int alo = a.base[i], ahi = a.base[i] + ((a.mask >> i) & 1u);
    if (alo < lo || ahi > hi) return false;
  }
  return true;
}

template <class Adj>
std::set<std::vector<std::vector<int>>> oracle_chains(const std::vector<oracle::Pt>& m, Adj alpha, Adj beta) {
  const std::size_t n = m.front().size();
  oracle::Pt lo = m.front(), hi = m.front();
  for (const auto& p : m)
    for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], p[i] - 1), hi[i] = std::max(hi[i], p[i]);
  std::vector<RawCube> good;
  for (const auto& base : oracle::box(lo, hi))
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      if (raw_test(RawCube{base, mask}, m, alpha, beta)) good.push_back({base, mask});
  std::sort(good.begin(), good.end());
  auto bary = [&](const RawCube& c) {
    std::vector<int> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = 2 * c.base[i] + static_cast<int>((c.mask >> i) & 1u);
    return h;
  };
  std::set<std::vector<std::vector<int>>> out;
  std::vector<std::size_t> chain;
  std::function<void()> grow = [&] {
    std::vector<std::vector<int>> s;
    for (auto i : chain) s.push_back(bary(good[i]));
    std::sort(s.begin(), s.end());
    out.insert(s);
    for (std::size_t j = 0; j < good.size(); ++j)
      if (good[j].mask != good[chain.back()].mask && raw_sub(good[chain.back()], good[j])) {
        chain.push_back(j);
        grow();
        chain.pop_back();
      }
  };
  for (std::size_t i = 0; i < good.size(); ++i) {
    chain = {i};
    grow();
  }
  return out;
}

std::set<std::vector<std::vector<int>>> as_raw(const SimplicialComplex& k) {
  std::set<std::vector<std::vector<int>>> out;
  for (const auto& s : k.simplices) {
    std::vector<std::vector<int>> v;
    for (const auto& h : s.vertices) v.push_back(h.to_vector());
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("barycenter test") {
  const Cube edge({0, 0}, {0});
  const Cube square({0, 0}, {0, 1});
  CHECK(test_T(edge, PointSet{{0, 0}, {1, 0}}, p84));
  CHECK(test_T(square, PointSet{{0, 0}, {1, 1}}, p84));
  CHECK_FALSE(test_T(square, PointSet{}, p88));
  // Complement diagonals are not axis-adjacent.
  CHECK(test_T(square, PointSet{}, p84));
  CHECK_FALSE(contributes(square, PointSet{}, p84));
  CHECK_FALSE(test_T(square, PointSet{{0, 0}, {1, 1}}, p48));
  CHECK(test_T(square, PointSet{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, p48));
  CHECK_THROWS_AS(test_T(Cube::point({0, 0}), PointSet{}, p84), std::invalid_argument);
}

TEST_CASE("complex inside one square") {
  const Cube square({0, 0}, {0, 1});
  auto k = build_complex_in_cube(square, PointSet{{0, 0}, {1, 0}}, p84);
  CHECK(k.vertices() == std::vector<HalfPoint>{{0, 0}, {1, 0}, {2, 0}});
  CHECK(k.f_vector() == std::vector<std::size_t>{3, 2});

  const PointSet l{{0, 0}, {1, 0}, {1, 1}};
  auto full = build_complex_in_cube(square, l, p84);
  CHECK(full.f_vector() == std::vector<std::size_t>{6, 9, 4});
  CHECK(full.simplices.count(Simplex({{0, 0}, {1, 0}, {1, 1}})));
  CHECK(euler_characteristic(full) == 1);

  // The square has a single free corner: its barycenter goes.
  auto reduced = reduce_complex(full, l, p84);
  CHECK(reduced.f_vector() == std::vector<std::size_t>{5, 4});
  CHECK_FALSE(reduced.provenance.count({1, 1}));
  CHECK(euler_characteristic(reduced) == 1);

  CHECK(build_complex_in_cube(square, PointSet{}, p84).empty());
}

TEST_CASE("global build") {
  auto two = build_complex(PointSet{{0, 0}, {1, 0}}, p48);
  CHECK(two.of_dim(1).size() == 2);
  CHECK(two.f_vector() == std::vector<std::size_t>{3, 2});
  auto one = build_complex(PointSet{{3, 3}}, p48);
  CHECK(one.f_vector() == std::vector<std::size_t>{1});
  CHECK(euler_characteristic(one) == 1);
  // Under (8,4) the free diagonals of the four squares pass the test; the
  // star collapses again in K'.
  auto star = build_complex(PointSet{{3, 3}}, p84);
  CHECK(star.f_vector() == std::vector<std::size_t>{5, 4});
  CHECK(reduce_complex(star, PointSet{{3, 3}}, p84).f_vector() == std::vector<std::size_t>{1});
  CHECK(build_complex(PointSet{}, p84).empty());

  const PointSet ring = to_set(oracle::rect_ring(5, 5));
  auto kp = reduce_complex(build_complex(ring, p48), ring, p48);
  CHECK(kp.f_vector() == std::vector<std::size_t>{32, 32});
  CHECK(euler_characteristic(kp) == 0);
}

TEST_CASE("complex equals the chain oracle") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = trial % 3 == 2 ? 3 : 2;
    std::vector<oracle::Pt> raw;
    for (int i = 0; i < (n == 2 ? 7 : 6); ++i) {
      oracle::Pt p(n);
      for (auto& x : p) x = static_cast<int>(rng() % 3);
      if (!oracle::contains(raw, p)) raw.push_back(p);
    }
    const PointSet m = to_set(raw);
    for (bool af : {false, true})
      for (bool bf : {false, true}) {
        const AdjacencyPair pair{af ? AdjacencySpec::full(n) : AdjacencySpec::axis(n),
                                 bf ? AdjacencySpec::full(n) : AdjacencySpec::axis(n)};
        auto alpha = af ? oracle::full_adj : oracle::axis_adj;
        auto beta = bf ? oracle::full_adj : oracle::axis_adj;
        const SimplicialComplex k = build_complex(m, pair);
        CHECK(as_raw(k) == oracle_chains(raw, alpha, beta));
        CHECK(verify_complex_axioms(k).ok);
        CHECK(check_lattice_correspondence(k, m).ok);
        // With both adjacencies axis-type free diagonals bridge alpha-components.
        if (af || bf)
          CHECK(skeleton_components(k).size() ==
                oracle::component_sizes(raw, af ? oracle::full_adj : oracle::axis_adj).size());
      }
  }
}

TEST_CASE("reduction follows the trace") {
  const PointSet ring = to_set(oracle::rect_ring(5, 5));
  const auto k = build_complex(ring, p84);
  const auto kp = reduce_complex(k, ring, p84);
  for (const auto& r : build_trace(ring, p84)) {
    CHECK(r.removed == (r.vertex && r.components == 1));
    const HalfPoint h = barycenter(r.cube);
    if (r.vertex) CHECK(k.provenance.count(h) == (cube_intersection(r.cube, ring).empty() ? 0u : 1u));
    if (r.removed) CHECK_FALSE(kp.provenance.count(h));
  }
  // Without barycenters reduction is the identity.
  const auto bare = build_complex(PointSet{{0, 0}}, p48);
  CHECK(reduce_complex(bare, PointSet{{0, 0}}, p48).simplices == bare.simplices);
}

TEST_CASE("axiom violations are caught") {
  SimplicialComplex cross;
  cross.n = 2;
  cross.insert_with_faces(Simplex({{0, 0}, {2, 2}}));
  cross.insert_with_faces(Simplex({{0, 2}, {2, 0}}));
  auto r = verify_complex_axioms(cross);
  CHECK_FALSE(r.ok);
  CHECK(r.failure == "disjointness");
  REQUIRE(r.second.has_value());

  SimplicialComplex open;
  open.simplices.insert(Simplex({{0, 0}, {2, 0}}));
  CHECK(verify_complex_axioms(open).failure == "faces");

  SimplicialComplex flat;
  flat.insert_with_faces(Simplex({{0, 0}, {1, 0}, {2, 0}}));
  CHECK(verify_complex_axioms(flat).failure == "independence");

  CHECK(verify_complex_axioms(SimplicialComplex{}).ok);
  CHECK(euler_characteristic(SimplicialComplex{}) == 0);
  CHECK(skeleton_components(SimplicialComplex{}).empty());

  SimplicialComplex through;
  through.insert_with_faces(Simplex({{0, 0}, {4, 0}}));
  auto c = check_lattice_correspondence(through, PointSet{{0, 0}, {2, 0}});
  CHECK_FALSE(c.ok);
  CHECK(c.point == HalfPoint{2, 0});
}

TEST_CASE("skeleton components follow alpha-components") {
  const PointSet two{{0, 0}, {1, 1}};
  CHECK(skeleton_components(build_complex(two, p84)).size() == 1);
  CHECK(skeleton_components(build_complex(two, p48)).size() == 2);
}

TEST_CASE("box surface complex") {
  const PointSet box = to_set(oracle::box_shell(3, 3, 3));
  const auto k = build_complex(box, p6_26);
  const auto kp = reduce_complex(k, box, p6_26);
  CHECK(verify_complex_axioms(k).ok);
  CHECK(euler_characteristic(k) == 2);
  CHECK(euler_characteristic(kp) == 2);
  CHECK(kp.dimension() == 2);
  // Barycentric subdivision of the 6 faces split into 4 squares each.
  CHECK(kp.f_vector() == std::vector<std::size_t>{98, 288, 192});
}

TEST_CASE("complement chambers") {
  const PointSet ring = to_set(oracle::rect_ring(5, 5));
  const Region r = Region::around(ring, 2);
  auto ch = complement_chambers(build_complex(ring, p48), ring, p48.beta, r);
  CHECK(ch.chambers == 2);
  CHECK(ch.matches_beta);
  CHECK(ch.of.at({2, 2}) != ch.of.at({-2, -2}));

  // With double points the background leaks through the diagonal crossings.
  const PointSet diamond{{0, 0}, {1, 1}, {2, 0}, {1, -1}};
  const Region rd = Region::around(diamond, 2);
  auto leak = complement_chambers(build_complex(diamond, p88), diamond, p88.beta, rd);
  CHECK(leak.chambers == 2);
  CHECK_FALSE(leak.matches_beta);
  CHECK(complement_components(p88.beta, diamond, rd).count() == 1);
}

TEST_CASE("build is translation equivariant") {
  const PointSet box = to_set(oracle::box_shell(3, 3, 3));
  const Translation t{2, -3, 1};
  PointSet moved;
  for (const auto& p : box) moved.insert(p + t);
  const auto a = translate(build_complex(box, p6_26), t);
  const auto b = build_complex(moved, p6_26);
  CHECK(a.simplices == b.simplices);
  CHECK(a.provenance == b.provenance);
}

#include "digitop/manifold.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace digitop {

namespace {

bool meets(const PointSet& a, const PointSet& b) {
  const PointSet& small = a.size() <= b.size() ? a : b;
  const PointSet& large = a.size() <= b.size() ? b : a;
  return std::any_of(small.begin(), small.end(), [&](const LatticePoint& p) { return large.count(p) > 0; });
}

bool has_neighbor_in(const AdjacencySpec& spec, const LatticePoint& q, const PointSet& s) {
  for (const auto& x : neighbors(spec, q))
    if (s.count(x)) return true;
  return false;
}

}  // namespace

std::string ManifoldReport::first_failure() const {
  if (!alpha_connected.holds) return "alpha-connected";
  if (!cube_connected.holds) return "cube-connected";
  if (!two_components.holds) return "two-components";
  if (!component_unity.holds) return "component-unity";
  if (!separation.holds) return "separation";
  return "";
}

std::vector<PointSet> local_components(const LatticePoint& p, const PointSet& m, const AdjacencyPair& pair) {
  std::vector<LatticePoint> free;
  for (auto& x : neighbors(AdjacencySpec::full(pair.dim()), p))
    if (!m.count(x)) free.push_back(std::move(x));
  const ComponentLabeling l = components(pair.beta, std::span<const LatticePoint>(free));
  std::vector<PointSet> out;
  for (const auto& members : l.members) out.emplace_back(members.begin(), members.end());
  return out;
}

ManifoldReport check_manifold(const PointSet& m, const AdjacencyPair& pair, int margin) {
  if (m.empty()) throw std::invalid_argument("manifold check needs a nonempty set");
  if (margin < 2) throw std::invalid_argument("margin must be at least 2");
  if (m.begin()->dim() != pair.dim()) throw std::invalid_argument("point dimension does not match the pair");
  ManifoldReport rep;
  const int n = pair.dim();

  const ComponentLabeling fg = components(pair.alpha, m);
  if (fg.count() != 1) {
    rep.alpha_connected.holds = false;
    rep.alpha_connected.points = {fg.members[0].front(), fg.members[1].front()};
    rep.alpha_connected.note = std::to_string(fg.count()) + " alpha-components";
  }

  for (const auto& c : cubes_meeting(m, n)) {
    const std::vector<LatticePoint> inside = cube_intersection(c, m);
    const ComponentLabeling l = components(pair.alpha, std::span<const LatticePoint>(inside));
    if (l.count() > 1) {
      rep.cube_connected.holds = false;
      rep.cube_connected.cube = c;
      rep.cube_connected.points = {l.members[0].front(), l.members[1].front()};
      rep.cube_connected.note = std::to_string(l.count()) + " alpha-components in cube";
      break;
    }
  }

  for (const auto& p : m) {
    std::vector<PointSet> parts = local_components(p, m, pair);
    if (parts.size() != 2) {
      if (rep.two_components.holds) {
        rep.two_components.holds = false;
        rep.two_components.points = {p};
        rep.two_components.note = std::to_string(parts.size()) + " beta-components in omega(p)\\M";
      }
      continue;
    }
    rep.local.emplace(p, std::make_pair(std::move(parts[0]), std::move(parts[1])));
  }

  for (const auto& [p, sides] : rep.local) {
    for (const auto& q : neighbors(pair.alpha, p)) {
      if (!m.count(q)) continue;
      const bool to_c = has_neighbor_in(pair.beta, q, sides.first);
      const bool to_d = has_neighbor_in(pair.beta, q, sides.second);
      if (!to_c || !to_d) {
        rep.component_unity.holds = false;
        rep.component_unity.points = {p, q};
        rep.component_unity.note = std::string("q not beta-adjacent to ") + (to_c ? "D_p" : "C_p");
        break;
      }
    }
    if (!rep.component_unity.holds) break;
  }

  SeparationVerdict sep = has_separation_property(m, pair, Region::around(m, margin));
  if (!sep.holds) {
    rep.separation.holds = false;
    rep.separation.cube = sep.witness->cube;
    rep.separation.points = {sep.witness->point};
    rep.separation.note = "separation violated";
    rep.separation.separation = sep.witness;
  }
  return rep;
}

bool replay_property(const std::string& property, const PropertyVerdict& v, const PointSet& m,
                     const AdjacencyPair& pair, int margin) {
  auto in_m = [&](const LatticePoint& p) { return m.count(p) > 0; };
  if (!std::all_of(v.points.begin(), v.points.end(), in_m)) return false;
  if (property == "alpha-connected") {
    if (v.points.size() != 2) return false;
    const ComponentLabeling l = components(pair.alpha, m);
    return l.of(v.points[0]) != l.of(v.points[1]);
  }
  if (property == "cube-connected") {
    if (!v.cube || v.points.size() != 2) return false;
    if (!v.cube->contains(v.points[0]) || !v.cube->contains(v.points[1])) return false;
    const std::vector<LatticePoint> inside = cube_intersection(*v.cube, m);
    const ComponentLabeling l = components(pair.alpha, std::span<const LatticePoint>(inside));
    return l.of(v.points[0]) != l.of(v.points[1]);
  }
  if (property == "two-components") {
    return v.points.size() == 1 && local_components(v.points[0], m, pair).size() != 2;
  }
  if (property == "component-unity") {
    if (v.points.size() != 2 || !pair.alpha.adjacent(v.points[0], v.points[1])) return false;
    const std::vector<PointSet> sides = local_components(v.points[0], m, pair);
    if (sides.size() != 2) return false;
    return !has_neighbor_in(pair.beta, v.points[1], sides[0]) || !has_neighbor_in(pair.beta, v.points[1], sides[1]);
  }
  if (property == "separation") {
    return v.separation && replay_separation_witness(m, pair, Region::around(m, margin), *v.separation);
  }
  throw std::invalid_argument("unknown property '" + property + "'");
}

GlobalSides global_sides(const PointSet& m, const AdjacencyPair& pair, const ManifoldReport& report) {
  if (!report.certified()) throw std::invalid_argument("global sides need a certified manifold");

  // Orient each local pair consistently along alpha-edges.
  std::map<LatticePoint, bool> swapped;
  const LatticePoint start = *m.begin();
  swapped[start] = false;
  std::deque<LatticePoint> queue{start};
  auto oriented = [&](const LatticePoint& p) -> std::pair<const PointSet*, const PointSet*> {
    const auto& s = report.local.at(p);
    return swapped.at(p) ? std::make_pair(&s.second, &s.first) : std::make_pair(&s.first, &s.second);
  };
  while (!queue.empty()) {
    const LatticePoint p = queue.front();
    queue.pop_front();
    const auto [cp, dp] = oriented(p);
    for (const auto& q : neighbors(pair.alpha, p)) {
      if (!m.count(q)) continue;
      const auto& sq = report.local.at(q);
      const bool straight = meets(*cp, sq.first) || meets(*dp, sq.second);
      const bool crossed = meets(*cp, sq.second) || meets(*dp, sq.first);
      if (straight == crossed)
        throw std::logic_error("local sides of " + p.str() + " and " + q.str() + " cannot be matched");
      auto [it, fresh] = swapped.emplace(q, crossed);
      if (fresh)
        queue.push_back(q);
      else if (it->second != crossed)
        throw std::logic_error("inconsistent side labels at " + q.str());
    }
  }

  GlobalSides out;
  for (const auto& p : m) {
    const auto [cp, dp] = oriented(p);
    out.c.insert(cp->begin(), cp->end());
    out.d.insert(dp->begin(), dp->end());
  }
  if (meets(out.c, out.d)) throw std::logic_error("global sides overlap");

  PointSet shell;
  for (const auto& p : m)
    for (auto& x : neighbors(AdjacencySpec::full(pair.dim()), p))
      if (!m.count(x)) shell.insert(std::move(x));
  const ComponentLabeling l = components(pair.beta, shell);
  if (l.count() != 2) throw std::logic_error("omega(M)\\M has " + std::to_string(l.count()) + " beta-components");
  const PointSet first(l.members[0].begin(), l.members[0].end());
  if (first != out.c && first != out.d) throw std::logic_error("propagated sides differ from the components");
  if (!out.c.count(*shell.begin())) std::swap(out.c, out.d);
  return out;
}

bool is_simple_point(const LatticePoint& p, const PointSet& m, const AdjacencyPair& pair, const Region& r) {
  if (!m.count(p)) throw std::invalid_argument("simple point candidate must lie in the set");
  PointSet rest = m;
  rest.erase(p);
  if (components(pair.alpha, m).count() != components(pair.alpha, rest).count()) return false;
  return complement_components(pair.beta, m, r).count() == complement_components(pair.beta, rest, r).count();
}

std::vector<DoublePointWitness> double_points(const LatticePoint& z, const AdjacencyPair& pair) {
  const int n = pair.dim();
  std::vector<DoublePointWitness> out;
  for (const auto& p : neighbors(pair.beta, z))
    for (int axis = 0; axis < n; ++axis)
      for (int sign : {-1, 1}) {
        const Translation tau = unit_translation(n, axis, sign);
        DoublePointWitness w{z, p, p + tau, z - tau, tau};
        if (validate_double_point(w, pair)) out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool validate_double_point(const DoublePointWitness& w, const AdjacencyPair& pair) {
  const AdjacencySpec axis = AdjacencySpec::axis(pair.dim());
  return pair.beta.adjacent(w.z, w.p) && axis.adjacent(w.z, w.q) && pair.alpha.adjacent(w.p, w.q) &&
         pair.beta.adjacent(w.z, w.r) && axis.adjacent(w.p, w.r) && is_generator(w.tau) && w.p + w.tau == w.q &&
         w.r + w.tau == w.z && pair.alpha.adjacent(w.r, w.q);
}

SeparatingPairResult is_separating_pair(const AdjacencyPair& pair, int N, std::size_t budget) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  SeparatingPairResult out;
  const std::vector<LatticePoint> ring = neighbors(pair.beta, LatticePoint(pair.dim()));
  const PointSet sphere(ring.begin(), ring.end());
  out.sphere = check_manifold(sphere, pair);
  if (!out.sphere.certified()) {
    out.verdict = Decision::no;
    return out;
  }
  std::size_t longest = 0;
  for (const auto& c : generator_cycles(pair.alpha, sphere)) longest = std::max(longest, c.size());
  const int cap = std::max(N, static_cast<int>(longest) - 3);
  for (int k = N; k <= cap; ++k) {
    out.contraction = n_simply_connected_bounded(pair.alpha, sphere, k, budget);
    if (out.contraction.verdict == Decision::yes) {
      out.verdict = Decision::yes;
      out.n_used = k;
      return out;
    }
  }
  out.verdict = Decision::unknown;
  return out;
}

GoodPairResult is_good_pair(const AdjacencyPair& pair, int N, std::size_t budget) {
  GoodPairResult out;
  out.separating = is_separating_pair(pair, N, budget);
  out.doubles = double_points(LatticePoint(pair.dim()), pair);
  if (out.separating.verdict == Decision::no || !out.doubles.empty())
    out.verdict = Decision::no;
  else
    out.verdict = out.separating.verdict;
  return out;
}

bool is_regular_rotation(const AdjacencySpec& spec) {
  const int n = spec.dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs)
      for (const auto& t : spec.offsets()) {
        Translation r(n);
        for (int a = 0; a < n; ++a) r[perm[a]] = (signs >> a & 1u) ? -t[a] : t[a];
        if (!spec.has_offset(r)) return false;
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace digitop

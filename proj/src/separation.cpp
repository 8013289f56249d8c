#include "digitop/separation.hpp"

#include <algorithm>

namespace digitop {

SeparationVerdict not_separated_in_cube(const PointSet& m, const Cube& c, const AdjacencyPair& pair,
                                        const ComponentLabeling& complement) {
  const int k = c.dim();
  if (k < 2 || k > pair.dim()) throw std::invalid_argument("separation needs a cube of dimension 2..n");

  const std::vector<LatticePoint> inside = cube_intersection(c, m);
  if (inside.empty()) return {};
  const ComponentLabeling fg = components(pair.alpha, std::span<const LatticePoint>(inside));
  const std::vector<Cube> faces = subcubes(c, k - 2);

  auto label_of = [&](const LatticePoint& p) {
    const int id = complement.of(p);
    if (id < 0) throw std::invalid_argument("complement labeling does not cover " + p.str());
    return id;
  };

  for (const auto& members : fg.members) {
    const PointSet comp(members.begin(), members.end());
    std::vector<std::size_t> hits(faces.size(), 0);
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (const auto& v : cube_vertices(faces[i])) hits[i] += comp.count(v);
    const std::size_t best = *std::max_element(hits.begin(), hits.end());
    if (best == 0) continue;

    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (hits[i] != best) continue;
      const std::vector<LatticePoint> face = cube_vertices(faces[i]);
      for (const auto& [t1, t2] : completing_translations(faces[i], c)) {
        std::vector<LatticePoint> free1, free2;
        for (const auto& x : face) {
          if (!m.count(x + t1)) free1.push_back(x + t1);
          if (!m.count(x + t2)) free2.push_back(x + t2);
        }
        if (free1.empty() || free2.empty()) continue;
        const int id = label_of(free1.front());
        bool common = true;
        for (const auto* side : {&free1, &free2})
          for (const auto& p : *side) common = common && label_of(p) == id;
        if (!common) continue;

        for (const auto& x : face) {
          if (comp.count(x + t1 + t2) && (!comp.count(x + t1) || !comp.count(x + t2)))
            return {false, SeparationWitness{c, faces[i], t1, t2, x}};
        }
      }
    }
  }
  return {};
}

SeparationVerdict not_separated_in_cube(const PointSet& m, const Cube& c, const AdjacencyPair& pair,
                                        const Region& r) {
  return not_separated_in_cube(m, c, pair, complement_components(pair.beta, m, r));
}

SeparationVerdict has_separation_property(const PointSet& m, const AdjacencyPair& pair, const Region& r) {
  if (m.empty()) return {};
  const ComponentLabeling complement = complement_components(pair.beta, m, r);
  for (int k = 2; k <= pair.dim(); ++k)
    for (const auto& c : cubes_meeting(m, k)) {
      SeparationVerdict v = not_separated_in_cube(m, c, pair, complement);
      if (!v.holds) return v;
    }
  return {};
}

bool replay_separation_witness(const PointSet& m, const AdjacencyPair& pair, const Region& r,
                               const SeparationWitness& w) {
  if (!w.cube.contains(w.cstar) || w.cstar.dim() + 2 != w.cube.dim() || !w.cstar.contains(w.point)) return false;
  const ComponentLabeling complement = complement_components(pair.beta, m, r);
  const std::vector<LatticePoint> inside = cube_intersection(w.cube, m);
  const ComponentLabeling fg = components(pair.alpha, std::span<const LatticePoint>(inside));
  const LatticePoint x = w.point;
  const LatticePoint corner = x + w.tau1 + w.tau2;
  const int cid = fg.of(corner);
  if (cid < 0) return false;
  const PointSet comp(fg.members[cid].begin(), fg.members[cid].end());
  if (comp.count(x + w.tau1) && comp.count(x + w.tau2)) return false;

  // The premises: maximal face, free translates in one complement component.
  std::size_t best = 0, mine = 0;
  for (const auto& f : subcubes(w.cube, w.cube.dim() - 2)) {
    std::size_t h = 0;
    for (const auto& v : cube_vertices(f)) h += comp.count(v);
    best = std::max(best, h);
    if (f == w.cstar) mine = h;
  }
  if (mine != best || best == 0) return false;
  std::vector<int> ids;
  for (const auto& v : cube_vertices(w.cstar)) {
    for (const auto& t : {w.tau1, w.tau2})
      if (!m.count(v + t)) ids.push_back(complement.of(v + t));
  }
  bool has1 = false, has2 = false;
  for (const auto& v : cube_vertices(w.cstar)) {
    has1 = has1 || !m.count(v + w.tau1);
    has2 = has2 || !m.count(v + w.tau2);
  }
  return has1 && has2 && std::all_of(ids.begin(), ids.end(), [&](int id) { return id >= 0 && id == ids.front(); });
}

int beta_neighbor_lower_bound(int k, int l) {
  if (k < 0 || l < 1 || l > (1 << k)) throw std::invalid_argument("component size out of range");
  int m = 0;
  while ((1 << m) < l) ++m;
  return (k - m) * l + (1 << m) - l;
}

int beta_neighbor_incidences(const std::vector<LatticePoint>& component, const PointSet& m, const Cube& c,
                             const AdjacencySpec& beta) {
  int count = 0;
  for (const auto& x : component)
    for (const auto& y : cube_intersection(c, m))
      if (beta.adjacent(x, y)) ++count;
  return count;
}

ComponentLabeling cube_complement_components(const Cube& c, const PointSet& m, const AdjacencySpec& beta) {
  std::vector<LatticePoint> free;
  for (auto& v : cube_vertices(c))
    if (!m.count(v)) free.push_back(std::move(v));
  return components(beta, std::span<const LatticePoint>(free));
}

bool component_count_bounds_hold(const PointSet& m, const Cube& c, const AdjacencyPair& pair) {
  if (cube_complement_components(c, m, pair.beta).count() != 2)
    throw std::invalid_argument("cube complement must have exactly two beta-components");
  const int k = c.dim();
  const int inside = static_cast<int>(cube_intersection(c, m).size());
  return k <= inside && inside <= (1 << k) - 2;
}

}  // namespace digitop

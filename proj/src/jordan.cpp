#include "digitop/jordan.hpp"

#include <functional>

namespace digitop {

JordanReport jordan_check(const PointSet& m, const AdjacencyPair& pair, int margin) {
  if (margin < 2) throw std::invalid_argument("margin must be >= 2");
  ManifoldReport rep = check_manifold(m, pair, margin);
  if (!rep.certified()) {
    const std::string prop = rep.first_failure();
    throw NotCertified(prop, std::move(rep));
  }
  const Region r = Region::around(m, margin);
  const ComponentLabeling comp = complement_components(pair.beta, m, r);

  JordanReport out;
  out.margin = margin;
  out.components = comp.count();
  out.two_components = comp.count() == 2;
  for (int c = 0; c < comp.count(); ++c) {
    if (comp.infinite[c])
      out.outside_size += comp.members[c].size();
    else
      out.inside_size += comp.members[c].size();
  }

  out.common_boundary = true;
  for (const auto& p : m) {
    std::set<int> seen;
    for (const auto& q : neighbors(pair.beta, p))
      if (auto it = comp.id.find(q); it != comp.id.end()) seen.insert(it->second);
    if (static_cast<int>(seen.size()) != comp.count()) {
      out.common_boundary = false;
      out.boundary_witness = p;
      break;
    }
  }

  out.no_simple_points = true;
  for (const auto& p : m)
    if (is_simple_point(p, m, pair, r)) {
      out.no_simple_points = false;
      out.simple_witness = p;
      break;
    }
  return out;
}

GeneratorKind parse_generator_kind(const std::string& s) {
  if (s == "rect_boundary") return GeneratorKind::rect_boundary;
  if (s == "box_surface") return GeneratorKind::box_surface;
  if (s == "sphere_shell") return GeneratorKind::sphere_shell;
  throw std::invalid_argument("unknown generator kind '" + s + "'");
}

std::string to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::rect_boundary: return "rect_boundary";
    case GeneratorKind::box_surface: return "box_surface";
    case GeneratorKind::sphere_shell: return "sphere_shell";
  }
  return "?";
}

namespace {

PointSet box_boundary(const std::vector<int>& sides) {
  for (int s : sides)
    if (s < 3) throw std::invalid_argument("box sides must be >= 3");
  LatticePoint lo(static_cast<int>(sides.size())), hi(static_cast<int>(sides.size()));
  for (std::size_t a = 0; a < sides.size(); ++a) hi[static_cast<int>(a)] = sides[a] - 1;
  const Region r(lo, hi);
  PointSet out;
  for (const auto& p : r.points())
    if (r.on_boundary(p)) out.insert(p);
  return out;
}

}  // namespace

PointSet rect_boundary(int w, int h) { return box_boundary({w, h}); }

PointSet box_surface(int w, int h, int d) { return box_boundary({w, h, d}); }

PointSet sphere_shell(int r, int n) {
  if (r < 2) throw std::invalid_argument("shell radius must be >= 2");
  if (n < 2 || n > kMaxDim) throw std::invalid_argument("shell dimension out of range");
  LatticePoint lo(n), hi(n);
  for (int a = 0; a < n; ++a) lo[a] = -r - 1, hi[a] = r + 1;
  PointSet out;
  // (r-1)^2 < |p|^2 and 4|p|^2 <= (2r+1)^2, all in integers.
  for (const auto& p : Region(lo, hi).points()) {
    long long sq = 0;
    for (int a = 0; a < n; ++a) sq += static_cast<long long>(p[a]) * p[a];
    if (sq > static_cast<long long>(r - 1) * (r - 1) && 4 * sq <= static_cast<long long>(2 * r + 1) * (2 * r + 1))
      out.insert(p);
  }
  return out;
}

PointSet generate(const GeneratorSpec& spec) {
  const auto need = [&](std::size_t k) {
    if (spec.params.size() != k)
      throw std::invalid_argument(to_string(spec.kind) + " takes " + std::to_string(k) + " parameters");
  };
  switch (spec.kind) {
    case GeneratorKind::rect_boundary:
      need(2);
      return rect_boundary(spec.params[0], spec.params[1]);
    case GeneratorKind::box_surface:
      need(3);
      return box_surface(spec.params[0], spec.params[1], spec.params[2]);
    case GeneratorKind::sphere_shell:
      need(2);
      return sphere_shell(spec.params[0], spec.params[1]);
  }
  throw std::invalid_argument("bad generator");
}

}  // namespace digitop

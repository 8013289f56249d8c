#include "digitop/pseudomanifold.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace digitop {

namespace {

void check_dim(int d) {
  if (d < 0) throw std::invalid_argument("pseudomanifold dimension must be >= 0");
}

std::vector<Simplex> facets_of(const Simplex& s) {
  std::vector<Simplex> out;
  if (s.vertices.size() < 2) return out;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    std::vector<HalfPoint> f = s.vertices;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    out.emplace_back(std::move(f));
  }
  return out;
}

}  // namespace

HomogeneityVerdict is_homogeneous(const SimplicialComplex& k, int d) {
  check_dim(d);
  // Mark everything under a d-simplex by walking down facets.
  std::set<Simplex> covered;
  std::vector<Simplex> stack;
  for (const auto& s : k.simplices)
    if (s.dim() == d) stack.push_back(s);
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    if (!covered.insert(s).second) continue;
    for (auto& f : facets_of(s)) stack.push_back(std::move(f));
  }
  HomogeneityVerdict v;
  for (const auto& s : k.simplices)
    if (!covered.count(s)) {
      v.holds = false;
      v.witness = s;
      break;
    }
  return v;
}

NondegeneracyVerdict is_nondegenerate(const SimplicialComplex& k, int d) {
  check_dim(d);
  NondegeneracyVerdict v;
  if (d == 0) return v;  // no ridges
  std::map<Simplex, int> count;
  for (const auto& s : k.simplices)
    if (s.dim() == d - 1) count.emplace(s, 0);
  for (const auto& s : k.simplices)
    if (s.dim() == d)
      for (const auto& f : facets_of(s)) ++count[f];
  for (const auto& [s, c] : count)
    if (c != 2) {
      v.holds = false;
      v.witness = s;
      v.cofaces = c;
      break;
    }
  return v;
}

StrongConnectivityVerdict is_strongly_connected(const SimplicialComplex& k, int d) {
  check_dim(d);
  std::vector<Simplex> top = k.of_dim(d);
  StrongConnectivityVerdict v;
  if (top.empty()) return v;
  std::vector<std::size_t> parent(top.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<Simplex, std::size_t> first_owner;
  for (std::size_t i = 0; i < top.size(); ++i)
    for (const auto& f : facets_of(top[i])) {
      auto [it, fresh] = first_owner.emplace(f, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  // d == 0: points share no faces, so each is its own class.
  for (std::size_t i = 0; i < top.size(); ++i)
    if (find(i) == i) ++v.classes;
  if (v.classes > 1) {
    v.holds = false;
    v.first = top.front();
    for (std::size_t i = 1; i < top.size(); ++i)
      if (find(i) != find(0)) {
        v.second = top[i];
        break;
      }
  }
  return v;
}

PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k, int d) {
  PseudomanifoldReport r;
  r.dimension = d;
  r.homogeneous = is_homogeneous(k, d);
  r.nondegenerate = is_nondegenerate(k, d);
  r.strongly_connected = is_strongly_connected(k, d);
  return r;
}

}  // namespace digitop

#include "digitop/lattice.hpp"

#include <algorithm>
#include <bit>

namespace digitop {

Translation unit_translation(int n, int axis, int sign) {
  if (axis < 0 || axis >= n) throw std::invalid_argument("axis out of range");
  Translation t(n);
  t[axis] = sign < 0 ? -1 : 1;
  return t;
}

bool is_generator(const Translation& t) {
  int nonzero = 0;
  for (int v : t.coords()) {
    if (v == 0) continue;
    if (v != 1 && v != -1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

HalfPoint to_half(const LatticePoint& p) {
  HalfPoint h(p.dim());
  for (int i = 0; i < p.dim(); ++i) h[i] = 2 * p[i];
  return h;
}

bool is_lattice(const HalfPoint& h) {
  for (int v : h.coords())
    if (v % 2 != 0) return false;
  return true;
}

LatticePoint to_lattice(const HalfPoint& h) {
  if (!is_lattice(h)) throw std::invalid_argument("half point " + h.str() + " is not a lattice point");
  LatticePoint p(h.dim());
  for (int i = 0; i < h.dim(); ++i) p[i] = h[i] / 2;
  return p;
}

Cube::Cube(LatticePoint base, std::uint32_t axes_mask) : base_(std::move(base)), mask_(axes_mask) {
  if (base_.dim() < 32 && (mask_ >> base_.dim()) != 0u)
    throw std::invalid_argument("cube axis outside ambient dimension");
}

Cube::Cube(LatticePoint base, std::initializer_list<int> axes) : base_(std::move(base)) {
  for (int a : axes) {
    if (a < 0 || a >= base_.dim()) throw std::invalid_argument("cube axis outside ambient dimension");
    if (has_axis(a)) throw std::invalid_argument("repeated cube axis");
    mask_ |= 1u << a;
  }
}

std::vector<int> Cube::axes() const {
  std::vector<int> out;
  for (int a = 0; a < base_.dim(); ++a)
    if (has_axis(a)) out.push_back(a);
  return out;
}

int Cube::dim() const { return std::popcount(mask_); }

LatticePoint Cube::top() const {
  LatticePoint t = base_;
  for (int a = 0; a < t.dim(); ++a)
    if (has_axis(a)) t[a] += 1;
  return t;
}

bool Cube::contains(const LatticePoint& p) const {
  if (p.dim() != base_.dim()) return false;
  for (int a = 0; a < p.dim(); ++a) {
    const int d = p[a] - base_[a];
    if (has_axis(a) ? (d != 0 && d != 1) : d != 0) return false;
  }
  return true;
}

bool Cube::contains(const Cube& sub) const {
  return (sub.mask_ & ~mask_) == 0u && contains(sub.base_) && contains(sub.top());
}

std::string Cube::str() const {
  std::string s = "cube{" + base_.str() + ",[";
  bool first = true;
  for (int a : axes()) {
    if (!first) s += ",";
    s += std::to_string(a);
    first = false;
  }
  return s + "]}";
}

Cube translate(const Cube& c, const Translation& t) { return Cube(c.base() + t, c.axes_mask()); }

std::vector<LatticePoint> cube_vertices(const Cube& c) {
  const std::vector<int> ax = c.axes();
  const std::size_t k = ax.size();
  std::vector<LatticePoint> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
    LatticePoint p = c.base();
    for (std::size_t i = 0; i < k; ++i)
      if ((bits >> i) & 1u) p[ax[i]] += 1;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cube> subcubes(const Cube& c, int j) {
  const int k = c.dim();
  if (j < 0 || j > k) throw std::invalid_argument("subcube dimension out of range");
  const std::vector<int> ax = c.axes();
  std::vector<Cube> out;
  // Each axis of c is either free in the face, or fixed low, or fixed high.
  for (std::uint32_t free_bits = 0; free_bits < (1u << k); ++free_bits) {
    if (std::popcount(free_bits) != j) continue;
    std::uint32_t mask = 0;
    std::vector<int> fixed;
    for (int i = 0; i < k; ++i) {
      if ((free_bits >> i) & 1u)
        mask |= 1u << ax[i];
      else
        fixed.push_back(ax[i]);
    }
    for (std::uint32_t hi = 0; hi < (1u << fixed.size()); ++hi) {
      LatticePoint b = c.base();
      for (std::size_t i = 0; i < fixed.size(); ++i)
        if ((hi >> i) & 1u) b[fixed[i]] += 1;
      out.emplace_back(b, mask);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cube> supercubes(const Cube& c, int n) {
  if (c.ambient_dim() != n) throw std::invalid_argument("ambient dimension mismatch");
  if (c.dim() >= n) throw std::invalid_argument("cube already has full dimension");
  std::vector<Cube> out;
  for (int a = 0; a < n; ++a) {
    if (c.has_axis(a)) continue;
    const std::uint32_t mask = c.axes_mask() | (1u << a);
    out.emplace_back(c.base(), mask);
    out.emplace_back(c.base() - unit_translation(n, a, +1), mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HalfPoint barycenter(const Cube& c) {
  HalfPoint h = to_half(c.base());
  for (int a = 0; a < h.dim(); ++a)
    if (c.has_axis(a)) h[a] += 1;
  return h;
}

LatticePoint antipode(const Cube& c, const LatticePoint& v) {
  LatticePoint w = v;
  for (int a = 0; a < v.dim(); ++a)
    if (c.has_axis(a)) w[a] = 2 * c.base()[a] + 1 - v[a];
  return w;
}

std::vector<std::pair<Translation, Translation>> completing_translations(const Cube& cstar,
                                                                         const Cube& c) {
  if (!c.contains(cstar)) throw std::invalid_argument(cstar.str() + " is not a face of " + c.str());
  if (cstar.dim() + 2 != c.dim()) throw std::invalid_argument("face must have codimension 2");
  const int n = c.ambient_dim();
  std::vector<Translation> moves;
  for (int a = 0; a < n; ++a) {
    if (!c.has_axis(a) || cstar.has_axis(a)) continue;
    // The face sits on the low or the high side of axis a; the move points inward.
    const int sign = cstar.base()[a] == c.base()[a] ? +1 : -1;
    moves.push_back(unit_translation(n, a, sign));
  }
  return {{moves[0], moves[1]}, {moves[1], moves[0]}};
}

std::vector<Cube> cubes_containing(const LatticePoint& p, int k) {
  const int n = p.dim();
  if (k < 0 || k > n) throw std::invalid_argument("cube dimension out of range");
  std::vector<Cube> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    // Choose which free axes p occupies on the high side.
    for (std::uint32_t hi = mask;; hi = (hi - 1) & mask) {
      LatticePoint b = p;
      for (int a = 0; a < n; ++a)
        if ((hi >> a) & 1u) b[a] -= 1;
      out.emplace_back(b, mask);
      if (hi == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cube> cubes_meeting(const PointSet& m, int k) {
  std::set<Cube> all;
  for (const auto& p : m)
    for (auto& c : cubes_containing(p, k)) all.insert(std::move(c));
  return {all.begin(), all.end()};
}

std::pair<LatticePoint, LatticePoint> bounding_box(const PointSet& m) {
  if (m.empty()) throw std::invalid_argument("bounding box of empty set");
  LatticePoint lo = *m.begin(), hi = *m.begin();
  for (const auto& p : m)
    for (int a = 0; a < p.dim(); ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  return {lo, hi};
}

std::vector<LatticePoint> cube_intersection(const Cube& c, const PointSet& m) {
  std::vector<LatticePoint> out;
  for (auto& v : cube_vertices(c))
    if (m.count(v)) out.push_back(std::move(v));
  return out;
}

}  // namespace digitop

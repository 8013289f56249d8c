#pragma once

// Exact combinatorics of the integer lattice Z^n: points, translations,
// axis-aligned k-cubes and their barycenters.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace digitop {

inline constexpr int kMaxDim = 6;

/// Fixed-capacity integer vector. The tag keeps lattice points, doubled
/// barycenter coordinates and translation offsets from mixing silently.
template <class Tag>
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(int n) : n_(static_cast<std::uint8_t>(check_dim(n))) {}
  IntVec(std::initializer_list<int> c) : IntVec(static_cast<int>(c.size())) {
    int i = 0;
    for (int v : c) v_[i++] = v;
  }
  explicit IntVec(std::span<const int> c) : IntVec(static_cast<int>(c.size())) {
    for (int i = 0; i < n_; ++i) v_[i] = c[i];
  }

  int dim() const { return n_; }
  int& operator[](int i) { return v_[i]; }
  int operator[](int i) const { return v_[i]; }
  std::span<const int> coords() const { return {v_.data(), static_cast<std::size_t>(n_)}; }
  std::vector<int> to_vector() const { return {v_.begin(), v_.begin() + n_}; }

  bool is_zero() const {
    for (int i = 0; i < n_; ++i)
      if (v_[i] != 0) return false;
    return true;
  }

  friend auto operator<=>(const IntVec&, const IntVec&) = default;
  friend bool operator==(const IntVec&, const IntVec&) = default;

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }

 private:
  static int check_dim(int n) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("dimension out of range: " + std::to_string(n));
    return n;
  }

  // Compared member-wise: dimension first, then coordinates lexicographically.
  std::uint8_t n_ = 0;
  std::array<int, kMaxDim> v_{};
};

struct LatticeTag {};
struct HalfTag {};
struct TranslationTag {};

using LatticePoint = IntVec<LatticeTag>;
/// Doubled coordinates: the true position is coords2 / 2.
using HalfPoint = IntVec<HalfTag>;
using Translation = IntVec<TranslationTag>;

using PointSet = std::set<LatticePoint>;

inline LatticePoint operator+(LatticePoint p, const Translation& t) {
  for (int i = 0; i < p.dim(); ++i) p[i] += t[i];
  return p;
}
inline LatticePoint operator-(LatticePoint p, const Translation& t) {
  for (int i = 0; i < p.dim(); ++i) p[i] -= t[i];
  return p;
}
inline Translation operator-(const LatticePoint& a, const LatticePoint& b) {
  Translation t(a.dim());
  for (int i = 0; i < a.dim(); ++i) t[i] = a[i] - b[i];
  return t;
}
inline Translation operator+(Translation a, const Translation& b) {
  for (int i = 0; i < a.dim(); ++i) a[i] += b[i];
  return a;
}
inline Translation operator-(Translation a) {
  for (int i = 0; i < a.dim(); ++i) a[i] = -a[i];
  return a;
}

/// The generator translation +-e_axis.
Translation unit_translation(int n, int axis, int sign);

/// True iff t has exactly one nonzero entry and it is +-1.
bool is_generator(const Translation& t);

HalfPoint to_half(const LatticePoint& p);
/// Valid only when every coordinate is even.
LatticePoint to_lattice(const HalfPoint& h);
bool is_lattice(const HalfPoint& h);

/// Axis-aligned k-cube: base + {0,1}^axes. Canonical by construction: the
/// base is the coordinatewise-minimal vertex.
class Cube {
 public:
  Cube() = default;
  Cube(LatticePoint base, std::uint32_t axes_mask);
  Cube(LatticePoint base, std::initializer_list<int> axes);

  static Cube point(const LatticePoint& p) { return Cube(p, 0u); }

  const LatticePoint& base() const { return base_; }
  std::uint32_t axes_mask() const { return mask_; }
  std::vector<int> axes() const;
  int dim() const;
  int ambient_dim() const { return base_.dim(); }
  bool has_axis(int a) const { return (mask_ >> a) & 1u; }
  /// Coordinatewise-maximal vertex.
  LatticePoint top() const;

  bool contains(const LatticePoint& p) const;
  bool contains(const Cube& sub) const;

  friend auto operator<=>(const Cube&, const Cube&) = default;
  friend bool operator==(const Cube&, const Cube&) = default;

  std::string str() const;

 private:
  LatticePoint base_;
  std::uint32_t mask_ = 0;
};

Cube translate(const Cube& c, const Translation& t);

/// All 2^k vertices in lexicographic order.
std::vector<LatticePoint> cube_vertices(const Cube& c);

/// All j-dimensional faces of c, sorted. Count is C(k,j) * 2^(k-j).
std::vector<Cube> subcubes(const Cube& c, int j);

/// All (k+1)-cubes of Z^n containing c, sorted. Count is 2(n-k).
std::vector<Cube> supercubes(const Cube& c, int n);

HalfPoint barycenter(const Cube& c);

/// Vertex of c diagonally opposite to v.
LatticePoint antipode(const Cube& c, const LatticePoint& v);

/// Ordered pairs (t1, t2) of generator translations with
/// c = cstar u t1(cstar) u t2(cstar) u t1 t2(cstar).
/// Throws std::invalid_argument unless cstar is a (k-2)-face of c.
std::vector<std::pair<Translation, Translation>> completing_translations(const Cube& cstar,
                                                                         const Cube& c);

/// All k-cubes of Z^n having p as a vertex, sorted.
std::vector<Cube> cubes_containing(const LatticePoint& p, int k);

/// All k-cubes meeting the point set, sorted and deduplicated.
std::vector<Cube> cubes_meeting(const PointSet& m, int k);

/// Coordinatewise bounding box of a nonempty point set.
std::pair<LatticePoint, LatticePoint> bounding_box(const PointSet& m);

/// Points of c that belong to m, in lexicographic order.
std::vector<LatticePoint> cube_intersection(const Cube& c, const PointSet& m);

}  // namespace digitop

#pragma once

// Translation-invariant adjacency relations on Z^n sandwiched between the
// axis relation (2n neighbours) and the full relation (3^n - 1 neighbours),
// plus connectivity and bounded path-rewriting machinery on top of them.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "digitop/lattice.hpp"

namespace digitop {

class AdjacencySpec {
 public:
  enum class Kind { axis, full, custom };

  /// Axis neighbours only.
  static AdjacencySpec axis(int n);
  /// Every point of the surrounding 3^n box.
  static AdjacencySpec full(int n);
  /// Validates symmetry and axis <= offsets <= full; throws std::invalid_argument.
  static AdjacencySpec custom(int n, std::vector<Translation> offsets);

  int dim() const { return n_; }
  Kind kind() const { return kind_; }
  std::string name() const;
  const std::vector<Translation>& offsets() const { return offsets_; }

  bool has_offset(const Translation& t) const;
  bool adjacent(const LatticePoint& p, const LatticePoint& q) const;

  friend bool operator==(const AdjacencySpec& a, const AdjacencySpec& b) { return a.offsets_ == b.offsets_; }

 private:
  AdjacencySpec(int n, Kind kind, std::vector<Translation> offsets);

  int n_ = 0;
  Kind kind_ = Kind::custom;
  std::vector<Translation> offsets_;  // sorted
};

/// alpha structures the foreground set, beta its complement.
struct AdjacencyPair {
  AdjacencySpec alpha;
  AdjacencySpec beta;

  AdjacencyPair(AdjacencySpec a, AdjacencySpec b);
  int dim() const { return alpha.dim(); }
};

/// Closed axis-aligned box [lo, hi].
struct Region {
  LatticePoint lo;
  LatticePoint hi;

  Region(LatticePoint lo, LatticePoint hi);
  /// Bounding box of m dilated by margin on every side.
  static Region around(const PointSet& m, int margin);

  bool contains(const LatticePoint& p) const;
  bool on_boundary(const LatticePoint& p) const;
  Region shrunk(int by) const;
  std::size_t size() const;
  std::vector<LatticePoint> points() const;
};

/// Connected components of a finite point set. Components are numbered by
/// their lexicographically smallest member.
struct ComponentLabeling {
  std::map<LatticePoint, int> id;
  std::vector<std::vector<LatticePoint>> members;
  /// Set for the merged component that reaches the region boundary.
  std::vector<bool> infinite;

  int count() const { return static_cast<int>(members.size()); }
  /// -1 when p is not labeled.
  int of(const LatticePoint& p) const;
};

std::vector<LatticePoint> neighbors(const AdjacencySpec& spec, const LatticePoint& p);

ComponentLabeling components(const AdjacencySpec& spec, const PointSet& s);

/// Same as components() but for a point list (duplicates ignored).
ComponentLabeling components(const AdjacencySpec& spec, std::span<const LatticePoint> s);

/// Components of r \ m. Components reaching the boundary of r are merged into
/// a single component flagged infinite. Throws std::invalid_argument unless m
/// lies inside r shrunk by one.
ComponentLabeling complement_components(const AdjacencySpec& spec, const PointSet& m, const Region& r);

using Path = std::vector<LatticePoint>;

bool is_path(const AdjacencySpec& spec, std::span<const LatticePoint> seq);

/// w and w2 share a prefix and a suffix and differ by exchanging middle runs
/// of lengths k and k2 with 1 <= k + k2 <= N + 2.
bool elementary_equivalent(std::span<const LatticePoint> w, std::span<const LatticePoint> w2, int N);

enum class Decision { yes, no, unknown };
std::string to_string(Decision d);

struct ContractionResult {
  Decision verdict = Decision::unknown;  // never Decision::no
  int generators = 0;
  std::size_t moves = 0;
  /// First generator cycle that could not be contracted within the budget.
  std::optional<Path> stuck;
};

/// Semi-decision for N-simple connectivity of a finite connected set. Every
/// fundamental cycle of a breadth-first spanning tree is rewritten by
/// elementary N-moves, shortest paths first, until it collapses to its base
/// point. `budget` caps the total number of expanded paths.
ContractionResult n_simply_connected_bounded(const AdjacencySpec& spec, const PointSet& s, int N,
                                             std::size_t budget);

/// Fundamental cycles (closed paths at the smallest point) of s under spec.
std::vector<Path> generator_cycles(const AdjacencySpec& spec, const PointSet& s);

}  // namespace digitop

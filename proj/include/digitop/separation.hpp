#pragma once

// Cube-local separation property and the counting bounds for complement
// components inside a single cube.

#include <optional>
#include <vector>

#include "digitop/adjacency.hpp"
#include "digitop/lattice.hpp"

namespace digitop {

struct SeparationWitness {
  Cube cube;
  Cube cstar;
  Translation tau1;
  Translation tau2;
  /// Point x of cstar with tau1 tau2 (x) in the foreground component while
  /// tau1(x) or tau2(x) is not.
  LatticePoint point;
};

struct SeparationVerdict {
  bool holds = true;
  std::optional<SeparationWitness> witness;
};

/// Checks the separation condition for one cube of dimension 2..n.
/// `complement` labels the beta-components of the complement of m in a
/// region containing c (see complement_components).
SeparationVerdict not_separated_in_cube(const PointSet& m, const Cube& c, const AdjacencyPair& pair,
                                        const ComponentLabeling& complement);

SeparationVerdict not_separated_in_cube(const PointSet& m, const Cube& c, const AdjacencyPair& pair,
                                        const Region& r);

/// Every k-cube, 2 <= k <= n, that meets m. The first failing cube in
/// (dimension, cube) order supplies the witness.
SeparationVerdict has_separation_property(const PointSet& m, const AdjacencyPair& pair, const Region& r);

/// Re-evaluates a witness from scratch; true iff it still violates the condition.
bool replay_separation_witness(const PointSet& m, const AdjacencyPair& pair, const Region& r,
                               const SeparationWitness& w);

/// (k - m) l + 2^m - l with m = ceil(log2 l); requires 1 <= l <= 2^k.
int beta_neighbor_lower_bound(int k, int l);

/// Number of pairs (x, y) with x in `component`, y in c and m, y beta-adjacent to x.
int beta_neighbor_incidences(const std::vector<LatticePoint>& component, const PointSet& m, const Cube& c,
                             const AdjacencySpec& beta);

/// beta-components of c \ m, with paths kept inside the cube.
ComponentLabeling cube_complement_components(const Cube& c, const PointSet& m, const AdjacencySpec& beta);

/// k <= |c n m| <= 2^k - 2. Throws std::invalid_argument unless c \ m has
/// exactly two beta-components.
bool component_count_bounds_hold(const PointSet& m, const Cube& c, const AdjacencyPair& pair);

}  // namespace digitop

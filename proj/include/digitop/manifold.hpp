#pragma once

// Digital (n-1)-manifolds: the four local properties, the two global sides,
// simple points, double points, spheres and good pairs.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digitop/adjacency.hpp"
#include "digitop/lattice.hpp"
#include "digitop/separation.hpp"

namespace digitop {

struct PropertyVerdict {
  bool holds = true;
  std::optional<Cube> cube;
  std::vector<LatticePoint> points;  // offending point(s), e.g. p or (p, q)
  std::string note;
  std::optional<SeparationWitness> separation;
};

struct ManifoldReport {
  PropertyVerdict alpha_connected;
  PropertyVerdict cube_connected;     // 1
  PropertyVerdict two_components;     // 2
  PropertyVerdict component_unity;    // 3
  PropertyVerdict separation;         // 4
  /// p -> (C_p, D_p), filled for every p with exactly two local components.
  std::map<LatticePoint, std::pair<PointSet, PointSet>> local;

  bool certified() const {
    return alpha_connected.holds && cube_connected.holds && two_components.holds && component_unity.holds &&
           separation.holds;
  }
  /// Name of the first failing check, or "" when certified.
  std::string first_failure() const;
};

/// beta-components of omega(p) \ m, ordered by smallest member.
std::vector<PointSet> local_components(const LatticePoint& p, const PointSet& m, const AdjacencyPair& pair);

/// Throws std::invalid_argument for an empty set.
ManifoldReport check_manifold(const PointSet& m, const AdjacencyPair& pair, int margin = 2);

/// Re-evaluates one failing property from its witness alone; true iff the
/// witness still shows the failure. Property names as in first_failure().
bool replay_property(const std::string& property, const PropertyVerdict& v, const PointSet& m,
                     const AdjacencyPair& pair, int margin = 2);

struct GlobalSides {
  PointSet c;  // holds the lexicographically smallest point of omega(m) \ m
  PointSet d;
};

/// The two beta-components of omega(m) \ m with local labels propagated along
/// alpha-edges. Throws std::invalid_argument if the report is not certified and
/// std::logic_error if the propagation or the component count is inconsistent.
GlobalSides global_sides(const PointSet& m, const AdjacencyPair& pair, const ManifoldReport& report);

bool is_simple_point(const LatticePoint& p, const PointSet& m, const AdjacencyPair& pair, const Region& r);

struct DoublePointWitness {
  LatticePoint z, p, q, r;
  Translation tau;
  friend auto operator<=>(const DoublePointWitness&, const DoublePointWitness&) = default;
};

std::vector<DoublePointWitness> double_points(const LatticePoint& z, const AdjacencyPair& pair);
bool validate_double_point(const DoublePointWitness& w, const AdjacencyPair& pair);

struct SeparatingPairResult {
  Decision verdict = Decision::unknown;
  ManifoldReport sphere;  // report for beta(0)
  ContractionResult contraction;
  int n_used = 0;  // N that settled the contraction, 0 if none
};

/// beta(0) must be a certified manifold that is N'-simply connected for some
/// N' >= N; N' is escalated until every generator cycle could be removed in a
/// single move.
SeparatingPairResult is_separating_pair(const AdjacencyPair& pair, int N, std::size_t budget);

struct GoodPairResult {
  Decision verdict = Decision::unknown;
  SeparatingPairResult separating;
  std::vector<DoublePointWitness> doubles;
};

GoodPairResult is_good_pair(const AdjacencyPair& pair, int N, std::size_t budget);

/// Offsets invariant under every signed axis permutation.
bool is_regular_rotation(const AdjacencySpec& spec);

}  // namespace digitop

#pragma once

// Discrete Jordan-Brouwer check on certified manifolds, plus the generators
// used for test sets.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "digitop/manifold.hpp"

namespace digitop {

/// Thrown when jordan_check is given a set check_manifold does not certify.
class NotCertified : public std::runtime_error {
 public:
  NotCertified(const std::string& property, ManifoldReport report)
      : std::runtime_error("not a manifold: property '" + property + "' fails"),
        property(property),
        report(std::move(report)) {}
  std::string property;
  ManifoldReport report;
};

struct JordanReport {
  int margin = 2;
  int components = 0;  // beta-components of region \ m after merging the boundary ones
  bool two_components = false;
  std::size_t inside_size = 0;   // the bounded component
  std::size_t outside_size = 0;  // the component touching the region boundary, clipped to the region
  bool common_boundary = false;
  std::optional<LatticePoint> boundary_witness;  // point of m missing a beta-neighbour on one side
  bool no_simple_points = false;
  std::optional<LatticePoint> simple_witness;

  bool holds() const { return two_components && common_boundary && no_simple_points; }
};

/// Throws NotCertified for uncertified input, std::invalid_argument for margin < 2.
JordanReport jordan_check(const PointSet& m, const AdjacencyPair& pair, int margin = 2);

enum class GeneratorKind { rect_boundary, box_surface, sphere_shell };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::rect_boundary;
  std::vector<int> params;  // (w,h), (w,h,d) or (r,n)
};

GeneratorKind parse_generator_kind(const std::string& s);
std::string to_string(GeneratorKind k);

/// Boundary points of the w x h box at the origin; w, h >= 3.
PointSet rect_boundary(int w, int h);
/// Points of the w x h x d box with an extremal coordinate; all sides >= 3.
PointSet box_surface(int w, int h, int d);
/// {p : r-1 < |p| <= r+1/2} in Z^n; r >= 2, 2 <= n <= 6. Not necessarily a manifold.
PointSet sphere_shell(int r, int n);

PointSet generate(const GeneratorSpec& spec);

}  // namespace digitop

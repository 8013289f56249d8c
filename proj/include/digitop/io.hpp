#pragma once

// Text formats (point sets, adjacency offsets), JSON reports and exports.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "digitop/complex.hpp"
#include "digitop/jordan.hpp"
#include "digitop/manifold.hpp"
#include "digitop/pseudomanifold.hpp"

namespace digitop::io {

using nlohmann::json;

/// Malformed input; the message carries source and line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One point per line, space-separated integers, '#' comments, blank lines
/// ignored. The dimension comes from the first data line unless given.
PointSet parse_points(std::istream& in, const std::string& source, std::optional<int> dim = std::nullopt);
PointSet load_points(const std::string& path, std::optional<int> dim = std::nullopt);
void write_points(std::ostream& out, const PointSet& m);

/// Offset vectors in the same line format; dimension n enforced.
std::vector<Translation> parse_offsets(std::istream& in, const std::string& source, int n);

/// "axis", "full" or "custom:PATH".
AdjacencySpec parse_adjacency(const std::string& arg, int n);
/// Inverse for the built-in kinds; custom specs give their offset list.
json adjacency_json(const AdjacencySpec& spec);

template <class Tag>
json to_json(const IntVec<Tag>& v) {
  return json(v.to_vector());
}
LatticePoint point_from_json(const json& j);
Translation translation_from_json(const json& j);

json to_json(const Cube& c);  // {base, axes}
Cube cube_from_json(const json& j);

json to_json(const SeparationWitness& w);
SeparationWitness separation_witness_from_json(const json& j);

json to_json(const PropertyVerdict& v);
PropertyVerdict property_from_json(const json& j);

/// Properties keyed by the names first_failure() uses.
json to_json(const ManifoldReport& r);

json to_json(const DoublePointWitness& w);
DoublePointWitness double_point_from_json(const json& j);

json to_json(const ContractionResult& c);
json to_json(const GoodPairResult& g);

json to_json(const PseudomanifoldReport& r);
json to_json(const JordanReport& r);

/// {n, vertices, simplices, provenance}; vertices in doubled coordinates,
/// simplices as sorted index lists, provenance only for barycenters.
json complex_json(const SimplicialComplex& k);

/// Triangles of a complex in R^3. Returns warnings (simplices left out).
/// Throws std::invalid_argument unless n == 3.
std::vector<std::string> write_off(std::ostream& out, const SimplicialComplex& k);

}  // namespace digitop::io

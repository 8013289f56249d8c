#pragma once

// The simplicial complex K(M) spanned by lattice points and cube barycenters,
// its reduction K'(M), and exact checks on the result.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "digitop/adjacency.hpp"
#include "digitop/lattice.hpp"

namespace digitop {

/// Vertices in doubled coordinates, sorted and distinct.
struct Simplex {
  std::vector<HalfPoint> vertices;

  Simplex() = default;
  explicit Simplex(std::vector<HalfPoint> v);
  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  bool has_vertex(const HalfPoint& h) const;
  bool is_face_of(const Simplex& other) const;
  std::string str() const;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplicialComplex {
  int n = 0;  // ambient dimension
  std::set<Simplex> simplices;
  std::map<HalfPoint, Cube> provenance;  // every vertex -> its source cube (0-cubes for lattice points)

  void insert_with_faces(const Simplex& s);
  std::vector<HalfPoint> vertices() const;
  std::vector<std::size_t> f_vector() const;  // counts by dimension
  int dimension() const;                      // -1 when empty
  std::vector<Simplex> of_dim(int d) const;
  std::vector<Simplex> maximal() const;
  bool empty() const { return simplices.empty(); }
};

/// Barycenter test. Antipodal pair in M that is alpha-adjacent, antipodal
/// pair outside M that is not beta-adjacent, or (k >= 2) C inside M.
bool test_T(const Cube& c, const PointSet& m, const AdjacencyPair& pair);

/// Whether a cube contributes its barycenter: T(C) and C meets M.
bool contributes(const Cube& c, const PointSet& m, const AdjacencyPair& pair);

SimplicialComplex build_complex_in_cube(const Cube& cn, const PointSet& m, const AdjacencyPair& pair);

/// Union over the n-cubes meeting the bounding box of m dilated by one.
SimplicialComplex build_complex(const PointSet& m, const AdjacencyPair& pair);

struct CubeRecord {
  Cube cube;
  bool test = false;     // T(C)
  bool vertex = false;   // barycenter is a vertex of K
  int components = 0;    // beta-components of C \ M
  bool removed = false;  // vertex dropped in K'
};

/// One record per cube of dimension >= 1 meeting m, in (dimension, cube) order.
std::vector<CubeRecord> build_trace(const PointSet& m, const AdjacencyPair& pair);

/// K'(M): drops barycenters whose cube has exactly one beta-component in C \ M.
SimplicialComplex reduce_complex(const SimplicialComplex& k, const PointSet& m, const AdjacencyPair& pair);

struct AxiomReport {
  bool ok = true;
  std::string failure;  // "independence", "faces" or "disjointness"
  std::optional<Simplex> first, second;
};

/// Affine independence, face closure and disjointness of open simplices,
/// all exact. Pair scans use DIGITOP_THREADS workers at most.
AxiomReport verify_complex_axioms(const SimplicialComplex& k);

int euler_characteristic(const SimplicialComplex& k);

/// Connected components of the 1-skeleton, each sorted, ordered by smallest vertex.
std::vector<std::vector<HalfPoint>> skeleton_components(const SimplicialComplex& k);

struct CorrespondenceReport {
  bool ok = true;
  std::string note;
  std::optional<HalfPoint> point;
  std::optional<Simplex> simplex;
};

/// Lattice vertices are exactly m and no closed simplex contains a lattice
/// point other than its own vertices.
CorrespondenceReport check_lattice_correspondence(const SimplicialComplex& k, const PointSet& m);

struct ChamberReport {
  int chambers = 0;               // components of the free doubled grid
  std::map<LatticePoint, int> of; // chamber id of every lattice point of region \ m
  bool matches_beta = false;      // partition equals beta-components of region \ m
};

/// Flood fill of the complement of |K| on the doubled grid of r. A grid
/// point is blocked if a closed simplex contains it; a step is allowed only
/// if the segment misses every simplex.
ChamberReport complement_chambers(const SimplicialComplex& k, const PointSet& m, const AdjacencySpec& beta,
                                  const Region& r);

SimplicialComplex translate(const SimplicialComplex& k, const Translation& t);

/// Worker count: DIGITOP_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

}  // namespace digitop

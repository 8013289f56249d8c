#pragma once

// Combinatorial pseudomanifold checks on a simplicial complex: homogeneity,
// exactly two cofaces per ridge, and strong connectivity. Borderless only.

#include <optional>
#include <string>

#include "digitop/complex.hpp"

namespace digitop {

struct HomogeneityVerdict {
  bool holds = true;
  std::optional<Simplex> witness;  // smallest simplex not under any d-simplex (or above d)
};

struct NondegeneracyVerdict {
  bool holds = true;
  std::optional<Simplex> witness;  // a (d-1)-simplex
  int cofaces = 0;                 // its number of d-cofaces
};

struct StrongConnectivityVerdict {
  bool holds = true;
  std::optional<Simplex> first, second;  // d-simplices with no dual path between them
  int classes = 0;                       // components of the dual graph
};

struct PseudomanifoldReport {
  int dimension = 0;
  HomogeneityVerdict homogeneous;
  NondegeneracyVerdict nondegenerate;
  StrongConnectivityVerdict strongly_connected;

  bool holds() const { return homogeneous.holds && nondegenerate.holds && strongly_connected.holds; }
};

/// Every simplex is a face of a d-simplex and none has dimension above d.
HomogeneityVerdict is_homogeneous(const SimplicialComplex& k, int d);

/// Every (d-1)-simplex has exactly two d-dimensional cofaces.
NondegeneracyVerdict is_nondegenerate(const SimplicialComplex& k, int d);

/// The dual graph on d-simplices (shared (d-1)-faces) is connected.
StrongConnectivityVerdict is_strongly_connected(const SimplicialComplex& k, int d);

PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k, int d);

}  // namespace digitop

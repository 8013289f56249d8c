#pragma once

// Exact predicates on simplices with half-integer vertices. Everything runs
// on doubled integer coordinates with rational arithmetic; no floating point.

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "digitop/lattice.hpp"

namespace digitop::exact {

using Rational = boost::multiprecision::cpp_rational;

/// Rank of the difference vectors v_i - v_0 (0 for a single point, -1 for none).
int affine_rank(std::span<const HalfPoint> pts);

bool affinely_independent(std::span<const HalfPoint> pts);

/// Do the simplices spanned by a and b intersect? An open side only counts
/// points with all barycentric coordinates strictly positive; a single
/// vertex is its own open simplex.
bool simplices_meet(std::span<const HalfPoint> a, bool open_a, std::span<const HalfPoint> b, bool open_b);

bool point_in_closed_simplex(const HalfPoint& p, std::span<const HalfPoint> s);
bool point_in_open_simplex(const HalfPoint& p, std::span<const HalfPoint> s);

/// max c.x subject to A x = b, x >= 0 (two-phase simplex, Bland's rule).
/// Returns false if infeasible; the optimum is written to `value`. The
/// problem must be bounded.
bool maximize(std::vector<std::vector<Rational>> A, std::vector<Rational> b, const std::vector<Rational>& c,
              Rational& value);

}  // namespace digitop::exact

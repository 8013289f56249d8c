#include "digitop/exact.hpp"

#include <stdexcept>

namespace digitop::exact {

int affine_rank(std::span<const HalfPoint> pts) {
  if (pts.empty()) return -1;
  const int n = pts.front().dim();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(n);
    for (int a = 0; a < n; ++a) r[a] = pts[i][a] - pts[0][a];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (int c = col; c < n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

bool affinely_independent(std::span<const HalfPoint> pts) {
  return !pts.empty() && affine_rank(pts) == static_cast<int>(pts.size()) - 1;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Tableau rows: [coeffs | rhs]; basis[i] is the basic column of row i.
void pivot(Matrix& t, std::vector<Rational>& obj, std::vector<int>& basis, std::size_t row, std::size_t col) {
  const std::size_t width = t[row].size();
  const Rational p = t[row][col];
  for (std::size_t c = 0; c < width; ++c) t[row][c] /= p;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r == row || t[r][col] == 0) continue;
    const Rational f = t[r][col];
    for (std::size_t c = 0; c < width; ++c) t[r][c] -= f * t[row][c];
  }
  if (obj[col] != 0) {
    const Rational f = obj[col];
    for (std::size_t c = 0; c < width; ++c) obj[c] -= f * t[row][c];
  }
  basis[row] = static_cast<int>(col);
}

// Maximises obj over the tableau; obj holds reduced costs (negated, so a
// negative entry can improve) and obj.back() the current objective value.
void run_simplex(Matrix& t, std::vector<Rational>& obj, std::vector<int>& basis, std::size_t allowed) {
  while (true) {
    std::size_t col = allowed;
    for (std::size_t c = 0; c < allowed; ++c)
      if (obj[c] < 0) {
        col = c;
        break;
      }
    if (col == allowed) return;
    std::size_t row = t.size();
    Rational best;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (t[r][col] <= 0) continue;
      const Rational ratio = t[r].back() / t[r][col];
      if (row == t.size() || ratio < best || (ratio == best && basis[r] < basis[row])) {
        row = r;
        best = ratio;
      }
    }
    if (row == t.size()) throw std::logic_error("unbounded linear program");
    pivot(t, obj, basis, row, col);
  }
}

}  // namespace

bool maximize(Matrix A, std::vector<Rational> b, const std::vector<Rational>& c, Rational& value) {
  const std::size_t m = A.size();
  const std::size_t nvar = c.size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& x : A[i]) x = -x;
      b[i] = -b[i];
    }
  // Columns: nvar real, m artificial, then rhs.
  Matrix t(m, std::vector<Rational>(nvar + m + 1));
  std::vector<int> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nvar; ++j) t[i][j] = A[i][j];
    t[i][nvar + i] = 1;
    t[i].back() = b[i];
    basis[i] = static_cast<int>(nvar + i);
  }
  // Phase 1: maximise -sum(artificials).
  std::vector<Rational> obj(nvar + m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= nvar + m; ++j)
      if (j < nvar || j == nvar + m) obj[j] -= t[i][j];
  run_simplex(t, obj, basis, nvar + m);
  if (obj.back() != 0) return false;

  // Drive zero artificials out of the basis; rows that cannot pivot are redundant.
  for (std::size_t i = 0; i < t.size();) {
    if (basis[i] < static_cast<int>(nvar)) {
      ++i;
      continue;
    }
    std::size_t col = nvar;
    for (std::size_t j = 0; j < nvar; ++j)
      if (t[i][j] != 0) {
        col = j;
        break;
      }
    if (col == nvar) {
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    pivot(t, obj, basis, i, col);
    ++i;
  }

  // Phase 2 with artificial columns frozen out.
  std::fill(obj.begin(), obj.end(), Rational(0));
  for (std::size_t j = 0; j < nvar; ++j) obj[j] = -c[j];
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Rational f = obj[basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= f * t[i][j];
  }
  run_simplex(t, obj, basis, nvar);
  value = obj.back();
  return true;
}

bool simplices_meet(std::span<const HalfPoint> a, bool open_a, std::span<const HalfPoint> b, bool open_b) {
  if (a.empty() || b.empty()) return false;
  const int n = a.front().dim();
  if (a.size() == 1) open_a = false;
  if (b.size() == 1) open_b = false;
  const bool with_t = open_a || open_b;
  // Variables: lambda (or slack above t) per vertex of a, then of b, then t and its slack.
  const std::size_t na = a.size(), nb = b.size();
  const std::size_t nvar = na + nb + (with_t ? 2 : 0);
  const std::size_t tcol = na + nb;
  Matrix A;
  std::vector<Rational> rhs;
  for (int d = 0; d < n; ++d) {
    std::vector<Rational> row(nvar);
    for (std::size_t i = 0; i < na; ++i) row[i] = a[i][d];
    for (std::size_t j = 0; j < nb; ++j) row[na + j] = -b[j][d];
    if (with_t) {
      Rational s = 0;
      if (open_a)
        for (const auto& v : a) s += v[d];
      if (open_b)
        for (const auto& v : b) s -= v[d];
      row[tcol] = s;
    }
    A.push_back(std::move(row));
    rhs.push_back(0);
  }
  std::vector<Rational> sum_a(nvar), sum_b(nvar);
  for (std::size_t i = 0; i < na; ++i) sum_a[i] = 1;
  for (std::size_t j = 0; j < nb; ++j) sum_b[na + j] = 1;
  if (open_a) sum_a[tcol] = static_cast<int>(na);
  if (open_b) sum_b[tcol] = static_cast<int>(nb);
  A.push_back(std::move(sum_a));
  rhs.push_back(1);
  A.push_back(std::move(sum_b));
  rhs.push_back(1);
  std::vector<Rational> c(nvar);
  if (with_t) {
    std::vector<Rational> cap(nvar);
    cap[tcol] = 1;
    cap[tcol + 1] = 1;
    A.push_back(std::move(cap));
    rhs.push_back(1);
    c[tcol] = 1;
  }
  Rational best;
  if (!maximize(std::move(A), std::move(rhs), c, best)) return false;
  return !with_t || best > 0;
}

bool point_in_closed_simplex(const HalfPoint& p, std::span<const HalfPoint> s) {
  return simplices_meet(std::span<const HalfPoint>(&p, 1), false, s, false);
}

bool point_in_open_simplex(const HalfPoint& p, std::span<const HalfPoint> s) {
  return simplices_meet(std::span<const HalfPoint>(&p, 1), false, s, true);
}

}  // namespace digitop::exact

#include "mring/exact.hpp"

#include <algorithm>

#include "mring/error.hpp"

namespace mring {

namespace {

void normalize_row(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& v : row) v /= g;
}

// Fraction-free row echelon with gcd-normalized rows. Returns pivot columns;
// `a` is left in echelon form with pivot rows first.
std::vector<int> echelon(IntMat& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const mpz_class f1 = a[r][c], f2 = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] = f1 * a[i][j] - f2 * a[r][j];
      normalize_row(a[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

mpz_class det_bareiss(IntMat a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n) fail(errc::bad_range, "determinant of a non-square matrix");
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int rank_exact(IntMat a) { return static_cast<int>(echelon(a).size()); }

std::vector<std::vector<mpz_class>> nullspace_exact(IntMat a) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  const std::vector<int> pivots = echelon(a);
  const int r = static_cast<int>(pivots.size());
  // Back-eliminate above every pivot so each pivot column is isolated.
  for (int i = r - 1; i >= 0; --i) {
    const int c = pivots[i];
    for (int k = 0; k < i; ++k) {
      if (a[k][c] == 0) continue;
      const mpz_class f1 = a[i][c], f2 = a[k][c];
      for (int j = 0; j < cols; ++j) a[k][j] = f1 * a[k][j] - f2 * a[i][j];
      normalize_row(a[k]);
    }
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<mpz_class>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    mpz_class scale = 1;
    for (int i = 0; i < r; ++i)
      if (a[i][f] != 0) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), a[i][pivots[i]].get_mpz_t());
        scale = scale / g * a[i][pivots[i]];
      }
    std::vector<mpz_class> x(cols, 0);
    x[f] = scale;
    for (int i = 0; i < r; ++i) {
      if (a[i][f] == 0) continue;
      mpz_class q = scale / a[i][pivots[i]];
      x[pivots[i]] = -q * a[i][f];
    }
    normalize_row(x);
    if (x[f] < 0)
      for (auto& v : x) v = -v;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<mpz_class>> solve_unique_integral(IntMat a, std::vector<mpz_class> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  if (static_cast<int>(b.size()) != rows) fail(errc::bad_range, "right-hand side length mismatch");
  for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
  IntMat work = a;
  const std::vector<int> pivots = echelon(work);
  // Inconsistent if a pivot lands in the appended column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (static_cast<int>(pivots.size()) != cols) return std::nullopt;  // not unique
  std::vector<mpq_class> x(cols, 0);
  for (int i = cols - 1; i >= 0; --i) {
    mpq_class acc = work[i][cols];
    for (int j = i + 1; j < cols; ++j) acc -= mpq_class(work[i][j]) * x[j];
    x[i] = acc / mpq_class(work[i][pivots[i]]);
    x[i].canonicalize();
  }
  std::vector<mpz_class> out(cols);
  for (int i = 0; i < cols; ++i) {
    x[i].canonicalize();
    if (x[i].get_den() != 1) return std::nullopt;
    out[i] = x[i].get_num();
  }
  return out;
}

}  // namespace mring

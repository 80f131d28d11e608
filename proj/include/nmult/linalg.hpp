// Small dense exact linear algebra over the rationals. Systems here never
// exceed desk dimensions (n <= 6), so plain Gaussian elimination is enough.
#pragma once

#include <optional>
#include <vector>

#include "nmult/rational.hpp"

namespace nmult {

using QMat = std::vector<QVec>;

inline int rank_of(QMat m) {
  int rows = (int)m.size();
  if (rows == 0) return 0;
  int cols = (int)m[0].size();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline int rank_of_z(const std::vector<ZVec>& rows) {
  QMat m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_qvec(r));
  return rank_of(m);
}

// Solve the square system A x = b; empty when A is singular.
inline std::optional<QVec> solve_square(QMat a, QVec b) {
  int n = (int)a.size();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  QVec x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline Rat det(QMat a) {
  int n = (int)a.size();
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != c) { std::swap(a[c], a[piv]); d = -d; }
    d *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

// Rank of the affine span of a point set (dimension of the flat they span).
inline int affine_rank(const std::vector<QVec>& pts) {
  if (pts.size() <= 1) return 0;
  QMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rank_of(diffs);
}

}  // namespace nmult

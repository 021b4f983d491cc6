#pragma once

#include <concepts>
#include <cstdint>
#include <vector>

#include "dmloc/error.hpp"

namespace dmloc {

/// Exact field arithmetic shared by FFElem and LocalElem.
template <class T>
concept FieldElement = requires(const T a, const T b, uint64_t q0) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a.inverse() } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<T>;
  { a.one_like() } -> std::convertible_to<T>;
  { a.pow_q(q0) } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Determinant by Gaussian elimination. The matrix must be square and
/// nonempty.
template <FieldElement T>
T determinant(Matrix<T> m) {
  const size_t n = m.size();
  T det = m[0][0].one_like();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return det.zero_like();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    const T inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const T f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return det;
}

/// Solves m x = b for square nonsingular m.
/// Throws ComputationError("singular_matrix").
template <FieldElement T>
std::vector<T> solve_linear_system(Matrix<T> m, std::vector<T> b) {
  const size_t n = m.size();
  if (b.size() != n) throw ComputationError("dimension_mismatch", "right-hand side has wrong length");
  for (const auto& row : m) {
    if (row.size() != n) throw ComputationError("dimension_mismatch", "matrix is not square");
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw ComputationError("singular_matrix", "linear system is singular");
    std::swap(m[pivot], m[col]);
    std::swap(b[pivot], b[col]);
    const T inv = m[col][col].inverse();
    for (size_t c = col; c < n; ++c) m[col][c] = m[col][c] * inv;
    b[col] = b[col] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const T f = m[r][col];
      for (size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  return b;
}

}  // namespace dmloc

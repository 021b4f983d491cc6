#include "dmloc/poly_matrix.hpp"

#include "dmloc/error.hpp"

namespace dmloc {

CoeffElem poly_determinant(const CoeffRing& ring, PolyMatrix m) {
  const size_t n = m.size();
  if (n == 0) return ring.one();
  for (const auto& row : m) {
    if (row.size() != n) throw ComputationError("dimension_mismatch", "determinant of a non-square matrix");
  }
  bool negate = false;
  CoeffElem prev = ring.one();
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return ring.zero();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        CoeffElem num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto [quo, rem] = num.divmod(prev);
        if (!rem.is_zero()) throw ComputationError("internal", "Bareiss division was not exact");
        m[i][j] = std::move(quo);
      }
      m[i][k] = ring.zero();
    }
    prev = m[k][k];
  }
  CoeffElem det = m[n - 1][n - 1];
  return negate ? -det : det;
}

std::vector<CoeffElem> smith_invariant_factors(const CoeffRing& ring, PolyMatrix m) {
  for (const auto& row : m) {
    for (const auto& x : row) ring.check_member(x);
  }
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<CoeffElem> factors;
  for (size_t k = 0; k < std::min(rows, cols); ++k) {
    for (;;) {
      // Smallest-degree nonzero entry of the trailing block goes to (k, k).
      int best = -1;
      size_t bi = k, bj = k;
      for (size_t i = k; i < rows; ++i) {
        for (size_t j = k; j < cols; ++j) {
          if (!m[i][j].is_zero() && (best < 0 || m[i][j].degree() < best)) {
            best = m[i][j].degree();
            bi = i;
            bj = j;
          }
        }
      }
      if (best < 0) return factors;
      std::swap(m[k], m[bi]);
      for (auto& row : m) std::swap(row[k], row[bj]);

      bool clean = true;
      for (size_t i = k + 1; i < rows; ++i) {
        if (m[i][k].is_zero()) continue;
        const CoeffElem q = m[i][k].divmod(m[k][k]).first;
        for (size_t j = k; j < cols; ++j) m[i][j] = m[i][j] - q * m[k][j];
        clean = clean && m[i][k].is_zero();
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (m[k][j].is_zero()) continue;
        const CoeffElem q = m[k][j].divmod(m[k][k]).first;
        for (size_t i = k; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][k];
        clean = clean && m[k][j].is_zero();
      }
      if (!clean) continue;
      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (size_t i = k + 1; i < rows && divides; ++i) {
        for (size_t j = k + 1; j < cols; ++j) {
          if (!m[i][j].divmod(m[k][k]).second.is_zero()) {
            for (size_t c = k; c < cols; ++c) m[k][c] = m[k][c] + m[i][c];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    factors.push_back(m[k][k].monic());
  }
  return factors;
}

bool rows_generate_free_module(const CoeffRing& ring, const PolyMatrix& m, size_t n) {
  if (n == 0) return true;
  const auto f = smith_invariant_factors(ring, m);
  if (f.size() != n) return false;
  for (const auto& d : f) {
    if (d.degree() != 0) return false;
  }
  return true;
}

}  // namespace dmloc

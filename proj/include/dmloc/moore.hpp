#pragma once

#include <vector>

#include "dmloc/linear_algebra.hpp"
#include "dmloc/twisted_poly.hpp"

namespace dmloc {

/// Matrix with entry (i, j) = v_i^{q0^j}.
template <FieldElement T>
Matrix<T> moore_matrix(const std::vector<T>& v, uint64_t q0) {
  Matrix<T> m(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    T x = v[i];
    for (size_t j = 0; j < v.size(); ++j) {
      m[i].push_back(x);
      x = x.pow_q(q0);
    }
  }
  return m;
}

/// Moore determinant; nonzero iff the v_i are F_{q0}-linearly independent.
/// The empty determinant is 1, which needs a prototype element for its field.
template <FieldElement T>
T moore_det(const std::vector<T>& v, uint64_t q0, const T& proto) {
  if (v.empty()) return proto.one_like();
  return determinant(moore_matrix(v, q0));
}

template <FieldElement T>
T moore_det(const std::vector<T>& v, uint64_t q0) {
  return moore_det(v, q0, v.at(0));
}

/// The unique twisted polynomial of degree < n agreeing with the prescribed
/// values on the F_{q0}-basis v_1..v_n. Throws ComputationError
/// ("dependent_basis") when the v_i are dependent.
template <FieldElement T>
TwistedPoly<T> tau_interpolate(const std::vector<T>& basis, const std::vector<T>& values, uint64_t q0) {
  if (basis.size() != values.size() || basis.empty()) {
    throw ComputationError("dimension_mismatch", "basis and values must have the same positive length");
  }
  try {
    std::vector<T> coeffs = solve_linear_system(moore_matrix(basis, q0), values);
    return TwistedPoly<T>(std::move(coeffs), q0);
  } catch (const ComputationError& e) {
    if (e.code() == "singular_matrix") {
      throw ComputationError("dependent_basis", "interpolation points are linearly dependent over F_q0");
    }
    throw;
  }
}

/// Monic twisted polynomial whose roots are exactly the F_{q0}-span of v.
template <FieldElement T>
TwistedPoly<T> subspace_polynomial(const std::vector<T>& v, uint64_t q0, const T& proto) {
  TwistedPoly<T> p = TwistedPoly<T>::constant(proto.one_like(), q0);
  for (const T& x : v) {
    const T y = p.evaluate(x);
    if (y.is_zero()) throw ComputationError("dependent_basis", "vectors are linearly dependent over F_q0");
    // (T - y^{q0-1}) p vanishes on span(v_1..v_i, x).
    const T c = y.pow_q(q0) * y.inverse();
    p = (TwistedPoly<T>::monomial(proto.one_like(), 1, q0) - TwistedPoly<T>::constant(c, q0)) * p;
  }
  return p;
}

}  // namespace dmloc

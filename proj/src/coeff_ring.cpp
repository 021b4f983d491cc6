#include "dmloc/coeff_ring.hpp"

#include "dmloc/error.hpp"

namespace dmloc {

CoeffRing::CoeffRing(FieldRef residue, uint64_t q) : residue_(std::move(residue)), q_(q) {
  if (!residue_->has_subfield(q_)) {
    throw ComputationError("bad_field", "F_" + std::to_string(q_) + " is not a subfield of the residue field");
  }
  constants_ = residue_->subfield(q_);
}

bool CoeffRing::is_constant(const FFElem& x) const { return x.pow_q(q_) == x; }

void CoeffRing::check_member(const CoeffElem& a) const {
  for (const auto& c : a.coeffs()) {
    if (!is_constant(c)) throw ComputationError("not_in_ring", "coefficient outside F_q");
  }
}

std::optional<int> CoeffRing::abs_infinity(const CoeffElem& a) const {
  if (a.is_zero()) return std::nullopt;
  return a.degree();
}

void CoeffRing::for_each_of_degree_at_most(int d, const std::function<void(const CoeffElem&)>& fn) const {
  if (d < 0) {
    fn(zero());
    return;
  }
  const size_t len = static_cast<size_t>(d) + 1;
  std::vector<size_t> digit(len, 0);
  for (;;) {
    std::vector<FFElem> c(len);
    for (size_t i = 0; i < len; ++i) c[i] = constants_[digit[i]];
    fn(CoeffElem(residue_.get(), std::move(c)));
    size_t i = 0;
    while (i < len && ++digit[i] == constants_.size()) digit[i++] = 0;
    if (i == len) break;
  }
}

std::vector<CoeffElem> CoeffRing::enumerate_by_degree(int d) const {
  std::vector<CoeffElem> out;
  for_each_of_degree_at_most(d, [&](const CoeffElem& a) { out.push_back(a); });
  return out;
}

CoeffElem CoeffRing::minimal_polynomial(const FFElem& x) const {
  // Product over the Frobenius orbit x, x^q, x^{q^2}, ...
  CoeffElem m = one();
  FFElem y = x;
  do {
    m = m * CoeffElem(residue_.get(), {-y, residue_->one()});
    y = y.pow_q(q_);
  } while (!(y == x));
  return m;
}

}  // namespace dmloc

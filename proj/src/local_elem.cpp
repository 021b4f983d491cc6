#include "dmloc/local_elem.hpp"

#include "dmloc/error.hpp"

namespace dmloc {

LocalElem::LocalElem(const FiniteField* field) : num_(field), den_(FPoly::constant(field->one())) {}

LocalElem::LocalElem(const FFElem& c) : num_(FPoly::constant(c)), den_(FPoly::constant(c.one_like())) {}

LocalElem::LocalElem(FPoly num, FPoly den, int shift, bool normalized)
    : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
  if (!normalized) normalize();
}

LocalElem LocalElem::pi(const FiniteField* field) { return pi_power(field, 1); }

LocalElem LocalElem::pi_power(const FiniteField* field, int k) {
  return LocalElem(FPoly::constant(field->one()), FPoly::constant(field->one()), k, true);
}

LocalElem LocalElem::fraction(const FPoly& num, const FPoly& den, int shift) {
  if (den.is_zero()) throw ComputationError("division_by_zero", "zero denominator");
  return LocalElem(num, den, shift, false);
}

void LocalElem::normalize() {
  if (den_.is_zero()) throw ComputationError("division_by_zero", "zero denominator");
  if (num_.is_zero()) {
    den_ = FPoly::constant(den_.field()->one());
    shift_ = 0;
    return;
  }
  const int on = num_.order();
  const int od = den_.order();
  num_ = num_.shift_down(static_cast<size_t>(on));
  den_ = den_.shift_down(static_cast<size_t>(od));
  shift_ += on - od;
  if (den_.degree() > 0) {
    FPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const FFElem lead = den_.leading();
  if (!lead.is_one()) {
    const FFElem inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Valuation LocalElem::valuation() const {
  if (is_zero()) return Valuation{};
  return Valuation{shift_};
}

FFElem LocalElem::leading_coefficient() const {
  if (is_zero()) return field()->zero();
  return num_.coeff(0) / den_.coeff(0);
}

FFElem LocalElem::residue() const {
  if (is_zero() || shift_ > 0) return field()->zero();
  if (shift_ < 0) throw ComputationError("not_integral", "residue of a non-integral element");
  return leading_coefficient();
}

LocalElem LocalElem::operator+(const LocalElem& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const LocalElem& lo = shift_ <= o.shift_ ? *this : o;
  const LocalElem& hi = shift_ <= o.shift_ ? o : *this;
  const size_t gap = static_cast<size_t>(hi.shift_ - lo.shift_);
  if (lo.den_.is_one() && hi.den_.is_one()) {
    FPoly num = lo.num_ + hi.num_.shift_up(gap);
    if (num.is_zero()) return zero_like();
    const int on = num.order();
    return LocalElem(num.shift_down(static_cast<size_t>(on)), lo.den_, lo.shift_ + on, true);
  }
  if (lo.den_ == hi.den_) {
    return LocalElem(lo.num_ + hi.num_.shift_up(gap), lo.den_, lo.shift_, false);
  }
  FPoly num = lo.num_ * hi.den_ + (hi.num_ * lo.den_).shift_up(gap);
  return LocalElem(std::move(num), lo.den_ * hi.den_, lo.shift_, false);
}

LocalElem LocalElem::operator-() const { return LocalElem(-num_, den_, shift_, true); }

LocalElem LocalElem::operator-(const LocalElem& o) const { return *this + (-o); }

LocalElem LocalElem::operator*(const LocalElem& o) const {
  if (is_zero() || o.is_zero()) return zero_like();
  const bool laurent = den_.is_one() && o.den_.is_one();
  // Products of polynomials with nonzero constant terms keep nonzero constant
  // terms, so Laurent products are already canonical.
  return LocalElem(num_ * o.num_, den_ * o.den_, shift_ + o.shift_, laurent);
}

LocalElem LocalElem::inverse() const {
  if (is_zero()) throw ComputationError("division_by_zero", "inverse of zero in local field");
  return LocalElem(den_, num_, -shift_, false);
}

LocalElem LocalElem::operator/(const LocalElem& o) const { return *this * o.inverse(); }

LocalElem LocalElem::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  LocalElem r = one_like();
  LocalElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

LocalElem LocalElem::frobenius() const { return pow_q(field()->characteristic()); }

LocalElem LocalElem::pow_q(uint64_t q0) const {
  field()->log_p(q0);
  if (is_zero() || q0 == 1) return *this;
  // The q0-th power of a canonical form is canonical: constant terms stay
  // nonzero, the denominator stays monic and coprimality is preserved.
  return LocalElem(num_.pow_q(q0), den_.pow_q(q0), shift_ * static_cast<int>(q0), true);
}

bool LocalElem::is_qth_power(uint64_t q0) const {
  if (is_zero()) return true;
  return shift_ % static_cast<int64_t>(q0) == 0 && num_.is_in_subring(q0) && den_.is_in_subring(q0);
}

LocalElem LocalElem::root_q(uint64_t q0) const {
  if (!is_qth_power(q0)) throw ComputationError("not_a_power", "element is not a q-th power");
  if (is_zero()) return *this;
  return LocalElem(num_.root_q(q0), den_.root_q(q0), shift_ / static_cast<int>(q0), true);
}

LocalElem LocalElem::map_field(const FieldEmbedding& emb) const {
  const FiniteField* target = emb.target().get();
  auto map_poly = [&](const FPoly& f) {
    std::vector<FFElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(emb(x));
    return FPoly(target, std::move(c));
  };
  if (is_zero()) return LocalElem(target);
  return LocalElem(map_poly(num_), map_poly(den_), shift_, true);
}

}  // namespace dmloc

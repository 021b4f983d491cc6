#include "dmloc/fpoly.hpp"

#include "dmloc/error.hpp"

namespace dmloc {

FPoly::FPoly(const FiniteField* field, std::vector<FFElem> coeffs) : field_(field), c_(std::move(coeffs)) {
  trim();
}

FPoly FPoly::constant(const FFElem& c) { return FPoly(c.field_ptr(), {c}); }

FPoly FPoly::monomial(const FFElem& c, size_t degree) {
  std::vector<FFElem> v(degree + 1, c.zero_like());
  v[degree] = c;
  return FPoly(c.field_ptr(), std::move(v));
}

void FPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int FPoly::order() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

size_t FPoly::term_count() const {
  size_t n = 0;
  for (const auto& c : c_) n += !c.is_zero();
  return n;
}

FPoly FPoly::operator+(const FPoly& o) const {
  const FPoly& big = c_.size() >= o.c_.size() ? *this : o;
  const FPoly& small = c_.size() >= o.c_.size() ? o : *this;
  std::vector<FFElem> r = big.c_;
  for (size_t i = 0; i < small.c_.size(); ++i) r[i] += small.c_[i];
  return FPoly(field_, std::move(r));
}

FPoly FPoly::operator-() const {
  std::vector<FFElem> r = c_;
  for (auto& c : r) c = -c;
  return FPoly(field_, std::move(r));
}

FPoly FPoly::operator-(const FPoly& o) const { return *this + (-o); }

FPoly FPoly::operator*(const FPoly& o) const {
  if (is_zero() || o.is_zero()) return FPoly(field_);
  std::vector<FFElem> r(c_.size() + o.c_.size() - 1, field_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
  }
  return FPoly(field_, std::move(r));
}

FPoly FPoly::operator*(const FFElem& c) const {
  std::vector<FFElem> r = c_;
  for (auto& x : r) x *= c;
  return FPoly(field_, std::move(r));
}

std::pair<FPoly, FPoly> FPoly::divmod(const FPoly& d) const {
  if (d.is_zero()) throw ComputationError("division_by_zero", "polynomial division by zero");
  if (degree() < d.degree()) return {FPoly(field_), *this};
  std::vector<FFElem> rem = c_;
  std::vector<FFElem> quo(c_.size() - d.c_.size() + 1, field_->zero());
  const FFElem lead_inv = d.leading().inverse();
  const size_t dd = d.c_.size() - 1;
  for (size_t i = rem.size(); i-- > dd;) {
    if (rem[i].is_zero()) continue;
    const FFElem c = rem[i] * lead_inv;
    quo[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * d.c_[j];
  }
  rem.resize(dd);
  return {FPoly(field_, std::move(quo)), FPoly(field_, std::move(rem))};
}

FPoly FPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

FPoly FPoly::shift_up(size_t k) const {
  if (is_zero()) return *this;
  std::vector<FFElem> r(k, field_->zero());
  r.insert(r.end(), c_.begin(), c_.end());
  return FPoly(field_, std::move(r));
}

FPoly FPoly::shift_down(size_t k) const {
  if (k >= c_.size()) return FPoly(field_);
  return FPoly(field_, std::vector<FFElem>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

FFElem FPoly::evaluate(const FFElem& x) const {
  FFElem acc = x.zero_like();
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

FPoly FPoly::pow_q(uint64_t q0) const {
  if (is_zero()) return *this;
  std::vector<FFElem> r((c_.size() - 1) * q0 + 1, field_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i * q0] = c_[i].pow_q(q0);
  return FPoly(field_, std::move(r));
}

bool FPoly::is_in_subring(uint64_t q0) const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i % q0 != 0 && !c_[i].is_zero()) return false;
  }
  return true;
}

FPoly FPoly::root_q(uint64_t q0) const {
  if (is_zero()) return *this;
  std::vector<FFElem> r((c_.size() - 1) / q0 + 1, field_->zero());
  for (size_t i = 0; i < c_.size(); i += q0) r[i / q0] = c_[i].root_q(q0);
  return FPoly(field_, std::move(r));
}

FPoly gcd(FPoly a, FPoly b) {
  while (!b.is_zero()) {
    FPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace dmloc

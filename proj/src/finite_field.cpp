#include "dmloc/finite_field.hpp"

#include <map>
#include <mutex>

#include "dmloc/error.hpp"

namespace dmloc {

namespace {

using Coeffs = std::vector<uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  uint64_t r = 1, b = a % p;
  for (uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<uint32_t>(r);
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, uint32_t p) {
  trim(a);
  const size_t dm = m.size() - 1;
  const uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const uint64_t c = uint64_t(a.back()) * lead_inv % p;
    const size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Coeffs poly_sub(Coeffs a, const Coeffs& b, uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod m
Coeffs frobenius_power_of_x(unsigned k, const Coeffs& m, uint32_t p) {
  Coeffs x = poly_mod({0, 1}, m, p);
  for (unsigned i = 0; i < k; ++i) {
    Coeffs r{1};
    Coeffs b = x;
    for (uint32_t e = p; e; e >>= 1) {
      if (e & 1) r = poly_mul_mod(r, b, m, p);
      b = poly_mul_mod(b, b, m, p);
    }
    x = std::move(r);
  }
  return x;
}

uint64_t checked_size(uint32_t p, unsigned n) {
  uint64_t s = 1;
  for (unsigned i = 0; i < n; ++i) {
    s *= p;
    if (s > FiniteField::kMaxSize) {
      throw ComputationError("field_too_large",
                             "finite field of size " + std::to_string(p) + "^" + std::to_string(n) +
                                 " exceeds 2^16");
    }
  }
  return s;
}

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(uint32_t p, const std::vector<uint32_t>& poly) {
  Coeffs f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  const Coeffs x{0, 1};
  if (poly_sub(frobenius_power_of_x(n, f, p), x, p).size() != 0) return false;
  for (unsigned r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= r; ++d) prime = prime && (r % d != 0);
    if (!prime) continue;
    Coeffs g = poly_gcd(f, poly_sub(frobenius_power_of_x(n / r, f, p), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, unsigned n) {
  const uint64_t count = checked_size(p, n);
  for (uint64_t idx = 0; idx < count; ++idx) {
    Coeffs f(n + 1, 0);
    uint64_t v = idx;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    f[n] = 1;
    if (is_irreducible(p, f)) return f;
  }
  throw ComputationError("no_modulus", "no irreducible polynomial found");
}

FieldRef FiniteField::make(uint32_t p, unsigned n) {
  if (!is_prime(p)) throw ComputationError("bad_field", "characteristic must be prime");
  if (n == 0) throw ComputationError("bad_field", "extension degree must be >= 1");
  return make(p, default_modulus(p, n));
}

FieldRef FiniteField::make(uint32_t p, const std::vector<uint32_t>& modulus) {
  if (!is_prime(p)) throw ComputationError("bad_field", "characteristic must be prime");
  Coeffs m = modulus;
  for (auto& c : m) c %= p;
  trim(m);
  if (m.size() < 2 || m.back() != 1) {
    throw ComputationError("bad_field", "defining polynomial must be monic of degree >= 1");
  }
  checked_size(p, static_cast<unsigned>(m.size() - 1));
  if (!is_irreducible(p, m)) {
    throw ComputationError("bad_field", "defining polynomial is not irreducible");
  }

  static std::mutex mutex;
  static std::map<std::pair<uint32_t, Coeffs>, FieldRef> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldRef field(new FiniteField(p, m));
  cache.emplace(std::move(key), field);
  return field;
}

FiniteField::FiniteField(uint32_t p, std::vector<uint32_t> modulus)
    : p_(p), n_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  size_ = static_cast<uint32_t>(checked_size(p_, n_));
  const uint32_t order = size_ - 1;

  if (n_ == 1) {
    generator_ = FFElem(this, (p_ - modulus_[0]) % p_);
  } else {
    generator_ = FFElem(this, p_);
  }

  log_.assign(size_, 0);
  exp_.assign(2 * std::max<uint32_t>(order, 1), 0);
  // Search for a primitive element by walking its powers.
  for (uint32_t cand = 1; cand < size_; ++cand) {
    uint32_t x = 1;
    uint32_t k = 0;
    bool ok = true;
    do {
      exp_[k] = x;
      x = slow_mul(x, cand);
      ++k;
      if (x == 1 && k < order) {
        ok = false;
        break;
      }
    } while (k < order);
    if (ok && x == 1) break;
  }
  for (uint32_t k = 0; k < order; ++k) {
    log_[exp_[k]] = k;
    exp_[k + order] = exp_[k];
  }
  if (p_ != 2) {
    minus_one_log_ = order / 2;
    zech_.assign(order, -1);
    for (uint32_t k = 0; k < order; ++k) {
      const uint32_t s = slow_add(1, exp_[k]);
      zech_[k] = s == 0 ? -1 : static_cast<int32_t>(log_[s]);
    }
  }
}

uint32_t FiniteField::slow_add(uint32_t a, uint32_t b) const {
  uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

uint32_t FiniteField::slow_mul(uint32_t a, uint32_t b) const {
  const FFElem ea(this, a), eb(this, b);
  Coeffs r = poly_mul_mod(digits(ea), digits(eb), modulus_, p_);
  r.resize(n_, 0);
  uint32_t v = 0;
  for (unsigned i = n_; i-- > 0;) v = v * p_ + r[i];
  return v;
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const uint32_t order = size_ - 1;
  const uint32_t la = log_[a];
  const uint32_t k = (log_[b] + order - la) % order;
  const int32_t z = zech_[k];
  if (z < 0) return 0;
  return exp_[la + static_cast<uint32_t>(z)];
}

uint32_t FiniteField::neg(uint32_t a) const {
  if (p_ == 2 || a == 0) return a;
  return exp_[log_[a] + minus_one_log_];
}

uint32_t FiniteField::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

uint32_t FiniteField::inv(uint32_t a) const {
  if (a == 0) throw ComputationError("division_by_zero", "inverse of zero in finite field");
  const uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

uint32_t FiniteField::pow(uint32_t a, int64_t e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw ComputationError("division_by_zero", "negative power of zero");
    return 0;
  }
  const int64_t order = size_ - 1;
  int64_t k = (static_cast<int64_t>(log_[a]) * (e % order)) % order;
  if (k < 0) k += order;
  return exp_[static_cast<uint32_t>(k)];
}

unsigned FiniteField::log_p(uint64_t q0) const {
  unsigned k = 0;
  while (q0 > 1 && q0 % p_ == 0) {
    q0 /= p_;
    ++k;
  }
  if (q0 != 1) throw ComputationError("bad_twist", "twist base is not a power of the characteristic");
  return k;
}

FFElem FiniteField::element(uint32_t index) const {
  if (index >= size_) throw ComputationError("bad_element", "element index out of range");
  return FFElem(this, index);
}

FFElem FiniteField::from_int(int64_t v) const {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return FFElem(this, static_cast<uint32_t>(r));
}

FFElem FiniteField::from_digits(const std::vector<uint32_t>& d) const {
  Coeffs c = poly_mod(d, modulus_, p_);
  c.resize(n_, 0);
  uint32_t v = 0;
  for (unsigned i = n_; i-- > 0;) v = v * p_ + c[i];
  return FFElem(this, v);
}

std::vector<uint32_t> FiniteField::digits(const FFElem& x) const {
  Coeffs d(n_, 0);
  uint32_t v = x.index();
  for (unsigned i = 0; i < n_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

std::vector<FFElem> FiniteField::elements() const {
  std::vector<FFElem> out;
  out.reserve(size_);
  for (uint32_t i = 0; i < size_; ++i) out.emplace_back(this, i);
  return out;
}

uint32_t FiniteField::absolute_trace(const FFElem& x) const {
  FFElem s = zero();
  FFElem y = x;
  for (unsigned i = 0; i < n_; ++i) {
    s += y;
    y = y.frobenius();
  }
  // The trace lies in F_p, i.e. has only a constant digit.
  return s.index();
}

bool FiniteField::has_subfield(uint64_t q0) const {
  unsigned k = 0;
  while (q0 > 1 && q0 % p_ == 0) {
    q0 /= p_;
    ++k;
  }
  return q0 == 1 && k >= 1 && n_ % k == 0;
}

std::vector<FFElem> FiniteField::subfield(uint64_t q0) const {
  if (!has_subfield(q0)) {
    throw ComputationError("bad_subfield", "F_" + std::to_string(q0) + " is not a subfield");
  }
  std::vector<FFElem> out;
  for (uint32_t i = 0; i < size_; ++i) {
    FFElem x(this, i);
    if (x.pow_q(q0) == x) out.push_back(x);
  }
  return out;
}

bool FFElem::is_one() const { return index_ == 1; }

FFElem FFElem::operator+(const FFElem& o) const { return FFElem(field_, field_->add(index_, o.index_)); }
FFElem FFElem::operator-(const FFElem& o) const {
  return FFElem(field_, field_->add(index_, field_->neg(o.index_)));
}
FFElem FFElem::operator-() const { return FFElem(field_, field_->neg(index_)); }
FFElem FFElem::operator*(const FFElem& o) const { return FFElem(field_, field_->mul(index_, o.index_)); }
FFElem FFElem::operator/(const FFElem& o) const {
  return FFElem(field_, field_->mul(index_, field_->inv(o.index_)));
}
FFElem FFElem::inverse() const { return FFElem(field_, field_->inv(index_)); }
FFElem FFElem::pow(int64_t e) const { return FFElem(field_, field_->pow(index_, e)); }
FFElem FFElem::frobenius() const { return pow(field_->characteristic()); }

FFElem FFElem::pow_q(uint64_t q0) const {
  const unsigned k = field_->log_p(q0);
  const uint64_t order = field_->size() - 1;
  // x^{p^k} = x^{p^k mod (size-1)} for nonzero x.
  uint64_t e = 1 % order;
  for (unsigned i = 0; i < k; ++i) e = e * field_->characteristic() % order;
  if (is_zero()) return *this;
  return pow(static_cast<int64_t>(e == 0 ? order : e));
}

FFElem FFElem::root_q(uint64_t q0) const {
  // Frobenius has order n on F_{p^n}; the inverse of p^k is p^{n - k mod n}.
  const unsigned k = field_->log_p(q0) % field_->degree();
  const unsigned inv = (field_->degree() - k) % field_->degree();
  uint64_t q_inv = 1;
  for (unsigned i = 0; i < inv; ++i) q_inv *= field_->characteristic();
  return pow_q(q_inv);
}

FieldEmbedding::FieldEmbedding(FieldRef from, FieldRef to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->characteristic() != to_->characteristic() || to_->degree() % from_->degree() != 0) {
    throw ComputationError("bad_embedding", "source field is not a subfield of the target");
  }
  // Find a root of the source modulus in the target field.
  const auto& m = from_->modulus();
  FFElem root;
  bool found = false;
  for (const FFElem& x : to_->elements()) {
    FFElem acc = to_->zero();
    for (size_t i = m.size(); i-- > 0;) acc = acc * x + to_->from_int(m[i]);
    if (acc.is_zero()) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw ComputationError("bad_embedding", "no root of the source modulus in target");
  table_.resize(from_->size());
  for (const FFElem& x : from_->elements()) {
    const auto d = from_->digits(x);
    FFElem acc = to_->zero();
    for (size_t i = d.size(); i-- > 0;) acc = acc * root + to_->from_int(d[i]);
    table_[x.index()] = acc.index();
  }
}

FFElem FieldEmbedding::operator()(const FFElem& x) const {
  return FFElem(to_.get(), table_[x.index()]);
}

}  // namespace dmloc

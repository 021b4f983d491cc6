#include "dmloc/norm_value.hpp"

#include <cmath>

#include "dmloc/error.hpp"

namespace dmloc {

namespace {

mpq_class pow_q(const mpq_class& x, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), e);
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

mpq_class int_power(uint64_t q, int64_t e) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), q, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return mpq_class(b);
  mpq_class r(mpz_class(1), b);
  r.canonicalize();
  return r;
}

// Exact k-th root if x is a perfect k-th power.
std::optional<mpq_class> exact_root(const mpq_class& x, unsigned k) {
  mpz_class n, d;
  if (!mpz_root(n.get_mpz_t(), x.get_num_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(d.get_mpz_t(), x.get_den_mpz_t(), k)) return std::nullopt;
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

uint64_t smallest_prime_factor(uint64_t q) {
  for (uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return d;
  }
  return q;
}

// Exponent i with z = p^i, if any (z > 0).
std::optional<long> p_exponent(mpz_class z, uint64_t p) {
  long i = 0;
  while (z > 1) {
    if (mpz_divisible_ui_p(z.get_mpz_t(), p) == 0) return std::nullopt;
    z /= static_cast<unsigned long>(p);
    ++i;
  }
  return z == 1 ? std::optional<long>(i) : std::nullopt;
}

}  // namespace

std::string rational_string(const mpq_class& r) {
  mpq_class c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

NormValue NormValue::from_log(const mpq_class& e, uint64_t q) {
  mpq_class c = e;
  c.canonicalize();
  if (!c.get_den().fits_ulong_p() || !c.get_num().fits_slong_p()) {
    throw ComputationError("overflow", "log-norm too large");
  }
  return root(int_power(q, c.get_num().get_si()), static_cast<unsigned>(c.get_den().get_ui()));
}

NormValue NormValue::root(const mpq_class& x, unsigned k) {
  if (k == 0) throw ComputationError("bad_norm", "root index must be positive");
  if (x < 0) throw ComputationError("bad_norm", "norm radicand must be nonnegative");
  NormValue n;
  if (x == 0) return n;
  n.zero_ = false;
  n.x_ = x;
  n.x_.canonicalize();
  n.k_ = k;
  n.canonicalize();
  return n;
}

void NormValue::canonicalize() {
  for (unsigned d = k_; d >= 2; --d) {
    if (k_ % d != 0) continue;
    if (auto r = exact_root(x_, d)) {
      x_ = *r;
      k_ /= d;
      canonicalize();
      return;
    }
  }
}

NormValue NormValue::scaled(uint64_t q, int64_t j) const {
  if (zero_) return *this;
  NormValue n = *this;
  n.x_ = x_ * int_power(q, j * static_cast<int64_t>(k_));
  n.x_.canonicalize();
  return n;
}

int64_t NormValue::floor_log(uint64_t q) const {
  if (zero_) throw ComputationError("zero_norm", "logarithm of the zero norm");
  const double approx =
      (std::log(std::fabs(x_.get_num().get_d())) - std::log(x_.get_den().get_d())) / (k_ * std::log(double(q)));
  int64_t j = static_cast<int64_t>(std::floor(approx));
  // q^{jk} <= x < q^{(j+1)k}
  while (int_power(q, j * static_cast<int64_t>(k_)) > x_) --j;
  while (int_power(q, (j + 1) * static_cast<int64_t>(k_)) <= x_) ++j;
  return j;
}

int64_t NormValue::ceil_log(uint64_t q) const {
  const int64_t f = floor_log(q);
  return int_power(q, f * static_cast<int64_t>(k_)) == x_ ? f : f + 1;
}

std::optional<mpq_class> NormValue::exact_log(uint64_t q) const {
  if (zero_) return std::nullopt;
  const uint64_t p = smallest_prime_factor(q);
  const auto e = p_exponent(mpz_class(q), p);
  const auto a = p_exponent(x_.get_num(), p);
  const auto b = p_exponent(x_.get_den(), p);
  if (!e || !a || !b) return std::nullopt;
  mpq_class r(*a - *b, static_cast<long>(*e) * static_cast<long>(k_));
  r.canonicalize();
  return r;
}

bool NormValue::same_class(const NormValue& o, uint64_t q) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return o.scaled(q, floor_log(q) - o.floor_log(q)) == *this;
}

std::string NormValue::to_string() const {
  if (zero_) return "0";
  const std::string base = rational_string(x_);
  if (k_ == 1) return base;
  return base + "^(1/" + std::to_string(k_) + ")";
}

std::strong_ordering operator<=>(const NormValue& a, const NormValue& b) {
  if (a.zero_ || b.zero_) return (!a.zero_) <=> (!b.zero_);
  if (a.k_ == b.k_) {
    const int c = cmp(a.x_, b.x_);
    return c <=> 0;
  }
  const int c = cmp(pow_q(a.x_, b.k_), pow_q(b.x_, a.k_));
  return c <=> 0;
}

}  // namespace dmloc

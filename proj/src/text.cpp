#include "dmloc/text.hpp"

#include <cctype>
#include <functional>
#include <optional>

#include "dmloc/error.hpp"

namespace dmloc {

namespace detail {
bool needs_parentheses(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('/') != std::string::npos;
}
}  // namespace detail

std::string to_string(const FFElem& x) {
  const FiniteField& f = x.field();
  const auto d = f.digits(x);
  if (f.degree() == 1) return std::to_string(d[0]);
  std::string out;
  for (size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(d[i]);
    } else {
      const std::string mono = i == 1 ? "g" : "g^" + std::to_string(i);
      term = d[i] == 1 ? mono : std::to_string(d[i]) + "*" + mono;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string monomial_term(const FFElem& c, const std::string& var, int k) {
  const std::string cs = to_string(c);
  if (k == 0) return cs;
  const std::string mono = k == 1 ? var : var + "^" + std::to_string(k);
  if (c.is_one()) return mono;
  if (detail::needs_parentheses(cs)) return "(" + cs + ")*" + mono;
  return cs + "*" + mono;
}

// Ascending terms of pi^shift * p.
std::vector<std::string> laurent_terms(const FPoly& p, int shift) {
  std::vector<std::string> terms;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    terms.push_back(monomial_term(p.coeffs()[i], "pi", static_cast<int>(i) + shift));
  }
  return terms;
}

std::string join(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += t;
  }
  return out;
}

}  // namespace

std::string to_string(const LocalElem& x) {
  if (x.is_zero()) return "0";
  const auto num = laurent_terms(x.numerator(), x.shift());
  if (x.is_laurent_polynomial()) return join(num);
  const auto den = laurent_terms(x.denominator(), 0);
  const std::string n = num.size() > 1 ? "(" + join(num) + ")" : join(num);
  const std::string d = den.size() > 1 ? "(" + join(den) + ")" : join(den);
  return n + "/" + d;
}

std::string to_string(const FPoly& a, std::string_view var) {
  if (a.is_zero()) return "0";
  std::vector<std::string> terms;
  for (size_t i = a.coeffs().size(); i-- > 0;) {
    if (a.coeffs()[i].is_zero()) continue;
    terms.push_back(monomial_term(a.coeffs()[i], std::string(var), static_cast<int>(i)));
  }
  return join(terms);
}

namespace {

/// Operations a parser target supplies. Errors in semantic actions are thrown
/// as ParseError without position; the parser attaches the column.
template <class V>
struct Algebra {
  std::function<V(int64_t)> from_int;
  std::function<std::optional<V>(const std::string&)> variable;
  std::function<V(const V&, const V&)> add;
  std::function<V(const V&, const V&)> sub;
  std::function<V(const V&, const V&)> mul;
  std::function<V(const V&, const V&)> div;
  std::function<V(const V&)> neg;
  std::function<V(const V&, int64_t)> pow;
};

template <class V>
class ExprParser {
 public:
  ExprParser(std::string_view text, const Algebra<V>& alg) : s_(text), alg_(alg) {}

  V parse() {
    skip_ws();
    if (pos_ >= s_.size()) fail("empty expression");
    V v = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  template <class F>
  V guarded(size_t at, F&& f) {
    try {
      return f();
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 1, static_cast<int>(at) + 1);
    } catch (const ComputationError& e) {
      throw ParseError(e.what(), 1, static_cast<int>(at) + 1);
    }
  }

  V expr() {
    V v = term();
    for (;;) {
      skip_ws();
      const size_t at = pos_;
      if (accept('+')) {
        V r = term();
        v = guarded(at, [&] { return alg_.add(v, r); });
      } else if (accept('-')) {
        V r = term();
        v = guarded(at, [&] { return alg_.sub(v, r); });
      } else {
        return v;
      }
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      skip_ws();
      const size_t at = pos_;
      if (accept('*')) {
        V r = unary();
        v = guarded(at, [&] { return alg_.mul(v, r); });
      } else if (accept('/')) {
        V r = unary();
        v = guarded(at, [&] { return alg_.div(v, r); });
      } else {
        return v;
      }
    }
  }

  V unary() {
    skip_ws();
    const size_t at = pos_;
    if (accept('-')) {
      V v = unary();
      return guarded(at, [&] { return alg_.neg(v); });
    }
    return power();
  }

  int64_t integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
    int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (int64_t(1) << 40)) fail("integer too large");
      ++pos_;
    }
    return negative ? -v : v;
  }

  V power() {
    V base = atom();
    skip_ws();
    const size_t at = pos_;
    if (accept('^')) {
      const int64_t e = integer();
      return guarded(at, [&] { return alg_.pow(base, e); });
    }
    return base;
  }

  V atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const size_t at = pos_;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        if (v > (int64_t(1) << 40)) fail("integer too large");
        ++pos_;
      }
      return alg_.from_int(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        name += s_[pos_++];
      }
      auto v = alg_.variable(name);
      if (!v) {
        pos_ = at;
        fail("unknown identifier '" + name + "'");
      }
      return *v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
  const Algebra<V>& alg_;
};

template <class V>
V power_by_squaring(V base, int64_t e, const std::function<V(const V&, const V&)>& mul, V one) {
  V r = std::move(one);
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

}  // namespace

FFElem parse_residue(const FiniteField& field, std::string_view text) {
  Algebra<FFElem> alg;
  alg.from_int = [&](int64_t v) { return field.from_int(v); };
  alg.variable = [&](const std::string& n) -> std::optional<FFElem> {
    if (n == "g") return field.generator();
    return std::nullopt;
  };
  alg.add = [](const FFElem& a, const FFElem& b) { return a + b; };
  alg.sub = [](const FFElem& a, const FFElem& b) { return a - b; };
  alg.mul = [](const FFElem& a, const FFElem& b) { return a * b; };
  alg.div = [](const FFElem& a, const FFElem& b) { return a / b; };
  alg.neg = [](const FFElem& a) { return -a; };
  alg.pow = [](const FFElem& a, int64_t e) { return a.pow(e); };
  return ExprParser<FFElem>(text, alg).parse();
}

LocalElem parse_local(const FiniteField& field, std::string_view text) {
  Algebra<LocalElem> alg;
  alg.from_int = [&](int64_t v) { return LocalElem(field.from_int(v)); };
  alg.variable = [&](const std::string& n) -> std::optional<LocalElem> {
    if (n == "g") return LocalElem(field.generator());
    if (n == "pi") return LocalElem::pi(&field);
    return std::nullopt;
  };
  alg.add = [](const LocalElem& a, const LocalElem& b) { return a + b; };
  alg.sub = [](const LocalElem& a, const LocalElem& b) { return a - b; };
  alg.mul = [](const LocalElem& a, const LocalElem& b) { return a * b; };
  alg.div = [](const LocalElem& a, const LocalElem& b) { return a / b; };
  alg.neg = [](const LocalElem& a) { return -a; };
  alg.pow = [](const LocalElem& a, int64_t e) { return a.pow(e); };
  return ExprParser<LocalElem>(text, alg).parse();
}

FPoly parse_coeff_poly(const FiniteField& field, std::string_view text) {
  Algebra<FPoly> alg;
  alg.from_int = [&](int64_t v) { return FPoly::constant(field.from_int(v)); };
  alg.variable = [&](const std::string& n) -> std::optional<FPoly> {
    if (n == "g") return FPoly::constant(field.generator());
    if (n == "t") return FPoly::monomial(field.one(), 1);
    return std::nullopt;
  };
  alg.add = [](const FPoly& a, const FPoly& b) { return a + b; };
  alg.sub = [](const FPoly& a, const FPoly& b) { return a - b; };
  alg.mul = [](const FPoly& a, const FPoly& b) { return a * b; };
  alg.div = [](const FPoly& a, const FPoly& b) {
    if (b.degree() != 0) throw ParseError("division only by nonzero constants");
    return a * b.leading().inverse();
  };
  alg.neg = [](const FPoly& a) { return -a; };
  alg.pow = [&field](const FPoly& a, int64_t e) {
    if (e < 0) {
      if (a.degree() != 0) throw ParseError("negative power of a non-constant");
      return FPoly::constant(a.leading().pow(e));
    }
    std::function<FPoly(const FPoly&, const FPoly&)> mul = [](const FPoly& x, const FPoly& y) { return x * y; };
    return power_by_squaring<FPoly>(a, e, mul, FPoly::constant(field.one()));
  };
  return ExprParser<FPoly>(text, alg).parse();
}

namespace {

template <FieldElement C>
TwistedPoly<C> parse_twisted_generic(std::string_view text, uint64_t q0, const C& zero,
                                     const std::function<std::optional<C>(const std::string&)>& constant_var,
                                     const std::function<C(int64_t)>& from_int) {
  using TP = TwistedPoly<C>;
  Algebra<TP> alg;
  alg.from_int = [&](int64_t v) { return TP::constant(from_int(v), q0); };
  alg.variable = [&](const std::string& n) -> std::optional<TP> {
    if (n == "T") return TP::monomial(zero.one_like(), 1, q0);
    if (auto c = constant_var(n)) return TP::constant(*c, q0);
    return std::nullopt;
  };
  alg.add = [](const TP& a, const TP& b) { return a + b; };
  alg.sub = [](const TP& a, const TP& b) { return a - b; };
  alg.mul = [](const TP& a, const TP& b) { return a * b; };
  alg.div = [](const TP& a, const TP& b) {
    if (b.degree() != 0) throw ParseError("division only by nonzero constants");
    return a * TP::constant(b.leading().inverse(), b.twist());
  };
  alg.neg = [](const TP& a) { return -a; };
  alg.pow = [&](const TP& a, int64_t e) {
    if (e < 0) {
      if (a.degree() != 0) throw ParseError("negative power of a non-constant");
      C inv = a.leading().inverse();
      C r = zero.one_like();
      for (int64_t i = 0; i < -e; ++i) r = r * inv;
      return TP::constant(r, q0);
    }
    std::function<TP(const TP&, const TP&)> mul = [](const TP& x, const TP& y) { return x * y; };
    return power_by_squaring<TP>(a, e, mul, TP::constant(zero.one_like(), q0));
  };
  return ExprParser<TP>(text, alg).parse();
}

}  // namespace

TwistedPoly<LocalElem> parse_twisted(const FiniteField& field, uint64_t q0, std::string_view text) {
  field.log_p(q0);
  return parse_twisted_generic<LocalElem>(
      text, q0, LocalElem(&field),
      [&](const std::string& n) -> std::optional<LocalElem> {
        if (n == "g") return LocalElem(field.generator());
        if (n == "pi") return LocalElem::pi(&field);
        return std::nullopt;
      },
      [&](int64_t v) { return LocalElem(field.from_int(v)); });
}

TwistedPoly<FFElem> parse_twisted_residue(const FiniteField& field, uint64_t q0, std::string_view text) {
  field.log_p(q0);
  return parse_twisted_generic<FFElem>(
      text, q0, field.zero(),
      [&](const std::string& n) -> std::optional<FFElem> {
        if (n == "g") return field.generator();
        return std::nullopt;
      },
      [&](int64_t v) { return field.from_int(v); });
}

std::vector<uint32_t> parse_modulus(uint32_t p, std::string_view text) {
  const FieldRef prime = FiniteField::make(p, 1);
  Algebra<FPoly> alg;
  alg.from_int = [&](int64_t v) { return FPoly::constant(prime->from_int(v)); };
  alg.variable = [&](const std::string& n) -> std::optional<FPoly> {
    if (n == "x") return FPoly::monomial(prime->one(), 1);
    return std::nullopt;
  };
  alg.add = [](const FPoly& a, const FPoly& b) { return a + b; };
  alg.sub = [](const FPoly& a, const FPoly& b) { return a - b; };
  alg.mul = [](const FPoly& a, const FPoly& b) { return a * b; };
  alg.div = [](const FPoly&, const FPoly&) -> FPoly { throw ParseError("division not allowed in a modulus"); };
  alg.neg = [](const FPoly& a) { return -a; };
  alg.pow = [&](const FPoly& a, int64_t e) {
    if (e < 0) throw ParseError("negative exponent in a modulus");
    std::function<FPoly(const FPoly&, const FPoly&)> mul = [](const FPoly& x, const FPoly& y) { return x * y; };
    return power_by_squaring<FPoly>(a, e, mul, FPoly::constant(prime->one()));
  };
  const FPoly m = ExprParser<FPoly>(text, alg).parse();
  std::vector<uint32_t> out;
  for (const auto& c : m.coeffs()) out.push_back(c.index());
  return out;
}

}  // namespace dmloc

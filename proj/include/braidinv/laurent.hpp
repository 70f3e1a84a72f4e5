#pragma once

// Exact sparse Laurent polynomials with arbitrary-precision integer
// coefficients: univariate Z[t^-1, t] and bivariate Z[s^-1, s, t^-1, t].
// Provides the ring arithmetic plus gcd, normalization, unit-equivalence,
// exact division and evaluation. Values are canonical (no zero coefficients
// stored), immutable in spirit, and safe to share across threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidinv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ZeroEvaluationPoint : std::domain_error {
  ZeroEvaluationPoint()
      : std::domain_error("cannot evaluate at 0: polynomial has negative exponents") {}
};

struct SyntaxError : std::runtime_error {
  std::size_t position;
  SyntaxError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}
};

// Sparse polynomial over an additive exponent group Exp. Exp needs a
// default value (the constant-term exponent), operator+ and a total order.
template <class Exp>
class SparsePoly {
 public:
  using exponent_type = Exp;
  using term_map = std::map<Exp, Int>;

  SparsePoly() = default;
  SparsePoly(int c) {
    if (c != 0) terms_[Exp{}] = c;
  }
  SparsePoly(Int c) {
    if (c != 0) terms_[Exp{}] = std::move(c);
  }

  static SparsePoly term(Int c, Exp e) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exp{} && terms_.begin()->second == 1;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{});
  }

  const term_map& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& rhs) {
    *this = *this * rhs;
    return *this;
  }
  SparsePoly& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r = a;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend SparsePoly operator*(SparsePoly a, const Int& c) { return a *= c; }
  friend SparsePoly operator*(const Int& c, SparsePoly a) { return a *= c; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  // Multiplies by the single term c * x^e (a unit when c = +-1).
  SparsePoly shifted(const Exp& e, const Int& c = 1) const {
    SparsePoly r;
    for (const auto& [ex, cx] : terms_) {
      Int v = cx * c;
      if (v != 0) r.terms_.emplace(ex + e, std::move(v));
    }
    return r;
  }

 private:
  void add_term(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  term_map terms_;  // invariant: no zero coefficients
};

using LaurentPoly = SparsePoly<std::int64_t>;

// Bivariate exponent. The order compares the t-exponent first; both the text
// form and the sign rule of the bivariate normalization use that order.
struct BiExp {
  std::int64_t s = 0;
  std::int64_t t = 0;

  friend BiExp operator+(BiExp a, BiExp b) { return {a.s + b.s, a.t + b.t}; }
  friend bool operator==(BiExp a, BiExp b) { return a.s == b.s && a.t == b.t; }
  friend bool operator<(BiExp a, BiExp b) { return a.t != b.t ? a.t < b.t : a.s < b.s; }
};

using BiLaurentPoly = SparsePoly<BiExp>;

inline LaurentPoly t_power(std::int64_t k) { return LaurentPoly::term(1, k); }
inline BiLaurentPoly st_term(Int c, std::int64_t s_exp, std::int64_t t_exp) {
  return BiLaurentPoly::term(std::move(c), BiExp{s_exp, t_exp});
}

inline std::int64_t min_exponent(const LaurentPoly& p) { return p.terms().begin()->first; }
inline std::int64_t max_exponent(const LaurentPoly& p) { return p.terms().rbegin()->first; }
inline const Int& leading_coeff(const LaurentPoly& p) { return p.terms().rbegin()->second; }

// ---------------------------------------------------------------------------
// Evaluation

inline Rational rational_pow(const Rational& v, std::int64_t e) {
  Rational base = e < 0 ? Rational(1) / v : v;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Rational acc = 1;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// Exact value of p at t = v. Negative exponents require v != 0.
inline Rational evaluate(const LaurentPoly& p, const Rational& v) {
  if (p.is_zero()) return 0;
  if (v == 0) {
    if (min_exponent(p) < 0) throw ZeroEvaluationPoint();
    return Rational(p.coeff(0));
  }
  Rational acc = 0;
  for (const auto& [e, c] : p.terms()) acc += Rational(c) * rational_pow(v, e);
  return acc;
}

// ---------------------------------------------------------------------------
// Normalization and unit equivalence. Units of Z[t^-1, t] are +-t^k; of the
// bivariate ring, +-s^j t^k. The normal form has no negative exponents, a
// nonzero constant term (constant slice in the bivariate case) and a positive
// coefficient on the largest monomial.

inline LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-min_exponent(p));
  if (leading_coeff(q) < 0) q = -q;
  return q;
}

inline BiLaurentPoly normalize(const BiLaurentPoly& p) {
  if (p.is_zero()) return p;
  std::int64_t min_s = p.terms().begin()->first.s;
  std::int64_t min_t = p.terms().begin()->first.t;
  for (const auto& [e, c] : p.terms()) {
    min_s = std::min(min_s, e.s);
    min_t = std::min(min_t, e.t);
  }
  BiLaurentPoly q = p.shifted(BiExp{-min_s, -min_t});
  if (q.terms().rbegin()->second < 0) q = -q;
  return q;
}

template <class Exp>
inline bool unit_equal(const SparsePoly<Exp>& a, const SparsePoly<Exp>& b) {
  return normalize(a) == normalize(b);
}

// ---------------------------------------------------------------------------
// gcd and exact division.
//
// Univariate: shift both arguments to ordinary polynomials with nonzero
// constant term (a unit multiple, so the generated ideal is unchanged), then
// content extraction plus a primitive pseudo-remainder sequence over Z.
// Bivariate: the same scheme one level up, viewing Z[s,t] as (Z[s])[t] with
// contents computed by the univariate gcd.

namespace detail {

// Dense coefficients by ascending exponent; invariant: back() != 0.
template <class C>
using Dense = std::vector<C>;

inline Dense<Int> to_dense(const LaurentPoly& p) {
  const std::int64_t lo = min_exponent(p);
  Dense<Int> d(static_cast<std::size_t>(max_exponent(p) - lo) + 1);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

inline LaurentPoly from_dense(const Dense<Int>& d) {
  LaurentPoly p;
  for (std::size_t i = 0; i < d.size(); ++i)
    p += LaurentPoly::term(d[i], static_cast<std::int64_t>(i));
  return p;
}

inline bool is_zero_coeff(const Int& c) { return c == 0; }
inline bool is_zero_coeff(const LaurentPoly& c) { return c.is_zero(); }

template <class C>
void trim(Dense<C>& d) {
  while (!d.empty() && is_zero_coeff(d.back())) d.pop_back();
}

inline Int content(const Dense<Int>& d) {
  Int g = 0;
  for (const Int& c : d) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline void exact_divide_coeffs(Dense<Int>& d, const Int& g) {
  for (Int& c : d) c /= g;
}

// One pseudo-remainder step: reduces deg(a) below deg(b). The result differs
// from the textbook pseudo-remainder by an integer factor, which the
// primitive-part pass removes anyway.
template <class C>
Dense<C> pseudo_remainder(Dense<C> a, const Dense<C>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const C lead_a = a.back();
    const C lead_b = b.back();
    const std::size_t shift = a.size() - b.size();
    for (C& c : a) c = c * lead_b;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - b[i] * lead_a;
    trim(a);
  }
  return a;
}

inline Dense<Int> primitive_part(Dense<Int> d) {
  if (d.empty()) return d;
  Int g = content(d);
  if (d.back() < 0) g = -g;
  exact_divide_coeffs(d, g);
  return d;
}

inline Dense<Int> primitive_gcd(Dense<Int> a, Dense<Int> b) {
  while (!b.empty()) {
    Dense<Int> r = primitive_part(pseudo_remainder(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

// A generator of the ideal (p, q) of Z[t^-1, t], in normalized form.
inline LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  detail::Dense<Int> a = detail::to_dense(p);
  detail::Dense<Int> b = detail::to_dense(q);
  const Int ca = detail::content(a);
  const Int cb = detail::content(b);
  detail::exact_divide_coeffs(a, ca);
  detail::exact_divide_coeffs(b, cb);
  detail::Dense<Int> g = detail::primitive_gcd(std::move(a), std::move(b));
  const Int cg = boost::multiprecision::gcd(ca, cb);
  for (Int& c : g) c *= cg;
  return normalize(detail::from_dense(g));
}

// Exact quotient p / d in Z[t^-1, t], or nullopt when d does not divide p.
inline std::optional<LaurentPoly> try_divide(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return LaurentPoly();
  const std::int64_t shift = min_exponent(p) - min_exponent(d);
  detail::Dense<Int> num = detail::to_dense(p);
  const detail::Dense<Int> den = detail::to_dense(d);
  if (num.size() < den.size()) return std::nullopt;
  detail::Dense<Int> quo(num.size() - den.size() + 1);
  for (std::size_t i = quo.size(); i-- > 0;) {
    detail::trim(num);
    if (num.size() < den.size() + i) {
      quo[i] = 0;
      continue;
    }
    if (num.size() > den.size() + i) return std::nullopt;
    Int q = num.back() / den.back();
    if (q * den.back() != num.back()) return std::nullopt;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
    quo[i] = std::move(q);
  }
  detail::trim(num);
  if (!num.empty()) return std::nullopt;
  return detail::from_dense(quo).shifted(shift);
}

inline bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  if (p.is_zero()) return true;
  return try_divide(p, d).has_value();
}

namespace detail {

// Bivariate layer: a polynomial in t whose coefficients live in Z[s],
// both shifted to ordinary (nonnegative) exponents.
struct TDense {
  Dense<LaurentPoly> coeffs;  // index = t-exponent
  std::int64_t s_shift = 0;
  std::int64_t t_shift = 0;
};

inline TDense to_tdense(const BiLaurentPoly& p) {
  TDense d;
  std::int64_t min_s = p.terms().begin()->first.s;
  std::int64_t min_t = p.terms().begin()->first.t;
  std::int64_t max_t = min_t;
  for (const auto& [e, c] : p.terms()) {
    min_s = std::min(min_s, e.s);
    min_t = std::min(min_t, e.t);
    max_t = std::max(max_t, e.t);
  }
  d.s_shift = min_s;
  d.t_shift = min_t;
  d.coeffs.assign(static_cast<std::size_t>(max_t - min_t) + 1, LaurentPoly());
  for (const auto& [e, c] : p.terms())
    d.coeffs[static_cast<std::size_t>(e.t - min_t)] += LaurentPoly::term(c, e.s - min_s);
  return d;
}

inline BiLaurentPoly from_tdense(const Dense<LaurentPoly>& coeffs) {
  BiLaurentPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& [es, c] : coeffs[k].terms())
      p += st_term(c, es, static_cast<std::int64_t>(k));
  return p;
}

inline LaurentPoly poly_content(const Dense<LaurentPoly>& d) {
  LaurentPoly g;
  for (const LaurentPoly& c : d) g = gcd(g, c);
  return g;
}

inline Dense<LaurentPoly> poly_primitive_part(Dense<LaurentPoly> d) {
  if (d.empty()) return d;
  LaurentPoly g = poly_content(d);
  if (leading_coeff(d.back()) < 0) g = -g;
  for (LaurentPoly& c : d) c = *try_divide(c, g);
  return d;
}

inline Dense<LaurentPoly> poly_primitive_gcd(Dense<LaurentPoly> a, Dense<LaurentPoly> b) {
  while (!b.empty()) {
    Dense<LaurentPoly> r = poly_primitive_part(pseudo_remainder(std::move(a), b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

// A gcd in the UFD Z[s^-1, s, t^-1, t], unique up to units, in normalized
// form. The bivariate ring is not a PID, so this generates the smallest
// principal ideal containing (p, q), not necessarily (p, q) itself.
inline BiLaurentPoly gcd(const BiLaurentPoly& p, const BiLaurentPoly& q) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  detail::TDense a = detail::to_tdense(p);
  detail::TDense b = detail::to_tdense(q);
  const LaurentPoly ca = detail::poly_content(a.coeffs);
  const LaurentPoly cb = detail::poly_content(b.coeffs);
  detail::Dense<LaurentPoly> pa = detail::poly_primitive_part(std::move(a.coeffs));
  detail::Dense<LaurentPoly> pb = detail::poly_primitive_part(std::move(b.coeffs));
  detail::Dense<LaurentPoly> g = detail::poly_primitive_gcd(std::move(pa), std::move(pb));
  const LaurentPoly cg = gcd(ca, cb);
  for (LaurentPoly& c : g) c *= cg;
  return normalize(detail::from_tdense(g));
}

// Exact quotient in Z[s^-1, s, t^-1, t], or nullopt.
inline std::optional<BiLaurentPoly> try_divide(const BiLaurentPoly& p, const BiLaurentPoly& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return BiLaurentPoly();
  detail::TDense num = detail::to_tdense(p);
  detail::TDense den = detail::to_tdense(d);
  if (num.coeffs.size() < den.coeffs.size()) return std::nullopt;
  detail::Dense<LaurentPoly> quo(num.coeffs.size() - den.coeffs.size() + 1);
  for (std::size_t i = quo.size(); i-- > 0;) {
    detail::trim(num.coeffs);
    if (num.coeffs.size() < den.coeffs.size() + i) continue;
    if (num.coeffs.size() > den.coeffs.size() + i) return std::nullopt;
    std::optional<LaurentPoly> q = try_divide(num.coeffs.back(), den.coeffs.back());
    if (!q) return std::nullopt;
    for (std::size_t j = 0; j < den.coeffs.size(); ++j)
      num.coeffs[i + j] -= *q * den.coeffs[j];
    quo[i] = std::move(*q);
  }
  detail::trim(num.coeffs);
  if (!num.coeffs.empty()) return std::nullopt;
  return detail::from_tdense(quo).shifted(BiExp{num.s_shift - den.s_shift, num.t_shift - den.t_shift});
}

inline bool divides(const BiLaurentPoly& d, const BiLaurentPoly& p) {
  if (p.is_zero()) return true;
  return try_divide(p, d).has_value();
}

// ---------------------------------------------------------------------------
// Text form. Terms in strictly decreasing exponent order (bivariate:
// decreasing (t, s)), `t^k` notation, `t` for k = 1, bare integer for k = 0,
// explicit `*` between factors. Examples: `t^3 + t^2 - 1`, `3*t^2`,
// `s^2*t^2 - s*t + 1`, `0`.

namespace detail {

inline void append_var(std::string& out, char var, std::int64_t e, bool& any_factor,
                       const Int& abs_coeff) {
  if (e == 0) return;
  if (any_factor || abs_coeff != 1) out += '*';
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
  any_factor = true;
}

template <class Exp, class FactorWriter>
std::string poly_to_string(const SparsePoly<Exp>& p, FactorWriter write_factors) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Int& c = it->second;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Int a = boost::multiprecision::abs(c);
    bool any_factor = false;
    std::string factors;
    write_factors(factors, it->first, any_factor, a);
    if (!any_factor || a != 1) out += a.str();
    out += factors;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const LaurentPoly& p) {
  return detail::poly_to_string(p, [](std::string& out, std::int64_t e, bool& any, const Int& a) {
    detail::append_var(out, 't', e, any, a);
  });
}

inline std::string to_string(const BiLaurentPoly& p) {
  return detail::poly_to_string(p, [](std::string& out, BiExp e, bool& any, const Int& a) {
    detail::append_var(out, 's', e.s, any, a);
    detail::append_var(out, 't', e.t, any, a);
  });
}

namespace detail {

// Shared scanner for the univariate and bivariate text forms.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  BiLaurentPoly run() {
    BiLaurentPoly result;
    skip_ws();
    if (done()) throw SyntaxError("empty polynomial", pos_);
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
      result += parse_term(sign);
      skip_ws();
      first = false;
    }
    return result;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  BiLaurentPoly parse_term(int sign) {
    Int coeff = sign;
    std::optional<std::int64_t> s_exp, t_exp;
    bool saw_factor = false;
    bool saw_coeff = false;
    while (true) {
      skip_ws();
      if (done()) break;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        if (saw_factor) throw SyntaxError("integer coefficient must come first", pos_);
        if (saw_coeff) throw SyntaxError("duplicate coefficient", pos_);
        coeff *= parse_coeff();
        saw_coeff = true;
      } else if (peek() == 's' || peek() == 't') {
        const char var = peek();
        auto& slot = var == 's' ? s_exp : t_exp;
        if (slot) throw SyntaxError(std::string("duplicate variable '") + var + "'", pos_);
        ++pos_;
        std::int64_t e = 1;
        if (!done() && peek() == '^') {
          ++pos_;
          e = parse_int(true);
        }
        slot = e;
        saw_factor = true;
      } else {
        throw SyntaxError(std::string("unexpected character '") + peek() + "'", pos_);
      }
      skip_ws();
      if (!done() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!saw_coeff && !saw_factor) throw SyntaxError("expected a term", pos_);
    return st_term(coeff, s_exp.value_or(0), t_exp.value_or(0));
  }

  Int parse_coeff() {
    Int value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      ++pos_;
    }
    return value;
  }

  std::int64_t parse_int(bool allow_sign) {
    const std::size_t start = pos_;
    std::int64_t sign = 1;
    if (allow_sign && !done() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -1;
      ++pos_;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError("expected an integer", pos_);
    std::int64_t value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000) throw SyntaxError("exponent too large", start);
      ++pos_;
    }
    return sign * value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline BiLaurentPoly parse_bilaurent(std::string_view text) {
  return detail::PolyParser(text).run();
}

inline LaurentPoly parse_laurent(std::string_view text) {
  const BiLaurentPoly p = parse_bilaurent(text);
  LaurentPoly q;
  for (const auto& [e, c] : p.terms()) {
    if (e.s != 0) throw SyntaxError("unexpected variable 's' in univariate polynomial", 0);
    q += LaurentPoly::term(c, e.t);
  }
  return q;
}

}  // namespace braidinv

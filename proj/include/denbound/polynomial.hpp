#pragma once

// Dense univariate polynomials over Q, plus the primitive integer
// polynomial helpers that gcd and factorization are built on.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "denbound/errors.hpp"

namespace denbound {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which orders below every finite degree and carries no numeric value.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree(); }
  constexpr explicit Degree(std::size_t d) : finite_(true), value_(d) {}

  constexpr bool is_minus_infinity() const { return !finite_; }
  std::size_t value() const {
    if (!finite_) throw DomainError("degree of the zero polynomial has no value");
    return value_;
  }

  constexpr bool operator==(const Degree&) const = default;
  constexpr std::strong_ordering operator<=>(const Degree& o) const {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return value_ <=> o.value_;
  }

 private:
  constexpr Degree() = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

class Polynomial {
 public:
  /// The zero polynomial.
  Polynomial() = default;

  /// Coefficients in increasing power order; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
  }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }
  static Polynomial constant(long c) { return constant(Rational(c)); }
  static Polynomial x() { return monomial(Rational(1), 1); }
  static Polynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }
  /// Product of (x - r) over the given roots.
  static Polynomial from_roots(std::span<const Rational> roots) {
    Polynomial p = constant(1);
    for (const auto& r : roots) p = p * Polynomial(std::vector<Rational>{-r, Rational(1)});
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1); }
  /// Degree as an integer; only meaningful for nonzero polynomials.
  std::size_t deg() const { return degree().value(); }
  std::size_t size() const { return c_.size(); }

  const Rational& coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
  }
  const Rational& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  std::span<const Rational> coefficients() const { return c_; }

  Polynomial monic() const {
    if (c_.empty()) return {};
    return scaled(Rational(1) / c_.back());
  }
  Polynomial scaled(const Rational& s) const {
    if (s == 0) return {};
    Polynomial r = *this;
    for (auto& a : r.c_) a *= s;
    return r;
  }

  Rational evaluate(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
  }

  /// f(x + shift), by Horner's rule.
  Polynomial shifted(const Rational& shift) const {
    Polynomial acc;
    const Polynomial lin(std::vector<Rational>{shift, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  /// f(s * x).
  Polynomial dilated(const Rational& s) const {
    Polynomial r = *this;
    Rational pw(1);
    for (auto& a : r.c_) {
      a *= pw;
      pw *= s;
    }
    r.trim();
    return r;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(1), base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  /// Canonical order: by degree, then coefficients from the constant term up.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t db = b.deg();
  std::vector<Rational> quo(rem.size() - db);
  const Rational inv_lead = Rational(1) / b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] * inv_lead;
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// a / b where b is known to divide a; throws DomainError otherwise.
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("exact_quotient: divisor does not divide dividend");
  return q;
}

inline bool divides(const Polynomial& d, const Polynomial& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

namespace detail {

using ZPoly = std::vector<Integer>;

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Integer zcontent(const ZPoly& p) {
  Integer g(0);
  for (const auto& a : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline void zmake_primitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  Integer g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
}

/// Writes p = scale * z with z primitive over Z and positive leading
/// coefficient.
inline std::pair<Rational, ZPoly> to_primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return {Rational(0), {}};
  Integer lcm_den(1);
  for (const auto& a : p.coefficients())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.get_den_mpz_t());
  ZPoly z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& a = p.coeff(i);
    z[i] = a.get_num() * (lcm_den / a.get_den());
  }
  Integer g = zcontent(z);
  if (z.back() < 0) g = -g;
  for (auto& a : z) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  Rational scale(g, lcm_den);
  scale.canonicalize();
  return {scale, std::move(z)};
}

inline Polynomial from_zpoly(const ZPoly& z) {
  std::vector<Rational> c(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
  return Polynomial(std::move(c));
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  ztrim(r);
  return r;
}

/// Pseudo-remainder of a by b, primitive part taken.
inline ZPoly zprem_primitive(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    ztrim(a);
    // Keep coefficients small between reduction steps.
    if (!a.empty()) {
      Integer g = zcontent(a);
      if (g != 1)
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
  zmake_primitive(a);
  return a;
}

/// Exact division over Z. Returns false if b does not divide a.
inline bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  if (b.empty()) return false;
  if (a.empty()) {
    if (quotient) quotient->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  if (b[0] != 0 && a[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return false;
  ZPoly rem = a;
  const std::size_t db = b.size() - 1;
  ZPoly quo(a.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[i - db + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
    quo[i - db] = std::move(q);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) return false;
  if (quotient) {
    ztrim(quo);
    *quotient = std::move(quo);
  }
  return true;
}

/// Evaluates an integer polynomial at an integer point.
inline Integer zeval(const ZPoly& p, const Integer& at) {
  Integer acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * at + *it;
  return acc;
}

inline std::size_t zmax_bits(const ZPoly& p) {
  std::size_t bits = 0;
  for (const auto& a : p) bits = std::max(bits, mpz_sizeinbase(a.get_mpz_t(), 2));
  return bits;
}

/// Heuristic gcd: evaluate at a large integer, take the integer gcd, and
/// read the candidate back off its balanced base-xi digits. Returns false
/// when the candidate does not check out.
inline bool zgcd_heuristic(const ZPoly& a, const ZPoly& b, ZPoly* out) {
  Integer xi;
  const std::size_t bits = std::max(zmax_bits(a), zmax_bits(b)) + 2;
  mpz_ui_pow_ui(xi.get_mpz_t(), 2, bits);
  xi += 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Integer va = zeval(a, xi), vb = zeval(b, xi), g;
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    ZPoly cand;
    Integer half = xi / 2;
    while (g != 0) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      cand.push_back(r);
      g -= r;
      mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    }
    zmake_primitive(cand);
    if (!cand.empty() && zdivide(a, cand, nullptr) && zdivide(b, cand, nullptr)) {
      *out = std::move(cand);
      return true;
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

/// Primitive gcd of two primitive integer polynomials.
inline ZPoly zgcd(ZPoly a, ZPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() == 1) return ZPoly{Integer(1)};
  ZPoly h;
  if (zgcd_heuristic(a, b, &h)) return h;
  while (!b.empty()) {
    if (b.size() == 1) return ZPoly{Integer(1)};
    ZPoly r = zprem_primitive(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  zmake_primitive(a);
  return a;
}

}  // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(1);
  auto za = detail::to_primitive_integer(a).second;
  auto zb = detail::to_primitive_integer(b).second;
  return detail::from_zpoly(detail::zgcd(std::move(za), std::move(zb))).monic();
}

inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) { return gcd(a, b); }

inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_quotient(a * b, gcd(a, b)).monic();
}

/// Writes p the way the expression parser reads it back, e.g.
/// "x^2-3/2*x+1".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p.coeff(i);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace denbound

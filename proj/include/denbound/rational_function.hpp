#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "denbound/errors.hpp"
#include "denbound/factor.hpp"
#include "denbound/polynomial.hpp"

namespace denbound {

/// Reduced fraction num/den over Q[x]: den monic, gcd(num, den) = 1, and
/// zero is 0/1. Any constant factor lives in the numerator.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }
  static RationalFunction constant(long c) { return constant(Rational(c)); }
  static RationalFunction x() { return RationalFunction(Polynomial::x()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    Polynomial g = gcd(a.den_, b.den_);
    if (g.is_one()) return from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Polynomial ca = exact_quotient(b.den_, g), cb = exact_quotient(a.den_, g);
    return RationalFunction(a.num_ * ca + b.num_ * cb, a.den_ * ca);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel before multiplying.
    Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Polynomial n1 = g1.is_one() ? a.num_ : exact_quotient(a.num_, g1);
    Polynomial d2 = g1.is_one() ? b.den_ : exact_quotient(b.den_, g1);
    Polynomial n2 = g2.is_one() ? b.num_ : exact_quotient(b.num_, g2);
    Polynomial d1 = g2.is_one() ? a.den_ : exact_quotient(a.den_, g2);
    return from_coprime(n1 * n2, d1 * d2);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZeroError("rational function division by zero");
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return from_coprime(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  }

  /// Degree of num minus degree of den; zero has no degree.
  long degree() const {
    if (is_zero()) throw DomainError("degree of zero rational function");
    return static_cast<long>(num_.deg()) - static_cast<long>(den_.deg());
  }

  bool operator==(const RationalFunction&) const = default;

  /// Skips the gcd: num and den must already be coprime. Only the scaling
  /// is normalized.
  static RationalFunction from_coprime(Polynomial num, Polynomial den) {
    RationalFunction r;
    const Rational lc = den.leading();
    if (lc != 1) {
      const Rational inv = Rational(1) / lc;
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) r.den_ = Polynomial::constant(1);
    return r;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial::constant(1);
      return;
    }
    Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    const Rational inv = Rational(1) / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  Polynomial num_;
  Polynomial den_;
};

/// Valuation of an exact element: an integer, or infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long v) : finite_(true), value_(v) {}

  bool is_infinite() const { return !finite_; }
  long value() const {
    if (!finite_) throw DomainError("valuation of zero has no finite value");
    return value_;
  }

  bool operator==(const Valuation&) const = default;
  auto operator<=>(const Valuation& o) const {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return value_ <=> o.value_;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

 private:
  Valuation() = default;
  bool finite_ = false;
  long value_ = 0;
};

/// Multiplicity of p in a nonzero polynomial a, by repeated exact division.
/// p must be nonconstant; irreducibility is the caller's business.
inline long multiplicity(Polynomial a, const Polynomial& p) {
  if (a.is_zero() || p.is_constant()) throw DomainError("multiplicity: zero polynomial or constant divisor");
  long m = 0;
  for (;;) {
    auto [q, r] = divmod(a, p);
    if (!r.is_zero()) return m;
    a = std::move(q);
    ++m;
  }
}

namespace detail {
inline Valuation valuation_unchecked(const RationalFunction& a, const Polynomial& p) {
  if (a.is_zero()) return Valuation::infinity();
  return Valuation(multiplicity(a.num(), p) - multiplicity(a.den(), p));
}
}  // namespace detail

/// val_p(a) for a monic irreducible p.
inline Valuation valuation(const RationalFunction& a, const Polynomial& p) {
  if (p.is_constant() || !p.is_monic() || !is_irreducible(p))
    throw DomainError("valuation: p must be a monic irreducible polynomial");
  return detail::valuation_unchecked(a, p);
}

/// Factored form of a nonzero rational function.
inline FactoredElement factor(const RationalFunction& a) {
  if (a.is_zero()) throw DomainError("factor: zero rational function");
  FactoredElement out = factor(a.num());
  if (!a.den().is_one()) out.multiply(factor(a.den()).inverse());
  return out;
}

inline RationalFunction to_rational_function(const FactoredElement& f) {
  return RationalFunction(f.numerator(), f.denominator());
}

inline std::string to_string(const RationalFunction& r) {
  if (r.den().is_one()) return to_string(r.num());
  auto wrap = [](const Polynomial& p) {
    const std::string s = to_string(p);
    const bool single = p.is_constant() || (p.coefficients().size() >= 2 &&
                                            [&] {
                                              std::size_t nz = 0;
                                              for (const auto& c : p.coefficients()) nz += (c != 0);
                                              return nz == 1 && p.leading() == 1;
                                            }());
    return single ? s : "(" + s + ")";
  };
  return wrap(r.num()) + "/" + wrap(r.den());
}

enum class ArithOp { add, sub, mul, div };

inline RationalFunction ratfun_arith(ArithOp op, const RationalFunction& a, const RationalFunction& b) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw DomainError("ratfun_arith: unknown operation");
}

}  // namespace denbound

#pragma once

// The automorphism tau of Q[x] (shift x -> x+1, or q-shift x -> q*x), the
// set D of elements fixed up to units by some nonzero power of tau, and
// tau-equivalence classes of primes.
//
// The multi-basic case (several variables, tau(x_j) = a_j x_j + b_j) would
// be a third Kind here; it is not implemented.

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "denbound/errors.hpp"
#include "denbound/polynomial.hpp"
#include "denbound/rational_function.hpp"

namespace denbound {

class DifferenceRing {
 public:
  enum class Kind { shift, qshift };

  static DifferenceRing shift() { return DifferenceRing(Kind::shift, Rational(1)); }
  /// q must not be 0 or a root of unity (over Q: not +-1).
  static DifferenceRing qshift(const Rational& q) {
    if (q == 0 || q == 1 || q == -1) throw DomainError("q-shift requires q not in {0, 1, -1}");
    return DifferenceRing(Kind::qshift, q);
  }

  Kind kind() const { return kind_; }
  bool is_shift() const { return kind_ == Kind::shift; }
  const Rational& q() const { return q_; }

  /// tau^k(f).
  Polynomial apply(const Polynomial& f, long k) const {
    if (k == 0 || f.is_constant()) return f;
    if (kind_ == Kind::shift) return f.shifted(Rational(k));
    return f.dilated(q_power(k));
  }

  RationalFunction apply(const RationalFunction& f, long k) const {
    if (k == 0 || f.is_constant()) return f;
    // tau is an automorphism, so coprimality survives.
    return RationalFunction::from_coprime(apply(f.num(), k), apply(f.den(), k));
  }

  /// a in D: tau^k(a) ~ a for some k != 0. Shift case: the nonzero
  /// constants. q-shift case: the monomials c*x^m.
  bool in_D(const Polynomial& a) const {
    if (a.is_zero()) throw DomainError("in_D: zero polynomial");
    if (kind_ == Kind::shift) return a.is_constant();
    std::size_t nonzero = 0;
    for (const auto& c : a.coefficients()) nonzero += (c != 0);
    return nonzero == 1;
  }

  /// The k with tau^k(p1) ~ p2, for monic irreducible p1, p2. For primes
  /// outside D the answer is unique; for a prime in D, 0 is reported when
  /// p1 = p2.
  std::optional<long> tau_equivalent(const Polynomial& p1, const Polynomial& p2) const {
    if (p1.is_constant() || p2.is_constant()) throw DomainError("tau_equivalent: constant polynomial");
    if (p1.degree() != p2.degree()) return std::nullopt;
    if (p1 == p2) return 0L;
    const std::size_t d = p1.deg();
    if (kind_ == Kind::shift) {
      // Coefficient of x^(d-1) in p1(x+k) is a_{d-1} + d*k.
      Rational k = (p2.coeff(d - 1) / p2.leading() - p1.coeff(d - 1) / p1.leading()) / Rational(static_cast<long>(d));
      if (k.get_den() != 1 || !k.get_num().fits_slong_p()) return std::nullopt;
      const long kk = k.get_num().get_si();
      if (apply(p1, kk).monic() == p2.monic()) return kk;
      return std::nullopt;
    }
    // q-shift: a monic non-monomial irreducible has a nonzero constant term,
    // and the monic form of tau^k(p1) has constant term a_0 * q^(-k*d).
    if (p1.coeff(0) == 0 || p2.coeff(0) == 0) return std::nullopt;
    const Rational ratio = (p1.coeff(0) / p1.leading()) / (p2.coeff(0) / p2.leading());
    auto m = discrete_log(ratio);
    if (!m || *m % static_cast<long>(d) != 0) return std::nullopt;
    const long kk = *m / static_cast<long>(d);
    if (apply(p1, kk).monic() == p2.monic()) return kk;
    return std::nullopt;
  }

  Rational q_power(long k) const {
    Rational r(1);
    Rational base = k >= 0 ? q_ : Rational(1) / q_;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
    return r;
  }

  bool operator==(const DifferenceRing&) const = default;

 private:
  DifferenceRing(Kind kind, Rational q) : kind_(kind), q_(std::move(q)) {}

  // m with q^m = r. |q| != 1 makes the height of q^m at least 2^|m|, which
  // bounds the search.
  std::optional<long> discrete_log(const Rational& r) const {
    if (r == 1) return 0L;
    const std::size_t limit = mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2) + 1;
    Rational up = q_, down = Rational(1) / q_;
    for (std::size_t m = 1; m <= limit; ++m) {
      if (up == r) return static_cast<long>(m);
      if (down == r) return -static_cast<long>(m);
      up *= q_;
      down /= q_;
    }
    return std::nullopt;
  }

  Kind kind_;
  Rational q_;
};

/// Free-function spelling of DifferenceRing::apply.
inline Polynomial tau_pow(const Polynomial& f, long k, const DifferenceRing& ring) { return ring.apply(f, k); }
inline RationalFunction tau_pow(const RationalFunction& f, long k, const DifferenceRing& ring) {
  return ring.apply(f, k);
}

struct ClassMember {
  Polynomial prime;
  long offset = 0;  // tau^offset(rep) ~ prime

  bool operator==(const ClassMember&) const = default;
};

/// One tau-equivalence class of primes. The representative is the member
/// with the smallest offset, so every offset is >= 0.
struct PrimeClass {
  Polynomial rep;
  std::vector<ClassMember> members;  // sorted by offset
};

/// Groups monic irreducible primes into tau-equivalence classes. Classes are
/// returned in canonical order of their representatives.
inline std::vector<PrimeClass> partition_classes(std::span<const Polynomial> primes, const DifferenceRing& ring) {
  std::vector<PrimeClass> classes;  // members[0] is the anchor while building
  for (const auto& p : primes) {
    bool placed = false;
    for (auto& cls : classes) {
      const auto k = ring.tau_equivalent(cls.members.front().prime, p);
      if (!k) continue;
      const bool duplicate = std::any_of(cls.members.begin(), cls.members.end(),
                                         [&](const ClassMember& m) { return m.prime == p; });
      if (!duplicate) cls.members.push_back({p, *k});
      placed = true;
      break;
    }
    if (!placed) classes.push_back({p, {{p, 0}}});
  }
  for (auto& cls : classes) {
    std::sort(cls.members.begin(), cls.members.end(), [](const ClassMember& a, const ClassMember& b) {
      return a.offset != b.offset ? a.offset < b.offset : canonical_less(a.prime, b.prime);
    });
    const long base = cls.members.front().offset;
    for (auto& m : cls.members) m.offset -= base;
    cls.rep = cls.members.front().prime;
  }
  std::sort(classes.begin(), classes.end(),
            [](const PrimeClass& a, const PrimeClass& b) { return canonical_less(a.rep, b.rep); });
  return classes;
}

}  // namespace denbound

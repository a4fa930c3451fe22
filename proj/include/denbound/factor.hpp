#pragma once

// Irreducible factorization over Q.
//
// Pipeline: squarefree decomposition (Yun) over Q; each squarefree part is
// cleared to a primitive integer polynomial and factored modulo a word-size
// prime of good reduction (distinct-degree, then Cantor-Zassenhaus
// equal-degree splitting), the modular factors are Hensel-lifted past a
// Mignotte-style coefficient bound, and true factors are recovered by
// exhaustive subset recombination.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "denbound/errors.hpp"
#include "denbound/polynomial.hpp"

namespace denbound {

struct Factor {
  Polynomial prime;  // monic, irreducible over Q
  long exponent = 0;

  bool operator==(const Factor&) const = default;
};

/// unit * prod prime^exponent, with primes pairwise distinct, monic and
/// irreducible, kept in canonical order. Exponents may be negative, so this
/// also represents nonzero rational functions.
class FactoredElement {
 public:
  FactoredElement() = default;
  explicit FactoredElement(Rational unit) : unit_(std::move(unit)) {
    if (unit_ == 0) throw DomainError("FactoredElement unit must be nonzero");
  }

  const Rational& unit() const { return unit_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  void set_unit(Rational u) {
    if (u == 0) throw DomainError("FactoredElement unit must be nonzero");
    unit_ = std::move(u);
  }

  /// Multiplies in prime^exponent, merging with an existing entry.
  void multiply(const Polynomial& prime, long exponent) {
    if (exponent == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                               [](const Factor& f, const Polynomial& p) { return canonical_less(f.prime, p); });
    if (it != factors_.end() && it->prime == prime) {
      it->exponent += exponent;
      if (it->exponent == 0) factors_.erase(it);
    } else {
      factors_.insert(it, Factor{prime, exponent});
    }
  }

  void multiply(const FactoredElement& o) {
    unit_ *= o.unit_;
    for (const auto& f : o.factors_) multiply(f.prime, f.exponent);
  }

  FactoredElement inverse() const {
    FactoredElement r(Rational(1) / unit_);
    for (const auto& f : factors_) r.factors_.push_back({f.prime, -f.exponent});
    return r;
  }

  long exponent_of(const Polynomial& prime) const {
    for (const auto& f : factors_)
      if (f.prime == prime) return f.exponent;
    return 0;
  }

  /// Product of the positive-exponent part times the unit.
  Polynomial numerator() const {
    Polynomial r = Polynomial::constant(unit_);
    for (const auto& f : factors_)
      if (f.exponent > 0) r *= f.prime.pow(static_cast<unsigned>(f.exponent));
    return r;
  }
  /// Product of the negative-exponent part (monic).
  Polynomial denominator() const {
    Polynomial r = Polynomial::constant(1);
    for (const auto& f : factors_)
      if (f.exponent < 0) r *= f.prime.pow(static_cast<unsigned>(-f.exponent));
    return r;
  }

  bool operator==(const FactoredElement&) const = default;

 private:
  Rational unit_{1};
  std::vector<Factor> factors_;
};

namespace detail {

// ---------------------------------------------------------------------------
// Polynomials over Z/pZ, p an odd prime below 2^31. Coefficients in
// increasing power order, no trailing zeros.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

inline void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 mpow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

inline u64 minv(u64 a, u64 p) { return mpow(a, p - 2, p); }

inline ModPoly msub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  mtrim(r);
  return r;
}

inline ModPoly madd(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  mtrim(r);
  return r;
}

inline ModPoly mmul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

inline ModPoly mscale(ModPoly a, u64 s, u64 p) {
  for (auto& c : a) c = c * s % p;
  mtrim(a);
  return a;
}

inline ModPoly mmonic(const ModPoly& a, u64 p) { return a.empty() ? a : mscale(a, minv(a.back(), p), p); }

inline void mdivmod(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
  ModPoly rem = a;
  const std::size_t db = b.size() - 1;
  ModPoly quo(a.size() >= b.size() ? a.size() - db : 0, 0);
  const u64 inv = minv(b.back(), p);
  for (std::size_t i = rem.size(); i-- > db && !rem.empty();) {
    if (i >= rem.size() || rem[i] == 0) continue;
    const u64 c = rem[i] * inv % p;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] + p - c * b[j] % p) % p;
  }
  rem.resize(std::min(rem.size(), db));
  mtrim(rem);
  mtrim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

inline ModPoly mrem(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  mdivmod(a, b, p, nullptr, &r);
  return r;
}

inline ModPoly mgcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mrem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

/// s*a + t*b = gcd(a, b) (monic).
inline ModPoly mxgcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* s, ModPoly* t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    mdivmod(r0, r1, p, &q, &r);
    ModPoly s2 = msub(s0, mmul(q, s1, p), p);
    ModPoly t2 = msub(t0, mmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = minv(r0.back(), p);
  *s = mscale(s0, inv, p);
  *t = mscale(t0, inv, p);
  return mscale(r0, inv, p);
}

inline ModPoly mpowmod(ModPoly base, const Integer& e, const ModPoly& f, u64 p) {
  ModPoly result{1};
  base = mrem(base, f, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mrem(mmul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mrem(mmul(result, base, p), f, p);
  }
  return result;
}

inline ModPoly mderivative(const ModPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
  mtrim(d);
  return d;
}

inline ModPoly reduce_mod(const ZPoly& f, u64 p) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  mtrim(r);
  return r;
}

/// Distinct-degree factorization of a monic squarefree f: pairs
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<ModPoly, std::size_t>> distinct_degree(ModPoly f, u64 p) {
  std::vector<std::pair<ModPoly, std::size_t>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer pz(static_cast<unsigned long>(p));
  for (std::size_t d = 1; f.size() - 1 >= 2 * d; ++d) {
    h = mpowmod(h, pz, f, p);
    ModPoly g = mgcd(msub(h, x, p), f, p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      mdivmod(f, g, p, &f, nullptr);
      h = mrem(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, f.size() - 1);
  return out;
}

/// Cantor-Zassenhaus equal-degree splitting of f (monic, all irreducible
/// factors of degree d).
inline void equal_degree(const ModPoly& f, std::size_t d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const std::size_t n = f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  for (;;) {
    ModPoly a(n);
    for (auto& c : a) c = coef(rng);
    mtrim(a);
    if (a.size() <= 1) continue;
    ModPoly g = mgcd(a, f, p);
    if (g.size() == 1) {
      ModPoly b = mpowmod(a, e, f, p);
      b = msub(b, ModPoly{1}, p);
      g = mgcd(b, f, p);
    }
    if (g.size() > 1 && g.size() < f.size()) {
      ModPoly q;
      mdivmod(f, g, p, &q, nullptr);
      equal_degree(g, d, p, rng, out);
      equal_degree(mmonic(q, p), d, p, rng, out);
      return;
    }
  }
}

inline bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z/p^k.

inline Integer sym_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r > m / 2) r -= m;
  return r;
}

inline ZPoly zmod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

inline ZPoly lift_from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

/// Lifts target = g0 * h0 (mod p), g0 monic, to target = g * h
/// (mod p^steps), with g monic and lc(h) = lc(target). Target is only
/// needed modulo p^steps.
inline std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& target, const ModPoly& g0, const ModPoly& h0, u64 p,
                                                unsigned steps) {
  ModPoly s, t;
  mxgcd(g0, h0, p, &s, &t);  // s*g0 + t*h0 = 1
  ZPoly g = lift_from_mod(g0), h = lift_from_mod(h0);
  h.back() = target.back();
  Integer m(static_cast<unsigned long>(p));
  const Integer pz(static_cast<unsigned long>(p));
  for (unsigned i = 1; i < steps; ++i) {
    ZPoly diff = zmul(g, h);
    diff.resize(std::max(diff.size(), target.size()));
    for (std::size_t j = 0; j < target.size(); ++j) diff[j] = target[j] - diff[j];
    ztrim(diff);
    ModPoly e(diff.size());
    for (std::size_t j = 0; j < diff.size(); ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), diff[j].get_mpz_t(), m.get_mpz_t());
      e[j] = mpz_fdiv_ui(q.get_mpz_t(), p);
    }
    mtrim(e);
    if (!e.empty()) {
      ModPoly te = mmul(t, e, p), quo, dg;
      mdivmod(te, g0, p, &quo, &dg);
      ModPoly dh = madd(mmul(s, e, p), mmul(quo, h0, p), p);
      for (std::size_t j = 0; j < dg.size(); ++j) g[j] += m * static_cast<unsigned long>(dg[j]);
      for (std::size_t j = 0; j < dh.size(); ++j) h[j] += m * static_cast<unsigned long>(dh[j]);
    }
    m *= pz;
  }
  return {zmod(g, m), zmod(h, m)};
}

/// Factors a primitive squarefree integer polynomial of positive degree
/// with positive leading coefficient into primitive irreducibles.
inline std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return {f};

  // Pick a prime of good reduction, preferring fewer modular factors.
  u64 best_p = 0;
  std::size_t best_count = 0;
  std::vector<std::pair<ModPoly, std::size_t>> best_ddf;
  int tried = 0;
  for (u64 cand = 1009; tried < 5; cand += 2) {
    if (!is_small_prime(cand)) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), cand) == 0) continue;
    ModPoly fp = mmonic(reduce_mod(f, cand), cand);
    if (mgcd(fp, mderivative(fp, cand), cand).size() != 1) continue;
    auto ddf = distinct_degree(fp, cand);
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += (g.size() - 1) / d;
    ++tried;
    if (best_p == 0 || count < best_count) {
      best_p = cand;
      best_count = count;
      best_ddf = std::move(ddf);
    }
    if (count == 1) return {f};
  }
  const u64 p = best_p;

  std::vector<ModPoly> modular;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (const auto& [g, d] : best_ddf) equal_degree(g, d, p, rng, modular);
  if (modular.size() == 1) return {f};

  // Coefficient bound for lc(f) * (any factor of f).
  Integer maxc(0);
  for (const auto& a : f) maxc = std::max<Integer>(maxc, abs(a));
  Integer bound = maxc * abs(f.back());
  bound <<= static_cast<mp_bitcnt_t>(n + 1);
  bound *= static_cast<unsigned long>(n + 2);
  unsigned steps = 1;
  Integer modulus(static_cast<unsigned long>(p));
  const Integer pz(static_cast<unsigned long>(p));
  while (modulus <= 2 * bound) {
    modulus *= pz;
    ++steps;
  }

  // Peel modular factors off one at a time.
  std::vector<ZPoly> lifted;
  ZPoly rest_target = zmod(f, modulus);
  const u64 lc_mod = mpz_fdiv_ui(f.back().get_mpz_t(), p);
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    ModPoly h0{lc_mod};
    for (std::size_t j = i + 1; j < modular.size(); ++j) h0 = mmul(h0, modular[j], p);
    auto [g, h] = hensel_lift_pair(rest_target, modular[i], h0, p, steps);
    lifted.push_back(std::move(g));
    rest_target = std::move(h);
  }
  {
    // Last factor: make the remaining target monic modulo p^k.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), rest_target.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly last = rest_target;
    for (auto& c : last) c = c * inv;
    lifted.push_back(zmod(last, modulus));
  }

  // Subset recombination.
  std::vector<ZPoly> result;
  ZPoly current = f;
  std::vector<ZPoly> pool = std::move(lifted);
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{current.back()};
      for (auto i : idx) cand = zmod(zmul(cand, pool[i]), modulus);
      for (auto& c : cand) c = sym_mod(c, modulus);
      zmake_primitive(cand);
      ZPoly quo;
      if (zdivide(current, cand, &quo)) {
        result.push_back(cand);
        current = std::move(quo);
        zmake_primitive(current);
        for (std::size_t k = idx.size(); k-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[k]));
        found = true;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (current.size() > 1) result.push_back(current);
  return result;
}

/// Yun's squarefree decomposition of a monic polynomial: parts[i] is the
/// product of the irreducible factors of multiplicity i + 1.
inline std::vector<Polynomial> squarefree_parts(const Polynomial& f) {
  std::vector<Polynomial> parts;
  if (f.is_constant()) return parts;
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = exact_quotient(f, a);
  Polynomial c = exact_quotient(df, a);
  Polynomial d = c - b.derivative();
  while (!b.is_constant()) {
    Polynomial g = gcd(b, d);
    parts.push_back(g);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  return parts;
}

}  // namespace detail

/// Irreducible factorization over Q of a nonzero polynomial. The unit is
/// the leading coefficient; primes are monic.
inline FactoredElement factor(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("factor: zero polynomial");
  FactoredElement out(p.leading());
  const auto parts = detail::squarefree_parts(p.monic());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_constant()) continue;
    const auto z = detail::to_primitive_integer(parts[i]).second;
    for (const auto& irreducible : detail::factor_squarefree_integer(z))
      out.multiply(detail::from_zpoly(irreducible).monic(), static_cast<long>(i + 1));
  }
  return out;
}

inline bool is_irreducible(const Polynomial& p) {
  if (p.is_constant()) return false;
  const auto f = factor(p);
  return f.factors().size() == 1 && f.factors().front().exponent == 1;
}

/// Product of the factorization; exact inverse of factor() on polynomials.
inline Polynomial expand(const FactoredElement& f) {
  if (!f.denominator().is_one()) throw DomainError("expand: element has negative exponents");
  return f.numerator();
}

}  // namespace denbound

#pragma once

// Top-level drivers for tau(Y) = M Y: the global content bound, the
// component-wise content bound, the substitution Y = B Z, a checker that
// known solutions lie in B * A^n, and a generator of systems with known
// rational solutions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "denbound/cw_bound.hpp"
#include "denbound/difference_ring.hpp"
#include "denbound/errors.hpp"
#include "denbound/factor.hpp"
#include "denbound/local_bound.hpp"
#include "denbound/matrix.hpp"
#include "denbound/rational_function.hpp"

namespace denbound {

struct RecurrenceSystem {
  RatFunMatrix M;
  DifferenceRing ring = DifferenceRing::shift();

  std::size_t n() const { return M.rows(); }
};

enum class BoundKind { global, componentwise };

/// exact: every rational solution is in B * A^n. up_to_D_factor (q-shift):
/// a * Y is in B * A^n for some monomial a, not computed here.
enum class Caveat { exact, up_to_D_factor };

struct ContentBound {
  BoundKind kind = BoundKind::global;
  std::vector<BoundEntry> entries;  // one entry (global) or n
  Caveat caveat = Caveat::exact;
  std::size_t iterations = 0;  // improve sweeps over all classes
  bool cut_off = false;         // some component-wise run hit the counter

  /// B for a global bound; throws for component-wise bounds.
  const BoundEntry& scalar() const {
    if (kind != BoundKind::global) throw DomainError("ContentBound: not a global bound");
    return entries.front();
  }
  bool is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const BoundEntry& e) { return e.zero; });
  }
  /// Total denominator degree over all entries.
  long den_degree() const {
    long d = 0;
    for (const auto& e : entries) d += e.den_degree();
    return d;
  }
  /// The entry that bounds component i.
  const BoundEntry& for_component(std::size_t i) const {
    return kind == BoundKind::global ? entries.front() : entries.at(i);
  }
};

namespace detail {

inline void collect_den_primes(const RationalFunction& r, std::vector<Polynomial>& out) {
  if (r.is_zero() || r.den().is_constant()) return;
  const FactoredElement d = factor(r.den());
  for (const auto& f : d.factors()) out.push_back(f.prime);
}

inline std::vector<Polynomial> unique_primes(std::vector<Polynomial> ps) {
  std::sort(ps.begin(), ps.end(), [](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b); });
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

inline Caveat caveat_for(const DifferenceRing& ring) { return ring.is_shift() ? Caveat::exact : Caveat::up_to_D_factor; }

inline void check_system(const RecurrenceSystem& sys, int J) {
  if (!sys.M.is_square() || sys.M.rows() == 0) throw DimensionError("system matrix must be square and nonempty");
  if (J < 1) throw DomainError("J must be positive");
}

}  // namespace detail

/// Diagnostic output of the global driver.
struct GlobalReport {
  ContentBound bound;
  std::vector<RationalFunction> contents;  // c_j for j = -J..J
  std::vector<PrimeClass> classes;         // classes outside D
  std::vector<LocalRun> runs;              // one per class
};

inline GlobalReport global_bound_report(const RecurrenceSystem& sys, int J) {
  detail::check_system(sys, J);
  const Ladder ladder(sys.M, J, sys.ring);
  GlobalReport rep;
  rep.bound.kind = BoundKind::global;
  rep.bound.caveat = detail::caveat_for(sys.ring);
  std::vector<FactoredElement> factored;
  for (int j = -J; j <= J; ++j) {
    rep.contents.push_back(ladder.content_at(j));
    factored.push_back(factor(ladder.content_at(j)));
  }
  std::vector<Polynomial> primes;
  detail::collect_den_primes(ladder.content_at(1), primes);
  detail::collect_den_primes(ladder.content_at(-1), primes);
  primes = detail::unique_primes(std::move(primes));
  BoundEntry b;
  for (auto& cls : partition_classes(primes, sys.ring)) {
    if (sys.ring.in_D(cls.rep)) continue;
    ExponentFamily e(J);
    for (int j = -J; j <= J; ++j) e[j] = exponent_function(factored[static_cast<std::size_t>(j + J)], cls.rep, sys.ring);
    LocalRun run = local_bound(e);
    rep.bound.iterations += run.sweeps;
    if (run.bound.is_no_solutions())
      b.zero = true;
    else if (!b.zero)
      b.value.multiply(local_factor(run.bound, cls.rep, sys.ring));
    rep.classes.push_back(std::move(cls));
    rep.runs.push_back(std::move(run));
  }
  if (b.zero) b.value = FactoredElement();
  rep.bound.entries.push_back(std::move(b));
  return rep;
}

inline ContentBound global_bound(const RecurrenceSystem& sys, int J) { return global_bound_report(sys, J).bound; }

struct CwReport {
  ContentBound bound;
  std::vector<PrimeClass> classes;
  std::vector<CwRun> runs;
};

inline CwReport cw_bound_report(const RecurrenceSystem& sys, int J, const CwOptions& options = {}) {
  detail::check_system(sys, J);
  const std::size_t n = sys.n();
  const Ladder ladder(sys.M, J, sys.ring);
  CwReport rep;
  rep.bound.kind = BoundKind::componentwise;
  rep.bound.caveat = detail::caveat_for(sys.ring);
  std::vector<Polynomial> primes;
  for (const auto& e : ladder.at(1).entries()) detail::collect_den_primes(e, primes);
  for (const auto& e : ladder.at(-1).entries()) detail::collect_den_primes(e, primes);
  primes = detail::unique_primes(std::move(primes));

  std::vector<FactoredMatrix> mats;
  for (int j = -J; j <= J; ++j) mats.push_back(FactoredMatrix::of(ladder.at(j)));
  const FactoredElement c1 = factor(ladder.content_at(1));
  const FactoredElement cm1 = factor(ladder.content_at(-1));

  std::vector<BoundEntry> b(n);
  for (auto& cls : partition_classes(primes, sys.ring)) {
    if (sys.ring.in_D(cls.rep)) continue;
    MatrixExponentFamily e(J);
    for (int j = -J; j <= J; ++j)
      e[j] = matrix_exponent_function(mats[static_cast<std::size_t>(j + J)], cls.rep, sys.ring);
    const SupportWindow window =
        initial_window(exponent_function(c1, cls.rep, sys.ring), exponent_function(cm1, cls.rep, sys.ring));
    CwRun run = cw_local(e, window, n, options, cls.rep.deg());
    rep.bound.iterations += run.sweeps;
    rep.bound.cut_off = rep.bound.cut_off || run.cut_off || run.degree_cut;
    const auto local = assemble_component_bounds(run.bound, cls.rep, sys.ring);
    for (std::size_t i = 0; i < n; ++i) {
      if (local[i].zero) b[i].zero = true;
      if (!b[i].zero) b[i].value.multiply(local[i].value);
    }
    rep.classes.push_back(std::move(cls));
    rep.runs.push_back(std::move(run));
  }
  for (auto& e : b)
    if (e.zero) e.value = FactoredElement();
  rep.bound.entries = std::move(b);
  return rep;
}

inline ContentBound cw_bound(const RecurrenceSystem& sys, int J, const CwOptions& options = {}) {
  return cw_bound_report(sys, J, options).bound;
}

/// M' = tau(B)^-1 M B, so that Y = B Z turns tau(Y) = M Y into tau(Z) = M' Z.
/// B is the scalar (global) or diagonal (component-wise) bound matrix.
inline RecurrenceSystem transform_system(const RecurrenceSystem& sys, const ContentBound& b) {
  const std::size_t n = sys.n();
  if (b.kind == BoundKind::componentwise && b.entries.size() != n)
    throw DimensionError("transform_system: bound has the wrong number of components");
  std::vector<RationalFunction> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const BoundEntry& e = b.for_component(i);
    if (e.zero) throw DomainError("transform_system: bound has a zero component");
    d[i] = e.as_rational_function();
  }
  RecurrenceSystem out{RatFunMatrix(n, n), sys.ring};
  for (std::size_t i = 0; i < n; ++i) {
    const RationalFunction t = sys.ring.apply(d[i], 1);
    for (std::size_t j = 0; j < n; ++j)
      if (!sys.M(i, j).is_zero()) out.M(i, j) = sys.M(i, j) * d[j] / t;
  }
  return out;
}

/// tau(Y) == M Y.
inline bool is_solution(const RecurrenceSystem& sys, const RatFunVector& y) {
  if (y.size() != sys.n()) return false;
  return tau_pow(y, 1, sys.ring) == sys.M * y;
}

struct Violation {
  std::size_t solution = 0;
  std::size_t component = 0;
  Polynomial witness;  // prime with val(Y_i) < val(B_i)
  long solution_valuation = 0;
  long bound_valuation = 0;
};

struct VerifyReport {
  std::vector<std::size_t> non_solutions;  // indices failing tau(Y) = M Y
  std::vector<Violation> violations;
  bool passed() const { return non_solutions.empty() && violations.empty(); }
};

/// Checks val_q(Y_i) >= val_q(B_i) for every solution, component and prime
/// q outside D. Only primes occurring in B_i or in den(Y_i) can break the
/// inequality, so those are the ones checked. A zero B_i requires Y_i = 0.
/// In the q-shift case powers of x are ignored (they lie in D).
inline VerifyReport verify_bound(const RecurrenceSystem& sys, const ContentBound& b,
                                 const std::vector<RatFunVector>& solutions) {
  VerifyReport rep;
  for (std::size_t s = 0; s < solutions.size(); ++s) {
    const RatFunVector& y = solutions[s];
    if (!is_solution(sys, y)) {
      rep.non_solutions.push_back(s);
      continue;
    }
    for (std::size_t i = 0; i < y.size(); ++i) {
      const BoundEntry& bi = b.for_component(i);
      if (y[i].is_zero()) continue;
      if (bi.zero) {
        rep.violations.push_back({s, i, Polynomial(), 0, 0});
        continue;
      }
      std::vector<Polynomial> primes;
      for (const auto& f : bi.value.factors()) primes.push_back(f.prime);
      detail::collect_den_primes(y[i], primes);
      for (const auto& q : detail::unique_primes(std::move(primes))) {
        if (sys.ring.in_D(q)) continue;
        const long vb = bi.value.exponent_of(q);
        const long vy = multiplicity(y[i].num(), q) - multiplicity(y[i].den(), q);
        if (vy < vb) rep.violations.push_back({s, i, q, vy, vb});
      }
    }
  }
  return rep;
}

struct GeneratedSystem {
  RecurrenceSystem system;
  std::vector<RatFunVector> solutions;  // columns of W
};

namespace detail {

inline Polynomial random_poly(std::mt19937_64& rng, int max_deg, int coeff) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-coeff, coeff);
  const int d = deg(rng);
  std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
  for (auto& x : cs) x = c(rng);
  return Polynomial(std::move(cs));
}

/// Product of a few random linear factors x + a, giving denominators whose
/// shifts interact.
inline Polynomial random_den(std::mt19937_64& rng, int count, int spread) {
  std::uniform_int_distribution<int> nf(0, count), a(-spread, spread);
  Polynomial d = Polynomial::constant(1);
  const int k = nf(rng);
  for (int i = 0; i < k; ++i) d = d * (Polynomial::x() + Polynomial::constant(a(rng)));
  return d;
}

}  // namespace detail

/// M = tau(W) W^-1 for a random invertible W over Q(x); each column of W
/// is a rational solution. complexity >= 1 scales degrees and the number of
/// denominator factors.
inline GeneratedSystem random_system_with_solutions(std::size_t n, std::uint64_t seed, int complexity = 1,
                                                    const DifferenceRing& ring = DifferenceRing::shift()) {
  if (n < 1) throw DomainError("random_system_with_solutions: n must be positive");
  if (complexity < 1) throw DomainError("random_system_with_solutions: complexity must be positive");
  std::mt19937_64 rng(seed);
  for (;;) {
    RatFunMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Polynomial num = detail::random_poly(rng, complexity, 3);
        if (num.is_zero()) continue;
        Polynomial den = detail::random_den(rng, complexity, 2 + complexity);
        if (!ring.is_shift() && den.coeff(0) == 0) den = den * (Polynomial::x() - Polynomial::constant(1));
        w(i, j) = RationalFunction(num, den);
      }
    RatFunMatrix w_inv;
    try {
      w_inv = inverse(w);
    } catch (const SingularMatrixError&) {
      continue;
    }
    GeneratedSystem g;
    g.system = {tau_pow(w, 1, ring) * w_inv, ring};
    for (std::size_t j = 0; j < n; ++j) g.solutions.push_back(w.column_vector(j));
    return g;
  }
}

}  // namespace denbound

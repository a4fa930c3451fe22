#pragma once

// Scalar local content bounds at one prime class.
//
// For a content c and a class representative p, the exponent function is
// e(k) = val_{tau^k(p)}(c). Given e_j for the ladder contents c_j
// (-J <= j <= J), a local content bound f satisfies
// val_{tau^k(p)}(Y) >= f(k) for every rational solution Y. It starts at
// -inf on the support window [l, m] and 0 elsewhere, and is improved by
//
//   f_new(k) = max_j e_j(k + j) + f(k + j)
//
// until it is stable. A positive value outside [l, m] proves that there is
// no nonzero solution.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "denbound/difference_ring.hpp"
#include "denbound/errors.hpp"
#include "denbound/factor.hpp"
#include "denbound/rational_function.hpp"
#include "denbound/tropical.hpp"

namespace denbound {

/// Closed integer interval; empty when lo > hi.
struct SupportWindow {
  long lo = 0;
  long hi = -1;

  bool empty() const { return lo > hi; }
  bool contains(long k) const { return lo <= k && k <= hi; }
  bool operator==(const SupportWindow&) const = default;
};

/// Finitely supported map Z -> Z.
class ExponentFunction {
 public:
  ExponentFunction() = default;

  /// values[i] is the value at first + i; zero ends are trimmed.
  ExponentFunction(long first, std::vector<long> values) : lo_(first), values_(std::move(values)) {
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
    std::size_t lead = 0;
    while (lead < values_.size() && values_[lead] == 0) ++lead;
    values_.erase(values_.begin(), values_.begin() + static_cast<long>(lead));
    lo_ += static_cast<long>(lead);
    if (values_.empty()) lo_ = 0;
  }

  long operator()(long k) const {
    if (values_.empty() || k < lo_ || k > hi()) return 0;
    return values_[static_cast<std::size_t>(k - lo_)];
  }

  bool is_zero() const { return values_.empty(); }
  /// Tight support bounds; empty window for the zero function.
  SupportWindow support() const { return values_.empty() ? SupportWindow{} : SupportWindow{lo_, hi()}; }

  bool operator==(const ExponentFunction&) const = default;

 private:
  long hi() const { return lo_ + static_cast<long>(values_.size()) - 1; }

  long lo_ = 0;
  std::vector<long> values_;
};

/// e(k) = val_{tau^k(rep)}(c) for c given in factored form.
inline ExponentFunction exponent_function(const FactoredElement& c, const Polynomial& rep,
                                          const DifferenceRing& ring) {
  std::map<long, long> vals;
  for (const auto& f : c.factors()) {
    if (f.prime.degree() != rep.degree()) continue;
    if (auto k = ring.tau_equivalent(rep, f.prime)) vals[*k] += f.exponent;
  }
  if (vals.empty()) return {};
  const long first = vals.begin()->first;
  std::vector<long> values(static_cast<std::size_t>(vals.rbegin()->first - first + 1), 0);
  for (const auto& [k, v] : vals) values[static_cast<std::size_t>(k - first)] = v;
  return ExponentFunction(first, std::move(values));
}

inline ExponentFunction exponent_function(const RationalFunction& c, const PrimeClass& cls,
                                          const DifferenceRing& ring) {
  if (c.is_zero()) throw DomainError("exponent_function: zero content");
  if (ring.in_D(cls.rep)) throw DomainError("exponent_function: representative lies in D");
  return exponent_function(factor(c), cls.rep, ring);
}

/// e_j for -J <= j <= J.
class ExponentFamily {
 public:
  explicit ExponentFamily(int J) : J_(J), e_(2 * static_cast<std::size_t>(J) + 1) {
    if (J < 1) throw DomainError("ExponentFamily: J must be positive");
  }

  int J() const { return J_; }
  ExponentFunction& operator[](int j) { return e_.at(static_cast<std::size_t>(j + J_)); }
  const ExponentFunction& operator[](int j) const { return e_.at(static_cast<std::size_t>(j + J_)); }

 private:
  int J_;
  std::vector<ExponentFunction> e_;
};

/// [l, m] with l = min(l_1, l_{-1} + 1) and m = max(m_1 - 1, m_{-1}),
/// from tight supports of e_1 and e_{-1}. An empty support places no
/// constraint on its side.
inline SupportWindow initial_window(const ExponentFunction& e1, const ExponentFunction& em1) {
  std::optional<long> lo, hi;
  auto take_min = [](std::optional<long>& a, long v) { a = a ? std::min(*a, v) : v; };
  auto take_max = [](std::optional<long>& a, long v) { a = a ? std::max(*a, v) : v; };
  if (!e1.is_zero()) {
    take_min(lo, e1.support().lo);
    take_max(hi, e1.support().hi - 1);
  }
  if (!em1.is_zero()) {
    take_min(lo, em1.support().lo + 1);
    take_max(hi, em1.support().hi);
  }
  if (!lo || *lo > *hi) return {};
  return {*lo, *hi};
}

/// A local content bound: a map Z -> Z u {-inf} that is 0 outside a
/// materialized range, or the marker for "no nonzero rational solutions".
class LocalBound {
 public:
  static LocalBound no_solutions() {
    LocalBound f;
    f.no_solutions_ = true;
    return f;
  }

  /// -inf on the window, 0 elsewhere, materialized over [first, last].
  static LocalBound initial(SupportWindow window, long first, long last) {
    LocalBound f;
    f.window_ = window;
    f.first_ = first;
    f.values_.assign(last >= first ? static_cast<std::size_t>(last - first + 1) : 0, Tropical(0));
    for (long k = window.lo; k <= window.hi; ++k) f.values_[static_cast<std::size_t>(k - first)] = Tropical::minus_infinity();
    return f;
  }

  bool is_no_solutions() const { return no_solutions_; }
  SupportWindow window() const { return window_; }
  long first() const { return first_; }
  long last() const { return first_ + static_cast<long>(values_.size()) - 1; }

  Tropical operator()(long k) const {
    if (k < first_ || k > last()) return Tropical(0);
    return values_[static_cast<std::size_t>(k - first_)];
  }

  bool has_minus_infinity() const {
    return std::any_of(values_.begin(), values_.end(), [](const Tropical& t) { return t.is_minus_infinity(); });
  }

  /// Positive value outside [l, m].
  bool escapes_window() const {
    for (long k = first_; k <= last(); ++k)
      if (!window_.contains(k) && (*this)(k) > Tropical(0)) return true;
    return false;
  }

  bool operator==(const LocalBound& o) const {
    if (no_solutions_ || o.no_solutions_) return no_solutions_ == o.no_solutions_;
    const long lo = std::min(first_, o.first_), hi = std::max(last(), o.last());
    for (long k = lo; k <= hi; ++k)
      if ((*this)(k) != o(k)) return false;
    return window_ == o.window_;
  }

 private:
  friend LocalBound improve(const LocalBound& f, const ExponentFamily& e);

  bool no_solutions_ = false;
  SupportWindow window_;
  long first_ = 0;
  std::vector<Tropical> values_;
};

/// Range of k where f_new(k) can differ from 0 given that f vanishes
/// outside [first, last]: within J of f's range, or where some e_j(k + j)
/// is nonzero.
inline std::pair<long, long> improvement_range(long first, long last, const ExponentFamily& e) {
  const int J = e.J();
  long lo = first - J, hi = last + J;
  for (int j = -J; j <= J; ++j) {
    const auto s = e[j].support();
    if (s.empty()) continue;
    lo = std::min(lo, s.lo - j);
    hi = std::max(hi, s.hi - j);
  }
  return {lo, hi};
}

/// One Jacobi sweep: f_new(k) = max_j e_j(k + j) + f(k + j).
inline LocalBound improve(const LocalBound& f, const ExponentFamily& e) {
  if (f.is_no_solutions()) throw DomainError("improve: bound is already the no-solutions marker");
  const int J = e.J();
  auto [lo, hi] = improvement_range(f.first(), f.last(), e);
  LocalBound g;
  g.window_ = f.window_;
  g.first_ = lo;
  g.values_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (long k = lo; k <= hi; ++k) {
    Tropical best = f(k);  // j = 0 term
    for (int j = -J; j <= J; ++j) {
      if (j == 0) continue;
      best = std::max(best, otimes(Tropical(e[j](k + j)), f(k + j)));
    }
    g.values_[static_cast<std::size_t>(k - lo)] = best;
  }
  while (!g.values_.empty() && g.values_.back() == Tropical(0)) g.values_.pop_back();
  std::size_t lead = 0;
  while (lead < g.values_.size() && g.values_[lead] == Tropical(0)) ++lead;
  g.values_.erase(g.values_.begin(), g.values_.begin() + static_cast<long>(lead));
  g.first_ += static_cast<long>(lead);
  return g;
}

struct LocalRun {
  LocalBound bound;
  std::vector<LocalBound> trace;  // initial f, then each change
  std::size_t sweeps = 0;
};

/// Fixed-point iteration from the initial window. Returns the
/// no-solutions marker when a positive value escapes [l, m].
inline LocalRun local_bound(const ExponentFamily& e) {
  if (!e[0].is_zero()) throw DomainError("local_bound: e_0 must vanish");
  const SupportWindow window = initial_window(e[1], e[-1]);
  long first = window.empty() ? 0 : window.lo, last = window.empty() ? -1 : window.hi;
  std::tie(first, last) = improvement_range(first, last, e);
  LocalRun run;
  LocalBound f = LocalBound::initial(window, first, last);
  run.trace.push_back(f);
  for (;;) {
    LocalBound next = improve(f, e);
    ++run.sweeps;
    if (next.escapes_window()) {
      run.trace.push_back(next);
      run.bound = LocalBound::no_solutions();
      return run;
    }
    if (next == f) {
      run.bound = std::move(f);
      return run;
    }
    f = std::move(next);
    run.trace.push_back(f);
  }
}

/// prod_k tau^k(rep)^f(k); f must be finite everywhere.
inline FactoredElement local_factor(const LocalBound& f, const Polynomial& rep, const DifferenceRing& ring) {
  if (f.is_no_solutions()) throw DomainError("local_factor: no-solutions marker has no finite product");
  FactoredElement out;
  for (long k = f.first(); k <= f.last(); ++k) {
    const Tropical v = f(k);
    if (!v.is_finite()) throw DomainError("local_factor: bound still has -inf entries");
    if (v.value() != 0) out.multiply(ring.apply(rep, k).monic(), v.value());
  }
  return out;
}

}  // namespace denbound

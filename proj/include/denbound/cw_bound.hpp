#pragma once

// Component-wise local bounds. The scalar exponent functions are replaced
// by matrix exponent functions E_j(k) = V_{tau^k(p)}(M_j) and the update
// becomes
//
//   F_new(k) = max_j E_j(k + j) (x) F(k + j)      (component-wise max)
//
// in the tropical semiring. Positive entries outside [l, m] are legal here:
// they encode forced divisibility of one solution entry. Because such runs
// can grow forever (a component that must vanish), iteration stops either
// at a fixed point or once the negative entries have been stable for more
// than `cutoff` consecutive sweeps.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "denbound/difference_ring.hpp"
#include "denbound/errors.hpp"
#include "denbound/factor.hpp"
#include "denbound/local_bound.hpp"
#include "denbound/matrix.hpp"
#include "denbound/tropical.hpp"

namespace denbound {

/// Entries of a matrix in factored form; nullopt marks a zero entry.
struct FactoredMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::optional<FactoredElement>> entries;

  static FactoredMatrix of(const RatFunMatrix& m) {
    FactoredMatrix f{m.rows(), m.cols(), {}};
    f.entries.reserve(m.rows() * m.cols());
    for (const auto& e : m.entries()) {
      if (e.is_zero())
        f.entries.emplace_back(std::nullopt);
      else
        f.entries.emplace_back(factor(e));
    }
    return f;
  }
};

/// k -> n x n tropical matrix, equal to at_infinity outside [lo, hi].
class MatrixExponentFunction {
 public:
  MatrixExponentFunction() = default;
  explicit MatrixExponentFunction(TropicalMatrix at_infinity) : at_infinity_(std::move(at_infinity)) {}
  MatrixExponentFunction(long first, std::vector<TropicalMatrix> values, TropicalMatrix at_infinity)
      : lo_(first), values_(std::move(values)), at_infinity_(std::move(at_infinity)) {}

  const TropicalMatrix& operator()(long k) const {
    if (values_.empty() || k < lo_ || k > hi()) return at_infinity_;
    return values_[static_cast<std::size_t>(k - lo_)];
  }
  const TropicalMatrix& at_infinity() const { return at_infinity_; }
  /// k where E(k) has an entry outside {0, +inf}.
  SupportWindow support() const { return values_.empty() ? SupportWindow{} : SupportWindow{lo_, hi()}; }

 private:
  long hi() const { return lo_ + static_cast<long>(values_.size()) - 1; }

  long lo_ = 0;
  std::vector<TropicalMatrix> values_;
  TropicalMatrix at_infinity_;
};

inline MatrixExponentFunction matrix_exponent_function(const FactoredMatrix& m, const Polynomial& rep,
                                                       const DifferenceRing& ring) {
  TropicalMatrix base(m.rows, m.cols);
  for (std::size_t i = 0; i < m.entries.size(); ++i)
    if (!m.entries[i]) base(i / m.cols, i % m.cols) = Tropical::infinity();
  std::map<long, TropicalMatrix> at;
  for (std::size_t idx = 0; idx < m.entries.size(); ++idx) {
    if (!m.entries[idx]) continue;
    for (const auto& f : m.entries[idx]->factors()) {
      if (f.prime.degree() != rep.degree()) continue;
      auto k = ring.tau_equivalent(rep, f.prime);
      if (!k) continue;
      auto it = at.try_emplace(*k, base).first;
      it->second(idx / m.cols, idx % m.cols) = Tropical(f.exponent);
    }
  }
  if (at.empty()) return MatrixExponentFunction(base);
  const long first = at.begin()->first, last = at.rbegin()->first;
  std::vector<TropicalMatrix> values;
  values.reserve(static_cast<std::size_t>(last - first + 1));
  for (long k = first; k <= last; ++k) {
    auto it = at.find(k);
    values.push_back(it == at.end() ? base : it->second);
  }
  return MatrixExponentFunction(first, std::move(values), std::move(base));
}

/// E(k) = V_{tau^k(rep)}(M_j) for every k.
inline MatrixExponentFunction matrix_exponent_function(const RatFunMatrix& mj, const PrimeClass& cls,
                                                       const DifferenceRing& ring) {
  if (ring.in_D(cls.rep)) throw DomainError("matrix_exponent_function: representative lies in D");
  return matrix_exponent_function(FactoredMatrix::of(mj), cls.rep, ring);
}

class MatrixExponentFamily {
 public:
  explicit MatrixExponentFamily(int J) : J_(J), e_(2 * static_cast<std::size_t>(J) + 1) {
    if (J < 1) throw DomainError("MatrixExponentFamily: J must be positive");
  }
  int J() const { return J_; }
  MatrixExponentFunction& operator[](int j) { return e_.at(static_cast<std::size_t>(j + J_)); }
  const MatrixExponentFunction& operator[](int j) const { return e_.at(static_cast<std::size_t>(j + J_)); }

 private:
  int J_;
  std::vector<MatrixExponentFunction> e_;
};

/// k -> vector of n entries in Z u {-inf, +inf}; the zero vector outside
/// the materialized range.
class ComponentLocalBound {
 public:
  ComponentLocalBound() = default;
  ComponentLocalBound(SupportWindow window, std::size_t n, long first, long last)
      : window_(window), n_(n), first_(first),
        values_(last >= first ? static_cast<std::size_t>(last - first + 1) : 0, std::vector<Tropical>(n)) {}

  static ComponentLocalBound initial(SupportWindow window, std::size_t n) {
    ComponentLocalBound f(window, n, window.lo, window.hi);
    for (auto& v : f.values_) std::fill(v.begin(), v.end(), Tropical::minus_infinity());
    return f;
  }

  SupportWindow window() const { return window_; }
  std::size_t size() const { return n_; }
  long first() const { return first_; }
  long last() const { return first_ + static_cast<long>(values_.size()) - 1; }

  std::vector<Tropical> operator()(long k) const {
    if (k < first_ || k > last()) return std::vector<Tropical>(n_);
    return values_[static_cast<std::size_t>(k - first_)];
  }
  Tropical at(long k, std::size_t i) const {
    if (k < first_ || k > last()) return Tropical(0);
    return values_[static_cast<std::size_t>(k - first_)][i];
  }

  /// Some entry of component i is +inf: that solution entry is 0.
  bool component_vanishes(std::size_t i) const {
    return std::any_of(values_.begin(), values_.end(), [&](const auto& v) { return v[i].is_infinity(); });
  }

  /// (k, i, value) for every negative entry, -inf included.
  std::vector<std::tuple<long, std::size_t, Tropical>> negative_entries() const {
    std::vector<std::tuple<long, std::size_t, Tropical>> out;
    for (long k = first_; k <= last(); ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (at(k, i) < Tropical(0)) out.emplace_back(k, i, at(k, i));
    return out;
  }

  bool operator==(const ComponentLocalBound& o) const {
    if (n_ != o.n_) return false;
    const long lo = std::min(first_, o.first_), hi = std::max(last(), o.last());
    for (long k = lo; k <= hi; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (at(k, i) != o.at(k, i)) return false;
    return true;
  }

 private:
  friend ComponentLocalBound improve(const ComponentLocalBound& f, const MatrixExponentFamily& e);

  void trim() {
    auto zero = [](const std::vector<Tropical>& v) {
      return std::all_of(v.begin(), v.end(), [](const Tropical& t) { return t == Tropical(0); });
    };
    while (!values_.empty() && zero(values_.back())) values_.pop_back();
    std::size_t lead = 0;
    while (lead < values_.size() && zero(values_[lead])) ++lead;
    values_.erase(values_.begin(), values_.begin() + static_cast<long>(lead));
    first_ += static_cast<long>(lead);
  }

  SupportWindow window_;
  std::size_t n_ = 0;
  long first_ = 0;
  std::vector<std::vector<Tropical>> values_;
};

/// One sweep of F_new(k) = max_j E_j(k + j) (x) F(k + j). Outside the
/// reach of F and of the supports of the E_j the result is the zero vector,
/// because E_j(inf) (x) 0 = 0 for an invertible M_j.
inline ComponentLocalBound improve(const ComponentLocalBound& f, const MatrixExponentFamily& e) {
  const int J = e.J();
  long lo = f.first() - J, hi = f.last() + J;
  for (int j = -J; j <= J; ++j) {
    const auto s = e[j].support();
    if (s.empty()) continue;
    lo = std::min(lo, s.lo - j);
    hi = std::max(hi, s.hi - j);
  }
  ComponentLocalBound g(f.window(), f.size(), lo, hi);
  for (long k = lo; k <= hi; ++k) {
    std::vector<Tropical> best = f(k);  // j = 0
    for (int j = -J; j <= J; ++j) {
      if (j == 0) continue;
      const auto term = tropical_apply(e[j](k + j), f(k + j));
      for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], term[i]);
    }
    g.values_[static_cast<std::size_t>(k - lo)] = std::move(best);
  }
  g.trim();
  return g;
}

struct CwOptions {
  /// Return once the negative entries have been unchanged for more than
  /// this many consecutive sweeps.
  int cutoff = 10;
  /// Optional degree bound for the solution entries. When a component's
  /// forced divisor (positive entries) exceeds n * (degree_bound + 1) in
  /// degree, iteration stops early.
  std::optional<long> degree_bound;
};

struct CwRun {
  ComponentLocalBound bound;
  std::size_t sweeps = 0;
  bool cut_off = false;
  bool degree_cut = false;
};

/// Component-wise local algorithm. `window` is [l, m] from the scalar
/// exponent functions e_1, e_{-1}; `prime_degree` is the degree of the class
/// representative (used only by the degree cut-off).
inline CwRun cw_local(const MatrixExponentFamily& e, SupportWindow window, std::size_t n, const CwOptions& options = {},
                      std::size_t prime_degree = 1) {
  if (options.cutoff < 1) throw DomainError("cw_local: cutoff must be at least 1");
  CwRun run;
  ComponentLocalBound f = ComponentLocalBound::initial(window, n);
  int counter = 0;
  for (;;) {
    ComponentLocalBound next = improve(f, e);
    ++run.sweeps;
    if (next == f) {
      run.bound = std::move(f);
      return run;
    }
    if (next.negative_entries() == f.negative_entries()) {
      if (++counter > options.cutoff) {
        run.bound = std::move(next);
        run.cut_off = true;
        return run;
      }
    } else {
      counter = 0;
    }
    if (options.degree_bound) {
      const long limit = static_cast<long>(n) * (*options.degree_bound + 1);
      for (std::size_t i = 0; i < n; ++i) {
        long forced = 0;
        for (long k = next.first(); k <= next.last(); ++k) {
          const Tropical v = next.at(k, i);
          if (v.is_finite() && v.value() > 0) forced += v.value() * static_cast<long>(prime_degree);
        }
        if (forced > limit) {
          run.bound = std::move(next);
          run.degree_cut = true;
          return run;
        }
      }
    }
    f = std::move(next);
  }
}

/// A bound entry: an element in factored form, or zero.
struct BoundEntry {
  bool zero = false;
  FactoredElement value;

  RationalFunction as_rational_function() const {
    return zero ? RationalFunction() : to_rational_function(value);
  }
  /// Degree of the denominator (0 for a zero entry).
  long den_degree() const {
    if (zero) return 0;
    long d = 0;
    for (const auto& f : value.factors())
      if (f.exponent < 0) d += -f.exponent * static_cast<long>(f.prime.deg());
    return d;
  }
  bool operator==(const BoundEntry&) const = default;
};

/// B_i = prod_k tau^k(rep)^{F_i(k)}, or 0 when component i must vanish.
inline std::vector<BoundEntry> assemble_component_bounds(const ComponentLocalBound& f, const Polynomial& rep,
                                                         const DifferenceRing& ring) {
  std::vector<BoundEntry> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.component_vanishes(i)) {
      out[i].zero = true;
      continue;
    }
    for (long k = f.first(); k <= f.last(); ++k) {
      const Tropical v = f.at(k, i);
      if (v.is_minus_infinity()) throw DomainError("assemble_component_bounds: bound still has -inf entries");
      if (v.value() != 0) out[i].value.multiply(ring.apply(rep, k).monic(), v.value());
    }
  }
  return out;
}

}  // namespace denbound

#pragma once

// The tropical semiring (Z u {+inf}, min, +), extended with -inf for the
// "no information yet" entries of local bounds, and valuation matrices
// V_p(A) with entries val_p(A_ij).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "denbound/errors.hpp"
#include "denbound/matrix.hpp"
#include "denbound/rational_function.hpp"

namespace denbound {

class Tropical {
 public:
  constexpr Tropical() = default;  // 0
  constexpr explicit Tropical(long v) : kind_(Kind::finite), value_(v) {}
  static constexpr Tropical infinity() { return Tropical(Kind::pos_inf); }
  static constexpr Tropical minus_infinity() { return Tropical(Kind::neg_inf); }
  static Tropical from(const Valuation& v) { return v.is_infinite() ? infinity() : Tropical(v.value()); }

  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_infinity() const { return kind_ == Kind::pos_inf; }
  constexpr bool is_minus_infinity() const { return kind_ == Kind::neg_inf; }
  long value() const {
    if (kind_ != Kind::finite) throw DomainError("tropical value is not finite");
    return value_;
  }

  constexpr bool operator==(const Tropical& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::finite || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const Tropical& o) const {
    if (kind_ != o.kind_) return static_cast<int>(kind_) <=> static_cast<int>(o.kind_);
    if (kind_ != Kind::finite) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }

  /// Tropical addition (min).
  friend constexpr Tropical oplus(const Tropical& a, const Tropical& b) { return a <= b ? a : b; }
  /// Tropical multiplication (+). +inf absorbs everything, -inf included:
  /// a zero matrix entry contributes nothing whatever it multiplies.
  friend constexpr Tropical otimes(const Tropical& a, const Tropical& b) {
    if (a.is_infinity() || b.is_infinity()) return infinity();
    if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
    return Tropical(a.value_ + b.value_);
  }

 private:
  enum class Kind : int { neg_inf = 0, finite = 1, pos_inf = 2 };
  constexpr explicit Tropical(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  long value_ = 0;
};

inline std::string to_string(const Tropical& t) {
  if (t.is_infinity()) return "inf";
  if (t.is_minus_infinity()) return "-inf";
  return std::to_string(t.value());
}

class TropicalMatrix {
 public:
  TropicalMatrix() = default;
  TropicalMatrix(std::size_t rows, std::size_t cols, Tropical fill = Tropical())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<Tropical> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionError("TropicalMatrix: entry count does not match shape");
  }

  /// 0 on the diagonal, +inf elsewhere.
  static TropicalMatrix identity(std::size_t n) {
    TropicalMatrix m(n, n, Tropical::infinity());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Tropical(0);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Tropical& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Tropical& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Tropical> entries() const { return data_; }

  Tropical min_entry() const {
    Tropical m = Tropical::infinity();
    for (const auto& e : data_) m = oplus(m, e);
    return m;
  }

  /// Every entry is 0 or +inf.
  bool is_trivial() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Tropical& t) { return t.is_infinity() || t == Tropical(0); });
  }

  bool operator==(const TropicalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Tropical> data_;
};

/// Min-plus product: (A (x) B)_ij = min_k A_ik + B_kj.
inline TropicalMatrix tropical_mul(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("tropical product: inner dimensions differ");
  TropicalMatrix r(a.rows(), b.cols(), Tropical::infinity());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Tropical acc = Tropical::infinity();
      for (std::size_t k = 0; k < a.cols(); ++k) acc = oplus(acc, otimes(a(i, k), b(k, j)));
      r(i, j) = acc;
    }
  return r;
}

/// Matrix times vector in the tropical semiring.
inline std::vector<Tropical> tropical_apply(const TropicalMatrix& a, std::span<const Tropical> v) {
  if (a.cols() != v.size()) throw DimensionError("tropical product: inner dimensions differ");
  std::vector<Tropical> r(a.rows(), Tropical::infinity());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) r[i] = oplus(r[i], otimes(a(i, k), v[k]));
  return r;
}

/// V_p(A): entrywise valuations at a monic irreducible p.
inline TropicalMatrix val_matrix(const RatFunMatrix& a, const Polynomial& p) {
  if (p.is_constant() || !p.is_monic() || !is_irreducible(p))
    throw DomainError("val_matrix: p must be a monic irreducible polynomial");
  TropicalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Tropical::from(detail::valuation_unchecked(a(i, j), p));
  return r;
}

}  // namespace denbound

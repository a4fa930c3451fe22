#pragma once

// Matrices over Q(x): products, fraction-free inversion, the matrix
// content, and the ladder M_j with tau^j(Y) = M_j Y.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "denbound/difference_ring.hpp"
#include "denbound/errors.hpp"
#include "denbound/polynomial.hpp"
#include "denbound/rational_function.hpp"

namespace denbound {

using RatFunVector = std::vector<RationalFunction>;

class RatFunMatrix {
 public:
  RatFunMatrix() = default;
  RatFunMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatFunMatrix(std::size_t rows, std::size_t cols, std::vector<RationalFunction> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionError("RatFunMatrix: entry count does not match shape");
  }

  static RatFunMatrix identity(std::size_t n) {
    RatFunMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunction::constant(1);
    return m;
  }
  static RatFunMatrix diagonal(std::span<const RationalFunction> d) {
    RatFunMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static RatFunMatrix column(std::span<const RationalFunction> v) {
    return RatFunMatrix(v.size(), 1, std::vector<RationalFunction>(v.begin(), v.end()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  RationalFunction& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RationalFunction& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const RationalFunction> entries() const { return data_; }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

  RatFunVector column_vector(std::size_t j) const {
    RatFunVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  friend RatFunMatrix operator*(const RatFunMatrix& a, const RatFunMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    RatFunMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        RationalFunction acc;
        for (std::size_t k = 0; k < a.cols_; ++k) {
          const auto& x = a(i, k);
          const auto& y = b(k, j);
          if (x.is_zero() || y.is_zero()) continue;
          acc += x * y;
        }
        r(i, j) = std::move(acc);
      }
    return r;
  }

  friend RatFunVector operator*(const RatFunMatrix& a, const RatFunVector& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: dimensions differ");
    RatFunVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
  }

  bool operator==(const RatFunMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalFunction> data_;
};

inline RatFunMatrix mat_mul(const RatFunMatrix& a, const RatFunMatrix& b) { return a * b; }

/// tau^k applied entrywise.
inline RatFunMatrix tau_pow(const RatFunMatrix& m, long k, const DifferenceRing& ring) {
  if (k == 0) return m;
  RatFunMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = ring.apply(m(i, j), k);
  return r;
}

inline RatFunVector tau_pow(const RatFunVector& v, long k, const DifferenceRing& ring) {
  RatFunVector r;
  r.reserve(v.size());
  for (const auto& e : v) r.push_back(ring.apply(e, k));
  return r;
}

/// Inverse by fraction-free Gauss-Jordan elimination: rows are first
/// cleared of denominators, so elimination runs over Q[x] with exact
/// divisions by the previous pivot, and rational functions only appear
/// in the final division by the diagonal.
inline RatFunMatrix inverse(const RatFunMatrix& a) {
  if (!a.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Polynomial> row_scale(n, Polynomial::constant(1));
  std::vector<std::vector<Polynomial>> w(n, std::vector<Polynomial>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) row_scale[i] = lcm(row_scale[i], a(i, j).den());
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) w[i][j] = a(i, j).num() * exact_quotient(row_scale[i], a(i, j).den());
    w[i][n + i] = Polynomial::constant(1);
  }
  Polynomial prev = Polynomial::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (w[r][k].is_zero()) continue;
      if (piv == n || w[r][k].degree() < w[piv][k].degree()) piv = r;
    }
    if (piv == n) throw SingularMatrixError("inverse: matrix is singular");
    std::swap(w[k], w[piv]);
    const Polynomial pivot = w[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Polynomial factor = w[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        Polynomial v = pivot * w[i][j];
        if (!factor.is_zero() && !w[k][j].is_zero()) v -= factor * w[k][j];
        w[i][j] = prev.is_one() ? std::move(v) : exact_quotient(v, prev);
      }
      w[i][k] = Polynomial();
    }
    prev = pivot;
  }
  RatFunMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = RationalFunction(w[i][n + j] * row_scale[j], w[i][i]);
  return inv;
}

inline RatFunMatrix mat_inverse(const RatFunMatrix& a) { return inverse(a); }

/// cont(A) = g/d: d the lcm of the entry denominators, g the gcd of the
/// entries of d*A. Normalized with monic numerator; 0 for the zero matrix.
inline RationalFunction content(std::span<const RationalFunction> entries) {
  Polynomial d = Polynomial::constant(1);
  bool any = false;
  for (const auto& e : entries)
    if (!e.is_zero()) {
      d = lcm(d, e.den());
      any = true;
    }
  if (!any) return {};
  Polynomial g;
  for (const auto& e : entries) {
    if (e.is_zero()) continue;
    g = gcd(g, e.num() * exact_quotient(d, e.den()));
    if (g.is_one()) break;
  }
  return RationalFunction(g, d);
}

inline RationalFunction content(const RatFunMatrix& a) { return content(a.entries()); }

/// M_j for -J <= j <= J, with M_0 = I, M_{j+1} = tau^j(M) M_j and
/// M_j = tau^j(M^-1) M_{j+1} for j < 0. Contents are computed on first use.
class Ladder {
 public:
  Ladder(const RatFunMatrix& m, int J, const DifferenceRing& ring) : J_(J) {
    if (!m.is_square()) throw DimensionError("ladder: matrix is not square");
    if (J < 1) throw DomainError("ladder: J must be positive");
    const std::size_t n = m.rows();
    const RatFunMatrix m_inv = inverse(m);
    mats_.resize(2 * static_cast<std::size_t>(J) + 1);
    contents_.resize(mats_.size());
    slot(0) = RatFunMatrix::identity(n);
    for (int j = 0; j < J; ++j) slot(j + 1) = tau_pow(m, j, ring) * slot(j);
    for (int j = -1; j >= -J; --j) slot(j) = tau_pow(m_inv, j, ring) * slot(j + 1);
  }

  int J() const { return J_; }
  const RatFunMatrix& at(int j) const { return mats_.at(index(j)); }
  const RationalFunction& content_at(int j) const {
    auto& c = contents_.at(index(j));
    if (!c) c = content(at(j));
    return *c;
  }

 private:
  std::size_t index(int j) const {
    if (j < -J_ || j > J_) throw DomainError("ladder index out of range");
    return static_cast<std::size_t>(j + J_);
  }
  RatFunMatrix& slot(int j) { return mats_[index(j)]; }

  int J_;
  std::vector<RatFunMatrix> mats_;
  mutable std::vector<std::optional<RationalFunction>> contents_;
};

inline Ladder m_ladder(const RatFunMatrix& m, int J, const DifferenceRing& ring) { return Ladder(m, J, ring); }

}  // namespace denbound

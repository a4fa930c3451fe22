#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace denbound;
using namespace testing_support;

namespace {

// Entrywise product with a single final reduction, independent of the
// operator* accumulation.
RatFunMatrix naive_mul(const RatFunMatrix& a, const RatFunMatrix& b) {
  RatFunMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial num, den = Polynomial::constant(1);
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Polynomial tn = a(i, k).num() * b(k, j).num();
        const Polynomial td = a(i, k).den() * b(k, j).den();
        num = num * td + tn * den;
        den = den * td;
      }
      r(i, j) = RationalFunction(num, den);
    }
  return r;
}

}  // namespace

TEST(Matrix, ProductExamples) {
  const RatFunMatrix m = ex_sharp_matrix();
  EXPECT_EQ(m * RatFunMatrix::identity(2), m);
  EXPECT_EQ(m * inverse(m), RatFunMatrix::identity(2));
  const auto ring = DifferenceRing::shift();
  const Ladder ladder(m, 2, ring);
  EXPECT_EQ(ladder.at(2), naive_mul(tau_pow(m, 1, ring), m));
}

TEST(Matrix, InverseExamples) {
  EXPECT_EQ(inverse(RatFunMatrix::identity(3)), RatFunMatrix::identity(3));
  EXPECT_EQ(inverse(matrix(1, {"x+1"})), matrix(1, {"1/(x+1)"}));
  EXPECT_EQ(tau_pow(inverse(ex_sharp_matrix()), -1, DifferenceRing::shift()), ex_sharp_m_minus1());
  EXPECT_THROW(inverse(matrix(2, {"x", "1", "x^2", "x"})), SingularMatrixError);
  EXPECT_THROW(inverse(RatFunMatrix(2, 3)), DimensionError);
  const RatFunMatrix e = eigenring_matrix();
  EXPECT_EQ(e * inverse(e), RatFunMatrix::identity(4));
}

TEST(Matrix, InverseNeedsPivoting) {
  const RatFunMatrix a = matrix(3, {"0", "x", "1", "1/x", "0", "x+1", "1", "1", "0"});
  EXPECT_EQ(a * inverse(a), RatFunMatrix::identity(3));
}

TEST(Matrix, Ladder) {
  const auto ring = DifferenceRing::shift();
  const RatFunMatrix m = ex_sharp_matrix();
  const Ladder l1(m, 1, ring);
  EXPECT_EQ(l1.at(0), RatFunMatrix::identity(2));
  EXPECT_EQ(l1.at(1), m);
  EXPECT_EQ(l1.at(-1), ex_sharp_m_minus1());
  const Ladder l2(m, 2, ring);
  const RatFunMatrix mi = inverse(m);
  EXPECT_EQ(l2.at(2), tau_pow(m, 1, ring) * m);
  EXPECT_EQ(l2.at(-2), tau_pow(mi, -2, ring) * tau_pow(mi, -1, ring));
  EXPECT_THROW(l2.at(3), DomainError);
}

TEST(Matrix, ContentExamples) {
  const auto ring = DifferenceRing::shift();
  const Ladder l(ex_sharp_matrix(), 1, ring);
  EXPECT_TRUE(associated(l.content_at(1), R("(x+2)^2/(x*(x+1)^2*(x+3))")));
  EXPECT_TRUE(associated(l.content_at(-1), R("(x+2)/((x-1)*(x+1)^2)")));
  EXPECT_TRUE(l.content_at(0).is_one());
  EXPECT_TRUE(content(RatFunMatrix(2, 2)).is_zero());
}

// cont(A) is characterized by val_p(cont(A)) = min_ij val_p(A_ij) for all p.
TEST(Matrix, ContentMatchesMinimumValuation) {
  const RatFunMatrix m = eigenring_matrix();
  const RationalFunction c = content(m);
  const std::vector<Polynomial> primes{P("x"),   P("x+1"), P("x-1"),        P("x+2"),        P("x+3"),
                                       P("x+4"), P("x+5"), P("x^2+3*x+1"), P("x^2+5*x+5"), P("x^2+7*x+11")};
  for (const auto& p : primes) {
    long best = 1L << 40;
    for (const auto& e : m.entries())
      if (!e.is_zero()) best = std::min(best, naive_valuation(e, p));
    EXPECT_EQ(naive_valuation(c, p), best) << to_string(p);
  }
}

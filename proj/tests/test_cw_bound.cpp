#include <gtest/gtest.h>

#include "support.hpp"

using namespace denbound;
using namespace testing_support;

namespace {

MatrixExponentFamily family_for(const RatFunMatrix& m, const Polynomial& p, int J) {
  const auto ring = DifferenceRing::shift();
  const Ladder ladder(m, J, ring);
  MatrixExponentFamily e(J);
  for (int j = -J; j <= J; ++j) e[j] = matrix_exponent_function(FactoredMatrix::of(ladder.at(j)), p, ring);
  return e;
}

SupportWindow window_for(const RatFunMatrix& m, const Polynomial& p) {
  const auto ring = DifferenceRing::shift();
  const Ladder ladder(m, 1, ring);
  return initial_window(exponent_function(factor(ladder.content_at(1)), p, ring),
                        exponent_function(factor(ladder.content_at(-1)), p, ring));
}

}  // namespace

TEST(MatrixExponent, PrintedValuationMatrix) {
  const RatFunMatrix m = matrix(3, {"-1+x^3", "-x^2+x^3", "x", "0", "x", "1", "x+x^2", "x", "0"});
  const MatrixExponentFunction e = matrix_exponent_function(FactoredMatrix::of(m), P("x"), DifferenceRing::shift());
  EXPECT_EQ(e(0), val_matrix(m, P("x")));
  // Away from the orbit support every entry is 0 or +inf.
  EXPECT_TRUE(e(100).is_trivial());
  EXPECT_EQ(e(-3), val_matrix(m, P("x-3")));
}

TEST(MatrixExponent, IdentityHasEmptySupport) {
  const MatrixExponentFunction e =
      matrix_exponent_function(FactoredMatrix::of(RatFunMatrix::identity(3)), P("x"), DifferenceRing::shift());
  EXPECT_TRUE(e.support().empty());
  EXPECT_EQ(e(0), TropicalMatrix::identity(3));
}

// The smallest entry of E_j(k) is e_j(k), the valuation of the content.
TEST(MatrixExponent, MinimumEntryIsContentExponent) {
  const auto ring = DifferenceRing::shift();
  const RatFunMatrix m = ex_sharp_matrix();
  const Ladder ladder(m, 2, ring);
  for (int j = -2; j <= 2; ++j) {
    const auto E = matrix_exponent_function(FactoredMatrix::of(ladder.at(j)), P("x"), ring);
    const auto e = exponent_function(factor(ladder.content_at(j)), P("x"), ring);
    for (long k = -8; k <= 8; ++k) EXPECT_EQ(E(k).min_entry(), Tropical(e(k))) << "j " << j << " k " << k;
  }
}

TEST(CwLocal, SharpExampleContainsSolutions) {
  const RatFunMatrix m = ex_sharp_matrix();
  const CwRun run = cw_local(family_for(m, P("x"), 1), window_for(m, P("x")), 2);
  EXPECT_FALSE(run.cut_off);
  const auto b = assemble_component_bounds(run.bound, P("x"), DifferenceRing::shift());
  const RecurrenceSystem sys{m, DifferenceRing::shift()};
  ContentBound cb{BoundKind::componentwise, b};
  std::vector<RatFunVector> sols;
  for (long c1 = -2; c1 <= 2; ++c1)
    for (long c2 = -2; c2 <= 2; ++c2)
      if (c1 || c2) sols.push_back(ex_sharp_solution(c1, c2));
  EXPECT_TRUE(verify_bound(sys, cb, sols).passed());
  EXPECT_TRUE(associated(b[0].as_rational_function(), R("(x+1)/(x*(x+2))")));
  EXPECT_TRUE(associated(b[1].as_rational_function(), R("(x+1)/(x+2)")));
}

TEST(CwLocal, DiagonalSystemHitsCutoff) {
  const RatFunMatrix m = matrix(2, {"x", "0", "0", "1"});
  for (int J : {1, 2, 3}) {
    const CwRun run = cw_local(family_for(m, P("x"), J), window_for(m, P("x")), 2);
    EXPECT_TRUE(run.cut_off);
    long ones = 0;
    for (long k = run.bound.first(); k <= run.bound.last(); ++k) {
      EXPECT_EQ(run.bound.at(k, 1), Tropical(0));
      const Tropical v = run.bound.at(k, 0);
      EXPECT_TRUE(v == Tropical(0) || v == Tropical(1));
      if (v == Tropical(1)) {
        EXPECT_LT(k, 0);
        ++ones;
      }
    }
    // Consecutive run of ones at -1, -2, ..., -n.
    for (long k = -1; k >= -ones; --k) EXPECT_EQ(run.bound.at(k, 0), Tropical(1));
    EXPECT_GE(ones, 10L * J);
  }
}

TEST(CwLocal, DegreeHookStopsEarly) {
  const RatFunMatrix m = matrix(2, {"x", "0", "0", "1"});
  CwOptions o;
  o.degree_bound = 1;
  const CwRun run = cw_local(family_for(m, P("x"), 1), window_for(m, P("x")), 2, o);
  EXPECT_TRUE(run.degree_cut);
  EXPECT_FALSE(run.cut_off);
  EXPECT_LT(run.sweeps, 10u);
}

TEST(CwLocal, EmptyDataGivesZero) {
  MatrixExponentFamily e(1);
  for (int j = -1; j <= 1; ++j) e[j] = MatrixExponentFunction(TropicalMatrix::identity(2));
  const CwRun run = cw_local(e, SupportWindow{}, 2);
  EXPECT_FALSE(run.cut_off);
  const auto b = assemble_component_bounds(run.bound, P("x"), DifferenceRing::shift());
  for (const auto& entry : b) EXPECT_TRUE(to_rational_function(entry.value).is_one());
}

TEST(CwAssemble, InfinityComponentIsZero) {
  const RatFunMatrix m = matrix(2, {"x+1", "0", "0", "(x+1)/x"});
  const CwRun run = cw_local(family_for(m, P("x"), 1), window_for(m, P("x")), 2);
  const auto b = assemble_component_bounds(run.bound, P("x"), DifferenceRing::shift());
  // y2 = c*x solves the second equation; the first has no nonzero solution.
  EXPECT_FALSE(b[1].zero);
  EXPECT_TRUE(verify_bound({m, DifferenceRing::shift()}, ContentBound{BoundKind::componentwise, b},
                           {{R("0"), R("x")}})
                  .passed());
}

TEST(CwAssemble, EigenringJ2) {
  const RecurrenceSystem sys = load_system("eigenring.sys");
  const ContentBound b = cw_bound(sys, 2);
  const std::vector<std::string> want{"(x+1)/((x-1)*(x^2+3*x+1))", "(x+2)/(x^2*(x+3)*(x^2+5*x+5))",
                                      "1/((x-1)*(x^2+3*x+1))", "(x+2)/(x*(x^2+5*x+5))"};
  ASSERT_EQ(b.entries.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(associated(b.entries[i].as_rational_function(), R(want[i]))) << i;
}

#include <gtest/gtest.h>

#include "support.hpp"

using namespace denbound;
using namespace testing_support;

namespace {

const char* const kP = "(x^2+3*x+1)";
const char* const kQ = "(x^2+5*x+5)";

std::string with_pq(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == 'p')
      out += kP;
    else if (c == 'q')
      out += kQ;
    else
      out += c;
  }
  return out;
}

ContentBound scalar_bound(const std::string& b) {
  ContentBound cb;
  cb.entries.push_back({false, factor(R(b))});
  return cb;
}

}  // namespace

TEST(GlobalBound, SharpExample) {
  const RecurrenceSystem sys{ex_sharp_matrix(), DifferenceRing::shift()};
  const ContentBound b = global_bound(sys, 1);
  EXPECT_EQ(b.caveat, Caveat::exact);
  EXPECT_TRUE(associated(b.scalar().as_rational_function(), R("(x+1)/(x*(x+2))")));
}

TEST(GlobalBound, EigenringFourDisplays) {
  const RecurrenceSystem sys = load_system("eigenring.sys");
  const std::vector<std::string> want{"1/((x-1)*x^4*(x+1)^3*(x+2)*(x+3)*p*q)", "1/((x-1)*x^2*(x+1)*(x+2)*(x+3)*p*q)",
                                      "1/((x-1)*x^2*(x+2)*(x+3)*p*q)", "1/((x-1)*x^2*(x+3)*p*q)"};
  for (int J = 1; J <= 4; ++J)
    EXPECT_TRUE(associated(global_bound(sys, J).scalar().as_rational_function(), R(with_pq(want[J - 1])))) << J;
}

TEST(GlobalBound, IdentityAndNoSolution) {
  const RecurrenceSystem id{RatFunMatrix::identity(3), DifferenceRing::shift()};
  for (int J = 1; J <= 3; ++J) EXPECT_TRUE(global_bound(id, J).scalar().as_rational_function().is_one());
  const RecurrenceSystem ns{matrix(1, {"x+1"}), DifferenceRing::shift()};
  EXPECT_TRUE(global_bound(ns, 1).is_zero());
  EXPECT_THROW(global_bound({matrix(2, {"x", "1", "x^2", "x"}), DifferenceRing::shift()}, 1), SingularMatrixError);
  EXPECT_THROW(global_bound(id, 0), DomainError);
}

TEST(CwBound, EigenringJ1AndIdentity) {
  const RecurrenceSystem sys = load_system("eigenring.sys");
  const ContentBound b = cw_bound(sys, 1);
  const std::vector<std::string> want{"1/((x-1)*x^2*(x+2)*p)", "1/(x^3*(x+1)*(x+3)*q)", "1/((x-1)*x*(x+1)*(x+2)*p)",
                                      "1/(x*(x+1)^2*(x+3)*q)"};
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_TRUE(associated(b.entries[i].as_rational_function(), R(with_pq(want[i])))) << i;
  const ContentBound one = cw_bound({RatFunMatrix::identity(3), DifferenceRing::shift()}, 2);
  ASSERT_EQ(one.entries.size(), 3u);
  for (const auto& e : one.entries) EXPECT_TRUE(e.as_rational_function().is_one());
}

TEST(Transform, SharpSolutionsBecomePolynomial) {
  const RecurrenceSystem sys{ex_sharp_matrix(), DifferenceRing::shift()};
  const ContentBound b = global_bound(sys, 1);
  const RecurrenceSystem t = transform_system(sys, b);
  const RationalFunction B = b.scalar().as_rational_function();
  for (long c1 = -2; c1 <= 2; ++c1)
    for (long c2 = -2; c2 <= 2; ++c2) {
      const RatFunVector y = ex_sharp_solution(c1, c2);
      RatFunVector z;
      for (const auto& yi : y) z.push_back(yi / B);
      for (const auto& zi : z) EXPECT_TRUE(zi.is_polynomial());
      EXPECT_TRUE(is_solution(t, z));
      // Back-substitution Z -> B Z gives Y again.
      for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(z[i] * B, y[i]);
    }
}

TEST(Transform, TrivialAndZeroBounds) {
  const RecurrenceSystem sys{ex_sharp_matrix(), DifferenceRing::shift()};
  EXPECT_EQ(transform_system(sys, scalar_bound("1")).M, sys.M);
  ContentBound zero;
  zero.entries.push_back({true, {}});
  EXPECT_THROW(transform_system(sys, zero), DomainError);
}

TEST(Transform, EigenringCwSolutionsBecomePolynomial) {
  const RecurrenceSystem sys = load_system("eigenring.sys");
  const auto sols = load_solutions("eigenring.sol");
  ASSERT_EQ(sols.size(), 2u);
  const ContentBound b = cw_bound(sys, 2);
  const RecurrenceSystem t = transform_system(sys, b);
  for (const auto& y : sols) {
    ASSERT_TRUE(is_solution(sys, y));
    RatFunVector z;
    for (std::size_t i = 0; i < 4; ++i) z.push_back(y[i] / b.entries[i].as_rational_function());
    for (const auto& zi : z) EXPECT_TRUE(zi.is_polynomial()) << to_string(zi);
    EXPECT_TRUE(is_solution(t, z));
  }
}

TEST(Verify, SharpSolutions) {
  const RecurrenceSystem sys{ex_sharp_matrix(), DifferenceRing::shift()};
  const std::vector<RatFunVector> sols{ex_sharp_solution(1, 0), ex_sharp_solution(0, 1), ex_sharp_solution(3, -2)};
  EXPECT_TRUE(verify_bound(sys, scalar_bound("(x+1)/(x*(x+2))"), sols).passed());
  ContentBound c{BoundKind::componentwise, {{false, factor(R("(x+1)/(x*(x+2))"))}, {false, factor(R("(x+1)/(x+2)"))}}};
  EXPECT_TRUE(verify_bound(sys, c, sols).passed());
  // B / x is a weaker claim and still holds; x * B does not.
  EXPECT_TRUE(verify_bound(sys, scalar_bound("(x+1)/(x^2*(x+2))"), sols).passed());
  const VerifyReport bad = verify_bound(sys, scalar_bound("(x+1)/(x+2)"), sols);
  ASSERT_FALSE(bad.passed());
  for (const auto& v : bad.violations) EXPECT_EQ(v.witness, P("x"));
}

TEST(Verify, ReportsNonSolutions) {
  const RecurrenceSystem sys{ex_sharp_matrix(), DifferenceRing::shift()};
  const VerifyReport r = verify_bound(sys, scalar_bound("1"), {{R("1"), R("1")}});
  ASSERT_EQ(r.non_solutions.size(), 1u);
  EXPECT_FALSE(r.passed());
}

TEST(Generator, SimpleCases) {
  const auto ring = DifferenceRing::shift();
  const RatFunMatrix w = matrix(1, {"x"});
  const RatFunMatrix m = tau_pow(w, 1, ring) * inverse(w);
  EXPECT_EQ(m, matrix(1, {"(x+1)/x"}));
  EXPECT_TRUE(is_solution({m, ring}, {R("x")}));
  const GeneratedSystem id = random_system_with_solutions(1, 0);
  EXPECT_EQ(id.solutions.size(), 1u);
  for (const auto& y : id.solutions) EXPECT_TRUE(is_solution(id.system, y));
}

TEST(Generator, ClosedLoopTwoByTwo) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GeneratedSystem g = random_system_with_solutions(2, seed, 1);
    for (const auto& y : g.solutions) ASSERT_TRUE(is_solution(g.system, y));
    for (int J = 1; J <= 3; ++J) {
      EXPECT_TRUE(verify_bound(g.system, global_bound(g.system, J), g.solutions).passed()) << seed << " " << J;
      EXPECT_TRUE(verify_bound(g.system, cw_bound(g.system, J), g.solutions).passed()) << seed << " " << J;
    }
  }
}

TEST(Generator, QShiftClosedLoop) {
  const auto ring = DifferenceRing::qshift(2);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const GeneratedSystem g = random_system_with_solutions(2, seed, 1, ring);
    for (const auto& y : g.solutions) ASSERT_TRUE(is_solution(g.system, y));
    for (int J = 1; J <= 2; ++J) {
      const ContentBound b = global_bound(g.system, J);
      EXPECT_EQ(b.caveat, Caveat::up_to_D_factor);
      EXPECT_TRUE(verify_bound(g.system, b, g.solutions).passed()) << seed << " " << J;
      EXPECT_TRUE(verify_bound(g.system, cw_bound(g.system, J), g.solutions).passed()) << seed << " " << J;
    }
  }
}

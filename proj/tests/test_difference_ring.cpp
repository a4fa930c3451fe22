#include <gtest/gtest.h>

#include "support.hpp"

using namespace denbound;
using namespace testing_support;

TEST(DifferenceRing, ShiftApply) {
  const auto ring = DifferenceRing::shift();
  EXPECT_EQ(ring.apply(P("x^2"), -1), P("(x-1)^2"));
  EXPECT_EQ(ring.apply(P("x^2+3*x+1"), 1), P("x^2+5*x+5"));
  EXPECT_EQ(ring.apply(R("1/x"), 2), R("1/(x+2)"));
  EXPECT_EQ(ring.apply(ring.apply(P("x^3-x"), 4), -4), P("x^3-x"));
}

TEST(DifferenceRing, QShiftApply) {
  const auto ring = DifferenceRing::qshift(2);
  EXPECT_EQ(ring.apply(P("x+1"), 1), P("2*x+1"));
  EXPECT_EQ(ring.apply(P("x+1"), -1), P("x/2+1"));
  EXPECT_THROW(DifferenceRing::qshift(1), DomainError);
  EXPECT_THROW(DifferenceRing::qshift(-1), DomainError);
  EXPECT_THROW(DifferenceRing::qshift(0), DomainError);
}

TEST(DifferenceRing, ApplyToPrintedMatrix) {
  const auto ring = DifferenceRing::shift();
  EXPECT_EQ(tau_pow(inverse(ex_sharp_matrix()), -1, ring), ex_sharp_m_minus1());
}

TEST(DifferenceRing, MembershipInD) {
  const auto shift = DifferenceRing::shift();
  EXPECT_TRUE(shift.in_D(P("5")));
  EXPECT_FALSE(shift.in_D(P("x")));
  const auto q = DifferenceRing::qshift(3);
  EXPECT_TRUE(q.in_D(P("3*x^2")));
  EXPECT_FALSE(q.in_D(P("x+1")));
}

TEST(DifferenceRing, TauEquivalence) {
  const auto ring = DifferenceRing::shift();
  EXPECT_EQ(ring.tau_equivalent(P("x"), P("x+5")), 5);
  EXPECT_EQ(ring.tau_equivalent(P("x+5"), P("x")), -5);
  EXPECT_EQ(ring.tau_equivalent(P("x^2+3*x+1"), P("x^2+5*x+5")), 1);
  EXPECT_FALSE(ring.tau_equivalent(P("x"), P("x^2+1")));
  EXPECT_FALSE(ring.tau_equivalent(P("x^2+1"), P("x^2+2")));
  EXPECT_FALSE(ring.tau_equivalent(P("x"), P("x+1/2")));

  const auto q = DifferenceRing::qshift(2);
  EXPECT_EQ(q.tau_equivalent(P("x+1"), P("x+1/8")), 3);
  EXPECT_EQ(q.tau_equivalent(P("x^2+1"), P("x^2+1/16")), 2);
  EXPECT_FALSE(q.tau_equivalent(P("x^2+1"), P("x^2+1/2")));
  EXPECT_FALSE(q.tau_equivalent(P("x+1"), P("x+3")));
}

TEST(DifferenceRing, PartitionClasses) {
  const auto ring = DifferenceRing::shift();
  const std::vector<Polynomial> ps{P("x"), P("x+1"), P("x+2"), P("x^2+3*x+1")};
  const auto classes = partition_classes(ps, ring);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].rep, P("x"));
  ASSERT_EQ(classes[0].members.size(), 3u);
  for (long k = 0; k < 3; ++k) EXPECT_EQ(classes[0].members[static_cast<std::size_t>(k)].offset, k);
  EXPECT_EQ(classes[1].rep, P("x^2+3*x+1"));

  const std::vector<Polynomial> two{P("x"), P("x^2+1")};
  EXPECT_EQ(partition_classes(two, ring).size(), 2u);
}

// Denominator primes of c_1 and c_{-1} for the sharp example. Offsets are
// reported relative to the smallest member x-1, so x sits at 1.
TEST(DifferenceRing, PartitionSharpExamplePrimes) {
  const auto ring = DifferenceRing::shift();
  const std::vector<Polynomial> ps{P("x"), P("x+1"), P("x+3"), P("x-1")};
  const auto classes = partition_classes(ps, ring);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].rep, P("x-1"));
  std::vector<long> offs;
  for (const auto& m : classes[0].members) offs.push_back(m.offset);
  EXPECT_EQ(offs, (std::vector<long>{0, 1, 2, 4}));
  // Pairwise oracle: every member is tau^offset of the representative.
  for (const auto& m : classes[0].members) EXPECT_EQ(ring.apply(classes[0].rep, m.offset), m.prime);
}

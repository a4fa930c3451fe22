#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_ok(const properties::Outcome& o, std::size_t want_cases) {
  EXPECT_EQ(o.cases, want_cases);
  for (const auto& f : o.failures) ADD_FAILURE() << f;
}

}  // namespace

TEST(Property, ValuationLaws) { expect_ok(properties::valuation_laws(300, 101), 300); }
TEST(Property, ValuationMatrixProduct) { expect_ok(properties::valuation_matrix_product(300, 202), 300); }
TEST(Property, LadderInverse) { expect_ok(properties::ladder_inverse(200, 303), 200); }
TEST(Property, ContentCharacterizations) { expect_ok(properties::content_characterizations(250, 404), 250); }
TEST(Property, GlobalBoundMonotoneInJ) { expect_ok(properties::j_monotonicity(200, 5000), 200); }
TEST(Property, GeneratedSystemsVerify) { expect_ok(properties::generated_verification(100, 9000), 100); }
TEST(Property, TropicalAssociativity) { expect_ok(properties::tropical_associativity(500, 606), 500); }
TEST(Property, GcdLaws) { expect_ok(properties::gcd_laws(300, 707), 300); }
TEST(Property, TauAutomorphism) { expect_ok(properties::tau_automorphism(300, 808), 300); }
TEST(Property, TauEquivalence) { expect_ok(properties::tau_equivalence(150, 909), 150); }
TEST(Property, LocalBoundLaws) { expect_ok(properties::local_bound_laws(120, 1234), 120); }

#include "properties.hpp"

#include <gtest/gtest.h>

using namespace wres::testing;

TEST(Properties, CliffordAnticommutationExhaustive) {
    auto o = clifford_anticommutation_exhaustive();
    EXPECT_EQ(o.trials, 196u);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, TraceCyclicity) {
    auto o = clifford_trace_cyclicity(10000, 11);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, PiPlusIdempotence) {
    auto o = pi_plus_idempotence(1000, 12);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, PiPlusLinearity) {
    auto o = pi_plus_linearity(1000, 13);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, PiPlusCommutesWithDerivative) {
    auto o = pi_plus_derivative_commutation(1000, 14);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, PlusPlusAndMinusMinusVanish) {
    auto o = plus_minus_vanishing(1000, 15);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, SphereMomentNormalization) {
    auto o = sphere_normalization(6);
    EXPECT_EQ(o.trials, 924u);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

TEST(Properties, RiemannCanonicalizationIdempotent) {
    auto o = riemann_canonicalization_idempotence(10000, 16);
    EXPECT_TRUE(o.ok()) << o.first_failure;
}

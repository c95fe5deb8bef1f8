#include "wres/ratfunc.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace wres;

namespace {

const GaussianRational kI = GaussianRational::i();

PoleLimitedRational random_rf(std::mt19937_64& rng, bool integrable) {
    unsigned p = 1 + rng() % 4, q = 1 + rng() % 4;
    int max_deg = static_cast<int>(p + q) - (integrable ? 2 : 1);
    std::vector<GaussianRational> c;
    for (int k = 0; k <= max_deg; ++k)
        c.emplace_back(make_rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4),
                       make_rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3));
    return PoleLimitedRational(Polynomial(c), p, q);
}

// Trapezoid on ξ = tan θ; smooth periodic integrand, so the rule converges fast.
std::complex<double> quad_tan(const PoleLimitedRational& f) {
    const int n = 4000;
    // Endpoint limit of f·(1+ξ²): the leading coefficient when deg = p+q-2, else 0.
    std::complex<double> s = 0;
    if (f.numerator().degree() == static_cast<int>(f.pow_minus_i() + f.pow_plus_i()) - 2)
        s = f.numerator().lead().to_complex();
    for (int k = 1; k < n; ++k) {
        double th = -M_PI / 2 + M_PI * k / n;
        double x = std::tan(th);
        s += f.eval(x) * (1 + x * x);
    }
    return s * (M_PI / n);
}

}  // namespace

TEST(Ratfunc, KnownIntegrals) {
    EXPECT_EQ(integrate_real_line(PoleLimitedRational::one_plus_xi_sq_pow(-1)), GaussianRational(1));
    EXPECT_EQ(integrate_real_line(PoleLimitedRational::one_plus_xi_sq_pow(-2)), GaussianRational(make_rational(1, 2)));
    EXPECT_EQ(integrate_real_line(PoleLimitedRational::one_plus_xi_sq_pow(-3)), GaussianRational(make_rational(3, 8)));
    EXPECT_THROW(integrate_real_line(PoleLimitedRational(Polynomial::xi(), 1, 1)), non_integrable_error);
}

TEST(Ratfunc, PiPlusKeepsUpperPoles) {
    // 1/(1+ξ²) = (i/2)/(ξ+i) - (i/2)/(ξ-i)
    auto f = PoleLimitedRational::one_plus_xi_sq_pow(-1);
    EXPECT_EQ(pi_plus(f), PoleLimitedRational(Polynomial(-kI * GaussianRational(make_rational(1, 2))), 1, 0));
    EXPECT_THROW(pi_plus(PoleLimitedRational(Polynomial::xi() * Polynomial::xi(), 1, 1)), projection_domain_error);
    EXPECT_TRUE(pi_plus(PoleLimitedRational(Polynomial(GaussianRational(1)), 0, 3)).is_zero());
}

TEST(Ratfunc, ReductionCancelsCommonRoots) {
    // (ξ-i)/(1+ξ²) = 1/(ξ+i)
    PoleLimitedRational f(Polynomial::linear_power(kI, 1), 1, 1);
    EXPECT_EQ(f.pow_minus_i(), 0u);
    EXPECT_EQ(f.pow_plus_i(), 1u);
}

TEST(Ratfunc, DerivativeMatchesFiniteDifference) {
    std::mt19937_64 rng(17);
    for (int n = 0; n < 50; ++n) {
        auto f = random_rf(rng, false);
        auto d = rf_derivative(f);
        double x = 0.3 + 0.1 * n, h = 1e-5;
        auto fd = (f.eval(x + h) - f.eval(x - h)) / (2 * h);
        EXPECT_NEAR(std::abs(fd - d.eval(x)), 0.0, 1e-5 * (1 + std::abs(fd)));
    }
}

TEST(Ratfunc, PartialFractionsReassemble) {
    std::mt19937_64 rng(23);
    for (int n = 0; n < 100; ++n) {
        auto f = random_rf(rng, false);
        auto pf = partial_fractions(f);
        EXPECT_EQ(pf.at_plus_i + pf.at_minus_i + PoleLimitedRational(pf.polynomial), f);
        EXPECT_EQ(pi_plus(f), pf.at_plus_i);
    }
}

TEST(Ratfunc, ResidueIntegralMatchesQuadrature) {
    std::mt19937_64 rng(29);
    for (int n = 0; n < 60; ++n) {
        auto f = random_rf(rng, true);
        auto exact = integrate_real_line(f).to_complex() * M_PI;
        EXPECT_NEAR(std::abs(exact - quad_tan(f)), 0.0, 1e-8 * (1 + std::abs(exact)));
    }
}

TEST(Ratfunc, FieldPropertiesAndInverse) {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 100; ++n) {
        auto a = random_rf(rng, false), b = random_rf(rng, false), c = random_rf(rng, false);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(rf_arith(a, b, RfOp::sub), a - b);
        EXPECT_EQ(rf_derivative(a * b), rf_derivative(a) * b + a * rf_derivative(b));
    }
    auto g = PoleLimitedRational(Polynomial(GaussianRational(3)), 2, 1);
    EXPECT_EQ(g * g.inverse(), PoleLimitedRational(GaussianRational(1)));
    EXPECT_EQ(PoleLimitedRational::one_plus_xi_sq_pow(2).pow(-1), PoleLimitedRational::one_plus_xi_sq_pow(-2));
    EXPECT_THROW(PoleLimitedRational(Polynomial::xi() + Polynomial(GaussianRational(2))).inverse(), arithmetic_error);
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "starcert/geometry.hpp"

using namespace starcert;
using namespace starcert::geometry;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Radii, ClosedFormValues) {
    EXPECT_NEAR(phi_alpha(2.0), kSqrt3, 1e-15);
    EXPECT_NEAR(phi_alpha(1.0), 1.0, 1e-15);
    EXPECT_NEAR(phi_alpha(4.0), 2.0, 1e-15);
    EXPECT_NEAR(psi_beta(1.0), kSqrt3 / std::sqrt(21.0), 1e-15);
    EXPECT_NEAR(psi_beta(0.0), 3.0 * kSqrt3 / std::sqrt(37.0), 1e-15);
    EXPECT_NEAR(rho_gamma(0.0), 1.0 / std::numbers::sqrt2, 1e-15);
    EXPECT_THROW(phi_alpha(0.5), ParameterOutOfRange);
    EXPECT_THROW(psi_beta(2.0), ParameterOutOfRange);
    EXPECT_THROW(rho_gamma(-1.0), ParameterOutOfRange);
}

TEST(Radii, PhiPeaksAtFour) {
    const double a = golden_section_min([](double x) { return -phi_alpha(x); }, 1.0, 20.0, 1e-12);
    EXPECT_NEAR(a, 4.0, 1e-5);
    for (double x = 1.0; x < 20.0; x += 0.01) EXPECT_LE(phi_alpha(x), 2.0 + 1e-15);
}

TEST(Radii, DiscsTouchTheSectorBoundary) {
    // the disc radius equals center * sin(half-angle) for each family
    for (double a = 1.1; a < 10.0; a += 0.3) {
        const double t = std::atan(kSqrt3 / (a - 1.0));
        EXPECT_NEAR(phi_alpha(a), a * std::sin(t), 1e-13);
    }
    for (double b = -10.0; b <= 1.0; b += 0.3) {
        const double t = std::atan(2.0 * kSqrt3 / (5.0 - 2.0 * b));
        EXPECT_NEAR(psi_beta(b), (3.0 - 2.0 * b) / 2.0 * std::sin(t), 1e-13);
    }
    for (double c = 0.0; c < 10.0; c += 0.3) {
        const double t = std::atan(1.0 / (1.0 + c));
        EXPECT_NEAR(rho_gamma(c), (1.0 + c) * std::sin(t), 1e-13);
    }
}

TEST(ScalarMin, ThreeAPlusOneOverA) {
    const auto m = varphi_scalar_min();
    EXPECT_NEAR(m.min, 2.0 * kSqrt3, 1e-15);
    EXPECT_NEAR(m.argmin, 1.0 / kSqrt3, 1e-15);
    EXPECT_NEAR(m.numeric_argmin, 1.0 / kSqrt3, 1e-12);
    EXPECT_NEAR(m.numeric_min, 2.0 * kSqrt3, 1e-12);
}

TEST(DiscInSector, Examples) {
    EXPECT_TRUE(disc_in_sector({2.0, kSqrt3}, {kPi / 3.0}));
    EXPECT_FALSE(disc_in_sector({2.0, kSqrt3 + 1e-9}, {kPi / 3.0}));
    EXPECT_TRUE(disc_in_sector({1.0, 0.5}, {kPi / 2.0}));
    EXPECT_THROW(disc_in_sector({-1.0, 0.5}, {kPi / 4.0}), ParameterOutOfRange);
    EXPECT_THROW(disc_in_sector({1.0, 0.5}, {0.0}), ParameterOutOfRange);
}

TEST(DiscInSector, AgreesWithSampling) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uc(0.1, 5.0), ur(0.0, 5.0), ut(0.05, kPi / 2.0);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        const Disc d{uc(rng), ur(rng)};
        const Sector s{ut(rng)};
        // skip near-tangent cases where 360 samples cannot decide
        if (std::abs(d.radius - d.center * std::sin(s.half_angle)) < 1e-2 * d.center) continue;
        EXPECT_EQ(disc_in_sector(d, s), disc_in_sector_sampled(d, s)) << d.center << " " << d.radius;
        ++checked;
    }
    EXPECT_GT(checked, 1500);
}

TEST(BoundaryTouch, EqualityCase) {
    const auto w = lemma_a_witness(0.5, kPi / 2.0);
    EXPECT_NEAR(w.a, 1.0, 1e-14);
    EXPECT_NEAR(w.k, 1.0, 1e-14);
    EXPECT_NEAR(w.bound, 1.0, 1e-14);
    EXPECT_NEAR(w.equality_gap, 0.0, 1e-14);
    EXPECT_THROW(lemma_a_witness(0.5, 0.0), DegenerateAngle);
    EXPECT_THROW(lemma_a_witness(0.5, kPi), DegenerateAngle);
    EXPECT_THROW(lemma_a_witness(1.5, 1.0), ParameterOutOfRange);
}

TEST(BoundaryTouch, RandomPairs) {
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> ur(0.01, 0.99), ut(0.0, 2.0 * kPi);
    int n = 0;
    while (n < 1000) {
        const double rho = ur(rng), theta = ut(rng);
        if (std::abs(std::sin(theta)) < 1e-3) continue;
        const auto w = lemma_a_witness(rho, theta);
        const double tol = 1e-9 * (1.0 + std::abs(w.k));
        EXPECT_NEAR(w.a, 1.0 / std::tan(theta / 2.0), tol);
        EXPECT_NEAR(w.k, 1.0 / std::sin(theta), tol);
        EXPECT_NEAR(w.equality_gap, 0.0, tol);
        EXPECT_LT(std::abs(w.re_p_z0), 1e-9 * (1.0 + std::abs(w.a)));
        EXPECT_LT(std::abs(w.re_log_deriv), tol);
        ++n;
    }
}

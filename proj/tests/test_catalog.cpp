#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "starcert/catalog.hpp"

using namespace starcert;

namespace {

std::vector<Complex> grid_points() {
    std::vector<Complex> pts;
    for (int i = 1; i <= 10; ++i)
        for (int j = 0; j < 10; ++j) pts.push_back(std::polar(0.09 * i, 2.0 * std::numbers::pi * (j + 0.5) / 10.0));
    return pts;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Profile constant_one(int order) {
    return {"1", [](Complex) { return Complex{1.0}; }, [](Complex) { return Complex{}; },
            TaylorSeries::constant(1.0, order)};
}

}  // namespace

TEST(MobiusPower, Values) {
    EXPECT_EQ(mobius_power(0.5)(0.0), Complex(1.0));
    EXPECT_NEAR(mobius_power(0.5)(-0.99).real(), std::sqrt(0.01 / 1.99), 1e-15);
    EXPECT_NEAR(mobius_power(0.5)(-0.99).real(), 0.0708881, 1e-7);
    EXPECT_NEAR(mobius_power(1.0 / 3.0)(-0.99).real(), std::cbrt(0.01 / 1.99), 1e-15);
    EXPECT_NEAR(mobius_power(1.0 / 3.0)(-0.99).real(), 0.171277, 1e-5);
    EXPECT_THROW(mobius_power(2.5), ParameterOutOfRange);
}

TEST(MobiusPower, PrincipalBranchStaysInSector) {
    // |arg M_p| = p |arg (1+z)/(1-z)| < p pi/2 on the disc.
    const auto m = mobius_power(0.5);
    for (int j = 0; j < 360; ++j) {
        const Complex z = std::polar(0.999, 2.0 * std::numbers::pi * j / 360.0);
        EXPECT_LT(std::abs(std::arg(m(z))), std::numbers::pi / 4.0);
    }
}

TEST(MobiusPower, DerivativeMatchesFiniteDifference) {
    const auto m = mobius_power(1.0 / 3.0);
    const Complex z(0.3, -0.4);
    const double h = 1e-6;
    const Complex fd = (m(z + h) - m(z - h)) / (2.0 * h);
    EXPECT_LT(std::abs(fd - m.derivative(z)), 1e-8);
}

TEST(ConvexityProfile, ConstantProfileGivesIdentity) {
    const auto f = from_convexity_profile(constant_one(32), "id");
    for (auto z : {Complex(0.5, 0.2), Complex(-0.7, 0.1)}) {
        EXPECT_LT(std::abs(f.f(z) - z), 1e-14);
        EXPECT_LT(std::abs(f.f(z, Representation::Series) - z), 1e-14);
    }
}

TEST(ConvexityProfile, LinearProfileGivesExpMinusOne) {
    const int order = 64;
    const Profile lin{"1 + z", [](Complex z) { return 1.0 + z; }, [](Complex) { return Complex{1.0}; },
                      TaylorSeries({1.0, 1.0}, order)};
    const auto f = from_convexity_profile(lin, "exp");
    EXPECT_NEAR(f.series()[2].real(), 0.5, 1e-15);
    for (auto z : grid_points()) {
        const Jet j = f.jet(z, Representation::ClosedForm);
        EXPECT_LT(std::abs(j.f - (std::exp(z) - 1.0)), 1e-13);
        EXPECT_LT(std::abs(j.fp - std::exp(z)), 1e-13);
        EXPECT_LT(std::abs(j.fpp - std::exp(z)), 1e-13);
    }
}

TEST(ConvexityProfile, ExampleOneSecondCoefficient) {
    // f' = exp((sqrt3+1)(z + z^2/4 + ...)) so a2 = f''(0)/2 = (sqrt3+1)/2.
    const auto f = paper_example_1(8);
    EXPECT_NEAR(f.series()[2].real(), (kSqrt3 + 1.0) / 2.0, 1e-14);
    EXPECT_NEAR(f.series()[2].real(), 1.3660, 1e-4);
    EXPECT_NEAR(f.jet(0.0).fpp.real(), kSqrt3 + 1.0, 1e-14);
}

TEST(ConvexityProfile, RejectsUnnormalizedProfile) {
    Profile bad{"2", [](Complex) { return Complex{2.0}; }, {}, TaylorSeries::constant(2.0, 8)};
    EXPECT_THROW(from_convexity_profile(bad, "bad"), ProfileNotNormalized);
    EXPECT_THROW(from_starlike_profile(bad, "bad"), ProfileNotNormalized);
}

TEST(StarlikeProfile, ConstantProfileGivesIdentity) {
    const auto f = from_starlike_profile(constant_one(32), "id");
    EXPECT_LT(std::abs(f.f(Complex(0.4, 0.4)) - Complex(0.4, 0.4)), 1e-14);
}

TEST(StarlikeProfile, CayleyProfileGivesKoebe) {
    // z k'/k = (1+z)/(1-z) for k = z/(1-z)^2.
    const auto f = from_starlike_profile(mobius_profile("(1+z)/(1-z)", 1.0, 1.0, 0.0, 512), "k");
    for (auto z : grid_points()) {
        const Complex w = 1.0 - z;
        const Jet want{z / (w * w), (1.0 + z) / (w * w * w), 2.0 * (2.0 + z) / (w * w * w * w)};
        for (auto rep : {Representation::ClosedForm, Representation::Series}) {
            const Jet j = f.jet(z, rep);
            EXPECT_LT(rel(j.f, want.f), 1e-10);
            EXPECT_LT(rel(j.fp, want.fp), 1e-10);
            EXPECT_LT(rel(j.fpp, want.fpp), 1e-9);
        }
    }
}

TEST(StarlikeProfile, ExampleTwoIsNotStarlike) {
    const auto f = paper_example_2();
    const double star = compute_quantities(f, -0.99).star_quot.real();
    EXPECT_NEAR(star, kSqrt3 * std::cbrt(0.01 / 1.99) + 1.0 - kSqrt3, 1e-12);
    EXPECT_NEAR(star, -0.435389, 1e-4);
    EXPECT_LT(star, 0.0);
}

TEST(Catalog, KoebeClosedForms) {
    const auto k = koebe();
    const Complex z = std::polar(0.999, std::numbers::pi / 4.0);
    const double half = compute_quantities(k, z).half_quot.real();
    EXPECT_LT(half, 0.0);
    EXPECT_NEAR(half, (1.0 / ((1.0 - z) * (1.0 - z))).real(), 1e-12);
    EXPECT_NEAR(half, -(1.0 + std::numbers::sqrt2) / 2.0, 2e-3);
    EXPECT_NEAR(compute_quantities(k, 0.5).star_quot.real(), 3.0, 1e-14);
}

TEST(Catalog, ExampleOneIsNotConvex) {
    const double conv = compute_quantities(paper_example_1(), -0.99).convexity.real();
    EXPECT_NEAR(conv, (kSqrt3 + 1.0) * std::sqrt(0.01 / 1.99) - kSqrt3, 1e-12);
    EXPECT_NEAR(conv, -1.538381, 1e-6);
}

TEST(Catalog, IdentityQuantities) {
    const auto f = identity();
    for (auto z : grid_points()) {
        const auto q = compute_quantities(f, z);
        EXPECT_LT(std::abs(q.star_quot - 1.0), 1e-15);
        EXPECT_LT(std::abs(q.convexity - 1.0), 1e-15);
    }
}

TEST(Catalog, QuantitiesAtOriginAreOne) {
    for (const auto& f : catalog(64)) {
        const auto q = compute_quantities(f, 0.0);
        EXPECT_EQ(q.star_quot, Complex(1.0));
        EXPECT_EQ(q.convexity, Complex(1.0));
        EXPECT_EQ(q.half_quot, Complex(1.0));
    }
}

TEST(Catalog, Normalization) {
    for (const auto& f : catalog()) {
        EXPECT_TRUE(is_normalized(f)) << f.name();
        for (double r : {1e-2, 1e-4, 1e-6}) EXPECT_LT(std::abs(f.f(Complex(r, r)) / Complex(r, r) - 1.0), 10.0 * r);
    }
    EXPECT_FALSE(is_normalized(from_series("shifted", TaylorSeries({0.1, 1.0}, 4))));
    EXPECT_FALSE(is_normalized(from_series("scaled", TaylorSeries({0.0, 2.0}, 4))));
}

TEST(Catalog, SeriesAgreesWithClosedForm) {
    const auto pts = grid_points();
    for (const auto& f : catalog()) {
        double worst = 0.0;
        for (auto z : pts) {
            const Jet a = f.jet(z, Representation::ClosedForm), b = f.jet(z, Representation::Series);
            worst = std::max({worst, rel(a.f, b.f), rel(a.fp, b.fp), rel(a.fpp, b.fpp)});
        }
        EXPECT_LT(worst, 1e-8) << f.name();
    }
}

TEST(Catalog, KoebeStarQuotientIsCayley) {
    const auto k = koebe();
    for (auto z : grid_points()) EXPECT_LT(std::abs(compute_quantities(k, z).star_quot - (1.0 + z) / (1.0 - z)), 1e-12);
}

TEST(Catalog, PoleSuspectedWhenDerivativeVanishes) {
    const auto f = from_series("z + z^2", TaylorSeries({0.0, 1.0, 1.0}, 4));
    EXPECT_THROW(compute_quantities(f, -0.5), PoleSuspected);
    try {
        compute_quantities(f, -0.5);
    } catch (const PoleSuspected& e) {
        EXPECT_EQ(e.z, Complex(-0.5));
    }
}

TEST(Catalog, RadiusOutOfRange) {
    EXPECT_THROW(koebe().jet(0.9999), RadiusOutOfRange);
}

TEST(Catalog, UnknownName) { EXPECT_THROW(catalog_function("nope"), std::invalid_argument); }

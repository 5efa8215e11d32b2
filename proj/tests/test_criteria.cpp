#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "starcert/criteria.hpp"

using namespace starcert;

namespace {

constexpr double kPi = std::numbers::pi;
using HS = HypothesisStatus;
using CS = ConclusionStatus;
using K = CriterionId::Kind;

ScanGrid quick_grid(double r_max = 0.999) {
    auto g = default_grid(r_max);
    g.thetas_per_circle = 512;
    return g;
}

}  // namespace

TEST(Thresholds, ClosedForms) {
    EXPECT_NEAR(threshold_of(CriterionId::t1(2.0)), kPi / 3.0, 1e-15);
    EXPECT_NEAR(threshold_of(CriterionId::t1(kSqrt3 + 1.0)), kPi / 4.0, 1e-15);
    EXPECT_NEAR(threshold_of(CriterionId::t1(4.0)), kPi / 6.0, 1e-15);
    EXPECT_NEAR(threshold_of(CriterionId::t2(-0.5)), kPi / 6.0, 1e-15);
    EXPECT_NEAR(threshold_of(CriterionId::t2((5.0 - 2.0 * kSqrt3) / 2.0)), kPi / 4.0, 1e-15);
    EXPECT_NEAR(threshold_of(CriterionId::t2(1.0)), std::atan(2.0 / kSqrt3), 1e-15);
    EXPECT_NEAR(threshold_of(CriterionId::t3(0.0)), kPi / 4.0, 1e-15);
    EXPECT_NEAR(threshold_of(CriterionId::t3(kSqrt3 - 1.0)), kPi / 6.0, 1e-15);
    EXPECT_NEAR(threshold_of({K::T2CorLimit}), threshold_of(CriterionId::t2(1.0)), 1e-15);
    EXPECT_NEAR(threshold_of({K::T3CorPi4}), threshold_of(CriterionId::t3(0.0)), 1e-15);
    EXPECT_NEAR(threshold_of({K::T1CorLimit}), kPi / 2.0, 1e-15);
}

TEST(Thresholds, Monotone) {
    double prev = kPi / 2.0;
    for (double a = 1.05; a < 20.0; a += 0.05) {
        const double t = threshold_of(CriterionId::t1(a));
        EXPECT_LT(t, prev);
        EXPECT_GT(t, 0.0);
        prev = t;
    }
    prev = 0.0;
    for (double b = -20.0; b <= 1.0; b += 0.25) {
        const double t = threshold_of(CriterionId::t2(b));
        EXPECT_GT(t, prev);
        prev = t;
    }
    prev = kPi / 2.0;
    for (double c = 0.0; c < 20.0; c += 0.25) {
        const double t = threshold_of(CriterionId::t3(c));
        EXPECT_LT(t, prev);
        prev = t;
    }
}

TEST(Thresholds, ParameterRange) {
    EXPECT_THROW(threshold_of(CriterionId::t1(1.0)), ParameterOutOfRange);
    EXPECT_THROW(threshold_of(CriterionId::t1(0.5)), ParameterOutOfRange);
    EXPECT_THROW(threshold_of(CriterionId::t2(1.5)), ParameterOutOfRange);
    EXPECT_NO_THROW(threshold_of(CriterionId::t2(1.0)));
    EXPECT_THROW(threshold_of(CriterionId::t3(-0.1)), ParameterOutOfRange);
    EXPECT_THROW(threshold_of(CriterionId::t1(std::nan(""))), ParameterOutOfRange);
}

TEST(Criterion, Functionals) {
    EXPECT_EQ(hypothesis_functional(CriterionId::t1(3.0)), Functional::arg_shifted_convex(3.0));
    EXPECT_EQ(hypothesis_functional({K::T1CorLimit}), Functional::arg_shifted_convex(1.0));
    EXPECT_EQ(hypothesis_functional({K::T1CorMod2}), Functional::mod_pre_schwarz());
    EXPECT_EQ(hypothesis_functional(CriterionId::t2(0.0)), Functional::arg_beta(0.0));
    EXPECT_EQ(hypothesis_functional({K::T2CorModSqrt3}), Functional::mod_pre_schwarz());
    EXPECT_EQ(hypothesis_functional({K::T3CorPi4}), Functional::arg_gamma(0.0));
    EXPECT_EQ(hypothesis_functional({K::T3CorDev1}), Functional::mod_star_dev());
    EXPECT_EQ(conclusion_functional(CriterionId::t1(2.0)), Functional::re_star());
    EXPECT_EQ(conclusion_functional(CriterionId::t2(0.0)), Functional::re_star());
    EXPECT_EQ(conclusion_functional(CriterionId::t3(0.0)), Functional::re_half());
    EXPECT_EQ(conclusion_functional({K::T3CorDev1}), Functional::re_half());
}

TEST(Criterion, ParseNames) {
    for (auto k : all_criterion_kinds()) {
        const CriterionId c{k, 0.5};
        EXPECT_EQ(parse_criterion(c.name(), 0.5).kind, k);
    }
    EXPECT_EQ(parse_criterion("T1_COR_MOD2", 7.0).param, 0.0);
    EXPECT_THROW(parse_criterion("T4"), std::invalid_argument);
}

TEST(Policy, BoundaryExtrapolation) {
    ScanResult s;
    s.per_radius = {{0.96, 1.0 - 2.0 * std::sqrt(0.04)}, {0.99, 1.0 - 2.0 * std::sqrt(0.01)}};
    s.extremum = s.per_radius.back().second;
    EXPECT_NEAR(boundary_extrapolation(s), 1.0, 1e-12);
    s.tail_flag = true;
    EXPECT_EQ(judge_upper_bound(s, 1.0, 1e-9), HS::BoundaryLimit);
    EXPECT_EQ(judge_upper_bound(s, 1.5, 1e-9), HS::Holds);
    EXPECT_EQ(judge_upper_bound(s, 0.5, 1e-9), HS::Fails);
    s.tail_flag = false;
    EXPECT_EQ(judge_upper_bound(s, 1.0, 1e-9), HS::Holds);
}

TEST(Certify, ExampleOneSitsOnTheBoundary) {
    const auto rep = certify(paper_example_1(), CriterionId::t1(kSqrt3 + 1.0), quick_grid());
    EXPECT_EQ(rep.hypothesis_status, HS::BoundaryLimit);
    EXPECT_LT(rep.hypothesis_scan.extremum, kPi / 4.0);
    EXPECT_NEAR(rep.hypothesis_scan.extremum, 0.5 * std::asin(2 * 0.999 / (1 + 0.999 * 0.999)), 1e-9);
    EXPECT_EQ(rep.conclusion_status, CS::Observed);
    EXPECT_TRUE(rep.implication_consistent);
    EXPECT_FALSE(rep.pole.has_value());
}

TEST(Certify, ExampleOneFailsSmallerAngles) {
    const auto rep = certify(paper_example_1(), CriterionId::t1(4.0), quick_grid());
    EXPECT_EQ(rep.hypothesis_status, HS::Fails);
    EXPECT_TRUE(rep.implication_consistent);
}

TEST(Certify, ExampleTwo) {
    const auto g = quick_grid();
    const auto rep = certify(paper_example_2(), CriterionId::t3(kSqrt3 - 1.0), g);
    EXPECT_EQ(rep.hypothesis_status, HS::BoundaryLimit);
    EXPECT_EQ(rep.conclusion_status, CS::Observed);
    const auto star = scan_inf(paper_example_2(), Functional::re_star(), g);
    EXPECT_LT(star.extremum, 0.0);
}

TEST(Certify, KoebeViolatesDeviationCorollary) {
    const auto rep = certify(koebe(), CriterionId{K::T3CorDev1}, quick_grid());
    EXPECT_EQ(rep.hypothesis_status, HS::Fails);
    EXPECT_EQ(rep.conclusion_status, CS::Violated);
    EXPECT_TRUE(rep.implication_consistent);
}

TEST(Certify, IdentityHoldsEverywhere) {
    const SampledFunction s(identity(), quick_grid());
    for (const auto& c : {CriterionId::t1(2.0), CriterionId::t2(0.0), CriterionId::t3(0.0), CriterionId{K::T1CorMod2},
                          CriterionId{K::T3CorDev1}}) {
        const auto rep = certify(s, c);
        EXPECT_EQ(rep.hypothesis_status, HS::Holds) << c.name();
        EXPECT_EQ(rep.conclusion_status, CS::Observed) << c.name();
    }
}

TEST(Certify, HugeMarginFails) {
    CertifyOptions opts;
    opts.margin = 1.0;
    const auto rep = certify(identity(), CriterionId::t1(2.0), quick_grid(), opts);
    EXPECT_EQ(rep.hypothesis_status, HS::Holds);
    const auto rep2 = certify(paper_example_2(), CriterionId::t3(kSqrt3 - 1.0), quick_grid(), opts);
    EXPECT_EQ(rep2.hypothesis_status, HS::Fails);
}

TEST(Certify, RejectsUnnormalized) {
    const auto f = from_series("2z", TaylorSeries({0.0, 2.0}, 4));
    EXPECT_THROW(certify(f, CriterionId::t1(2.0), quick_grid()), NotNormalized);
    EXPECT_THROW(certify(identity(), CriterionId::t1(1.0), quick_grid()), ParameterOutOfRange);
}

TEST(Certify, PoleIsUndetermined) {
    const auto f = from_series("z + z^2", TaylorSeries({0.0, 1.0, 1.0}, 4));
    ScanGrid g;
    g.radii = {0.25, 0.5, 0.75};
    g.thetas_per_circle = 8;
    const auto rep = certify(f, CriterionId::t1(2.0), g);
    ASSERT_TRUE(rep.pole.has_value());
    EXPECT_EQ(rep.hypothesis_status, HS::Fails);
    EXPECT_EQ(rep.conclusion_status, CS::Undetermined);
    EXPECT_TRUE(rep.implication_consistent);
}

TEST(ClassG, Membership) {
    const auto g = quick_grid();
    EXPECT_EQ(class_g_membership(identity(), g).status, HS::Holds);
    EXPECT_EQ(class_g_membership(koebe(), g).status, HS::Fails);
    // 1 + z f''/f' = 1 - z/(2 - z) for z - z^2/4, with sup 4/3 at z = -1
    const auto q = class_g_membership(quadratic_g(), g);
    EXPECT_EQ(q.status, HS::Holds);
    EXPECT_NEAR(q.scan.extremum, 1.0 + 0.999 / (2.0 + 0.999), 1e-12);
}

TEST(Implication, SweepIsConsistent) {
    const auto g = quick_grid(0.99);
    for (const auto& f : {identity(), koebe(), paper_example_1(), paper_example_2(), quadratic_g()}) {
        const SampledFunction s(f, g);
        for (double a : {1.1, 2.0, 4.0}) EXPECT_TRUE(certify(s, CriterionId::t1(a)).implication_consistent) << f.name();
        for (double b : {-1.0, 0.0, 1.0}) EXPECT_TRUE(certify(s, CriterionId::t2(b)).implication_consistent) << f.name();
        for (double c : {0.0, 1.0}) EXPECT_TRUE(certify(s, CriterionId::t3(c)).implication_consistent) << f.name();
    }
}

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "starcert/catalog.hpp"
#include "starcert/criteria.hpp"
#include "starcert/geometry.hpp"
#include "starcert/scan.hpp"

namespace starcert::reproduction {

struct CheckResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
};

struct SuiteConfig {
    ScanGrid grid = default_grid();
    CertifyOptions options;
    unsigned seed = 20240607u;
};

/// Parameter values used for every parametrised criterion in the sweep.
inline std::vector<CriterionId> sweep_criteria() {
    std::vector<CriterionId> out;
    for (double a : {1.1, 1.5, 2.0, kSqrt3 + 1.0, 4.0}) out.push_back(CriterionId::t1(a));
    for (double b : {-10.0, -1.0, 0.0, 0.5, 0.9}) out.push_back(CriterionId::t2(b));
    for (double g : {0.0, 0.5, kSqrt3 - 1.0, 1.0, 5.0}) out.push_back(CriterionId::t3(g));
    using K = CriterionId::Kind;
    for (K k : {K::T1CorLimit, K::T1CorMod2, K::T2CorLimit, K::T2CorModSqrt3, K::T3CorPi4, K::T3CorDev1})
        out.push_back({k, 0.0});
    return out;
}

/// Maximum of the per-circle |arg M_p| over |z| = r: p * arcsin(2r / (1 + r^2)).
inline double mobius_arg_max(double p, double r) { return p * std::asin(2.0 * r / (1.0 + r * r)); }

namespace detail {

class Recorder {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed_ = false;
            if (!failures_.empty()) failures_ += "; ";
            failures_ += what;
        }
    }
    void note(const std::string& s) {
        if (!notes_.empty()) notes_ += "; ";
        notes_ += s;
    }
    CheckResult finish(int id, std::string title) const {
        std::string d = passed_ ? notes_ : failures_ + (notes_.empty() ? "" : " | " + notes_);
        return {id, std::move(title), passed_, d};
    }

private:
    bool passed_ = true;
    std::string failures_;
    std::string notes_;
};

inline std::string fmt(double v, int prec = 10) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

}  // namespace detail

inline CheckResult check_thresholds() {
    detail::Recorder rec;
    const double pi = std::numbers::pi;
    auto near = [&](double got, double want, const std::string& what) {
        rec.require(std::abs(got - want) <= 1e-12, what + " = " + detail::fmt(got, 17));
    };
    near(threshold_of(CriterionId::t1(kSqrt3 + 1.0)), pi / 4.0, "T1(sqrt3+1)");
    near(threshold_of(CriterionId::t3(kSqrt3 - 1.0)), pi / 6.0, "T3(sqrt3-1)");
    near(threshold_of(CriterionId::t3(0.0)), pi / 4.0, "T3(0)");
    near(threshold_of(CriterionId::t2(1.0)), std::atan(2.0 / kSqrt3), "T2(1)");
    const double deg = threshold_of(CriterionId::t2(1.0)) * 180.0 / pi;
    rec.require(std::abs(deg - 49.1) < 0.05, "T2(1) in degrees = " + detail::fmt(deg));
    rec.note("T2(1) = " + detail::fmt(deg, 6) + " deg");
    return rec.finish(1, "thresholds exact");
}

inline CheckResult check_radius_functions() {
    detail::Recorder rec;
    const double amax = geometry::golden_section_min([](double a) { return -geometry::phi_alpha(a); }, 1.0, 100.0);
    const double vmax = geometry::phi_alpha(amax);
    rec.require(std::abs(amax - 4.0) <= 1e-6, "phi argmax = " + detail::fmt(amax));
    rec.require(std::abs(vmax - 2.0) <= 1e-6, "phi max = " + detail::fmt(vmax));
    bool decreasing = true;
    double prev = geometry::psi_beta(-100.0);
    for (int i = 1; i <= 2000; ++i) {
        const double v = geometry::psi_beta(-100.0 + 101.0 * i / 2000.0);
        decreasing = decreasing && v < prev;
        prev = v;
    }
    rec.require(decreasing, "psi not strictly decreasing on [-100, 1]");
    const double psi_lim = geometry::psi_beta(-1e6);
    rec.require(std::abs(psi_lim - kSqrt3) <= 1e-3, "psi(-1e6) = " + detail::fmt(psi_lim));
    const double rho_lim = geometry::rho_gamma(1e6);
    rec.require(std::abs(rho_lim - 1.0) <= 1e-3, "rho(1e6) = " + detail::fmt(rho_lim));
    rec.note("phi max " + detail::fmt(vmax, 12) + " at " + detail::fmt(amax, 10));
    return rec.finish(2, "phi maximum, psi and rho limits");
}

inline CheckResult check_scalar_min() {
    detail::Recorder rec;
    const auto m = geometry::varphi_scalar_min();
    rec.require(std::abs(m.numeric_argmin - 1.0 / kSqrt3) <= 1e-9, "argmin = " + detail::fmt(m.numeric_argmin, 17));
    rec.require(std::abs(m.numeric_min - 2.0 * kSqrt3) <= 1e-9, "min = " + detail::fmt(m.numeric_min, 17));
    rec.require(std::abs(m.argmin - 1.0 / kSqrt3) <= 1e-15 && std::abs(m.min - 2.0 * kSqrt3) <= 1e-15,
                "closed form mismatch");
    rec.note("min " + detail::fmt(m.numeric_min, 15) + " at " + detail::fmt(m.numeric_argmin, 15));
    return rec.finish(3, "scalar minimum 2 sqrt3");
}

/// Shared body of the two example checks: the arg functional of `c` stays
/// under the threshold at every radius and follows p * arcsin(2r/(1+r^2)).
inline void check_example_hypothesis(detail::Recorder& rec, const SampledFunction& s, const CriterionId& c,
                                     double kernel_power, const SuiteConfig& cfg, CriterionReport& rep) {
    rep = certify(s, c, cfg.options);
    const double thr = rep.threshold;
    const auto& pr = rep.hypothesis_scan.per_radius;
    for (std::size_t i = 0; i < pr.size(); ++i) {
        const auto [r, v] = pr[i];
        rec.require(v <= thr, "sup at r=" + detail::fmt(r) + " exceeds threshold");
        if (i > 0) rec.require(v > pr[i - 1].second, "per-radius sup not increasing at r=" + detail::fmt(r));
        rec.require(std::abs(v - mobius_arg_max(kernel_power, r)) <= 1e-8,
                    "sup at r=" + detail::fmt(r) + " off the exact circle maximum");
    }
    if (pr.back().first >= 0.999)
        rec.require(thr - pr.back().second <= 1e-3, "sup at r=0.999 not within 1e-3 of threshold");
    rec.require(rep.hypothesis_status == HypothesisStatus::BoundaryLimit,
                "hypothesis status " + to_string(rep.hypothesis_status));
    rec.require(rep.conclusion_status == ConclusionStatus::Observed,
                "conclusion status " + to_string(rep.conclusion_status));
    rec.note("sup " + detail::fmt(rep.hypothesis_scan.extremum, 12) + " vs threshold " + detail::fmt(thr, 12));
}

inline CheckResult check_example_1(const SampledFunction& ex1, const SuiteConfig& cfg) {
    detail::Recorder rec;
    CriterionReport rep;
    check_example_hypothesis(rec, ex1, CriterionId::t1(kSqrt3 + 1.0), 0.5, cfg, rep);
    const double conv = compute_quantities(ex1.function(), -0.99).convexity.real();
    rec.require(conv <= -1.5 && std::abs(conv - (-1.538381)) <= 1e-4, "Re(1+zf''/f')(-0.99) = " + detail::fmt(conv));
    const auto conv_scan = scan_inf(ex1, Functional::re_convex());
    rec.require(conv_scan.extremum < 0.0, "RE_CONVEX never negative on the grid");
    const auto star = scan_inf(ex1, Functional::re_star());
    rec.require(star.extremum >= -1e-6, "inf Re zf'/f = " + detail::fmt(star.extremum));
    rec.note("Re(1+zf''/f')(-0.99) = " + detail::fmt(conv, 9) + ", inf Re zf'/f = " + detail::fmt(star.extremum, 6));
    return rec.finish(4, "example 1: not convex, starlike via T1(sqrt3+1)");
}

inline CheckResult check_example_2(const SampledFunction& ex2, const SuiteConfig& cfg) {
    detail::Recorder rec;
    CriterionReport rep;
    check_example_hypothesis(rec, ex2, CriterionId::t3(kSqrt3 - 1.0), 1.0 / 3.0, cfg, rep);
    const double star = compute_quantities(ex2.function(), -0.99).star_quot.real();
    rec.require(star <= -0.43 && std::abs(star - (-0.435389)) <= 1e-4, "Re zf'/f(-0.99) = " + detail::fmt(star));
    const auto star_scan = scan_inf(ex2, Functional::re_star());
    rec.require(star_scan.extremum < 0.0, "RE_STAR never negative on the grid");
    const auto half = scan_inf(ex2, Functional::re_half());
    rec.require(half.extremum >= -1e-6, "inf Re f/z = " + detail::fmt(half.extremum));
    rec.note("Re zf'/f(-0.99) = " + detail::fmt(star, 9) + ", inf Re f/z = " + detail::fmt(half.extremum, 6));
    return rec.finish(5, "example 2: not starlike, Re f/z > 0 via T3(sqrt3-1)");
}

inline CheckResult check_koebe_half_quotient() {
    detail::Recorder rec;
    const Complex z = std::polar(0.999, std::numbers::pi / 4.0);
    const double v = compute_quantities(koebe(), z).half_quot.real();
    const double computed = -(1.0 + std::numbers::sqrt2) / 2.0;
    rec.require(v < 0.0, "Re k(z)/z not negative");
    rec.require(std::abs(v - computed) <= 2e-3, "Re k(z)/z = " + detail::fmt(v));
    const Complex w = 1.0 - z;
    rec.require(std::abs(v - (1.0 / (w * w)).real()) <= 1e-12, "disagrees with 1/(1-z)^2");
    rec.note("Re k(z)/z = " + detail::fmt(v, 9) + " at 0.999 e^{i pi/4}; boundary value is -(1+sqrt2)/2 = " +
             detail::fmt(computed, 9) + ", not -(sqrt2+1)");
    return rec.finish(6, "Koebe: Re k(z)/z < 0 near e^{i pi/4}");
}

inline CheckResult check_lemma_a(unsigned seed) {
    detail::Recorder rec;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> urho(0.01, 0.99), uth(0.01, std::numbers::pi - 0.01), u01(0.0, 1.0);
    double worst_gap = 0.0;
    int branch_fail = 0, re_fail = 0, interior_fail = 0;
    for (int i = 0; i < 1000; ++i) {
        const double rho = urho(rng);
        const double theta = uth(rng) + (i % 2 ? std::numbers::pi : 0.0);
        const auto w = geometry::lemma_a_witness(rho, theta);
        worst_gap = std::max(worst_gap, std::abs(w.equality_gap));
        const double m = std::abs(w.a);
        const bool branch = w.a > 0.0 ? w.k >= 0.5 * (w.a + 1.0 / w.a) - 1e-10
                                      : w.k <= -0.5 * (m + 1.0 / m) + 1e-10;
        branch_fail += !branch;
        re_fail += std::abs(w.re_p_z0) > 1e-10;
        for (int j = 0; j < 8; ++j) {
            const Complex z = std::polar(rho * std::sqrt(u01(rng)) * 0.999999, 2.0 * std::numbers::pi * u01(rng));
            interior_fail += !(((rho + z) / (rho - z)).real() > 0.0);
        }
    }
    rec.require(worst_gap <= 1e-10, "max |gap| = " + detail::fmt(worst_gap));
    rec.require(branch_fail == 0, std::to_string(branch_fail) + " branch inequalities failed");
    rec.require(re_fail == 0, std::to_string(re_fail) + " touch points with Re p != 0");
    rec.require(interior_fail == 0, std::to_string(interior_fail) + " interior points with Re p <= 0");
    rec.note("1000 pairs, max |gap| = " + detail::fmt(worst_gap, 3));
    return rec.finish(7, "boundary-touch lemma equality family");
}

inline CheckResult check_implication_consistency(const std::vector<const SampledFunction*>& fns,
                                                 const SuiteConfig& cfg) {
    detail::Recorder rec;
    int reports = 0, holds = 0;
    for (const auto* s : fns) {
        for (const auto& c : sweep_criteria()) {
            const auto rep = certify(*s, c, cfg.options);
            ++reports;
            holds += rep.hypothesis_status == HypothesisStatus::Holds;
            rec.require(rep.implication_consistent,
                        s->function().name() + " x " + c.name() + "(" + detail::fmt(c.param) + ") inconsistent");
        }
    }
    rec.note(std::to_string(reports) + " reports, " + std::to_string(holds) + " with hypothesis HOLDS");
    return rec.finish(8, "implication consistency sweep");
}

/// 100 points: 10 radii in (0, 0.9] times 10 angles.
inline std::vector<Complex> agreement_points() {
    std::vector<Complex> pts;
    for (int i = 1; i <= 10; ++i)
        for (int j = 0; j < 10; ++j) pts.push_back(std::polar(0.09 * i, 2.0 * std::numbers::pi * (j + 0.5) / 10.0));
    return pts;
}

inline CheckResult check_series_agreement(const std::vector<const SampledFunction*>& fns) {
    detail::Recorder rec;
    const auto pts = agreement_points();
    auto rel = [](Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
    double worst = 0.0;
    for (const auto* s : fns) {
        const auto& f = s->function();
        if (!f.has_closed_form() || !f.has_series()) continue;
        double w = 0.0;
        for (auto z : pts) {
            const Jet a = f.jet(z, Representation::ClosedForm), b = f.jet(z, Representation::Series);
            w = std::max({w, rel(a.f, b.f), rel(a.fp, b.fp), rel(a.fpp, b.fpp)});
        }
        rec.require(w < 1e-8, f.name() + " series vs closed form " + detail::fmt(w));
        worst = std::max(worst, w);
    }
    // Profile round trips through the series route.
    const int order = default_series_order();
    const Profile g = mobius_profile("sqrt3 M_{1/3} + 1 - sqrt3", kSqrt3, 1.0 / 3.0, 1.0 - kSqrt3, order);
    const Profile cayley = mobius_profile("(1+z)/(1-z)", 1.0, 1.0, 0.0, order);
    const Profile h = mobius_profile("(sqrt3+1) M_{1/2} - sqrt3", kSqrt3 + 1.0, 0.5, -kSqrt3, order);
    const Profile lin{"1 + z", [](Complex z) { return 1.0 + z; }, [](Complex) { return Complex{1.0}; },
                      TaylorSeries({1.0, 1.0}, order)};
    double rt = 0.0;
    for (const auto& p : {g, cayley}) {
        const auto f = from_starlike_profile(p, "roundtrip");
        for (auto z : pts)
            for (auto rep : {Representation::ClosedForm, Representation::Series})
                rt = std::max(rt, std::abs(compute_quantities(f, z, rep).star_quot - p.value(z)));
    }
    for (const auto& p : {h, lin}) {
        const auto f = from_convexity_profile(p, "roundtrip");
        for (auto z : pts)
            for (auto rep : {Representation::ClosedForm, Representation::Series})
                rt = std::max(rt, std::abs(compute_quantities(f, z, rep).convexity - p.value(z)));
    }
    rec.require(rt < 1e-8, "profile round trip " + detail::fmt(rt));
    rec.note("max series/closed-form gap " + detail::fmt(worst, 3) + ", round trip " + detail::fmt(rt, 3));
    return rec.finish(9, "series vs closed form, profile round trips");
}

inline CheckResult check_geometry_identities(unsigned seed) {
    detail::Recorder rec;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double alpha = 1.05 + 0.5 * i;
        const double beta = 1.0 - 0.75 * i;
        const double gamma = 0.4 * i;
        worst = std::max(worst, std::abs(geometry::phi_alpha(alpha) -
                                         alpha * std::sin(threshold_of(CriterionId::t1(alpha)))));
        worst = std::max(worst, std::abs(geometry::psi_beta(beta) -
                                         (3.0 - 2.0 * beta) / 2.0 * std::sin(threshold_of(CriterionId::t2(beta)))));
        worst = std::max(worst, std::abs(geometry::rho_gamma(gamma) -
                                         (1.0 + gamma) * std::sin(threshold_of(CriterionId::t3(gamma)))));
    }
    rec.require(worst <= 1e-12, "radius identity error " + detail::fmt(worst));
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> uc(0.1, 10.0), ut(0.01, std::numbers::pi / 2.0), uf(0.0, 1.5);
    int disagree = 0, inside = 0;
    for (int i = 0; i < 1000; ++i) {
        const geometry::Disc d{uc(rng), 0.0};
        const geometry::Sector s{ut(rng)};
        const geometry::Disc disc{d.center, uf(rng) * d.center * std::sin(s.half_angle)};
        const bool a = geometry::disc_in_sector(disc, s);
        inside += a;
        disagree += a != geometry::disc_in_sector_sampled(disc, s);
    }
    rec.require(disagree == 0, std::to_string(disagree) + " of 1000 disc/sector pairs disagree");
    rec.note("identity error " + detail::fmt(worst, 3) + ", " + std::to_string(inside) + "/1000 discs inside");
    return rec.finish(10, "geometry cross-identities");
}

/// Runs every check; functions are sampled once on cfg.grid and shared.
inline std::vector<CheckResult> run_all(const SuiteConfig& cfg = {}) {
    std::vector<SampledFunction> sampled;
    for (auto& f : catalog()) sampled.emplace_back(std::move(f), cfg.grid);
    std::vector<const SampledFunction*> ptrs;
    const SampledFunction* ex1 = nullptr;
    const SampledFunction* ex2 = nullptr;
    for (const auto& s : sampled) {
        ptrs.push_back(&s);
        if (s.function().name() == "paper_example_1") ex1 = &s;
        if (s.function().name() == "paper_example_2") ex2 = &s;
    }
    std::vector<CheckResult> out;
    auto guarded = [&out](int id, const std::string& title, const std::function<CheckResult()>& fn) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({id, title, false, std::string("error: ") + e.what()});
        }
    };
    guarded(1, "thresholds exact", check_thresholds);
    guarded(2, "phi maximum, psi and rho limits", check_radius_functions);
    guarded(3, "scalar minimum 2 sqrt3", check_scalar_min);
    guarded(4, "example 1", [&] { return check_example_1(*ex1, cfg); });
    guarded(5, "example 2", [&] { return check_example_2(*ex2, cfg); });
    guarded(6, "Koebe", check_koebe_half_quotient);
    guarded(7, "boundary-touch lemma", [&] { return check_lemma_a(cfg.seed); });
    guarded(8, "implication consistency", [&] { return check_implication_consistency(ptrs, cfg); });
    guarded(9, "series agreement", [&] { return check_series_agreement(ptrs); });
    guarded(10, "geometry", [&] { return check_geometry_identities(cfg.seed); });
    return out;
}

}  // namespace starcert::reproduction

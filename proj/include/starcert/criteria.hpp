#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "starcert/catalog.hpp"
#include "starcert/errors.hpp"
#include "starcert/scan.hpp"

namespace starcert {

/// One sufficient condition: a bound on a hypothesis functional over the
/// disc that implies Re(conclusion functional) > 0.
struct CriterionId {
    enum class Kind {
        T1,                ///< |arg(alpha + z f''/f')| < arctan(sqrt3/(alpha-1))  => starlike
        T1CorLimit,        ///< |arg(1 + z f''/f')| < pi/2                          => starlike
        T1CorMod2,         ///< |z f''/f'| < 2                                      => starlike
        T2,                ///< |arg((3-2beta)/2 - z f''/f')| < arctan(2sqrt3/(5-2beta)) => starlike
        T2CorLimit,        ///< |arg(1/2 - z f''/f')| < arctan(2/sqrt3)             => starlike
        T2CorModSqrt3,     ///< |z f''/f'| < sqrt3                                  => starlike
        T3,                ///< |arg(z f'/f + gamma)| < arctan(1/(1+gamma))         => Re f/z > 0
        T3CorPi4,          ///< |arg(z f'/f)| < pi/4                                => Re f/z > 0
        T3CorDev1,         ///< |z f'/f - 1| < 1                                    => Re f/z > 0
    };

    Kind kind;
    double param = 0.0;

    static CriterionId t1(double alpha) { return {Kind::T1, alpha}; }
    static CriterionId t2(double beta) { return {Kind::T2, beta}; }
    static CriterionId t3(double gamma) { return {Kind::T3, gamma}; }

    bool has_param() const { return kind == Kind::T1 || kind == Kind::T2 || kind == Kind::T3; }

    /// Name of the parameter ("alpha", "beta", "gamma"), empty for corollaries.
    std::string param_name() const {
        switch (kind) {
            case Kind::T1: return "alpha";
            case Kind::T2: return "beta";
            case Kind::T3: return "gamma";
            default: return {};
        }
    }

    /// alpha > 1, beta <= 1 (beta = 1 is the limiting case), gamma >= 0.
    void validate() const {
        if (!has_param()) return;
        if (!std::isfinite(param)) throw ParameterOutOfRange(param_name() + " must be finite");
        if (kind == Kind::T1 && !(param > 1.0)) throw ParameterOutOfRange("T1 requires alpha > 1");
        if (kind == Kind::T2 && !(param <= 1.0)) throw ParameterOutOfRange("T2 requires beta <= 1");
        if (kind == Kind::T3 && !(param >= 0.0)) throw ParameterOutOfRange("T3 requires gamma >= 0");
    }

    std::string name() const {
        switch (kind) {
            case Kind::T1: return "T1";
            case Kind::T1CorLimit: return "T1_COR_LIMIT";
            case Kind::T1CorMod2: return "T1_COR_MOD2";
            case Kind::T2: return "T2";
            case Kind::T2CorLimit: return "T2_COR_LIMIT";
            case Kind::T2CorModSqrt3: return "T2_COR_MOD_SQRT3";
            case Kind::T3: return "T3";
            case Kind::T3CorPi4: return "T3_COR_PI4";
            case Kind::T3CorDev1: return "T3_COR_DEV1";
        }
        return {};
    }
};

inline const std::vector<CriterionId::Kind>& all_criterion_kinds() {
    using K = CriterionId::Kind;
    static const std::vector<K> kinds{K::T1, K::T1CorLimit, K::T1CorMod2, K::T2,       K::T2CorLimit,
                                      K::T2CorModSqrt3, K::T3, K::T3CorPi4, K::T3CorDev1};
    return kinds;
}

inline CriterionId parse_criterion(const std::string& name, double param = 0.0) {
    for (auto k : all_criterion_kinds()) {
        CriterionId c{k, param};
        if (c.name() == name) {
            if (!c.has_param()) c.param = 0.0;
            return c;
        }
    }
    throw std::invalid_argument("unknown criterion '" + name + "'");
}

inline double threshold_of(const CriterionId& c) {
    c.validate();
    using K = CriterionId::Kind;
    switch (c.kind) {
        case K::T1: return std::atan(kSqrt3 / (c.param - 1.0));
        case K::T1CorLimit: return std::numbers::pi / 2.0;
        case K::T1CorMod2: return 2.0;
        case K::T2: return std::atan(2.0 * kSqrt3 / (5.0 - 2.0 * c.param));
        case K::T2CorLimit: return std::atan(2.0 / kSqrt3);
        case K::T2CorModSqrt3: return kSqrt3;
        case K::T3: return std::atan(1.0 / (1.0 + c.param));
        case K::T3CorPi4: return std::numbers::pi / 4.0;
        case K::T3CorDev1: return 1.0;
    }
    throw std::logic_error("unreachable");
}

inline Functional hypothesis_functional(const CriterionId& c) {
    using K = CriterionId::Kind;
    switch (c.kind) {
        case K::T1: return Functional::arg_shifted_convex(c.param);
        case K::T1CorLimit: return Functional::arg_shifted_convex(1.0);
        case K::T1CorMod2: return Functional::mod_pre_schwarz();
        case K::T2: return Functional::arg_beta(c.param);
        case K::T2CorLimit: return Functional::arg_beta(1.0);
        case K::T2CorModSqrt3: return Functional::mod_pre_schwarz();
        case K::T3: return Functional::arg_gamma(c.param);
        case K::T3CorPi4: return Functional::arg_gamma(0.0);
        case K::T3CorDev1: return Functional::mod_star_dev();
    }
    throw std::logic_error("unreachable");
}

inline Functional conclusion_functional(const CriterionId& c) {
    using K = CriterionId::Kind;
    switch (c.kind) {
        case K::T3:
        case K::T3CorPi4:
        case K::T3CorDev1: return Functional::re_half();
        default: return Functional::re_star();
    }
}

enum class HypothesisStatus { Holds, Fails, BoundaryLimit };
enum class ConclusionStatus { Observed, Violated, Undetermined };

inline std::string to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::Holds: return "HOLDS";
        case HypothesisStatus::Fails: return "FAILS";
        case HypothesisStatus::BoundaryLimit: return "BOUNDARY_LIMIT";
    }
    return {};
}

inline std::string to_string(ConclusionStatus s) {
    switch (s) {
        case ConclusionStatus::Observed: return "OBSERVED";
        case ConclusionStatus::Violated: return "VIOLATED";
        case ConclusionStatus::Undetermined: return "UNDETERMINED";
    }
    return {};
}

struct CertifyOptions {
    /// "sup < threshold" is certified only as sup <= threshold - margin.
    double margin = 1e-9;
    /// "inf Re > 0" is observed when inf >= -conclusion_tol.
    double conclusion_tol = 1e-6;
};

/// Limit at r = 1 of a per-radius curve fitted as L - C sqrt(1 - r) through
/// its last two points. Overshoots smooth (linear) approaches, which keeps
/// it on the cautious side.
inline double boundary_extrapolation(const ScanResult& s) {
    const auto& pr = s.per_radius;
    if (pr.size() < 2) return s.extremum;
    const auto [r1, v1] = pr[pr.size() - 2];
    const auto [r2, v2] = pr.back();
    const double d1 = std::sqrt(1.0 - r1), d2 = std::sqrt(1.0 - r2);
    if (!(d1 > d2)) return v2;
    const double c = (v2 - v1) / (d1 - d2);
    return v2 + c * d2;
}

/// Strictness policy for "sup F < threshold" on the open disc.
inline HypothesisStatus judge_upper_bound(const ScanResult& s, double threshold, double margin) {
    if (!(s.extremum <= threshold - margin)) return HypothesisStatus::Fails;
    if (s.tail_flag && boundary_extrapolation(s) >= threshold - margin) return HypothesisStatus::BoundaryLimit;
    return HypothesisStatus::Holds;
}

struct CriterionReport {
    CriterionId criterion;
    double threshold = 0.0;
    ScanResult hypothesis_scan;
    HypothesisStatus hypothesis_status = HypothesisStatus::Fails;
    ScanResult conclusion_scan;
    ConclusionStatus conclusion_status = ConclusionStatus::Undetermined;
    bool implication_consistent = true;
    /// Set when f or f' vanished on the grid; scans then carry only this point.
    std::optional<Complex> pole;
};

inline CriterionReport certify(const SampledFunction& s, const CriterionId& c, const CertifyOptions& opts = {}) {
    c.validate();
    if (!is_normalized(s.function())) throw NotNormalized(s.function().name());
    CriterionReport rep;
    rep.criterion = c;
    rep.threshold = threshold_of(c);
    const Functional hyp = hypothesis_functional(c);
    const Functional con = conclusion_functional(c);
    if (auto z = s.pole()) {
        // A zero of f or f' makes z f'/f or z f''/f' unbounded nearby.
        rep.pole = z;
        rep.hypothesis_scan.functional = hyp.name();
        rep.hypothesis_scan.extremum = std::numeric_limits<double>::infinity();
        rep.hypothesis_scan.witness = *z;
        rep.hypothesis_status = HypothesisStatus::Fails;
        rep.conclusion_scan.functional = con.name();
        rep.conclusion_scan.mode = Extremum::Inf;
        rep.conclusion_scan.extremum = std::numeric_limits<double>::quiet_NaN();
        rep.conclusion_scan.witness = *z;
        rep.conclusion_status = ConclusionStatus::Undetermined;
        return rep;
    }
    rep.hypothesis_scan = scan_sup(s, hyp);
    rep.hypothesis_status = judge_upper_bound(rep.hypothesis_scan, rep.threshold, opts.margin);
    rep.conclusion_scan = scan_inf(s, con);
    rep.conclusion_status = rep.conclusion_scan.extremum >= -opts.conclusion_tol ? ConclusionStatus::Observed
                                                                                  : ConclusionStatus::Violated;
    rep.implication_consistent =
        !(rep.hypothesis_status == HypothesisStatus::Holds && rep.conclusion_status == ConclusionStatus::Violated);
    return rep;
}

inline CriterionReport certify(const AnalyticFunction& fn, const CriterionId& c, const ScanGrid& grid,
                               const CertifyOptions& opts = {}) {
    c.validate();
    if (!is_normalized(fn)) throw NotNormalized(fn.name());
    return certify(SampledFunction(fn, grid), c, opts);
}

/// Re(1 + z f''/f') < 3/2 on the disc.
struct ClassGReport {
    HypothesisStatus status = HypothesisStatus::Fails;
    ScanResult scan;
};

inline constexpr double kClassGBound = 1.5;

inline ClassGReport class_g_membership(const SampledFunction& s, double margin = 1e-9) {
    ClassGReport rep;
    rep.scan = scan_sup(s, Functional::re_convex());
    rep.status = judge_upper_bound(rep.scan, kClassGBound, margin);
    return rep;
}

inline ClassGReport class_g_membership(const AnalyticFunction& fn, const ScanGrid& grid, double margin = 1e-9) {
    return class_g_membership(SampledFunction(fn, grid), margin);
}

}  // namespace starcert

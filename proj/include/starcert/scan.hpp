#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starcert/catalog.hpp"
#include "starcert/errors.hpp"

namespace starcert {

/// Principal argument in (-pi, pi]; the negative real axis maps to +pi.
inline double principal_arg(Complex w) {
    if (std::abs(w) < 1e-300) throw ArgOfZero();
    if (w.imag() == 0.0 && w.real() < 0.0) return std::numbers::pi;
    return std::atan2(w.imag(), w.real());
}

/// A real-valued map (f, z) -> R built from the quantities of f at z.
struct Functional {
    enum class Kind {
        ArgShiftedConvex,  ///< |arg(alpha + z f''/f')|
        ArgBeta,           ///< |arg((3 - 2 beta)/2 - z f''/f')|
        ArgGamma,          ///< |arg(z f'/f + gamma)|
        ReStar,            ///< Re(z f'/f)
        ReConvex,          ///< Re(1 + z f''/f')
        ReHalf,            ///< Re(f/z)
        ModPreSchwarz,     ///< |z f''/f'|
        ModStarDev,        ///< |z f'/f - 1|
    };

    Kind kind;
    double param = 0.0;

    static Functional arg_shifted_convex(double alpha) { return {Kind::ArgShiftedConvex, alpha}; }
    static Functional arg_beta(double beta) { return {Kind::ArgBeta, beta}; }
    static Functional arg_gamma(double gamma) { return {Kind::ArgGamma, gamma}; }
    static Functional re_star() { return {Kind::ReStar}; }
    static Functional re_convex() { return {Kind::ReConvex}; }
    static Functional re_half() { return {Kind::ReHalf}; }
    static Functional mod_pre_schwarz() { return {Kind::ModPreSchwarz}; }
    static Functional mod_star_dev() { return {Kind::ModStarDev}; }

    bool is_arg() const {
        return kind == Kind::ArgShiftedConvex || kind == Kind::ArgBeta || kind == Kind::ArgGamma;
    }

    /// The complex quantity whose argument an arg functional measures.
    Complex shifted(const Quantities& q) const {
        switch (kind) {
            case Kind::ArgShiftedConvex: return param + q.pre_schwarz();
            case Kind::ArgBeta: return (3.0 - 2.0 * param) / 2.0 - q.pre_schwarz();
            case Kind::ArgGamma: return q.star_quot + param;
            default: throw std::logic_error("shifted() called on a non-arg functional");
        }
    }

    struct Value {
        double value;
        /// The shifted quantity left the right half-plane, where |arg| >= pi/2.
        bool region_exit = false;
    };

    Value evaluate(const Quantities& q) const {
        switch (kind) {
            case Kind::ReStar: return {q.star_quot.real()};
            case Kind::ReConvex: return {q.convexity.real()};
            case Kind::ReHalf: return {q.half_quot.real()};
            case Kind::ModPreSchwarz: return {std::abs(q.pre_schwarz())};
            case Kind::ModStarDev: return {std::abs(q.star_quot - 1.0)};
            default: break;
        }
        const Complex w = shifted(q);
        if (std::abs(w) < 1e-300) return {std::numbers::pi, true};
        return {std::abs(principal_arg(w)), w.real() <= 0.0};
    }

    double operator()(const AnalyticFunction& fn, Complex z) const {
        return evaluate(compute_quantities(fn, z)).value;
    }

    std::string name() const {
        switch (kind) {
            case Kind::ArgShiftedConvex: return "ARG_SHIFTED_CONVEX";
            case Kind::ArgBeta: return "ARG_BETA";
            case Kind::ArgGamma: return "ARG_GAMMA";
            case Kind::ReStar: return "RE_STAR";
            case Kind::ReConvex: return "RE_CONVEX";
            case Kind::ReHalf: return "RE_HALF";
            case Kind::ModPreSchwarz: return "MOD_PRE_SCHWARZ";
            case Kind::ModStarDev: return "MOD_STAR_DEV";
        }
        return {};
    }

    friend bool operator==(const Functional&, const Functional&) = default;
};

inline Functional parse_functional(const std::string& name, double param = 0.0) {
    using K = Functional::Kind;
    for (K k : {K::ArgShiftedConvex, K::ArgBeta, K::ArgGamma, K::ReStar, K::ReConvex, K::ReHalf,
                K::ModPreSchwarz, K::ModStarDev}) {
        Functional f{k, param};
        if (f.name() == name) return f;
    }
    throw std::invalid_argument("unknown functional '" + name + "'");
}

/// Circles |z| = r sampled at equally spaced angles.
struct ScanGrid {
    std::vector<double> radii;
    int thetas_per_circle = 2048;
    int refine_iters = 40;
    double r_max = kEvalRadius;
    /// Sample theta in [0, pi] only (enough for real-coefficient functions).
    bool upper_half = false;

    void validate() const {
        if (radii.empty()) throw std::invalid_argument("scan grid: no radii");
        if (!(r_max > 0.0 && r_max < 1.0)) throw std::invalid_argument("scan grid: r_max must lie in (0, 1)");
        for (std::size_t i = 0; i < radii.size(); ++i) {
            if (!(radii[i] > 0.0 && radii[i] <= r_max))
                throw std::invalid_argument("scan grid: radius outside (0, r_max]");
            if (i > 0 && !(radii[i] > radii[i - 1])) throw std::invalid_argument("scan grid: radii not ascending");
        }
        if (thetas_per_circle < (upper_half ? 2 : 1)) throw std::invalid_argument("scan grid: too few angles");
        if (refine_iters < 0) throw std::invalid_argument("scan grid: negative refine_iters");
    }

    double theta(int j) const {
        return upper_half ? std::numbers::pi * j / (thetas_per_circle - 1)
                          : 2.0 * std::numbers::pi * j / thetas_per_circle;
    }
};

/// Radii 0.1, ..., 0.9, 0.95, 0.99, 0.999 capped at r_max (r_max itself is
/// appended when it is not already the last radius).
inline ScanGrid default_grid(double r_max = kEvalRadius) {
    ScanGrid g;
    g.r_max = r_max;
    for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999})
        if (r <= r_max) g.radii.push_back(r);
    if (g.radii.empty() || g.radii.back() < r_max) g.radii.push_back(r_max);
    return g;
}

enum class Extremum { Sup, Inf };

struct ScanResult {
    std::string functional;
    Extremum mode = Extremum::Sup;
    double extremum = 0.0;
    Complex witness;
    std::vector<std::pair<double, double>> per_radius;
    bool refined = false;
    /// Per-radius extremum still strictly moving outward at the last radius.
    bool tail_flag = false;
    /// An arg functional met a point with Re <= 0 of its shifted quantity.
    bool region_exit = false;
};

/// Quantities of one function sampled on a grid, reusable across functionals.
class SampledFunction {
public:
    SampledFunction(AnalyticFunction fn, ScanGrid grid) : fn_(std::move(fn)), grid_(std::move(grid)) {
        grid_.validate();
        values_.resize(grid_.radii.size());
        for (std::size_t i = 0; i < grid_.radii.size() && !pole_; ++i) {
            auto& row = values_[i];
            row.reserve(grid_.thetas_per_circle);
            for (int j = 0; j < grid_.thetas_per_circle; ++j) {
                const Complex z = std::polar(grid_.radii[i], grid_.theta(j));
                try {
                    row.push_back(compute_quantities(fn_, z));
                } catch (const PoleSuspected& e) {
                    pole_ = e.z;
                    break;
                }
            }
        }
    }

    const AnalyticFunction& function() const { return fn_; }
    const ScanGrid& grid() const { return grid_; }
    const Quantities& at(std::size_t radius, int theta) const { return values_[radius][theta]; }
    /// First grid point (radius-major order) where f or f' vanished.
    std::optional<Complex> pole() const { return pole_; }

private:
    AnalyticFunction fn_;
    ScanGrid grid_;
    std::vector<std::vector<Quantities>> values_;
    std::optional<Complex> pole_;
};

namespace detail {

inline double wrap_angle(double t) {
    const double two_pi = 2.0 * std::numbers::pi;
    t = std::fmod(t, two_pi);
    if (t < 0.0) t += two_pi;
    return t;
}

struct CircleBest {
    double value;
    double theta;
};

// `better(a, b)`: a strictly improves on b.
inline bool better(Extremum mode, double a, double b) { return mode == Extremum::Sup ? a > b : a < b; }

inline CircleBest scan_circle(const SampledFunction& s, const Functional& F, Extremum mode, std::size_t ri,
                              bool& region_exit) {
    const ScanGrid& g = s.grid();
    const int n = g.thetas_per_circle;
    int best_j = 0;
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        const auto v = F.evaluate(s.at(ri, j));
        region_exit = region_exit || v.region_exit;
        if (j == 0 || better(mode, v.value, best)) {
            best = v.value;
            best_j = j;
        }
    }
    CircleBest out{best, g.theta(best_j)};
    if (g.refine_iters == 0 || n < 2) return out;

    const double r = g.radii[ri];
    double lo = g.theta(best_j - 1 < 0 ? 0 : best_j - 1);
    double hi = g.theta(best_j + 1 >= n ? n - 1 : best_j + 1);
    if (!g.upper_half) {
        // the bracket wraps around the circle
        const double step = 2.0 * std::numbers::pi / n;
        lo = out.theta - step;
        hi = out.theta + step;
    }
    auto eval = [&](double t) { return F(s.function(), std::polar(r, t)); };
    auto consider = [&](double t, double v) {
        const double tw = g.upper_half ? t : wrap_angle(t);
        if (better(mode, v, out.value) || (v == out.value && tw < out.theta)) out = {v, tw};
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = eval(c), fd = eval(d);
    consider(c, fc);
    consider(d, fd);
    for (int it = 0; it < g.refine_iters; ++it) {
        if (better(mode, fc, fd) || fc == fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d);
            consider(d, fd);
        }
    }
    return out;
}

}  // namespace detail

/// Extremum of F over the sampled circles, each polished by golden-section
/// search around its coarse optimum.
inline ScanResult scan(const SampledFunction& s, const Functional& F, Extremum mode) {
    if (auto z = s.pole()) throw PoleSuspected(*z);
    const ScanGrid& g = s.grid();
    ScanResult res;
    res.functional = F.name();
    res.mode = mode;
    res.refined = g.refine_iters > 0;
    for (std::size_t i = 0; i < g.radii.size(); ++i) {
        const auto best = detail::scan_circle(s, F, mode, i, res.region_exit);
        res.per_radius.emplace_back(g.radii[i], best.value);
        // ties keep the smaller radius
        if (i == 0 || detail::better(mode, best.value, res.extremum)) {
            res.extremum = best.value;
            res.witness = std::polar(g.radii[i], best.theta);
        }
    }
    const auto& pr = res.per_radius;
    const std::size_t n = pr.size();
    auto moving = [&](std::size_t k) {
        const double tol = 1e-12 * (1.0 + std::abs(pr[k].second));
        return mode == Extremum::Sup ? pr[k].second > pr[k - 1].second + tol
                                     : pr[k].second < pr[k - 1].second - tol;
    };
    if (n >= 3) res.tail_flag = moving(n - 1) && moving(n - 2);
    else if (n == 2) res.tail_flag = moving(1);
    return res;
}

inline ScanResult scan_sup(const SampledFunction& s, const Functional& F) { return scan(s, F, Extremum::Sup); }
inline ScanResult scan_inf(const SampledFunction& s, const Functional& F) { return scan(s, F, Extremum::Inf); }

inline ScanResult scan_sup(const AnalyticFunction& fn, const Functional& F, const ScanGrid& grid) {
    return scan(SampledFunction(fn, grid), F, Extremum::Sup);
}

inline ScanResult scan_inf(const AnalyticFunction& fn, const Functional& F, const ScanGrid& grid) {
    return scan(SampledFunction(fn, grid), F, Extremum::Inf);
}

}  // namespace starcert

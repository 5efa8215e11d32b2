#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starcert/errors.hpp"
#include "starcert/quadrature.hpp"
#include "starcert/series.hpp"

namespace starcert {

/// f, f', f'' at one point.
struct Jet {
    Complex f;
    Complex fp;
    Complex fpp;
};

/// The three quantities every criterion is built from.
struct Quantities {
    Complex star_quot;  ///< z f'(z) / f(z)
    Complex convexity;  ///< 1 + z f''(z) / f'(z)
    Complex half_quot;  ///< f(z) / z

    /// z f''(z) / f'(z)
    Complex pre_schwarz() const { return convexity - 1.0; }
};

using ScalarFn = std::function<Complex(Complex)>;
using JetFn = std::function<Jet(Complex)>;

/// A function h with h(0) = 1 given by closed form, derivative and series.
/// Used as 1 + z f''/f' or as z f'/f when building functions.
struct Profile {
    std::string name;
    ScalarFn value;
    ScalarFn derivative;
    TaylorSeries series;
};

/// Mobius-power kernel M_p(z) = ((1+z)/(1-z))^p on the principal branch.
///
/// (1+z)/(1-z) maps the disc onto Re w > 0, so the principal log never
/// meets its cut.
class MobiusPower {
public:
    explicit MobiusPower(double p) : p_(p) {
        if (!(std::abs(p) <= 2.0)) throw ParameterOutOfRange("mobius_power: |p| must not exceed 2");
    }

    double exponent() const { return p_; }

    Complex operator()(Complex z) const { return std::exp(p_ * std::log((1.0 + z) / (1.0 - z))); }

    /// M_p'(z) = M_p(z) * 2p / (1 - z^2)
    Complex derivative(Complex z) const { return (*this)(z) * (2.0 * p_) / (1.0 - z * z); }

    TaylorSeries series(int order) const {
        const TaylorSeries cayley = div(TaylorSeries({1.0, 1.0}, order), TaylorSeries({1.0, -1.0}, order));
        return pow_series(cayley, p_);
    }

private:
    double p_;
};

inline MobiusPower mobius_power(double p) { return MobiusPower(p); }

/// Profile a*M_p + b, which equals 1 at the origin when a + b = 1.
inline Profile mobius_profile(std::string name, double a, double p, double b, int order) {
    const MobiusPower m(p);
    return Profile{std::move(name),
                   [m, a, b](Complex z) { return a * m(z) + b; },
                   [m, a](Complex z) { return a * m.derivative(z); },
                   shift(scale(m.series(order), a), b)};
}

enum class Representation { Auto, ClosedForm, Series };

/// A member of the class A (f(0) = 0, f'(0) = 1) with a closed-form jet,
/// a Taylor series, or both.
class AnalyticFunction {
public:
    AnalyticFunction(std::string name, std::map<std::string, double> params, std::string formula,
                     std::optional<JetFn> closed_form, std::optional<TaylorSeries> series)
        : name_(std::move(name)),
          params_(std::move(params)),
          formula_(std::move(formula)),
          closed_form_(std::move(closed_form)) {
        if (!closed_form_ && !series) throw std::invalid_argument("AnalyticFunction needs a representation");
        if (series) {
            auto s = std::make_shared<SeriesJet>();
            s->f = *series;
            s->fp = derivative(s->f);
            s->fpp = derivative(s->fp);
            series_ = std::move(s);
        }
    }

    const std::string& name() const { return name_; }
    const std::map<std::string, double>& params() const { return params_; }
    const std::string& formula() const { return formula_; }
    bool has_closed_form() const { return closed_form_.has_value(); }
    bool has_series() const { return series_ != nullptr; }
    const TaylorSeries& series() const {
        if (!series_) throw std::logic_error(name_ + " has no series");
        return series_->f;
    }

    Jet jet(Complex z, Representation rep = Representation::Auto) const {
        if (std::abs(z) > kEvalRadius * (1.0 + 1e-12)) throw RadiusOutOfRange(std::abs(z));
        const bool closed = rep == Representation::ClosedForm ||
                            (rep == Representation::Auto && closed_form_.has_value());
        if (closed) {
            if (!closed_form_) throw std::logic_error(name_ + " has no closed form");
            return (*closed_form_)(z);
        }
        if (!series_) throw std::logic_error(name_ + " has no series");
        return {evaluate(series_->f, z).value, evaluate(series_->fp, z).value, evaluate(series_->fpp, z).value};
    }

    Complex f(Complex z, Representation rep = Representation::Auto) const { return jet(z, rep).f; }

private:
    struct SeriesJet {
        TaylorSeries f, fp, fpp;
    };

    std::string name_;
    std::map<std::string, double> params_;
    std::string formula_;
    std::optional<JetFn> closed_form_;
    std::shared_ptr<const SeriesJet> series_;
};

/// |f| or |f'| below this at z != 0 raises PoleSuspected.
inline constexpr double kVanishingTol = 1e-12;

/// z f'/f, 1 + z f''/f', f/z at z; all equal 1 at the origin.
inline Quantities compute_quantities(const AnalyticFunction& fn, Complex z,
                                     Representation rep = Representation::Auto) {
    if (z == Complex{}) return {1.0, 1.0, 1.0};
    const Jet j = fn.jet(z, rep);
    if (std::abs(j.f) < kVanishingTol || std::abs(j.fp) < kVanishingTol) throw PoleSuspected(z);
    return {z * j.fp / j.f, 1.0 + z * j.fpp / j.fp, j.f / z};
}

inline constexpr double kProfileTol = 1e-10;

/// f with 1 + z f''/f' = h: f' = exp(int_0^z (h-1)/t dt), f = int_0^z f'.
inline AnalyticFunction from_convexity_profile(const Profile& h, std::string name,
                                               std::map<std::string, double> params = {},
                                               std::string formula = {}) {
    if (std::abs(h.value(0.0) - 1.0) > kProfileTol || std::abs(h.series[0] - 1.0) > kProfileTol)
        throw ProfileNotNormalized();
    TaylorSeries hs = h.series;
    hs[0] = 1.0;
    const TaylorSeries fp = exp_series(integrate_g_over_t(shift(hs, -1.0)));
    const TaylorSeries f = antiderivative(fp).truncated(hs.order());
    const Complex h1 = hs[1];
    auto value = h.value;
    JetFn closed = [value, h1](Complex z) -> Jet {
        if (z == Complex{}) return {0.0, 1.0, h1};
        auto q = [&value](Complex t) { return (value(t) - 1.0) / t; };
        const auto nested = quadrature::integrate_radial_nested(q, z);
        const Complex fp = std::exp(nested.primitive);
        return {nested.outer, fp, fp * (value(z) - 1.0) / z};
    };
    if (formula.empty()) formula = "1 + z f''/f' = " + h.name;
    return AnalyticFunction(std::move(name), std::move(params), std::move(formula), std::move(closed), f);
}

/// f with z f'/f = g: f = z exp(int_0^z (g-1)/t dt).
inline AnalyticFunction from_starlike_profile(const Profile& g, std::string name,
                                              std::map<std::string, double> params = {},
                                              std::string formula = {}) {
    if (std::abs(g.value(0.0) - 1.0) > kProfileTol || std::abs(g.series[0] - 1.0) > kProfileTol)
        throw ProfileNotNormalized();
    if (!g.derivative) throw std::invalid_argument("from_starlike_profile needs g'");
    TaylorSeries gs = g.series;
    gs[0] = 1.0;
    const TaylorSeries f = mul(TaylorSeries::z(gs.order()), exp_series(integrate_g_over_t(shift(gs, -1.0))));
    const Complex g1 = gs[1];
    auto value = g.value;
    auto dvalue = g.derivative;
    JetFn closed = [value, dvalue, g1](Complex z) -> Jet {
        if (z == Complex{}) return {0.0, 1.0, 2.0 * g1};
        auto q = [&value](Complex t) { return (value(t) - 1.0) / t; };
        const Complex e = std::exp(quadrature::integrate_radial(q, z));
        const Complex gz = value(z);
        const Complex fp = e * gz;
        // 1 + z f''/f' = g + z g'/g
        return {z * e, fp, fp * ((gz - 1.0) / z + dvalue(z) / gz)};
    };
    if (formula.empty()) formula = "z f'/f = " + g.name;
    return AnalyticFunction(std::move(name), std::move(params), std::move(formula), std::move(closed), f);
}

inline AnalyticFunction identity(int order = default_series_order()) {
    JetFn closed = [](Complex z) -> Jet { return {z, 1.0, 0.0}; };
    return AnalyticFunction("identity", {}, "f(z) = z", std::move(closed), TaylorSeries::z(order));
}

/// Koebe function z / (1 - z)^2.
inline AnalyticFunction koebe(int order = default_series_order()) {
    JetFn closed = [](Complex z) -> Jet {
        const Complex w = 1.0 - z;
        return {z / (w * w), (1.0 + z) / (w * w * w), 2.0 * (2.0 + z) / (w * w * w * w)};
    };
    std::vector<Complex> c(order + 1);
    for (int k = 0; k <= order; ++k) c[k] = static_cast<double>(k);
    return AnalyticFunction("koebe", {}, "k(z) = z/(1-z)^2", std::move(closed), TaylorSeries(std::move(c)));
}

/// e^z - 1, the function with 1 + z f''/f' = 1 + z.
inline AnalyticFunction exp_minus_one(int order = default_series_order()) {
    JetFn closed = [](Complex z) -> Jet {
        const Complex e = std::exp(z);
        return {e - 1.0, e, e};
    };
    return AnalyticFunction("exp_minus_one", {}, "f(z) = e^z - 1", std::move(closed),
                            shift(exp_series(TaylorSeries::z(order)), -1.0));
}

/// z - z^2/4, for which 1 + z f''/f' = (1-z)/(1-z/2) stays below 3/2.
inline AnalyticFunction quadratic_g(int order = default_series_order()) {
    JetFn closed = [](Complex z) -> Jet { return {z - 0.25 * z * z, 1.0 - 0.5 * z, -0.5}; };
    return AnalyticFunction("quadratic_g", {}, "f(z) = z - z^2/4", std::move(closed),
                            TaylorSeries({0.0, 1.0, -0.25}, order));
}

inline constexpr double kSqrt3 = std::numbers::sqrt3;

/// 1 + z f''/f' = (sqrt3 + 1) M_{1/2}(z) - sqrt3.
inline AnalyticFunction paper_example_1(int order = default_series_order()) {
    const Profile h = mobius_profile("(sqrt3+1)((1+z)/(1-z))^(1/2) - sqrt3", kSqrt3 + 1.0, 0.5, -kSqrt3, order);
    return from_convexity_profile(h, "paper_example_1", {{"alpha", kSqrt3 + 1.0}});
}

/// z f'/f = sqrt3 M_{1/3}(z) + 1 - sqrt3.
inline AnalyticFunction paper_example_2(int order = default_series_order()) {
    const Profile g = mobius_profile("sqrt3((1+z)/(1-z))^(1/3) + 1 - sqrt3", kSqrt3, 1.0 / 3.0, 1.0 - kSqrt3, order);
    return from_starlike_profile(g, "paper_example_2", {{"gamma", kSqrt3 - 1.0}});
}

/// Series-only function, e.g. loaded from a coefficient file.
inline AnalyticFunction from_series(std::string name, TaylorSeries s) {
    std::string formula = "Taylor series of order " + std::to_string(s.order());
    return AnalyticFunction(std::move(name), {}, std::move(formula), std::nullopt, std::move(s));
}

inline std::vector<std::string> catalog_names() {
    return {"identity", "koebe", "paper_example_1", "paper_example_2", "exp_minus_one", "quadratic_g"};
}

inline AnalyticFunction catalog_function(const std::string& name, int order = default_series_order()) {
    if (name == "identity") return identity(order);
    if (name == "koebe") return koebe(order);
    if (name == "paper_example_1") return paper_example_1(order);
    if (name == "paper_example_2") return paper_example_2(order);
    if (name == "exp_minus_one") return exp_minus_one(order);
    if (name == "quadratic_g") return quadratic_g(order);
    throw std::invalid_argument("unknown catalog function '" + name + "'");
}

inline std::vector<AnalyticFunction> catalog(int order = default_series_order()) {
    std::vector<AnalyticFunction> out;
    for (const auto& n : catalog_names()) out.push_back(catalog_function(n, order));
    return out;
}

/// True when f(0) = 0 and f'(0) = 1 within tol in every available representation.
inline bool is_normalized(const AnalyticFunction& fn, double tol = 1e-10) {
    auto ok = [tol](const Jet& j) { return std::abs(j.f) <= tol && std::abs(j.fp - 1.0) <= tol; };
    if (fn.has_closed_form() && !ok(fn.jet(0.0, Representation::ClosedForm))) return false;
    if (fn.has_series() && !ok(fn.jet(0.0, Representation::Series))) return false;
    return true;
}

}  // namespace starcert

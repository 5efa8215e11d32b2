#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "starcert/catalog.hpp"
#include "starcert/errors.hpp"

namespace starcert::geometry {

/// Closed sector |arg w| <= half_angle.
struct Sector {
    double half_angle;
};

/// Closed disc |w - center| <= radius with a positive real center.
struct Disc {
    double center;
    double radius;
};

/// A disc with c > 0 lies in the sector iff radius <= c sin(half_angle).
inline bool disc_in_sector(const Disc& d, const Sector& s) {
    if (!(d.center > 0.0) || !(d.radius >= 0.0)) throw ParameterOutOfRange("disc needs center > 0, radius >= 0");
    if (!(s.half_angle > 0.0 && s.half_angle <= std::numbers::pi / 2.0))
        throw ParameterOutOfRange("sector half-angle must lie in (0, pi/2]");
    return d.radius <= d.center * std::sin(s.half_angle);
}

/// Same question answered by checking |arg| on `samples` boundary points.
/// Points within 1e-300 of the vertex count as inside.
inline bool disc_in_sector_sampled(const Disc& d, const Sector& s, int samples = 360) {
    for (int k = 0; k < samples; ++k) {
        const Complex w = d.center + std::polar(d.radius, 2.0 * std::numbers::pi * k / samples);
        if (std::abs(w) < 1e-300) continue;
        if (std::abs(std::arg(w)) > s.half_angle) return false;
    }
    return true;
}

/// Radius of the disc about alpha inside |arg w| < arctan(sqrt3/(alpha-1)).
inline double phi_alpha(double alpha) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha)) throw ParameterOutOfRange("phi_alpha requires alpha >= 1");
    return alpha * kSqrt3 / std::sqrt(3.0 + (alpha - 1.0) * (alpha - 1.0));
}

/// Radius of the disc about (3-2beta)/2 inside |arg w| <= arctan(2sqrt3/(5-2beta)).
inline double psi_beta(double beta) {
    if (!(beta <= 1.0) || !std::isfinite(beta)) throw ParameterOutOfRange("psi_beta requires beta <= 1");
    const double a = 5.0 - 2.0 * beta;
    return (3.0 - 2.0 * beta) * kSqrt3 / std::sqrt(12.0 + a * a);
}

/// Radius of the disc about 1+gamma inside |arg w| <= arctan(1/(1+gamma)).
inline double rho_gamma(double gamma) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ParameterOutOfRange("rho_gamma requires gamma >= 0");
    return (1.0 + gamma) / std::sqrt(1.0 + (1.0 + gamma) * (1.0 + gamma));
}

/// Golden-section search for the minimum of a unimodal f on [a, b].
template <class F>
double golden_section_min(F&& f, double a, double b, double tol = 1e-12) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

struct ScalarMin {
    double argmin;
    double min;
    double numeric_argmin;
    double numeric_min;
};

/// min over a > 0 of 3a + 1/a: 2 sqrt3 at a = 1/sqrt3.
///
/// The numeric route brackets with golden-section search on (0, 10] and then
/// bisects the sign of the derivative 3 - 1/a^2, since values alone cannot
/// resolve the minimiser below ~1e-8.
inline ScalarMin varphi_scalar_min() {
    auto f = [](double a) { return 3.0 * a + 1.0 / a; };
    const double guess = golden_section_min(f, 1e-9, 10.0, 1e-9);
    double lo = std::max(1e-9, guess - 1e-4), hi = guess + 1e-4;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (3.0 - 1.0 / (mid * mid) < 0.0 ? lo : hi) = mid;
    }
    const double a = 0.5 * (lo + hi);
    return {1.0 / kSqrt3, 2.0 * kSqrt3, a, f(a)};
}

struct LemmaAWitness {
    Complex z0;
    double a;      ///< p(z0) = i a
    double k;      ///< z0 p'(z0)/p(z0) = i k
    double bound;  ///< (a + 1/a)/2 for a > 0, -(|a| + 1/|a|)/2 for a < 0
    double equality_gap;
    double re_p_z0;    ///< Re p(z0), zero up to rounding
    double re_log_deriv;   ///< Re(z0 p'/p), zero up to rounding
};

/// Equality case of the boundary-touch lemma for p(z) = (rho + z)/(rho - z).
///
/// Re p > 0 on |z| < rho and Re p = 0 on |z| = rho; the first touch point
/// z0 = rho e^{i theta} has p(z0) = i cot(theta/2) and z0 p'/p = i / sin(theta).
inline LemmaAWitness lemma_a_witness(double rho, double theta) {
    if (!(rho > 0.0 && rho < 1.0)) throw ParameterOutOfRange("lemma_a_witness requires 0 < rho < 1");
    const double t = std::fmod(std::fmod(theta, 2.0 * std::numbers::pi) + 2.0 * std::numbers::pi,
                               2.0 * std::numbers::pi);
    const double eps = 1e-9;
    if (t < eps || std::abs(t - std::numbers::pi) < eps || 2.0 * std::numbers::pi - t < eps) throw DegenerateAngle();
    const Complex z0 = std::polar(rho, theta);
    const Complex p = (rho + z0) / (rho - z0);
    const Complex dp = 2.0 * rho / ((rho - z0) * (rho - z0));
    const Complex ld = z0 * dp / p;
    LemmaAWitness w;
    w.z0 = z0;
    w.a = p.imag();
    w.k = ld.imag();
    w.re_p_z0 = p.real();
    w.re_log_deriv = ld.real();
    const double m = std::abs(w.a);
    w.bound = (w.a > 0.0 ? 0.5 : -0.5) * (m + 1.0 / m);
    w.equality_gap = w.k - w.bound;
    return w;
}

}  // namespace starcert::geometry

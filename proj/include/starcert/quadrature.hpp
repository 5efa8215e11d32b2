#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "starcert/errors.hpp"

namespace starcert::quadrature {

/// Legendre polynomial P_n(x) and its derivative by the three-term recurrence.
inline std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

/// N-point Gauss-Legendre rule on [-1, 1] plus the spectral integration
/// matrix: integral[i][j] weights sample j for the integral from -1 to node i
/// of the degree N-1 interpolant.
template <int N>
struct GaussLegendre {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};
    std::array<std::array<double, N>, N> integral{};

    GaussLegendre() {
        for (int i = 0; i < N; ++i) {
            // Tricomi initial guess, then Newton.
            double x = std::cos(std::numbers::pi * (4.0 * (i + 1) - 1.0) / (4.0 * N + 2.0));
            for (int it = 0; it < 100; ++it) {
                const auto [p, dp] = legendre(N, x);
                const double dx = p / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            const double dp = legendre(N, x).second;
            nodes[N - 1 - i] = x;
            weights[N - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        // l_j(s) = w_j sum_n (2n+1)/2 P_n(x_j) P_n(s); int_{-1}^{x} P_n = (P_{n+1} - P_{n-1})/(2n+1).
        for (int i = 0; i < N; ++i) {
            std::array<double, N + 1> pi{};
            for (int n = 0; n <= N; ++n) pi[n] = legendre(n, nodes[i]).first;
            for (int j = 0; j < N; ++j) {
                double acc = 0.5 * (nodes[i] + 1.0);
                for (int n = 1; n < N; ++n) acc += 0.5 * legendre(n, nodes[j]).first * (pi[n + 1] - pi[n - 1]);
                integral[i][j] = weights[j] * acc;
            }
        }
    }
};

inline const GaussLegendre<16>& gl16() {
    static const GaussLegendre<16> rule;
    return rule;
}

/// Panel length away from the unit circle.
inline constexpr double kPanelLength = 0.05;

/// Breakpoints 0 = u_0 < ... < u_m = r along a radius of the unit disc.
///
/// Panels have length min(0.05, (1 - u)/2), so they shrink geometrically as
/// the path approaches the circle where the integrands become singular.
inline std::vector<double> radial_breakpoints(double r) {
    std::vector<double> u{0.0};
    if (r <= 0.0) return u;
    while (u.back() < r) {
        const double step = std::min(kPanelLength, 0.5 * (1.0 - u.back()));
        double next = u.back() + step;
        if (next > r - 1e-3 * step) next = r;
        u.push_back(next);
    }
    return u;
}

/// Integral of q(t) dt along the segment [0, z].
template <class Integrand>
Complex integrate_radial(Integrand&& q, Complex z) {
    const double r = std::abs(z);
    if (r == 0.0) return {};
    const Complex dir = z / r;
    const auto& gl = gl16();
    const auto u = radial_breakpoints(r);
    Complex total{};
    for (std::size_t p = 0; p + 1 < u.size(); ++p) {
        const double half = 0.5 * (u[p + 1] - u[p]);
        const double mid = 0.5 * (u[p + 1] + u[p]);
        Complex acc{};
        for (int i = 0; i < 16; ++i) acc += gl.weights[i] * q(dir * (mid + half * gl.nodes[i]));
        total += half * acc;
    }
    return total * dir;
}

/// Result of integrating an exponentiated primitive along [0, z].
struct NestedIntegral {
    Complex primitive;  ///< L(z) = int_0^z q(t) dt
    Complex outer;      ///< int_0^z exp(L(t)) dt
};

/// Computes L(z) = int_0^z q and int_0^z exp(L(t)) dt in one sweep.
///
/// L at the quadrature nodes of each panel comes from the spectral
/// integration matrix, so q is sampled once per node.
template <class Integrand>
NestedIntegral integrate_radial_nested(Integrand&& q, Complex z) {
    const double r = std::abs(z);
    if (r == 0.0) return {};
    const Complex dir = z / r;
    const auto& gl = gl16();
    const auto u = radial_breakpoints(r);
    Complex base{};
    Complex outer{};
    std::array<Complex, 16> qv{};
    for (std::size_t p = 0; p + 1 < u.size(); ++p) {
        const double half = 0.5 * (u[p + 1] - u[p]);
        const double mid = 0.5 * (u[p + 1] + u[p]);
        for (int i = 0; i < 16; ++i) qv[i] = q(dir * (mid + half * gl.nodes[i]));
        Complex panel_outer{};
        Complex panel_total{};
        for (int i = 0; i < 16; ++i) {
            Complex partial{};
            for (int j = 0; j < 16; ++j) partial += gl.integral[i][j] * qv[j];
            panel_outer += gl.weights[i] * std::exp(base + half * dir * partial);
            panel_total += gl.weights[i] * qv[i];
        }
        outer += half * dir * panel_outer;
        base += half * dir * panel_total;
    }
    return {base, outer};
}

}  // namespace starcert::quadrature

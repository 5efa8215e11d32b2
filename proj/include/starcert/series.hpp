#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starcert/errors.hpp"

namespace starcert {

/// Largest |z| at which functions and series may be evaluated.
inline constexpr double kEvalRadius = 0.999;

/// Tolerance for "constant term equals 0" / "equals 1" preconditions.
inline constexpr double kConstantTermTol = 1e-14;

/// Truncation order used when no order is given. STARCERT_ORDER overrides it.
inline int default_series_order() {
    if (const char* env = std::getenv("STARCERT_ORDER")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 512;
}

/// Truncated complex power series sum_{k=0}^{N} c_k z^k.
///
/// Binary operations truncate to the smaller operand order.
class TaylorSeries {
public:
    TaylorSeries() : coeffs_(1, Complex{}) {}

    explicit TaylorSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TaylorSeries needs at least one coefficient");
    }

    TaylorSeries(std::initializer_list<Complex> coeffs, int order)
        : coeffs_(static_cast<std::size_t>(order) + 1, Complex{}) {
        std::copy_n(coeffs.begin(), std::min<std::size_t>(coeffs.size(), coeffs_.size()), coeffs_.begin());
    }

    static TaylorSeries constant(Complex c, int order) { return TaylorSeries({c}, order); }
    /// The series of the coordinate function z.
    static TaylorSeries z(int order) { return TaylorSeries({0.0, 1.0}, order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }
    Complex& operator[](std::size_t k) { return coeffs_.at(k); }

    TaylorSeries truncated(int order) const {
        std::vector<Complex> c(static_cast<std::size_t>(order) + 1, Complex{});
        std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
        return TaylorSeries(std::move(c));
    }

    TaylorSeries& operator*=(Complex a) {
        for (auto& c : coeffs_) c *= a;
        return *this;
    }

private:
    std::vector<Complex> coeffs_;
};

inline TaylorSeries add(const TaylorSeries& s, const TaylorSeries& t) {
    const int n = std::min(s.order(), t.order());
    std::vector<Complex> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = s[k] + t[k];
    return TaylorSeries(std::move(c));
}

inline TaylorSeries sub(const TaylorSeries& s, const TaylorSeries& t) {
    const int n = std::min(s.order(), t.order());
    std::vector<Complex> c(n + 1);
    for (int k = 0; k <= n; ++k) c[k] = s[k] - t[k];
    return TaylorSeries(std::move(c));
}

inline TaylorSeries scale(const TaylorSeries& s, Complex a) {
    TaylorSeries r = s;
    r *= a;
    return r;
}

/// s + a (adds a scalar to the constant term).
inline TaylorSeries shift(const TaylorSeries& s, Complex a) {
    TaylorSeries r = s;
    r[0] += a;
    return r;
}

/// Cauchy product.
inline TaylorSeries mul(const TaylorSeries& s, const TaylorSeries& t) {
    const int n = std::min(s.order(), t.order());
    std::vector<Complex> c(n + 1, Complex{});
    for (int i = 0; i <= n; ++i) {
        if (s[i] == Complex{}) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += s[i] * t[j];
    }
    return TaylorSeries(std::move(c));
}

/// Quotient s / t by the recursive formula; needs t(0) != 0.
inline TaylorSeries div(const TaylorSeries& s, const TaylorSeries& t) {
    if (std::abs(t[0]) <= kConstantTermTol) throw DivisionByZeroConstantTerm();
    const int n = std::min(s.order(), t.order());
    std::vector<Complex> q(n + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc = s[k];
        for (int j = 1; j <= k; ++j) acc -= t[j] * q[k - j];
        q[k] = acc / t[0];
    }
    return TaylorSeries(std::move(q));
}

inline TaylorSeries operator+(const TaylorSeries& s, const TaylorSeries& t) { return add(s, t); }
inline TaylorSeries operator-(const TaylorSeries& s, const TaylorSeries& t) { return sub(s, t); }
inline TaylorSeries operator*(const TaylorSeries& s, const TaylorSeries& t) { return mul(s, t); }
inline TaylorSeries operator/(const TaylorSeries& s, const TaylorSeries& t) { return div(s, t); }
inline TaylorSeries operator*(Complex a, const TaylorSeries& s) { return scale(s, a); }

/// Term-by-term derivative. The order drops by one.
inline TaylorSeries derivative(const TaylorSeries& s) {
    if (s.order() < 1) return TaylorSeries({Complex{}});
    std::vector<Complex> c(s.order());
    for (int k = 0; k < s.order(); ++k) c[k] = static_cast<double>(k + 1) * s[k + 1];
    return TaylorSeries(std::move(c));
}

/// z s'(z) / s(z).
///
/// z s' is formed exactly (coefficients k c_k), so no order is lost.
inline TaylorSeries z_log_derivative(const TaylorSeries& s) {
    if (std::abs(s[0]) <= kConstantTermTol) throw DivisionByZeroConstantTerm();
    std::vector<Complex> zds(s.order() + 1);
    for (int k = 0; k <= s.order(); ++k) zds[k] = static_cast<double>(k) * s[k];
    return div(TaylorSeries(std::move(zds)), s);
}

/// Integral from 0 to z of s(t)/t dt; requires s(0) = 0.
inline TaylorSeries integrate_g_over_t(const TaylorSeries& s) {
    if (std::abs(s[0]) > kConstantTermTol) throw NonvanishingConstantTerm();
    std::vector<Complex> c(s.order() + 1, Complex{});
    for (int k = 1; k <= s.order(); ++k) c[k] = s[k] / static_cast<double>(k);
    return TaylorSeries(std::move(c));
}

/// Antiderivative vanishing at the origin. The order grows by one.
inline TaylorSeries antiderivative(const TaylorSeries& s) {
    std::vector<Complex> c(s.order() + 2, Complex{});
    for (int k = 0; k <= s.order(); ++k) c[k + 1] = s[k] / static_cast<double>(k + 1);
    return TaylorSeries(std::move(c));
}

/// exp(s): E' = s' E, with E_0 = exp(s_0).
inline TaylorSeries exp_series(const TaylorSeries& s) {
    if (!std::isfinite(s[0].real()) || !std::isfinite(s[0].imag()) || std::abs(s[0]) > 700.0)
        throw std::domain_error("exp_series: constant term out of range");
    const int n = s.order();
    std::vector<Complex> e(n + 1);
    e[0] = std::exp(s[0]);
    for (int k = 1; k <= n; ++k) {
        Complex acc{};
        for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * s[j] * e[k - j];
        e[k] = acc / static_cast<double>(k);
    }
    return TaylorSeries(std::move(e));
}

/// Principal log(s) for s(0) = 1, so log(s)(0) = 0.
inline TaylorSeries log_series(const TaylorSeries& s) {
    if (std::abs(s[0] - 1.0) > kConstantTermTol) throw BranchPointAtOrigin();
    const int n = s.order();
    std::vector<Complex> l(n + 1, Complex{});
    for (int k = 1; k <= n; ++k) {
        Complex acc = static_cast<double>(k) * s[k];
        for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * s[k - j];
        l[k] = acc / static_cast<double>(k);
    }
    return TaylorSeries(std::move(l));
}

/// s^p on the branch with value 1 at the origin.
inline TaylorSeries pow_series(const TaylorSeries& s, double p) {
    return exp_series(scale(log_series(s), p));
}

struct SeriesValue {
    Complex value;
    /// |c_N| |z|^N / (1 - |z|); a diagnostic, not an enclosure.
    double tail_bound;
};

/// Horner evaluation of the truncated polynomial.
inline SeriesValue evaluate(const TaylorSeries& s, Complex z, double r_max = kEvalRadius) {
    const double r = std::abs(z);
    if (r > r_max * (1.0 + 1e-12)) throw RadiusOutOfRange(r);
    const auto& c = s.coeffs();
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    const double tail = std::abs(c.back()) * std::pow(r, s.order()) / (1.0 - r);
    return {acc, tail};
}

}  // namespace starcert

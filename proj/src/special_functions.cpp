// special_functions.cpp - Faddeeva-based complex error function family
#include "dtrain/special_functions.hpp"

#include <array>
#include <cmath>

#include "dtrain/errors.hpp"

namespace dtrain::quad {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double inv_sqrt_pi = 0.564189583547756286948079451560772586;
constexpr int weideman_n = 64;  // rational expansion length

// polynomial coefficients of the Weideman rational approximation of w(z),
// computed once from the equispaced-tangent quadrature recipe via a plain DFT
struct WeidemanTable {
    std::array<double, weideman_n> coef{};
    double shift{0.0};  // the conformal map parameter L

    WeidemanTable() {
        const int m = 2 * weideman_n;
        const int m2 = 2 * m;
        const long double l = std::sqrt(weideman_n / std::sqrt(2.0L));
        std::array<long double, 2 * 2 * weideman_n> samples{};
        samples[0] = 0.0L;
        for (int j = 1; j < m2; ++j) {
            const long double theta = static_cast<long double>(j - m) * pi / m;
            const long double t = l * std::tan(theta / 2.0L);
            samples[j] = std::exp(-t * t) * (l * l + t * t);
        }
        // dft of the half-shifted sample vector; only the real parts survive
        for (int n = 1; n <= weideman_n; ++n) {
            long double acc = 0.0L;
            for (int j = 0; j < m2; ++j) {
                const int shifted = (j + m) % m2;
                const long double angle = -2.0L * pi * j * n / m2;
                acc += samples[shifted] * std::cos(angle);
            }
            coef[n - 1] = static_cast<double>(acc / m2);
        }
        shift = static_cast<double>(l);
    }
};

const WeidemanTable& weideman_table() {
    static const WeidemanTable table;
    return table;
}

// highest-order-first Horner evaluation of the rational numerator
std::complex<double> weideman_poly(std::complex<double> z) {
    const auto& tab = weideman_table();
    std::complex<double> acc = tab.coef[weideman_n - 1];
    for (int n = weideman_n - 2; n >= 0; --n) {
        acc = acc * z + tab.coef[n];
    }
    return acc;
}

std::complex<double> erf_maclaurin(std::complex<double> z) {
    const std::complex<double> z2 = z * z;
    std::complex<double> term = z;
    std::complex<double> acc = z;
    for (int n = 1; n <= 36; ++n) {
        term *= -z2 / static_cast<double>(n);
        acc += term / static_cast<double>(2 * n + 1);
    }
    return 2.0 * inv_sqrt_pi * acc;
}

double dawson_asymptotic(double x) {
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0 / (2.0 * x);
    double acc = term;
    for (int k = 1; k <= 25; ++k) {
        term *= (2 * k - 1) * inv2x2;
        acc += term;
        if (std::abs(term) < 1e-20 * std::abs(acc)) break;
    }
    return acc;
}

} // namespace

std::complex<double> faddeeva_w(std::complex<double> z) {
    if (!(z.imag() >= 0.0)) {
        throw DomainError("faddeeva_w: argument must lie in the closed upper half plane");
    }
    const auto& tab = weideman_table();
    const std::complex<double> il(tab.shift, 0.0);
    const std::complex<double> denom = il - std::complex<double>(0.0, 1.0) * z;
    const std::complex<double> mapped = (il + std::complex<double>(0.0, 1.0) * z) / denom;
    return 2.0 * weideman_poly(mapped) / (denom * denom) + inv_sqrt_pi / denom;
}

std::complex<double> erf_complex(std::complex<double> z) {
    if (!(std::abs(z.imag()) <= 30.0)) {
        throw DomainError("erf_complex: |Im z| must not exceed 30");
    }
    if (z.real() < 0.0) {
        return -erf_complex(-z);
    }
    if (std::abs(z) <= 0.5) {
        return erf_maclaurin(z);
    }
    // erf(z) = 1 - exp(-z^2) w(i z) for Re z >= 0; the exponential is carried in
    // extended precision because |Im z| up to 30 drives it far past double range
    const double x = z.real();
    const double y = z.imag();
    const std::complex<double> w = faddeeva_w(std::complex<double>(-y, x));
    const long double mag = std::exp(static_cast<long double>(y) * y -
                                     static_cast<long double>(x) * x);
    const double phase = -2.0 * x * y;
    const long double re = 1.0L - mag * (std::cos(phase) * w.real() - std::sin(phase) * w.imag());
    const long double im = -mag * (std::sin(phase) * w.real() + std::cos(phase) * w.imag());
    return {static_cast<double>(re), static_cast<double>(im)};
}

double dawson(double x) {
    const double ax = std::abs(x);
    if (ax <= 10.0) {
        const std::complex<double> w = faddeeva_w(std::complex<double>(x, 0.0));
        return 0.5 * std::sqrt(pi) * w.imag();
    }
    const double tail = dawson_asymptotic(ax);
    return x > 0.0 ? tail : -tail;
}

double erfi_real(double x) {
    if (!(std::abs(x) <= 30.0)) {
        throw DomainError("erfi_real: |x| must not exceed 30");
    }
    // erfi(x) = (2 / sqrt(pi)) exp(x^2) D(x); the product can overflow double
    // beyond |x| ~ 26.7, in which case the infinity is returned as documented
    const long double mag = std::exp(static_cast<long double>(x) * x);
    return static_cast<double>(2.0L * inv_sqrt_pi * mag * dawson(x));
}

double re_erf_damped(double a, double y) {
    if (!(a >= 0.0) || !std::isfinite(y)) {
        throw DomainError("re_erf_damped: requires a >= 0 and finite y");
    }
    // exp(-y^2) Re erf(a + i y) = exp(-y^2) - exp(-a^2) Re[exp(-2iay) w(-y + ia)];
    // every factor is bounded by one, so no intermediate can overflow
    const double ya = std::abs(y);
    const std::complex<double> w = faddeeva_w(std::complex<double>(-ya, a));
    const double phase = -2.0 * a * ya;
    const double damped = std::exp(-a * a) *
                          (std::cos(phase) * w.real() - std::sin(phase) * w.imag());
    return std::exp(-y * y) - damped;
}

} // namespace dtrain::quad

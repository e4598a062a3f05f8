// quadrature.hpp - adaptive Gauss-Kronrod integration on finite and semi-infinite ranges
#pragma once

#include <complex>
#include <functional>

#include "dtrain/errors.hpp"

namespace dtrain::quad {

// how the integrand behaves at large kappa, used to certify the truncated tail
enum class TailPolicy {
    gaussian_damped,  // |f| <= C exp(-a kappa^2 / 2) with a fitted from the last segments
    algebraic_decay,  // |f| <= C / kappa^p with C fitted from the last segments
};

struct QuadSettings {
    double abs_tol{1e-10};         // absolute error target for the full integral
    int max_subdivisions{50000};   // total panel budget across all segments
    TailPolicy tail_cutoff_policy{TailPolicy::gaussian_damped};
    double decay_power{3.0};       // p in the algebraic tail model, must exceed 1
    double osc_scale{0.0};         // largest phase rate; caps panel width at pi / (4 osc_scale)
};

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double err_estimate{0.0};  // panel discrepancies plus the tail bound
};

using Integrand = std::function<std::complex<double>(double)>;

// adaptive 7-15 Gauss-Kronrod integral of f over [a, b]
QuadResult integrate_finite(const Integrand& f, double a, double b, double abs_tol,
                            int max_subdivisions, double osc_scale = 0.0);

// integral of f over [0, inf) under the declared tail policy
QuadResult integrate_semi_infinite(const Integrand& f, const QuadSettings& settings);

// int_K^inf kappa^-m exp(i omega kappa) d kappa for integer 2 <= m <= 8 and K > 0
std::complex<double> power_tail(int m, double omega, double kappa0, double* err_out = nullptr);

} // namespace dtrain::quad

// quadrature.cpp - adaptive Gauss-Kronrod panels with certified tail bounds
#include "dtrain/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace dtrain::quad {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

// 15-point Kronrod abscissae on [-1, 1] with the embedded 7-point Gauss rule
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEval {
    std::complex<double> value{0.0, 0.0};
    double err{0.0};
    double max_abs{0.0};       // largest |f| over the 15 nodes
    double max_abs_node{0.0};  // node where it was seen
};

PanelEval gk15(const Integrand& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    PanelEval out;
    const std::complex<double> fc = f(centre);
    std::complex<double> kron = wgk[7] * fc;
    std::complex<double> gauss = wg[3] * fc;
    out.max_abs = std::abs(fc);
    out.max_abs_node = centre;
    for (int j = 0; j < 7; ++j) {
        const double lo = centre - half * xgk[j];
        const double hi = centre + half * xgk[j];
        const std::complex<double> flo = f(lo);
        const std::complex<double> fhi = f(hi);
        kron += wgk[j] * (flo + fhi);
        if (j % 2 == 1) {
            gauss += wg[(j - 1) / 2] * (flo + fhi);
        }
        const double alo = std::abs(flo);
        const double ahi = std::abs(fhi);
        if (alo > out.max_abs) { out.max_abs = alo; out.max_abs_node = lo; }
        if (ahi > out.max_abs) { out.max_abs = ahi; out.max_abs_node = hi; }
    }
    out.value = kron * half;
    out.err = std::abs(kron - gauss) * half;
    return out;
}

struct Panel {
    double a;
    double b;
    std::complex<double> value;
    double err;
    double max_abs;
    double max_abs_node;
};

// worst panel first, ties broken by position so refinement order is deterministic
struct PanelOrder {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.err != rhs.err) return lhs.err > rhs.err;
        return lhs.a < rhs.a;
    }
};

struct SegmentResult {
    std::complex<double> value{0.0, 0.0};
    double err{0.0};
    double max_abs{0.0};
    double max_abs_node{0.0};
};

// adaptive core shared by the public entry points; draws panels from a shared budget
SegmentResult finite_core(const Integrand& f, double a, double b, double abs_tol,
                          int& budget, double osc_scale) {
    const double width = b - a;
    double cap = width;
    if (osc_scale > 0.0) {
        cap = std::min(cap, pi / (4.0 * osc_scale));
    }
    int initial = static_cast<int>(std::ceil(width / cap));
    initial = std::max(initial, 1);
    if (initial > budget) {
        throw NumericFailure("integrate_finite: subdivision budget exhausted before the "
                             "oscillation scale could be resolved");
    }

    std::set<Panel, PanelOrder> panels;
    double err_sum = 0.0;
    for (int i = 0; i < initial; ++i) {
        const double lo = a + width * i / initial;
        const double hi = (i + 1 == initial) ? b : a + width * (i + 1) / initial;
        const PanelEval eval = gk15(f, lo, hi);
        panels.insert({lo, hi, eval.value, eval.err, eval.max_abs, eval.max_abs_node});
        err_sum += eval.err;
    }
    budget -= initial;

    while (err_sum > abs_tol) {
        if (budget <= 0) {
            throw NumericFailure("integrate_finite: subdivision budget exhausted at "
                                 "error estimate " + std::to_string(err_sum));
        }
        const Panel worst = *panels.begin();
        panels.erase(panels.begin());
        err_sum -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        for (const auto& [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            const PanelEval eval = gk15(f, lo, hi);
            panels.insert({lo, hi, eval.value, eval.err, eval.max_abs, eval.max_abs_node});
            err_sum += eval.err;
        }
        budget -= 1;
    }

    // final value summed in position order for run-to-run reproducibility
    std::vector<Panel> ordered(panels.begin(), panels.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const Panel& lhs, const Panel& rhs) { return lhs.a < rhs.a; });
    SegmentResult out;
    for (const Panel& panel : ordered) {
        out.value += panel.value;
        out.err += panel.err;
        if (panel.max_abs > out.max_abs) {
            out.max_abs = panel.max_abs;
            out.max_abs_node = panel.max_abs_node;
        }
    }
    return out;
}

// remainder of the incomplete power integral via the integration-by-parts series,
// valid once |omega| kappa0 is large; terms fall like (m + t) / (|omega| kappa0)
std::complex<double> power_series_tail(int m, double omega, double kappa0, double* err_out) {
    const std::complex<double> i_omega(0.0, omega);
    std::complex<double> term = 1.0 / (i_omega * std::pow(kappa0, m));
    std::complex<double> acc = term;
    int t = 1;
    for (; t <= 30; ++t) {
        term *= static_cast<double>(m + t - 1) / (i_omega * kappa0);
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc)) {
            ++t;
            break;
        }
    }
    if (err_out != nullptr) {
        // |remainder| <= (m)_t / (|omega|^t kappa0^(m + t - 1) (m + t - 1))
        double rising = 1.0;
        for (int j = 0; j < t; ++j) rising *= m + j;
        *err_out += rising / (std::pow(std::abs(omega), t) *
                              std::pow(kappa0, m + t - 1) * (m + t - 1));
    }
    const std::complex<double> phase(std::cos(omega * kappa0), std::sin(omega * kappa0));
    return -phase * acc;
}

} // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, double abs_tol,
                            int max_subdivisions, double osc_scale) {
    if (!(abs_tol > 0.0) || max_subdivisions < 1 || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate_finite: requires finite bounds, abs_tol > 0 and a "
                          "positive subdivision budget");
    }
    if (a == b) {
        return {};
    }
    if (a > b) {
        throw DomainError("integrate_finite: bounds must be ordered");
    }
    int budget = max_subdivisions;
    const SegmentResult seg = finite_core(f, a, b, abs_tol, budget, osc_scale);
    return {seg.value, seg.err};
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadSettings& settings) {
    if (!(settings.abs_tol > 0.0) || settings.max_subdivisions < 1) {
        throw DomainError("integrate_semi_infinite: requires abs_tol > 0 and a positive "
                          "subdivision budget");
    }
    if (settings.tail_cutoff_policy == TailPolicy::algebraic_decay &&
        !(settings.decay_power > 1.0)) {
        throw DomainError("integrate_semi_infinite: algebraic decay power must exceed 1");
    }

    int budget = settings.max_subdivisions;
    QuadResult out;
    double prev_env = 0.0;
    double prev_mid = 0.0;
    double prev_alg_coef = 0.0;
    const double p = settings.decay_power;

    double lo = 0.0;
    double hi = 1.0;
    for (int seg_index = 0; seg_index < 64; ++seg_index) {
        const double seg_tol = settings.abs_tol / 4.0 * std::pow(0.5, seg_index);
        SegmentResult seg;
        try {
            seg = finite_core(f, lo, hi, seg_tol, budget, settings.osc_scale);
        } catch (const NumericFailure&) {
            throw NumericFailure("integrate_semi_infinite: subdivision budget exhausted on "
                                 "segment starting at " + std::to_string(lo));
        }
        out.value += seg.value;
        out.err_estimate += seg.err;

        const double mid = 0.5 * (lo + hi);
        if (settings.tail_cutoff_policy == TailPolicy::gaussian_damped) {
            if (seg_index >= 1) {
                if (seg.max_abs == 0.0 && prev_env == 0.0) {
                    return out;
                }
                if (prev_env > 0.0 && seg.max_abs > 0.0 && seg.max_abs < prev_env) {
                    const double rate = 2.0 * std::log(prev_env / seg.max_abs) /
                                        (mid * mid - prev_mid * prev_mid);
                    if (rate > 0.0) {
                        const double bound = seg.max_abs *
                                             std::exp(-0.5 * rate * (hi * hi - mid * mid)) /
                                             (rate * hi);
                        if (bound <= settings.abs_tol / 10.0) {
                            out.err_estimate += bound;
                            return out;
                        }
                    }
                }
            }
        } else {
            // coefficient of the decay model sampled at the nodes, kept over two
            // segments so an oscillation null cannot fake an early cutoff
            const double alg_coef = seg.max_abs * std::pow(seg.max_abs_node, p);
            const double coef = 1.25 * std::max(alg_coef, prev_alg_coef);
            const double bound = coef * std::pow(hi, 1.0 - p) / (p - 1.0);
            if (seg_index >= 2 && bound <= settings.abs_tol / 10.0) {
                out.err_estimate += bound;
                return out;
            }
            prev_alg_coef = alg_coef;
        }
        prev_env = seg.max_abs;
        prev_mid = mid;
        lo = hi;
        hi *= 2.0;
    }
    throw NumericFailure("integrate_semi_infinite: tail bound did not certify within 64 "
                         "doubling segments");
}

std::complex<double> power_tail(int m, double omega, double kappa0, double* err_out) {
    if (m < 2 || m > 8 || !(kappa0 > 0.0) || !std::isfinite(omega)) {
        throw DomainError("power_tail: requires 2 <= m <= 8, kappa0 > 0 and finite omega");
    }
    if (err_out != nullptr) {
        *err_out = 0.0;
    }
    const double scale = std::pow(kappa0, 1 - m) / (m - 1);
    const double abs_om = std::abs(omega);
    if (abs_om < 1e-10) {
        // phase is flat across the whole decaying range of the integrand
        if (err_out != nullptr) {
            *err_out += (m == 2) ? abs_om * 30.0
                                 : abs_om * std::pow(kappa0, 2 - m) / (m - 2);
        }
        return {scale, 0.0};
    }
    if (abs_om * kappa0 >= 60.0) {
        return power_series_tail(m, omega, kappa0, err_out);
    }
    // carry the integral numerically out to where the series certifies
    const double handoff = 60.0 / abs_om;
    const Integrand f = [m, omega](double kappa) {
        const double amp = std::pow(kappa, -m);
        return std::complex<double>(amp * std::cos(omega * kappa),
                                    amp * std::sin(omega * kappa));
    };
    const QuadResult numeric = integrate_finite(f, kappa0, handoff, scale * 1e-13,
                                                30000, abs_om);
    if (err_out != nullptr) {
        *err_out += numeric.err_estimate;
    }
    return numeric.value + power_series_tail(m, omega, handoff, err_out);
}

} // namespace dtrain::quad

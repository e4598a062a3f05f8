// model.cpp - switching and smearing profiles with their Fourier transforms
#include "dtrain/model.hpp"

#include <cmath>

#include "dtrain/bump_ft.hpp"
#include "dtrain/special_functions.hpp"

namespace dtrain {

namespace {

constexpr double sqrt_pi = 1.772453850905516027298167483341145183;

} // namespace

// ---------- switching ----------

SwitchingSpec SwitchingSpec::heaviside() {
    return {SwitchingKind::heaviside, 1.0};
}

SwitchingSpec SwitchingSpec::truncated_gaussian(double q) {
    SwitchingSpec spec{SwitchingKind::truncated_gaussian, q};
    spec.validate();
    return spec;
}

SwitchingSpec SwitchingSpec::bump() {
    return {SwitchingKind::bump, 1.0};
}

void SwitchingSpec::validate() const {
    if (kind == SwitchingKind::truncated_gaussian && !(q > 0.0 && std::isfinite(q))) {
        throw DomainError("SwitchingSpec: truncated gaussian requires q > 0");
    }
}

double switching_value(const SwitchingSpec& spec, double t) {
    if (t <= 0.0 || t >= 1.0) {
        return 0.0;
    }
    switch (spec.kind) {
        case SwitchingKind::heaviside:
            return 1.0;
        case SwitchingKind::truncated_gaussian: {
            const double u = (t - 0.5) / spec.q;
            return std::exp(-u * u);
        }
        case SwitchingKind::bump:
            return quad::bump_value(t);
    }
    throw DomainError("switching_value: unknown switching kind");
}

std::complex<double> switching_ft(const SwitchingSpec& spec, double k, double tol) {
    spec.validate();
    switch (spec.kind) {
        case SwitchingKind::heaviside: {
            if (k == 0.0) {
                return {1.0, 0.0};
            }
            const double amp = 2.0 * std::sin(0.5 * k) / k;
            return {amp * std::cos(0.5 * k), -amp * std::sin(0.5 * k)};
        }
        case SwitchingKind::truncated_gaussian: {
            // sqrt(pi) q exp(-i k / 2) exp(-k^2 q^2 / 4) Re erf(1/(2q) + i k q / 2),
            // with the damped product evaluated overflow-free
            const double amp = sqrt_pi * spec.q *
                               quad::re_erf_damped(0.5 / spec.q, 0.5 * k * spec.q);
            return {amp * std::cos(0.5 * k), -amp * std::sin(0.5 * k)};
        }
        case SwitchingKind::bump:
            return quad::bump_ft(k, tol);
    }
    throw DomainError("switching_ft: unknown switching kind");
}

const char* switching_name(SwitchingKind kind) {
    switch (kind) {
        case SwitchingKind::heaviside: return "heaviside";
        case SwitchingKind::truncated_gaussian: return "gaussian";
        case SwitchingKind::bump: return "bump";
    }
    return "unknown";
}

// ---------- smearing ----------

SmearingSpec SmearingSpec::gaussian(double s) {
    SmearingSpec spec{SmearingKind::gaussian, s};
    spec.validate();
    return spec;
}

SmearingSpec SmearingSpec::hard_sphere(double r) {
    SmearingSpec spec{SmearingKind::hard_sphere, r};
    spec.validate();
    return spec;
}

void SmearingSpec::validate() const {
    if (!(scale > 0.0 && std::isfinite(scale))) {
        throw DomainError("SmearingSpec: scale must be positive and finite");
    }
}

double smearing_ft(const SmearingSpec& spec, double kappa) {
    if (!(kappa >= 0.0)) {
        throw DomainError("smearing_ft: kappa must be nonnegative");
    }
    switch (spec.kind) {
        case SmearingKind::gaussian:
            return std::exp(-0.25 * kappa * kappa * spec.scale * spec.scale);
        case SmearingKind::hard_sphere: {
            const double x = kappa * spec.scale;
            if (x < 1e-3) {
                const double x2 = x * x;
                return 1.0 - x2 / 10.0 + x2 * x2 / 280.0;
            }
            return 3.0 * (std::sin(x) - x * std::cos(x)) / (x * x * x);
        }
    }
    throw DomainError("smearing_ft: unknown smearing kind");
}

// ---------- parameter sets ----------

void SingleParams::validate() const {
    if (!(gamma >= 0.0 && std::isfinite(gamma))) {
        throw DomainError("SingleParams: gamma must be nonnegative and finite");
    }
    smearing.validate();
    switching.validate();
}

void PairParams::validate() const {
    if (!(gamma > 0.0 && std::isfinite(gamma))) {
        throw DomainError("PairParams: gamma must be positive and finite");
    }
    if (!(d > 0.0) || !(r > 0.0) || !std::isfinite(d) || !std::isfinite(r)) {
        throw DomainError("PairParams: d and r must be positive and finite");
    }
    // spacelike condition 1 < d - 2 r, accepted on the boundary to within one
    // part in 1e9 so d = 1.2, r = 0.1 is not rejected for its rounding residue
    if (d - 2.0 * r < 1.0 - 1e-9) {
        throw DomainError("PairParams: window must be spacelike: need 1 < d - 2 r");
    }
    switching.validate();
}

} // namespace dtrain

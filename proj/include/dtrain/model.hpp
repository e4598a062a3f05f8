// model.hpp - switching profiles, smearing profiles and detector parameter sets
#pragma once

#include <complex>

#include "dtrain/errors.hpp"

namespace dtrain {

// ---------- switching ----------

enum class SwitchingKind { heaviside, truncated_gaussian, bump };

// switching profile supported on [0, 1], order-one amplitude
struct SwitchingSpec {
    SwitchingKind kind{SwitchingKind::heaviside};
    double q{1.0};  // truncated gaussian width relative to the window

    static SwitchingSpec heaviside();
    static SwitchingSpec truncated_gaussian(double q);
    static SwitchingSpec bump();

    void validate() const;
};

// profile value at t, exactly zero outside (0, 1)
double switching_value(const SwitchingSpec& spec, double t);

// int_0^1 xi(t) exp(-i k t) dt; tol only matters for the bump profile
std::complex<double> switching_ft(const SwitchingSpec& spec, double k, double tol = 1e-12);

const char* switching_name(SwitchingKind kind);

// ---------- smearing ----------

enum class SmearingKind { gaussian, hard_sphere };

// normalised spatial profile of a detector
struct SmearingSpec {
    SmearingKind kind{SmearingKind::gaussian};
    double scale{1.0};  // gaussian width s or sphere radius r

    static SmearingSpec gaussian(double s);
    static SmearingSpec hard_sphere(double r);

    void validate() const;
};

// radial profile F(kappa): gaussian exp(-kappa^2 s^2 / 4) so |F|^2 = exp(-kappa^2 s^2 / 2),
// hard sphere 3 (sin x - x cos x) / x^3 at x = kappa r with the small-x series
double smearing_ft(const SmearingSpec& spec, double kappa);

// ---------- parameter sets ----------

// one detector switched over a unit time window
struct SingleParams {
    double gamma{1.0};          // energy gap in window units
    SmearingSpec smearing{};    // gaussian for all closed-form paths
    SwitchingSpec switching{};

    void validate() const;
};

// two static detectors with equal gaps and hard-sphere smearing
struct PairParams {
    double gamma{1.0};          // common energy gap
    double d{1.2};              // centre separation
    double r{0.1};              // sphere radius
    SwitchingSpec switching{};  // heaviside in every closed-form path

    void validate() const;
};

} // namespace dtrain

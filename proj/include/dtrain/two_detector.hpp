// two_detector.hpp - joint state of two sharp-switched detectors with hard-sphere smearing
#pragma once

#include <array>
#include <complex>

#include "dtrain/model.hpp"

namespace dtrain {

// second-order state coefficients per coupling^2: local terms, exchange term, pairing term
struct PairState2 {
    double l_ii{0.0};            // local excitation coefficient, equal for both detectors
    double l_ab{0.0};            // exchange coefficient
    std::complex<double> m{0.0}; // pairing coefficient
};

using Rho4 = std::array<std::array<std::complex<double>, 4>, 4>;

// continuous-switching coefficients, each certified to absolute accuracy tol
double l_ii_exact(const PairParams& params, double tol = 1e-10);
double l_ab_exact(const PairParams& params, double tol = 1e-10);
std::complex<double> m_exact(const PairParams& params, double tol = 1e-10);

// train coefficients via interaction-picture kernels evaluated at the kick separations
PairState2 pair_train(const PairParams& params, int n, double tol = 1e-10);

// independent check of pair_train: direct quadrature against the train transforms
PairState2 pair_train_oracle(const PairParams& params, int n, double tol = 1e-8);

// joint density matrix in the basis {gg, ge, eg, ee} to second order in the coupling
Rho4 assemble_rho(const PairState2& state, double lambda_sq);

// shift of each exact coefficient when the integration is started at kappa_min instead of 0
struct IrSensitivity {
    double kappa_min{0.0};
    double dl_ii{0.0};
    double dl_ab{0.0};
    double dm{0.0};
};

IrSensitivity ir_sensitivity(const PairParams& params, double kappa_min = 1e-8, double tol = 1e-12);

} // namespace dtrain

// single_detector.hpp - excitation probability of one gaussian-smeared detector
#pragma once

#include <complex>

#include "dtrain/model.hpp"
#include "dtrain/train.hpp"

namespace dtrain {

// int_0^inf kappa exp(-kappa^2 s^2 / 2) exp(i kappa u) d kappa, evaluated in closed form
// once a startup check against direct quadrature passes
std::complex<double> kernel_gaussian(double u, double s, double tol = 1e-12);

// excitation probability per coupling^2 under the continuous switching profile
double pe_exact(const SingleParams& params, double tol = 1e-10);

// same quantity evaluated through the generic switching transform, no per-profile shortcuts
double pe_exact_generic(const SingleParams& params, double tol = 1e-10);

// excitation probability per coupling^2 for the n-kick train, via the autocorrelation sum
double pe_train(const SingleParams& params, int n, double tol = 1e-12);

// independent check of pe_train: direct quadrature against the train transform
double pe_train_oracle(const SingleParams& params, int n, double tol = 1e-10);

} // namespace dtrain

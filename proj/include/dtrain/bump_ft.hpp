// bump_ft.hpp - Fourier transform of the unit-interval bump profile, with memoisation
#pragma once

#include <complex>

namespace dtrain::quad {

// exp(-1 / (4 t (1 - t))) on (0, 1), zero outside
double bump_value(double t);

// int_0^1 bump_value(t) exp(-i k t) dt to absolute accuracy tol
std::complex<double> bump_ft(double k, double tol);

} // namespace dtrain::quad

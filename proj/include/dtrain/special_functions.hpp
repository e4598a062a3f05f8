// special_functions.hpp - complex error function, Dawson integral and damped erf products
#pragma once

#include <complex>

namespace dtrain::quad {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im z >= 0
std::complex<double> faddeeva_w(std::complex<double> z);

// erf on the strip |Im z| <= 30; overflows to +-inf outside double range
std::complex<double> erf_complex(std::complex<double> z);

// Dawson integral D(x) = exp(-x^2) int_0^x exp(t^2) dt
double dawson(double x);

// imaginary error function erfi(x) = -i erf(ix) for |x| <= 30
double erfi_real(double x);

// exp(-y^2) Re erf(a + iy) evaluated without forming the unbounded factors
double re_erf_damped(double a, double y);

} // namespace dtrain::quad

// test_bump_ft.cpp - smooth compact bump and its memoized transform
#include <cmath>
#include <complex>

#include <doctest.h>

#include "dtrain/bump_ft.hpp"

using dtrain::quad::bump_ft;
using dtrain::quad::bump_value;

TEST_SUITE("bump_ft") {

TEST_CASE("bump profile closed values and compact support") {
    CHECK(bump_value(0.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(bump_value(0.25) == doctest::Approx(std::exp(-4.0 / 3.0)).epsilon(1e-15));
    CHECK(bump_value(0.0) == 0.0);
    CHECK(bump_value(1.0) == 0.0);
    CHECK(bump_value(-0.3) == 0.0);
    CHECK(bump_value(1.7) == 0.0);
}

TEST_CASE("transform reference values") {
    // references from 1e6-panel trapezoid sums over the open support
    const std::complex<double> f0 = bump_ft(0.0, 1e-12);
    CHECK(std::abs(f0.real() - 0.221996908084039719) < 1e-11);
    CHECK(std::abs(f0.imag()) < 1e-13);
    const std::complex<double> f3 = bump_ft(3.0, 1e-12);
    CHECK(std::abs(f3.real() - 0.0130800296412380292) < 1e-11);
    CHECK(std::abs(f3.imag() + 0.184446990892551294) < 1e-11);
}

TEST_CASE("negative frequency is the conjugate") {
    const std::complex<double> plus = bump_ft(3.0, 1e-12);
    const std::complex<double> minus = bump_ft(-3.0, 1e-12);
    CHECK(minus == std::conj(plus));
}

TEST_CASE("support centred at one half gives the reflection phase") {
    const double k = 3.0;
    const std::complex<double> f = bump_ft(k, 1e-12);
    const std::complex<double> reflected =
        std::complex<double>(std::cos(k), -std::sin(k)) * std::conj(f);
    CHECK(std::abs(f - reflected) < 1e-12);
}

TEST_CASE("transform decays far into the tail") {
    const double near = std::abs(bump_ft(3.0, 1e-12));
    const double far = std::abs(bump_ft(100.0, 1e-12));
    CHECK(far < near * 1e-3);
}

TEST_CASE("memoized lookups are bitwise stable") {
    const std::complex<double> first = bump_ft(7.25, 1e-12);
    const std::complex<double> second = bump_ft(7.25, 1e-12);
    CHECK(first.real() == second.real());
    CHECK(first.imag() == second.imag());
}

} // TEST_SUITE

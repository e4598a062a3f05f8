// test_single_detector.cpp - excitation probability routes against frozen references
#include <cmath>
#include <complex>

#include <doctest.h>

#include "dtrain/model.hpp"
#include "dtrain/single_detector.hpp"

using namespace dtrain;

namespace {

constexpr double inv_four_pi_sq = 0.0253302959105844429;

SingleParams make_single(double gamma, double s, SwitchingSpec switching) {
    SingleParams params;
    params.gamma = gamma;
    params.smearing = SmearingSpec::gaussian(s);
    params.switching = switching;
    return params;
}

} // namespace

TEST_SUITE("single_detector") {

TEST_CASE("oscillatory gaussian kernel reference values") {
    // references from 2e7-panel trapezoid sums with analytic gaussian tails
    struct Row {
        double u, s, re, im;
    };
    const Row rows[] = {
        {1.0, 1.0, 0.275221540992923668, 0.760173450533140403},
        {0.25, 1.0, 0.938785951609994611, 0.30368842878130779},
        {3.0, 1.0, -0.179500637500610298, 0.0417691872383041052},
        {0.5, 2.0, 0.234696487902498653, 0.0759221071953269474},
    };
    for (const Row& row : rows) {
        const std::complex<double> got = kernel_gaussian(row.u, row.s);
        CHECK(std::abs(got.real() - row.re) <= 1e-12 * std::abs(row.re));
        CHECK(std::abs(got.imag() - row.im) <= 1e-12 * std::abs(row.im));
    }
}

TEST_CASE("kernel at zero separation and under reflection") {
    CHECK(kernel_gaussian(0.0, 1.0) == std::complex<double>(1.0, 0.0));
    CHECK(kernel_gaussian(0.0, 2.0).real() == doctest::Approx(0.25).epsilon(1e-15));
    const std::complex<double> plus = kernel_gaussian(0.7, 1.3);
    const std::complex<double> minus = kernel_gaussian(-0.7, 1.3);
    CHECK(std::abs(minus - std::conj(plus)) <= 1e-15 * std::abs(plus));
}

TEST_CASE("exact excitation probability reference values") {
    // references from 2e7-panel trapezoid and nested Simpson integrations
    CHECK(pe_exact(make_single(1.0, 1.0, SwitchingSpec::heaviside())) ==
          doctest::Approx(0.0161582917516687722).epsilon(1e-9));
    CHECK(pe_exact(make_single(0.5, 1.0, SwitchingSpec::heaviside())) ==
          doctest::Approx(0.0191217101795195805).epsilon(1e-9));
    CHECK(pe_exact(make_single(1.0, 0.5, SwitchingSpec::heaviside())) ==
          doctest::Approx(0.0373295958825964736).epsilon(1e-9));
    CHECK(pe_exact(make_single(1.0, 1.0, SwitchingSpec::truncated_gaussian(1.0))) ==
          doctest::Approx(0.014170882717806156).epsilon(1e-9));
    CHECK(pe_exact(make_single(1.0, 1.0, SwitchingSpec::truncated_gaussian(0.5))) ==
          doctest::Approx(0.0100526835944919075).epsilon(1e-9));
    CHECK(pe_exact(make_single(1.0, 1.0, SwitchingSpec::bump())) ==
          doctest::Approx(0.001007825380453086).epsilon(1e-8));
}

TEST_CASE("generic transform route agrees with the specialized integrands") {
    const SwitchingSpec switchings[] = {SwitchingSpec::heaviside(),
                                        SwitchingSpec::truncated_gaussian(1.0),
                                        SwitchingSpec::bump()};
    for (const SwitchingSpec& spec : switchings) {
        const SingleParams params = make_single(1.0, 1.0, spec);
        CHECK(std::abs(pe_exact_generic(params, 1e-10) - pe_exact(params, 1e-10)) <= 1e-8);
    }
}

TEST_CASE("large gap suppression") {
    const double low = pe_exact(make_single(1.0, 1.0, SwitchingSpec::heaviside()));
    const double high = pe_exact(make_single(50.0, 1.0, SwitchingSpec::heaviside()));
    CHECK(high < low / 1e3);
}

TEST_CASE("single kick reduces to the kernel prefactor") {
    const SingleParams params = make_single(1.0, 1.0, SwitchingSpec::heaviside());
    const double got = pe_train(params, 1);
    CHECK(std::abs(got - inv_four_pi_sq) <= 1e-13 * inv_four_pi_sq);
}

TEST_CASE("two-kick value against the transform-route reference") {
    const SingleParams params = make_single(1.0, 1.0, SwitchingSpec::heaviside());
    CHECK(pe_train(params, 2) == doctest::Approx(0.0178636110279769643).epsilon(1e-10));
    CHECK(pe_train_oracle(params, 2, 1e-10) ==
          doctest::Approx(0.0178636110279769643).epsilon(1e-8));
}

TEST_CASE("both train routes agree across kick counts") {
    const SingleParams params = make_single(1.0, 1.0, SwitchingSpec::heaviside());
    for (const int n : {1, 2, 3, 5, 8, 13, 21}) {
        const double direct = pe_train(params, n);
        const double via_transform = pe_train_oracle(params, n, 1e-11);
        CHECK(std::abs(direct - via_transform) <= 1e-8 * std::abs(direct));
    }
}

TEST_CASE("train probabilities stay nonnegative") {
    const SwitchingSpec switchings[] = {SwitchingSpec::heaviside(),
                                        SwitchingSpec::truncated_gaussian(1.0),
                                        SwitchingSpec::bump()};
    for (const SwitchingSpec& spec : switchings) {
        const SingleParams params = make_single(1.0, 1.0, spec);
        for (int n = 1; n <= 16; ++n) {
            CHECK(pe_train(params, n) >= 0.0);
        }
    }
}

TEST_CASE("train convergence toward the exact value") {
    const SingleParams params = make_single(1.0, 1.0, SwitchingSpec::heaviside());
    const double exact = pe_exact(params);
    const double e20 = std::abs(pe_train(params, 20) - exact);
    const double e80 = std::abs(pe_train(params, 80) - exact);
    CHECK(e80 < e20 / 8.0);
}

TEST_CASE("invalid arguments are rejected") {
    const SingleParams params = make_single(1.0, 1.0, SwitchingSpec::heaviside());
    CHECK_THROWS_AS(pe_train(params, 0), DomainError);
    CHECK_THROWS_AS(pe_train(params, 4, -1.0), DomainError);
    CHECK_THROWS_AS(pe_exact(params, 0.0), DomainError);
}

} // TEST_SUITE

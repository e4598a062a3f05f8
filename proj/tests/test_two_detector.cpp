// test_two_detector.cpp - joint-state coefficients against frozen references
#include <cmath>
#include <complex>

#include <doctest.h>

#include "dtrain/model.hpp"
#include "dtrain/two_detector.hpp"

using namespace dtrain;

namespace {

PairParams make_pair(double gamma, double d, double r) {
    PairParams params;
    params.gamma = gamma;
    params.d = d;
    params.r = r;
    params.switching = SwitchingSpec::heaviside();
    return params;
}

} // namespace

TEST_SUITE("two_detector") {

TEST_CASE("continuous-switching coefficients match quadrature references") {
    // references from 4e7-panel trapezoid sums with series tails beyond the cut
    const PairParams params = make_pair(1.0, 1.2, 0.1);
    CHECK(l_ii_exact(params) == doctest::Approx(0.1103742526808610).epsilon(1e-9));
    CHECK(l_ab_exact(params) == doctest::Approx(0.01864258811995606).epsilon(1e-9));
    const std::complex<double> m = m_exact(params);
    CHECK(m.real() == doctest::Approx(-0.01040127800248659).epsilon(1e-9));
    CHECK(m.imag() == doctest::Approx(-0.01619903070735573).epsilon(1e-9));
}

TEST_CASE("local coefficient ignores the separation") {
    const double near = l_ii_exact(make_pair(1.0, 1.2, 0.1));
    const double far = l_ii_exact(make_pair(1.0, 5.0, 0.1));
    CHECK(near == far);
}

TEST_CASE("exchange coefficient is bounded and decays with separation") {
    const PairParams params = make_pair(1.0, 1.2, 0.1);
    CHECK(std::abs(l_ab_exact(params)) <= l_ii_exact(params));
    const double far = l_ab_exact(make_pair(1.0, 50.0, 0.1));
    CHECK(std::abs(far) < std::abs(l_ab_exact(params)) / 10.0);
}

TEST_CASE("single-kick train coefficients against transform-route references") {
    const PairParams params = make_pair(1.0, 1.2, 0.1);
    const PairState2 one = pair_train(params, 1);
    CHECK(one.l_ii == doctest::Approx(5.69931657988149964).epsilon(1e-10));
    CHECK(one.l_ab == doctest::Approx(0.0176396983790126767).epsilon(1e-10));
    CHECK(one.m.real() == doctest::Approx(-0.0095307697089990356).epsilon(1e-10));
    CHECK(one.m.imag() == doctest::Approx(-0.0148432943667020527).epsilon(1e-10));

    const PairState2 check = pair_train_oracle(params, 1);
    CHECK(check.l_ii == doctest::Approx(5.69931657988149964).epsilon(1e-8));
    CHECK(check.l_ab == doctest::Approx(0.0176396983790126767).epsilon(1e-8));
    CHECK(check.m.real() == doctest::Approx(-0.0095307697089990356).epsilon(1e-8));
    CHECK(check.m.imag() == doctest::Approx(-0.0148432943667020527).epsilon(1e-8));
}

TEST_CASE("both train routes agree across kick counts") {
    const PairParams params = make_pair(1.0, 1.2, 0.1);
    for (const int n : {1, 2, 3, 5, 8, 13}) {
        const PairState2 direct = pair_train(params, n, 1e-11);
        const PairState2 via_transform = pair_train_oracle(params, n, 1e-9);
        CHECK(std::abs(direct.l_ii - via_transform.l_ii) <= 1e-8 * std::abs(direct.l_ii));
        CHECK(std::abs(direct.l_ab - via_transform.l_ab) <= 1e-8 * std::abs(direct.l_ab));
        CHECK(std::abs(direct.m - via_transform.m) <= 1e-8 * std::abs(direct.m));
    }
}

TEST_CASE("train coefficients converge toward the continuous values") {
    const PairParams params = make_pair(1.0, 1.2, 0.1);
    const double exact = l_ab_exact(params);
    const double e16 = std::abs(pair_train(params, 16).l_ab - exact);
    const double e64 = std::abs(pair_train(params, 64).l_ab - exact);
    CHECK(e64 < e16 / 8.0);
}

TEST_CASE("assembled density matrix structure") {
    const PairParams params = make_pair(1.0, 1.2, 0.1);
    const PairState2 state = pair_train(params, 8);
    const Rho4 rho = assemble_rho(state, 0.01);

    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(rho[i][j] == std::conj(rho[j][i]));
        }
    }
    const std::complex<double> trace = rho[0][0] + rho[1][1] + rho[2][2] + rho[3][3];
    CHECK(std::abs(trace - 1.0) <= 1e-14);
    CHECK(trace.imag() == 0.0);

    // the correction block must be traceless: ge and eg gains balance the gg loss
    const std::complex<double> block = (rho[0][0] - 1.0) + rho[1][1] + rho[2][2] + rho[3][3];
    CHECK(std::abs(block) <= 1e-15);

    CHECK(rho[1][1].real() >= 0.0);
    CHECK(rho[2][2].real() >= 0.0);
    CHECK(rho[3][3] == std::complex<double>(0.0, 0.0));
    CHECK(rho[0][3] == std::conj(rho[3][0]));
    CHECK(rho[3][0] == 0.01 * state.m);
}

TEST_CASE("zero coupling leaves the ground state") {
    PairState2 state;
    state.l_ii = 0.3;
    state.l_ab = 0.1;
    state.m = {0.2, -0.1};
    const Rho4 rho = assemble_rho(state, 0.0);
    CHECK(rho[0][0] == std::complex<double>(1.0, 0.0));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == 0 && j == 0) continue;
            CHECK(rho[i][j] == std::complex<double>(0.0, 0.0));
        }
    }
}

TEST_CASE("assemble_rho rejects invalid couplings") {
    PairState2 state;
    CHECK_THROWS_AS(assemble_rho(state, -1.0), DomainError);
    CHECK_THROWS_AS(assemble_rho(state, std::nan("")), DomainError);
}

TEST_CASE("infrared cutoff sensitivity is negligible") {
    const PairParams params = make_pair(1.0, 1.2, 0.1);
    const IrSensitivity sens = ir_sensitivity(params, 1e-8);
    CHECK(sens.kappa_min == 1e-8);
    CHECK(std::abs(sens.dl_ii) < 1e-15);
    CHECK(std::abs(sens.dl_ab) < 1e-15);
    CHECK(std::abs(sens.dm) < 1e-15);
    CHECK_THROWS_AS(ir_sensitivity(params, 0.0), DomainError);
    CHECK_THROWS_AS(ir_sensitivity(params, 0.1), DomainError);
}

TEST_CASE("unsupported configurations are rejected") {
    PairParams gaussian_switch = make_pair(1.0, 1.2, 0.1);
    gaussian_switch.switching = SwitchingSpec::truncated_gaussian(1.0);
    CHECK_THROWS_AS(pair_train(gaussian_switch, 4), DomainError);
    CHECK_THROWS_AS(l_ii_exact(gaussian_switch), DomainError);
    CHECK_THROWS_AS(make_pair(1.0, 1.0, 0.1).validate(), DomainError);
    CHECK_THROWS_AS(pair_train(make_pair(1.0, 1.2, 0.1), 0), DomainError);
}

TEST_CASE("train evaluation is deterministic") {
    const PairParams params = make_pair(1.0, 1.2, 0.1);
    const PairState2 a = pair_train(params, 7);
    const PairState2 b = pair_train(params, 7);
    CHECK(a.l_ii == b.l_ii);
    CHECK(a.l_ab == b.l_ab);
    CHECK(a.m == b.m);
}

} // TEST_SUITE

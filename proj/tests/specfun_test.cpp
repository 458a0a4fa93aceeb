// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "gmr/specfun.hpp"
#include "support/oracles.hpp"

namespace sf = gmr::specfun;
using gmr::test::ode_rk4;

namespace {

constexpr double kPi = 3.14159265358979323846;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("gamma: identities and quadrature oracle") {
    CHECK(rel_err(sf::gamma(0.5), std::sqrt(kPi)) < 1e-14);
    CHECK(sf::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sf::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));

    // Independent high-precision quadrature of the Euler integral.
    for (double z : {2.0 / 3.0, 0.1, 0.37, 1.5, 3.25, 7.7, 14.2, 30.0}) {
        const double want = static_cast<double>(gmr::test::gamma_quadrature(z));
        CHECK_MESSAGE(rel_err(sf::gamma(z), want) < 1e-12, "z = ", z);
    }
    // Reflection region against the same oracle.
    for (double z : {-0.4, -1.7, -5.3}) {
        const double want = static_cast<double>(
            kPi / (std::sin(kPi * static_cast<long double>(z))
                   * gmr::test::gamma_quadrature(1.0L - static_cast<long double>(z))));
        CHECK_MESSAGE(rel_err(sf::gamma(z), want) < 1e-11, "z = ", z);
    }
    CHECK_THROWS_AS(sf::gamma(0.0), gmr::domain_error);
    CHECK_THROWS_AS(sf::gamma(-3.0), gmr::domain_error);
    CHECK(sf::rgamma(-3.0) == 0.0);
    CHECK(sf::rgamma(2.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gauss_integral: limits, oddness, quadrature value") {
    CHECK(sf::gauss_integral(0.0, 2.3) == 0.0);
    // y -> inf limit is sigma sqrt(pi/2).
    CHECK(sf::gauss_integral(80.0, 1.0) == doctest::Approx(std::sqrt(kPi / 2.0)));

    // Composite-Simpson oracle at y = 1, sigma = 1 (error ~ h^4).
    const int n = 20000;  // even
    const long double h = 1.0L / n;
    long double acc = std::exp(-0.0L) + std::exp(-0.5L);
    for (int i = 1; i < n; ++i) {
        const long double s = h * i;
        acc += (i % 2 ? 4.0L : 2.0L) * std::exp(-s * s / 2.0L);
    }
    acc *= h / 3.0L;
    CHECK(rel_err(sf::gauss_integral(1.0, 1.0), static_cast<double>(acc)) < 1e-12);

    gmr::test::TestRng rng(11);
    for (int i = 0; i < 100; ++i) {
        const double y = rng.uniform(-6.0, 6.0);
        const double s = rng.uniform(0.3, 3.0);
        CHECK(std::abs(sf::gauss_integral(y, s) + sf::gauss_integral(-y, s)) <= 1e-14);
    }
}

TEST_CASE("airy: initial values, Wronskian, ODE oracle") {
    const auto a0 = sf::airy(0.0);
    CHECK(rel_err(a0.ai, 0.35502805388781723926) < 1e-13);
    CHECK(rel_err(a0.dai, -0.25881940379280679840) < 1e-13);
    CHECK(rel_err(a0.bi, 0.61492662744600073515) < 1e-13);
    CHECK(rel_err(a0.dbi, 0.44828835735382635791) < 1e-13);

    SUBCASE("Wronskian Ai Bi' - Ai' Bi = 1/pi across the window") {
        for (double x : {-25.0, -10.0, -2.0, 0.0, 1.0, 5.0, 12.0, 20.0}) {
            const auto r = sf::airy(x);
            const double w = r.ai * r.dbi - r.dai * r.bi;
            CHECK_MESSAGE(rel_err(w, 1.0 / kPi) < 1e-9, "x = ", x);
        }
    }
    SUBCASE("long-double RK4 oracle, both sides of the evaluation switch") {
        // x = 6 exercises the asymptotically seeded decaying branch against
        // an oracle integrated from 0. The oracle's own seed must be long
        // double: a double-rounded Ai(0) already carries a Bi component that
        // swamps Ai(6).
        const long double g23 = gmr::test::gamma_quadrature(2.0L / 3.0L);
        const long double g13 = gmr::test::gamma_quadrature(1.0L / 3.0L);
        const std::array<long double, 2> ai0{std::pow(3.0L, -2.0L / 3.0L) / g23,
                                             -std::pow(3.0L, -1.0L / 3.0L) / g13};
        const std::array<long double, 2> bi0{std::pow(3.0L, -1.0L / 6.0L) / g23,
                                             std::pow(3.0L, 1.0L / 6.0L) / g13};
        for (double x : {-2.0, 3.0, 5.5}) {
            const auto got = sf::airy(x);
            const auto ai = ode_rk4(0.0L, 1.0L, 0.0L, ai0, x);
            const auto bi = ode_rk4(0.0L, 1.0L, 0.0L, bi0, x);
            CHECK(rel_err(got.ai, static_cast<double>(ai[0])) < 1e-9);
            CHECK(rel_err(got.dai, static_cast<double>(ai[1])) < 1e-9);
            CHECK(rel_err(got.bi, static_cast<double>(bi[0])) < 1e-11);
            CHECK(rel_err(got.dbi, static_cast<double>(bi[1])) < 1e-11);
        }
    }
    SUBCASE("window guard") {
        CHECK_THROWS_AS(sf::airy(31.0), gmr::domain_error);
        CHECK_THROWS_AS(sf::airy(-30.5), gmr::domain_error);
    }
}

TEST_CASE("pcf U/V: initial values, Wronskian, defining ODE") {
    SUBCASE("U(a,0), U'(a,0) from the Gamma formulas") {
        for (double a : {-3.2, -0.7, 0.0, 1.3, 4.5}) {
            const auto r = sf::pcf_u_v(a, 0.0);
            const double u0 = std::sqrt(kPi)
                              * std::pow(2.0, -0.5 * a - 0.25) * sf::rgamma(0.5 * a + 0.75);
            const double du0 = -std::sqrt(kPi)
                               * std::pow(2.0, -0.5 * a + 0.25) * sf::rgamma(0.5 * a + 0.25);
            CHECK(rel_err(r.u, u0) < 1e-13);
            CHECK(rel_err(r.du, du0) < 1e-13);
        }
    }
    SUBCASE("Wronskian U V' - U' V = sqrt(2/pi), constant in x") {
        // |x| kept moderate: the Wronskian check itself cancels two products
        // of size e^{2 int sqrt(q)}, which eats ~e^{13} of precision by x=3.
        for (double a : {-2.3, 0.5, 3.7}) {
            for (double x : {-3.0, -0.5, 0.0, 1.5, 3.0}) {
                const auto r = sf::pcf_u_v(a, x);
                const double w = r.u * r.dv - r.du * r.v;
                CHECK_MESSAGE(rel_err(w, std::sqrt(2.0 / kPi)) < 1e-9, "a=", a, " x=", x);
            }
        }
    }
    SUBCASE("V through the U connection at x != 0") {
        // V(a,x) = Gamma(a+1/2)/pi (sin(pi a) U(a,x) + U(a,-x)) is an
        // independent route through the U initial values only.
        for (double a : {0.3, 1.7, -2.2}) {
            for (double x : {0.5, 2.0}) {
                const auto r = sf::pcf_u_v(a, x);
                const auto rm = sf::pcf_u_v(a, -x);
                const double via = sf::gamma(a + 0.5) / kPi
                                   * (std::sin(kPi * a) * r.u + rm.u);
                CHECK_MESSAGE(rel_err(r.v, via) < 1e-10, "a=", a, " x=", x);
            }
        }
    }
    SUBCASE("long-double RK4 oracle for U(0.5, .), both evaluation branches") {
        // Long-double seed from the Gamma formulas, as in the Airy oracle.
        const long double rpi = std::sqrt(3.14159265358979323846264338L);
        const std::array<long double, 2> u0{
            rpi * std::pow(2.0L, -0.5L) / gmr::test::gamma_quadrature(1.0L),
            -rpi / gmr::test::gamma_quadrature(0.5L)};
        for (double x : {1.3, -2.0, 5.5}) {
            const auto got = sf::pcf_u_v(0.5, x);
            const auto want = ode_rk4(0.5L, 0.0L, 0.25L, u0, x);
            CHECK_MESSAGE(rel_err(got.u, static_cast<double>(want[0])) < 1e-9, "x=", x);
        }
    }
    SUBCASE("second-difference residual of the defining ODE") {
        const double a = 0.5, x = 1.3, h = 1e-3;
        const double um = sf::pcf_u_v(a, x - h).u;
        const double u0 = sf::pcf_u_v(a, x).u;
        const double up = sf::pcf_u_v(a, x + h).u;
        const double fpp = (up - 2.0 * u0 + um) / (h * h);
        CHECK(std::abs(fpp - (x * x / 4.0 + a) * u0) < 1e-6);
    }
    SUBCASE("window guard") {
        CHECK_THROWS_AS(sf::pcf_u_v(10.5, 0.0), gmr::domain_error);
        CHECK_THROWS_AS(sf::pcf_u_v(0.0, 31.0), gmr::domain_error);
    }
}

TEST_CASE("pcf W pair: initial values, Wronskian = 1, defining ODE") {
    SUBCASE("W(a,0), W'(a,0) through the complex Gamma modulus") {
        // |Gamma(1/4 + ia/2)| enters only through the ratio; cross-check the
        // product W(a,0) W'(a,0) = -1/2 which is normalization-complete.
        for (double a : {0.0, 0.825, 2.0, -1.5, 5.0}) {
            const auto r = sf::pcf_w(a, 0.0);
            CHECK(rel_err(r.w_plus * r.dw_plus, -0.5) < 1e-12);
            CHECK(r.w_plus > 0.0);
            CHECK(r.dw_plus < 0.0);
        }
    }
    SUBCASE("pair Wronskian constant (= 1) over [-5, 5]") {
        for (double a : {-3.0, 0.7, 4.2}) {
            for (double x : {-5.0, -2.0, 0.0, 1.0, 3.5, 5.0}) {
                const auto r = sf::pcf_w(a, x);
                // d/dx W(a,-x) = -W'(a,-x); Wronskian of the pair:
                const double w = -(r.w_plus * r.dw_minus + r.dw_plus * r.w_minus);
                CHECK_MESSAGE(rel_err(w, 1.0) < 1e-7, "a=", a, " x=", x);
            }
        }
    }
    SUBCASE("second-difference residual at (a=1, x=0.7)") {
        const double a = 1.0, x = 0.7, h = 1e-3;
        const double um = sf::pcf_w(a, x - h).w_plus;
        const double u0 = sf::pcf_w(a, x).w_plus;
        const double up = sf::pcf_w(a, x + h).w_plus;
        const double fpp = (up - 2.0 * u0 + um) / (h * h);
        CHECK(std::abs(fpp - (a - x * x / 4.0) * u0) < 1e-6);
    }
    SUBCASE("long-double RK4 oracle for W(1.5, .)") {
        const auto at0 = sf::pcf_w(1.5, 0.0);
        for (double x : {2.2, -6.0}) {
            const auto got = sf::pcf_w(1.5, x);
            const auto want = ode_rk4(1.5L, 0.0L, -0.25L, {at0.w_plus, at0.dw_plus}, x);
            CHECK(rel_err(got.w_plus, static_cast<double>(want[0])) < 1e-9);
        }
    }
}

TEST_CASE("defining-ODE residual property over random window points") {
    // Central differences of each function against its own ODE. The step is
    // sized to the local coefficient so the h^2 q^2 f / 12 truncation of the
    // oracle stays below the tolerance.
    gmr::test::TestRng rng(23);
    auto step_for = [](double q) { return 1.5e-3 / (1.0 + 0.25 * std::abs(q)); };
    for (int i = 0; i < 100; ++i) {
        const double x = rng.uniform(-8.0, 8.0);
        {
            const double h = step_for(x);
            const double fm = sf::airy(x - h).ai, f0 = sf::airy(x).ai,
                         fp = sf::airy(x + h).ai;
            const double res = (fp - 2 * f0 + fm) / (h * h) - x * f0;
            CHECK(std::abs(res) <= 1e-5 * std::max(1.0, std::abs(f0)));
        }
        const double a = rng.uniform(-3.0, 3.0);
        {
            const double h = step_for(x * x / 4.0 + a);
            const auto m = sf::pcf_u_v(a, x - h), c = sf::pcf_u_v(a, x),
                       p = sf::pcf_u_v(a, x + h);
            const double res =
                (p.u - 2 * c.u + m.u) / (h * h) - (x * x / 4.0 + a) * c.u;
            CHECK(std::abs(res) <= 1e-5 * std::max(1.0, std::abs(c.u)));
        }
        {
            const double h = step_for(a - x * x / 4.0);
            const auto m = sf::pcf_w(a, x - h), c = sf::pcf_w(a, x),
                       p = sf::pcf_w(a, x + h);
            const double res =
                (p.w_plus - 2 * c.w_plus + m.w_plus) / (h * h) - (a - x * x / 4.0) * c.w_plus;
            CHECK(std::abs(res) <= 1e-5 * std::max(1.0, std::abs(c.w_plus)));
        }
    }
}

TEST_CASE("series region and ODE continuation agree on the overlap band") {
    // Inside |x| <= 1 the value comes from one Maclaurin step; forcing a
    // small max step runs the multi-step continuation instead.
    for (double x : {0.5, 0.8, -0.6, -0.95, 1.0}) {
        double e1 = 0.0, e2 = 0.0;
        const sf::detail::OdeQuad q{0.0, 1.0, 0.0};
        const auto a0 = sf::airy(0.0);
        const auto direct = sf::detail::taylor_propagate(q, 0.0, {a0.ai, a0.dai}, x,
                                                         std::abs(x) + 1e-300, &e1);
        const auto stepped =
            sf::detail::taylor_propagate(q, 0.0, {a0.ai, a0.dai}, x, 0.11, &e2);
        CHECK(rel_err(stepped.f, direct.f) < 1e-9);
        CHECK(rel_err(stepped.fp, direct.fp) < 1e-9);
    }
}

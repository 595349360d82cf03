#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shen3/dn3.hpp"
#include "shen3/hypergeo.hpp"
#include "support/oracles.hpp"

using namespace shen3::hypergeo;
constexpr double kPi = std::numbers::pi;

TEST_CASE("gauss_2f1 at z = 0 sums the empty tail")
{
    CHECK(gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 0.5, 0.0}) == 1.0);
}

TEST_CASE("gauss_2f1 against the closed form at z = sin^2(pi/3)")
{
    // F(1/3,2/3;1/2;sin^2 psi) = cos(psi/3)/cos(psi) at psi = pi/3
    const double oracle = std::cos(kPi / 9.0) / std::cos(kPi / 3.0);
    const double val = gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 0.5, 0.75});
    CHECK(std::abs(val - oracle) <= 1e-13 * oracle);
    CHECK(val == doctest::Approx(1.8793852415718169).epsilon(1e-13));
}

TEST_CASE("gauss_2f1(1/3,2/3;1;1/2) against the period route")
{
    const double val = gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 1.0, 0.5});
    // truncated-series oracle: 60 explicit terms leave a tail below 1e-18
    double sum = 1.0;
    double term = 1.0;
    for (int n = 0; n < 60; ++n) {
        term *= (1.0 / 3.0 + n) * (2.0 / 3.0 + n) / ((1.0 + n) * (1.0 + n)) * 0.5;
        sum += term;
    }
    CHECK(std::abs(val - sum) <= 1e-14);
    CHECK(val == doctest::Approx(1.1595952669639285).epsilon(1e-12));
    // independent route: (2/pi) K from the quartic-reduction period formulas
    const auto geo = shen3::periods_via_greenhill(shen3::modulus_new(0.5));
    CHECK(std::abs(val - 2.0 / kPi * geo.K) <= 1e-10 * val);
}

TEST_CASE("gauss_2f1 rejects bad parameters")
{
    CHECK_THROWS_AS((void)gauss_2f1({0.5, 0.5, 0.0, 0.1}), std::domain_error);
    CHECK_THROWS_AS((void)gauss_2f1({0.5, 0.5, -3.0, 0.1}), std::domain_error);
    CHECK_THROWS_AS((void)gauss_2f1({0.5, 0.5, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS((void)gauss_2f1({0.5, 0.5, 1.0, -1.2}), std::domain_error);
    // c = -2.5 is not an integer, fine
    CHECK_NOTHROW((void)gauss_2f1({0.5, 0.5, -2.5, 0.1}));
}

TEST_CASE("gauss_2f1 non-convergence carries partial sum and term count")
{
    try {
        (void)gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 1.0, 0.999999}, {1e-15, 50});
        FAIL("expected NonConvergenceError");
    } catch (const shen3::NonConvergenceError& e) {
        CHECK(e.terms() == 50);
        CHECK(e.partial_sum() > 1.0);
    }
}

TEST_CASE("gauss_2f1 is monotone increasing in z for positive parameters")
{
    double prev = gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 1.0, -0.9});
    for (int i = 1; i <= 37; ++i) {
        const double z = -0.9 + 1.85 * i / 37.0;
        const double cur = gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 1.0, z});
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("hyp_half_closed examples")
{
    CHECK(hyp_half_closed(0.0, 0.3) == 1.0);
    // kappa sin t = sin(pi/3): psi = pi/3
    CHECK(hyp_half_closed(kPi / 2.0, std::sin(kPi / 3.0)) ==
          doctest::Approx(1.8793852415718169).epsilon(1e-14));
    // kappa = sqrt(1/2), t = pi/2: psi = pi/4, cos(pi/12)/cos(pi/4) = (1+sqrt 3)/2
    const double exact = (1.0 + std::sqrt(3.0)) / 2.0;
    CHECK(hyp_half_closed(kPi / 2.0, std::sqrt(0.5)) == doctest::Approx(exact).epsilon(1e-14));
    CHECK(std::abs(exact - 1.3660254037844386) < 1e-15);
    CHECK_THROWS_AS((void)hyp_half_closed(kPi / 2.0, 1.0), std::domain_error);
}

TEST_CASE("series and closed form agree on the full parameter strip")
{
    for (const double kappa : {0.1, 0.35, 0.6, 0.85, 0.99}) {
        for (int i = 0; i < 100; ++i) {
            const double t = 2.0 * kPi * i / 100.0;
            const double closed = hyp_half_closed(t, kappa);
            const double s2 = kappa * std::sin(t);
            const double series =
                gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 0.5, s2 * s2}, {1e-15, 200000});
            CHECK(std::abs(series - closed) <= 1e-12 * (1.0 + std::abs(closed)));
        }
    }
}

TEST_CASE("complete_K_agm examples and hand oracle")
{
    CHECK(complete_K_agm(0.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    // AGM hand oracle, iterated to convergence
    const double m1 = 0.06698730;
    const double hand1 = kPi / (2.0 * oracles::agm_iter(1.0, std::sqrt(1.0 - m1), 8));
    CHECK(complete_K_agm(m1) == doctest::Approx(hand1).epsilon(1e-15));
    CHECK(complete_K_agm(m1) == doctest::Approx(1.5981420029158055).epsilon(1e-14));
    const double m2 = 0.93301270;
    const double hand2 = kPi / (2.0 * oracles::agm_iter(1.0, std::sqrt(1.0 - m2), 10));
    CHECK(complete_K_agm(m2) == doctest::Approx(hand2).epsilon(1e-15));
    CHECK(complete_K_agm(m2) == doctest::Approx(2.7680631318813305).epsilon(1e-14));
    CHECK_THROWS_AS((void)complete_K_agm(1.0), std::domain_error);
    CHECK_THROWS_AS((void)complete_K_agm(-0.1), std::domain_error);
}

TEST_CASE("complete_K_agm matches (pi/2) 2F1(1/2,1/2;1;m)")
{
    for (int i = 0; i <= 99; ++i) {
        const double m = 0.01 * i;
        const double agm_val = complete_K_agm(m);
        const double series =
            kPi / 2.0 * gauss_2f1({0.5, 0.5, 1.0, m}, {1e-15, 2000000});
        CHECK(std::abs(agm_val - series) <= 1e-11 * agm_val);
    }
}

TEST_CASE("signature3_K values and limits")
{
    CHECK(signature3_K(1e-14) == doctest::Approx(kPi / 2.0).epsilon(1e-12));
    const auto mod = shen3::modulus_new(0.5);
    CHECK(std::abs(signature3_K(0.5) - shen3::periods_via_greenhill(mod).K) <= 1e-10);
    // quadrature route at kappa^2 = 0.75
    const auto mod75 = shen3::modulus_new(0.75);
    CHECK(std::abs(signature3_K(0.75) - shen3::f_integral(kPi / 2.0, mod75)) <= 1e-10);
    CHECK_THROWS_AS((void)signature3_K(1.0), std::domain_error);
    // series divergence near kappa^2 -> 1 propagates
    CHECK_THROWS_AS((void)signature3_K(0.9999999, {1e-15, 1000}), shen3::NonConvergenceError);
    // and clears with a widened term budget
    CHECK_NOTHROW((void)signature3_K(0.999, {1e-15, 2000000}));
}

TEST_CASE("termwise integration identity")
{
    // integral over [0, pi/2] of F(a,b;1/2;kappa^2 sin^2 t) equals (pi/2) F(a,b;1;kappa^2)
    for (const double kappa2 : {0.2, 0.5, 0.8}) {
        const double kappa = std::sqrt(kappa2);
        const auto integrand = [&](double t) {
            const double s = kappa * std::sin(t);
            return gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 0.5, s * s});
        };
        const double quad = oracles::simpson(integrand, 0.0, kPi / 2.0, 4000);
        const double closed = kPi / 2.0 * gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 1.0, kappa2});
        CHECK(std::abs(quad - closed) <= 1e-10);
    }
}

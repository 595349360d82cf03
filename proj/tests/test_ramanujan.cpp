#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shen3/dn3.hpp"
#include "shen3/ramanujan.hpp"

using namespace shen3::ramanujan;
constexpr double kPi = std::numbers::pi;

TEST_CASE("p_from_angle: closed-form value and limits")
{
    // a = pi/12: 1 + p + p^2 = 3/2 forces p = (sqrt 3 - 1)/2
    const double golden = (std::sqrt(3.0) - 1.0) / 2.0;
    CHECK(p_from_angle(kPi / 12.0) == doctest::Approx(golden).epsilon(1e-14));
    const double p = p_from_angle(kPi / 12.0);
    CHECK(std::abs(std::sin(kPi / 12.0) -
                   std::sqrt(3.0) / 2.0 * p / std::sqrt(1.0 + p + p * p)) <= 1e-15);
    CHECK(p_from_angle(1e-9) <= 1e-6);
    CHECK(p_from_angle(kPi / 6.0 - 1e-9) >= 1.0 - 1e-6);
    CHECK_THROWS_AS((void)p_from_angle(0.0), std::domain_error);
    CHECK_THROWS_AS((void)p_from_angle(kPi / 6.0), std::domain_error);
}

TEST_CASE("p <-> a round trips and monotonicity")
{
    double prev_p = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double a = kPi / 6.0 * i / 51.0;
        const double p = p_from_angle(a);
        CHECK(p > prev_p);
        prev_p = p;
        CHECK(std::abs(angle_from_p(p) - a) <= 1e-13);
    }
    for (int i = 1; i <= 50; ++i) {
        const double p = i / 51.0;
        CHECK(std::abs(p_from_angle(angle_from_p(p)) - p) <= 1e-13);
    }
}

TEST_CASE("s_cubic_roots: closed forms and the defining cubic")
{
    const double golden = (std::sqrt(3.0) - 1.0) / 2.0;
    const auto at_golden = s_cubic_roots(golden);
    // 1 + p + p^2 = 3/2, so the middle root is p^2/2 = (2 - sqrt 3)/4 = sin^2(pi/12)
    CHECK(at_golden.mid == doctest::Approx((2.0 - std::sqrt(3.0)) / 4.0).epsilon(1e-15));
    CHECK(at_golden.mid ==
          doctest::Approx(std::pow(std::sin(kPi / 12.0), 2)).epsilon(1e-14));

    const auto at_half = s_cubic_roots(0.5);
    CHECK(at_half.mid == doctest::Approx(0.10714285714285714).epsilon(1e-15));

    for (const double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const auto r = s_cubic_roots(p);
        const double t = 1.0 + p + p * p;
        const double rhs = 27.0 / 4.0 * p * p * (1.0 + p) * (1.0 + p) / (t * t * t);
        for (const double s : {r.outer_lo, r.mid, r.outer_hi}) {
            CHECK(std::abs(s * (3.0 - 4.0 * s) * (3.0 - 4.0 * s) - rhs) <= 1e-12);
        }
        CHECK(r.mid > 0.0);
        CHECK(r.mid < 0.25);
        CHECK(r.outer_lo > 0.25);
        CHECK(r.outer_hi > 0.25);
        CHECK(std::abs(r.outer_lo + r.mid + r.outer_hi - 1.5) <= 1e-14);
    }
    CHECK_THROWS_AS((void)s_cubic_roots(0.0), std::domain_error);
}

TEST_CASE("ramanujan_maps: exact values at the golden p and p = 1/2")
{
    const double golden = (std::sqrt(3.0) - 1.0) / 2.0;
    const auto par = ramanujan_maps(golden);
    CHECK(std::abs(par.beta - 0.5) <= 1e-14);
    CHECK(par.alpha_r == doctest::Approx((2.0 - std::sqrt(3.0)) / 4.0).epsilon(1e-14));
    CHECK(par.multiplier == doctest::Approx(1.1397535284773888).epsilon(1e-14));
    CHECK(par.multiplier == doctest::Approx(1.5 / std::pow(3.0, 0.25)).epsilon(1e-14));
    CHECK(par.angle_a == doctest::Approx(kPi / 12.0).epsilon(1e-14));

    const auto half = ramanujan_maps(0.5);
    CHECK(half.beta == doctest::Approx(0.70845481049562682).epsilon(1e-13));
    CHECK(half.alpha_r == doctest::Approx(0.15625).epsilon(1e-15));
    CHECK(half.multiplier == doctest::Approx(1.75 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("ramanujan_maps: consistency with the Greenhill constants")
{
    for (int i = 1; i <= 20; ++i) {
        const double p = i / 21.0;
        const auto par = ramanujan_maps(p);
        CHECK(par.alpha_r > 0.0);
        CHECK(par.alpha_r < par.beta);
        CHECK(par.beta < 1.0);

        const auto mod = shen3::modulus_new(par.beta);
        CHECK(std::abs(mod.angle_a - par.angle_a) <= 1e-12);

        const auto gh = shen3::greenhill_data(mod);
        const double t = 1.0 + p + p * p;
        CHECK(std::abs(gh.k2 - par.alpha_r) <= 1e-12);
        CHECK(std::abs(4.0 * gh.M2 - 9.0 * (1.0 + 2.0 * p) / (t * t)) <= 1e-12);
        // the two multiplier expressions agree: (3/2M) vs (1+p+p^2)/sqrt(1+2p)
        CHECK(std::abs(par.multiplier * 2.0 * std::sqrt(gh.M2) / 3.0 - 1.0) <= 1e-12);

        // double-angle closed forms in p
        const double a2 = 2.0 * par.angle_a;
        CHECK(std::abs(std::sin(a2) - std::sqrt(3.0) / 2.0 * p * (2.0 + p) / t) <= 1e-13);
        CHECK(std::abs(std::cos(a2) - 0.5 * (2.0 + 2.0 * p - p * p) / t) <= 1e-13);

        // kappa^2 = beta lands the middle S-cubic root on sin^2(a)
        const auto roots = s_cubic_roots(p);
        CHECK(std::abs(roots.mid - std::pow(std::sin(mod.angle_a), 2)) <= 1e-13);
    }
}

TEST_CASE("identity 5.6: values and residual sweep")
{
    const auto at_half = verify_identity_5_6(0.5);
    CHECK(at_half.lhs == doctest::Approx(1.2905468138800527).epsilon(1e-12));
    CHECK(at_half.rhs == doctest::Approx(1.2905468138800527).epsilon(1e-12));
    CHECK(at_half.residual <= 1e-10);

    const double golden = (std::sqrt(3.0) - 1.0) / 2.0;
    const auto at_golden = verify_identity_5_6(golden);
    CHECK(at_golden.lhs == doctest::Approx(1.1595952669639285).epsilon(1e-12));
    CHECK(std::abs(at_golden.lhs -
                   shen3::hypergeo::signature3_K(0.5) * 2.0 / kPi) <= 1e-12);

    const auto tiny = verify_identity_5_6(1e-6);
    CHECK(tiny.lhs == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(tiny.rhs == doctest::Approx(1.0).epsilon(1e-5));

    for (int i = 1; i <= 19; ++i) {
        const double p = 0.05 * i;
        CHECK(verify_identity_5_6(p).residual <= 1e-10);
    }
    CHECK_THROWS_AS((void)verify_identity_5_6(0.0), std::domain_error);
    CHECK_THROWS_AS((void)verify_identity_5_6(1.0), std::domain_error);
}

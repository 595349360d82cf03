#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "shen3/ramanujan.hpp"

namespace shen3::cli {

namespace {

using Complex = std::complex<double>;

struct CheckValue {
    double expected;
    double actual;
    double residual;
};

// residual-style check: expected 0, actual is the residual itself
CheckValue residual_check(double residual)
{
    return {0.0, residual, residual};
}

// comparison check: residual may be relative or absolute, caller decides
CheckValue compare_check(double expected, double actual, double residual)
{
    return {expected, actual, residual};
}

template <typename Fn>
void run_check(Report& report, const std::string& name, Fn&& fn)
{
    ReportEntry entry{name, 0.0, 0.0, std::numeric_limits<double>::infinity(),
                      verify_tolerance(name), false};
    try {
        const CheckValue v = fn();
        entry.expected = v.expected;
        entry.actual = v.actual;
        entry.residual = std::abs(v.residual);
        entry.pass = entry.residual <= entry.tolerance;
    } catch (const std::exception&) {
        entry.pass = false;  // numerical failure becomes a failing entry, not a crash
    }
    report.overall = report.overall && entry.pass;
    report.entries.push_back(std::move(entry));
}

}  // namespace

const std::vector<VerifyTolerance>& verify_tolerances()
{
    static const std::vector<VerifyTolerance> table = {
        {"route_agreement", 1e-9},
        {"route_agreement_imag", 1e-9},
        {"identity_cubic", 1e-9},
        {"identity_factored", 1e-9},
        {"identity_cn3", 1e-9},
        {"differential_equation", 1e-9},
        {"derivative_fd", 1e-6},
        {"wp_defining_relation", 1e-9},
        {"pole_wp_value", 1e-10},
        {"quartic_at_minus_third", 1e-14},
        {"pole_growth_lower", 0.0},
        {"pole_growth_upper", 0.0},
        {"critical_cubic_residual", 1e-12},
        {"critical_vieta_product", 1e-12},
        {"critical_vieta_sum", 1e-12},
        {"midpoint_vs_cubic_roots", 1e-10},
        {"K_conclusion_identity", 1e-10},
        {"K_vs_agm_roots", 1e-10},
        {"Kp_vs_agm_roots", 1e-10},
        {"Kp_over_K_quotient", 1e-10},
        {"theorem_5_6_residual", 1e-10},
        {"ramanujan_4M2", 1e-12},
        {"ramanujan_k2_alpha", 1e-12},
        {"ellipticity_real_period", 1e-9},
        {"ellipticity_imag_period", 1e-9},
        {"evenness", 1e-10},
        {"conjugate_reality", 1e-10},
        {"monotone_decreasing", 0.0},
        {"zero_height_residual", 1e-10},
        {"minus_two_residual", 1e-10},
        {"sn3sq_at_z0", 1e-12},
    };
    return table;
}

double verify_tolerance(const std::string& name)
{
    for (const auto& row : verify_tolerances()) {
        if (name == row.name) {
            return row.tolerance;
        }
    }
    throw std::logic_error("verify: unknown tolerance name " + name);
}

Report run_verify(const Modulus& mod, std::size_t grid)
{
    Report report;
    if (grid == 0) {
        return report;  // zero entries, vacuous pass
    }

    const double K = mod.lattice.K;
    const double Kp = mod.lattice.Kp;
    const double lam2 = mod.lambda * mod.lambda;

    // Shared real-axis samples over [0, 2K].
    struct RealSample {
        double u, direct, sn, cn;
        Complex elliptic;
    };
    std::vector<RealSample> samples;
    try {
        samples.reserve(grid + 1);
        for (std::size_t i = 0; i <= grid; ++i) {
            RealSample s{};
            s.u = 2.0 * K * static_cast<double>(i) / static_cast<double>(grid);
            s.direct = dn3_direct(s.u, mod);
            const auto sc = sn3_cn3_direct(s.u, mod);
            s.sn = sc.sn3;
            s.cn = sc.cn3;
            s.elliptic = dn3_wp({s.u, 0.0}, mod);
            samples.push_back(s);
        }
    } catch (const std::exception&) {
        samples.clear();  // per-entry checks below will fail visibly
    }

    run_check(report, "route_agreement", [&] {
        double worst = samples.empty() ? std::numeric_limits<double>::infinity() : 0.0;
        for (const auto& s : samples) {
            worst = std::max(worst, std::abs(s.direct - s.elliptic.real()));
        }
        return residual_check(worst);
    });
    run_check(report, "route_agreement_imag", [&] {
        double worst = samples.empty() ? std::numeric_limits<double>::infinity() : 0.0;
        for (const auto& s : samples) {
            worst = std::max(worst, std::abs(s.elliptic.imag()));
        }
        return residual_check(worst);
    });
    run_check(report, "identity_cubic", [&] {
        double worst = samples.empty() ? std::numeric_limits<double>::infinity() : 0.0;
        for (const auto& s : samples) {
            for (const double dd : {s.direct, s.elliptic.real()}) {
                const double cube = dd * dd * dd + 3.0 * dd * dd;
                worst = std::max(worst,
                                 std::abs(4.0 * (1.0 - mod.kappa2 * s.sn * s.sn) - cube));
            }
        }
        return residual_check(worst);
    });
    run_check(report, "identity_factored", [&] {
        double worst = samples.empty() ? std::numeric_limits<double>::infinity() : 0.0;
        for (const auto& s : samples) {
            const double dd = s.direct;
            worst = std::max(worst, std::abs(4.0 * mod.kappa2 * s.sn * s.sn -
                                             (1.0 - dd) * (2.0 + dd) * (2.0 + dd)));
        }
        return residual_check(worst);
    });
    run_check(report, "identity_cn3", [&] {
        double worst = samples.empty() ? std::numeric_limits<double>::infinity() : 0.0;
        for (const auto& s : samples) {
            const double dd = s.direct;
            const double cube = dd * dd * dd + 3.0 * dd * dd;
            worst = std::max(worst, std::abs(4.0 * mod.kappa2 * s.cn * s.cn -
                                             (cube - 4.0 * lam2)));
        }
        return residual_check(worst);
    });

    // Complex grid in the quarter-rectangle, 1e-3 pole neighborhoods excluded.
    const std::size_t side = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(grid)))));
    const Complex pole{0.0, 2.0 * Kp / 3.0};
    std::vector<Complex> box;
    for (std::size_t i = 0; i < side; ++i) {
        for (std::size_t j = 0; j < side; ++j) {
            const Complex z{(static_cast<double>(i) + 0.5) * K / static_cast<double>(side),
                            (static_cast<double>(j) + 0.5) * Kp / static_cast<double>(side)};
            if (std::abs(z - pole) > 1e-3) {
                box.push_back(z);
            }
        }
    }

    run_check(report, "differential_equation", [&] {
        double worst = 0.0;
        for (const auto& z : box) {
            const auto dd = dn3_wp(z, mod);
            const auto ddp = dn3_derivative_wp(z, mod);
            const auto rhs =
                (4.0 / 9.0) * (1.0 - dd) * (dd * dd * dd + 3.0 * dd * dd - 4.0 * lam2);
            worst = std::max(worst, std::abs(ddp * ddp - rhs));
        }
        return residual_check(worst);
    });
    run_check(report, "derivative_fd", [&] {
        double worst = 0.0;
        const double h = 1e-5;
        for (std::size_t i = 0; i < box.size(); i += std::max<std::size_t>(1, box.size() / 9)) {
            const Complex z = box[i];
            const Complex fd = (dn3_wp(z + h, mod) - dn3_wp(z - h, mod)) / (2.0 * h);
            worst = std::max(worst, std::abs(dn3_derivative_wp(z, mod) - fd));
        }
        return residual_check(worst);
    });
    run_check(report, "wp_defining_relation", [&] {
        double worst = 0.0;
        for (const auto& z : box) {
            const auto dd = dn3_wp(z, mod);
            const auto w = weierstrass::wp(z, mod.lattice, mod.invariants);
            worst = std::max(worst, std::abs((1.0 - dd) * (1.0 / 3.0 + w) -
                                             (4.0 / 9.0) * mod.kappa2));
        }
        return residual_check(worst);
    });

    run_check(report, "pole_wp_value", [&] {
        const auto w = weierstrass::wp(pole, mod.lattice, mod.invariants);
        return residual_check(std::abs(w - Complex{-1.0 / 3.0, 0.0}));
    });
    run_check(report, "quartic_at_minus_third", [&] {
        return residual_check(std::abs(weierstrass::order3_quartic(-1.0 / 3.0, mod.invariants)));
    });
    run_check(report, "pole_growth_lower", [&] {
        double lowest = std::numeric_limits<double>::infinity();
        for (const double ang : {0.0, 1.57, 3.14, 4.71}) {
            const Complex d = 1e-7 * Complex{std::cos(ang), std::sin(ang)};
            lowest = std::min(lowest, std::abs(dn3_wp(pole + d, mod)));
        }
        return compare_check(1e6, lowest, std::max(0.0, 1e6 - lowest));
    });
    run_check(report, "pole_growth_upper", [&] {
        double highest = 0.0;
        for (const double ang : {0.0, 1.57, 3.14, 4.71}) {
            const Complex d = 1e-7 * Complex{std::cos(ang), std::sin(ang)};
            highest = std::max(highest, std::abs(dn3_wp(pole + d, mod)) * 1e-7);
        }
        return compare_check(2.0, highest, std::max(0.0, highest - 2.0));
    });

    const auto cv = critical_values(mod);
    run_check(report, "critical_cubic_residual", [&] {
        const auto g = [&](double x) { return x * x * x + 3.0 * x * x - 4.0 * lam2; };
        const double worst = std::max({std::abs(g(cv.x1)), std::abs(g(-cv.x2)),
                                       std::abs(g(-cv.x3))});
        return residual_check(worst);
    });
    run_check(report, "critical_vieta_product", [&] {
        return residual_check(std::abs(cv.x1 * cv.x2 * cv.x3 - 4.0 * lam2));
    });
    run_check(report, "critical_vieta_sum", [&] {
        return residual_check(std::abs(cv.x1 - cv.x2 - cv.x3 + 3.0));
    });
    run_check(report, "midpoint_vs_cubic_roots", [&] {
        const auto closed = midpoint_wp_values(mod);
        const auto roots = weierstrass::cubic_e_roots(mod.invariants);
        double worst = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            worst = std::max(worst, std::abs(closed[i] - roots[i]));
        }
        return residual_check(worst);
    });

    const auto geo = periods_via_greenhill(mod);
    const auto gh = greenhill_data(mod);
    run_check(report, "K_conclusion_identity", [&] {
        const double series = hypergeo::signature3_K(mod.kappa2, {1e-15, 2000000});
        return compare_check(series, geo.K, std::abs(geo.K - series) / series);
    });
    run_check(report, "K_vs_agm_roots", [&] {
        return compare_check(K, geo.K, std::abs(geo.K - K));
    });
    run_check(report, "Kp_vs_agm_roots", [&] {
        return compare_check(Kp, geo.Kp, std::abs(geo.Kp - Kp));
    });
    run_check(report, "Kp_over_K_quotient", [&] {
        const double quotient =
            hypergeo::complete_K_agm(gh.kp2) / hypergeo::complete_K_agm(gh.k2);
        return compare_check(quotient, Kp / K, std::abs(Kp / K - quotient));
    });

    const double p = ramanujan::p_from_angle(mod.angle_a);
    run_check(report, "theorem_5_6_residual", [&] {
        return residual_check(ramanujan::verify_identity_5_6(p).residual);
    });
    run_check(report, "ramanujan_4M2", [&] {
        const double t = 1.0 + p + p * p;
        return residual_check(std::abs(4.0 * gh.M2 - 9.0 * (1.0 + 2.0 * p) / (t * t)));
    });
    run_check(report, "ramanujan_k2_alpha", [&] {
        return residual_check(std::abs(gh.k2 - ramanujan::ramanujan_maps(p).alpha_r));
    });

    run_check(report, "ellipticity_real_period", [&] {
        double worst = 0.0;
        for (const auto& z : box) {
            worst = std::max(worst, std::abs(dn3_wp(z + 2.0 * K, mod) - dn3_wp(z, mod)));
        }
        return residual_check(worst);
    });
    run_check(report, "ellipticity_imag_period", [&] {
        double worst = 0.0;
        for (const auto& z : box) {
            worst = std::max(worst,
                             std::abs(dn3_wp(z + Complex{0.0, 2.0 * Kp}, mod) - dn3_wp(z, mod)));
        }
        return residual_check(worst);
    });
    run_check(report, "evenness", [&] {
        double worst = 0.0;
        for (const auto& z : box) {
            worst = std::max(worst, std::abs(dn3_wp(-z, mod) - dn3_wp(z, mod)));
        }
        return residual_check(worst);
    });
    run_check(report, "conjugate_reality", [&] {
        double worst = 0.0;
        for (const auto& z : box) {
            worst = std::max(worst, std::abs(std::conj(dn3_wp(std::conj(z), mod)) -
                                             dn3_wp(z, mod)));
        }
        return residual_check(worst);
    });
    run_check(report, "monotone_decreasing", [&] {
        double worst_rise = 0.0;
        double prev = dn3_direct(0.0, mod);
        for (int i = 1; i <= 50; ++i) {
            const double cur = dn3_direct(K * i / 50.0, mod);
            worst_rise = std::max(worst_rise, cur - prev);
            prev = cur;
        }
        return residual_check(std::max(0.0, worst_rise));
    });

    run_check(report, "zero_height_residual", [&] {
        const double L = zero_height_L(mod);
        return residual_check(std::abs(dn3_wp({K, L}, mod)));
    });
    run_check(report, "minus_two_residual", [&] {
        const double x0 = minus_two_point(mod);
        return residual_check(std::abs(dn3_wp({x0, Kp}, mod) + 2.0));
    });
    run_check(report, "sn3sq_at_z0", [&] {
        const double x0 = minus_two_point(mod);
        return residual_check(std::abs(sn3_squared_elliptic({x0, Kp}, mod)));
    });

    return report;
}

}  // namespace shen3::cli

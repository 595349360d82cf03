#include "shen3/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shen3::ramanujan {

double p_from_angle(double angle_a)
{
    if (!(angle_a > 0.0 && angle_a < std::numbers::pi / 6.0)) {
        throw std::domain_error("p_from_angle: angle must lie in (0, pi/6)");
    }
    // p^2 (3 - 4r^2) - 4r^2 p - 4r^2 = 0 with r = sin a; the discriminant is
    // 48 r^2 (1 - r^2), so the positive root simplifies to the form below.
    const double r = std::sin(angle_a);
    return 2.0 * r * (r + std::sqrt(3.0) * std::cos(angle_a)) / (3.0 - 4.0 * r * r);
}

double angle_from_p(double p)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("angle_from_p: p must lie in (0, 1)");
    }
    return std::asin(0.5 * std::sqrt(3.0) * p / std::sqrt(1.0 + p + p * p));
}

SCubicRoots s_cubic_roots(double p)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("s_cubic_roots: p must lie in (0, 1)");
    }
    const double quarter_t = 0.25 / (1.0 + p + p * p);
    return {3.0 * quarter_t, 3.0 * p * p * quarter_t, 3.0 * (1.0 + p) * (1.0 + p) * quarter_t};
}

PParam ramanujan_maps(double p)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("ramanujan_maps: p must lie in (0, 1)");
    }
    const double t = 1.0 + p + p * p;
    PParam out{};
    out.p = p;
    out.angle_a = angle_from_p(p);
    out.beta = 27.0 / 4.0 * p * p * (1.0 + p) * (1.0 + p) / (t * t * t);
    out.alpha_r = p * p * p * (2.0 + p) / (1.0 + 2.0 * p);
    out.multiplier = t / std::sqrt(1.0 + 2.0 * p);
    return out;
}

IdentityCheck verify_identity_5_6(double p, const hypergeo::SeriesControl& ctrl)
{
    const PParam par = ramanujan_maps(p);
    IdentityCheck chk{};
    chk.lhs = hypergeo::gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 1.0, par.beta}, ctrl);
    chk.rhs = par.multiplier * (2.0 / std::numbers::pi) * hypergeo::complete_K_agm(par.alpha_r);
    chk.residual = std::abs(chk.lhs - chk.rhs) / std::abs(chk.rhs);
    return chk;
}

}  // namespace shen3::ramanujan

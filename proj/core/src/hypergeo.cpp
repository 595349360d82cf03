#include "shen3/hypergeo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace shen3::hypergeo {

double gauss_2f1(const HypParams& params, const SeriesControl& ctrl)
{
    if (!(ctrl.rel_tol > 0.0) || ctrl.max_terms < 1) {
        throw std::domain_error("gauss_2f1: invalid series control");
    }
    if (params.c == std::rint(params.c) && params.c <= 0.0) {
        throw std::domain_error("gauss_2f1: c must not be zero or a negative integer");
    }
    if (!(std::abs(params.z) < 1.0)) {
        throw std::domain_error("gauss_2f1: series requires |z| < 1");
    }

    // Kahan-compensated summation; the series near z -> 1 runs long.
    double sum = 1.0;
    double comp = 0.0;
    double term = 1.0;
    for (std::size_t n = 0; n < ctrl.max_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (params.a + dn) * (params.b + dn) / ((params.c + dn) * (dn + 1.0)) * params.z;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::abs(term) <= ctrl.rel_tol * std::abs(sum)) {
            return sum;
        }
    }
    throw NonConvergenceError("gauss_2f1: series did not converge", sum, ctrl.max_terms);
}

double hyp_half_closed(double t, double kappa)
{
    const double x = kappa * std::sin(t);
    if (!(std::abs(x) < 1.0)) {
        throw std::domain_error("hyp_half_closed: |kappa sin t| must be < 1");
    }
    const double psi = std::asin(x);
    return std::cos(psi / 3.0) / std::cos(psi);
}

double agm(double x, double y)
{
    if (!(x > 0.0) || !(y > 0.0)) {
        throw std::domain_error("agm: arguments must be positive");
    }
    double a = x;
    double b = y;
    // Quadratic convergence; 64 iterations is far past what doubles need.
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-15 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 0.5 * (a + b);
}

double complete_K_agm(double m)
{
    if (!(m >= 0.0 && m < 1.0)) {
        throw std::domain_error("complete_K_agm: squared modulus must lie in [0, 1)");
    }
    return std::numbers::pi / (2.0 * agm(1.0, std::sqrt(1.0 - m)));
}

double signature3_K(double kappa2, const SeriesControl& ctrl)
{
    if (!(kappa2 > 0.0 && kappa2 < 1.0)) {
        throw std::domain_error("signature3_K: kappa^2 must lie in (0, 1)");
    }
    return 0.5 * std::numbers::pi * gauss_2f1({1.0 / 3.0, 2.0 / 3.0, 1.0, kappa2}, ctrl);
}

}  // namespace shen3::hypergeo

#include "shen3/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "shen3/hypergeo.hpp"

namespace shen3::weierstrass {

Invariants invariants_from_modulus(double kappa2)
{
    if (!(kappa2 > 0.0 && kappa2 < 1.0)) {
        throw std::domain_error("invariants_from_modulus: kappa^2 must lie in (0, 1)");
    }
    Invariants inv{};
    inv.g2 = 4.0 / 27.0 * (9.0 - 8.0 * kappa2);
    inv.g3 = 8.0 / 729.0 * (8.0 * kappa2 * kappa2 - 36.0 * kappa2 + 27.0);
    // g2^3 - 27 g3^2 in the stable product form; the naive difference cancels
    // to nothing as kappa^2 -> 0.
    const double k6 = kappa2 * kappa2 * kappa2;
    inv.delta = 4096.0 / 19683.0 * k6 * (1.0 - kappa2);
    return inv;
}

std::array<double, 3> cubic_e_roots(const Invariants& inv)
{
    if (!(inv.delta > 0.0)) {
        throw std::domain_error("cubic_e_roots: lattice requires delta > 0");
    }
    // 4t^3 - g2 t - g3 = 0 as the depressed cubic t^3 + P t + Q = 0 with three
    // real roots; trigonometric solution.
    const double P = -inv.g2 / 4.0;
    const double Q = -inv.g3 / 4.0;
    const double r = 2.0 * std::sqrt(-P / 3.0);
    const double arg = std::clamp(3.0 * Q / (2.0 * P) * std::sqrt(-3.0 / P), -1.0, 1.0);
    const double theta = std::acos(arg);

    std::array<double, 3> roots{};
    for (int k = 0; k < 3; ++k) {
        roots[static_cast<std::size_t>(k)] =
            r * std::cos((theta - 2.0 * std::numbers::pi * k) / 3.0);
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());

    // One Newton step per root tightens the trig solution to full precision.
    for (auto& t : roots) {
        const double f = ((4.0 * t * t) * t - inv.g2 * t) - inv.g3;
        const double fp = 12.0 * t * t - inv.g2;
        if (fp != 0.0) {
            t -= f / fp;
        }
    }
    return roots;
}

LatticeData half_periods(const Invariants& inv)
{
    const auto e = cubic_e_roots(inv);
    LatticeData lat{e[0], e[1], e[2], 0.0, 0.0};
    const double pi = std::numbers::pi;
    lat.K = pi / (2.0 * hypergeo::agm(std::sqrt(e[0] - e[2]), std::sqrt(e[0] - e[1])));
    lat.Kp = pi / (2.0 * hypergeo::agm(std::sqrt(e[0] - e[2]), std::sqrt(e[1] - e[2])));
    return lat;
}

std::complex<double> reduce_to_cell(std::complex<double> z, const LatticeData& lat)
{
    const double px = 2.0 * lat.K;
    const double py = 2.0 * lat.Kp;
    const double x = z.real() - px * std::floor(z.real() / px + 0.5);
    const double y = z.imag() - py * std::floor(z.imag() / py + 0.5);
    return {x, y};
}

std::complex<double> nearest_lattice_point(std::complex<double> z, const LatticeData& lat)
{
    const double px = 2.0 * lat.K;
    const double py = 2.0 * lat.Kp;
    return {px * std::round(z.real() / px), py * std::round(z.imag() / py)};
}

namespace detail {

JacobiTriple sncndn(double u, double m, double mc)
{
    if (m < 0.0 || mc < 0.0) {
        throw std::domain_error("sncndn: parameter must lie in [0, 1]");
    }
    if (m == 0.0) {
        return {std::sin(u), std::cos(u), 1.0};
    }
    if (mc == 0.0) {
        const double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }

    // Descending AGM; c_n -> 0 quadratically until the rounding floor.
    constexpr int kMaxLevels = 24;
    double a[kMaxLevels + 1];
    double c[kMaxLevels + 1];
    a[0] = 1.0;
    c[0] = std::sqrt(m);
    double b = std::sqrt(mc);
    int n = 0;
    while (n < kMaxLevels && std::abs(c[n]) > 1e-15 * a[n]) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
        if (std::abs(c[n]) >= std::abs(c[n - 1])) {
            break;  // stalled at the floor, further levels add only noise
        }
    }

    // Backward amplitude recurrence.
    double phi = std::ldexp(a[n] * u, n);
    for (int i = n; i >= 1; --i) {
        const double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(s));
    }

    JacobiTriple j{};
    j.sn = std::sin(phi);
    j.cn = std::cos(phi);
    j.dn = std::sqrt(std::max(0.0, 1.0 - m * j.sn * j.sn));  // dn > 0 on the real line
    return j;
}

WpPair wp_core(std::complex<double> z, const LatticeData& lat)
{
    const double d13 = lat.e1 - lat.e3;
    const double m = (lat.e2 - lat.e3) / d13;
    const double mc = (lat.e1 - lat.e2) / d13;

    // Keep |Im z| <= Kp/2 so the Jacobi split below stays away from its own
    // poles; recover via wp(z + iKp) - e3 = (e1-e3)(e2-e3) / (wp(z) - e3).
    bool shifted = false;
    if (std::abs(z.imag()) > 0.5 * lat.Kp) {
        z -= std::complex<double>(0.0, std::copysign(lat.Kp, z.imag()));
        shifted = true;
    }
    if (shifted && z == std::complex<double>(0.0, 0.0)) {
        return {{lat.e3, 0.0}, {0.0, 0.0}};  // original z was a lattice translate of +-iKp
    }

    const double s = std::sqrt(d13);
    const auto ju = sncndn(z.real() * s, m, mc);
    const auto jv = sncndn(z.imag() * s, mc, m);

    const double den = jv.cn * jv.cn + m * ju.sn * ju.sn * jv.sn * jv.sn;
    const std::complex<double> snz{ju.sn * jv.dn / den, ju.cn * ju.dn * jv.sn * jv.cn / den};
    const std::complex<double> cnz{ju.cn * jv.cn / den, -ju.sn * ju.dn * jv.sn * jv.dn / den};
    const std::complex<double> dnz{ju.dn * jv.cn * jv.dn / den, -m * ju.sn * ju.cn * jv.sn / den};

    const std::complex<double> sn2 = snz * snz;
    std::complex<double> p = lat.e3 + d13 / sn2;
    std::complex<double> pp = -2.0 * d13 * s * cnz * dnz / (sn2 * snz);

    if (shifted) {
        const double A = d13 * (lat.e2 - lat.e3);
        const std::complex<double> dpe = p - lat.e3;
        pp = -A * pp / (dpe * dpe);
        p = lat.e3 + A / dpe;
    }
    return {p, pp};
}

}  // namespace detail

WpPair wp_with_derivative(std::complex<double> z, const LatticeData& lat, const Invariants& inv)
{
    (void)inv;  // the lattice data determines wp; kept for interface symmetry
    const auto zr = reduce_to_cell(z, lat);
    const auto near = nearest_lattice_point(zr, lat);
    if (std::abs(zr - near) < kPoleProximity) {
        throw PoleError("wp: argument within pole proximity of a lattice point",
                        nearest_lattice_point(z, lat));
    }
    return detail::wp_core(zr, lat);
}

std::complex<double> wp(std::complex<double> z, const LatticeData& lat, const Invariants& inv)
{
    return wp_with_derivative(z, lat, inv).p;
}

std::complex<double> wp_prime(std::complex<double> z, const LatticeData& lat, const Invariants& inv)
{
    return wp_with_derivative(z, lat, inv).p_prime;
}

double order3_quartic(double w, const Invariants& inv)
{
    const double w2 = w * w;
    return w2 * w2 - 0.5 * inv.g2 * w2 - inv.g3 * w - inv.g2 * inv.g2 / 48.0;
}

QuarticRoots order3_quartic_roots(const Invariants& inv)
{
    if (!(inv.delta > 0.0)) {
        throw std::domain_error("order3_quartic_roots: requires delta > 0");
    }
    // -1/3 is a root for every in-scope modulus; deflate it exactly and solve
    // the residual cubic in closed form (one real root, one conjugate pair).
    const double r = -1.0 / 3.0;
    const double b1 = r;
    const double b2 = -0.5 * inv.g2 + r * b1;
    const double b3 = -inv.g3 + r * b2;

    const double P = b2 - b1 * b1 / 3.0;
    const double Q = 2.0 * b1 * b1 * b1 / 27.0 - b1 * b2 / 3.0 + b3;
    const double D = 0.25 * Q * Q + P * P * P / 27.0;
    double pos;
    if (D > 0.0) {
        const double sq = std::sqrt(D);
        pos = std::cbrt(-0.5 * Q + sq) + std::cbrt(-0.5 * Q - sq) - b1 / 3.0;
    } else {
        // Unreachable for delta > 0; take the largest real root for robustness.
        const double rr = 2.0 * std::sqrt(-P / 3.0);
        const double theta = std::acos(std::clamp(1.5 * Q / P * std::sqrt(-3.0 / P), -1.0, 1.0));
        pos = rr * std::cos(theta / 3.0) - b1 / 3.0;
    }
    // Newton polish against the original quartic.
    for (int i = 0; i < 2; ++i) {
        const double f = order3_quartic(pos, inv);
        const double fp = 4.0 * pos * pos * pos - inv.g2 * pos - inv.g3;
        if (fp != 0.0) {
            pos -= f / fp;
        }
    }

    // Deflate the real root; the remaining quadratic holds the conjugate pair.
    const double qb = b1 + pos;
    const double qc = b2 + pos * qb;
    const double disc = qb * qb - 4.0 * qc;
    if (!(disc < 0.0)) {
        throw NonConvergenceError("order3_quartic_roots: expected a conjugate pair", pos, 0);
    }
    return {r, pos, {-0.5 * qb, 0.5 * std::sqrt(-disc)}};
}

}  // namespace shen3::weierstrass

#include "shen3/dn3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace shen3 {

namespace {

constexpr double kQuadTol = 1e-13;   // absolute quadrature target for f
constexpr double kPhiTol = 1e-13;    // Newton target on |f(T) - u|
constexpr double kBisectTol = 1e-12; // argument tolerance for edge bisections

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

template <typename F>
void gk15_panel(const F& f, double lo, double hi, double& value, double& error)
{
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fs = f(c - dx) + f(c + dx);
        kron += kWgk[i] * fs;
        if (i % 2 == 1) {
            gauss += kWg[i / 2] * fs;
        }
    }
    value = kron * h;
    error = std::abs(kron - gauss) * h;
}

// Adaptive bisection on the Gauss-Kronrod error estimate.
template <typename F>
double adaptive_quad(const F& f, double lo, double hi, double abs_tol)
{
    if (lo == hi) {
        return 0.0;
    }
    struct Panel {
        double lo, hi, value, error;
    };
    constexpr std::size_t kMaxPanels = 2048;
    std::vector<Panel> stack;
    {
        Panel p{lo, hi, 0.0, 0.0};
        gk15_panel(f, lo, hi, p.value, p.error);
        stack.push_back(p);
    }
    const double total_len = std::abs(hi - lo);
    double value = 0.0;
    double achieved = 0.0;
    std::size_t used = 1;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double local_tol = abs_tol * std::abs(p.hi - p.lo) / total_len;
        if (p.error <= std::max(local_tol, 1e-18)) {
            value += p.value;
            achieved += p.error;
            continue;
        }
        if (used + 2 > kMaxPanels) {
            throw NonConvergenceError(
                "f_integral: adaptive quadrature stalled (error estimate " +
                    std::to_string(p.error) + ")",
                value + p.value, used);
        }
        const double mid = 0.5 * (p.lo + p.hi);
        Panel a{p.lo, mid, 0.0, 0.0};
        Panel b{mid, p.hi, 0.0, 0.0};
        gk15_panel(f, a.lo, a.hi, a.value, a.error);
        gk15_panel(f, b.lo, b.hi, b.value, b.error);
        stack.push_back(a);
        stack.push_back(b);
        used += 2;
    }
    (void)achieved;
    return value;
}

// Distance from a cell-reduced point to the pole set +-(2/3) i K' mod lattice.
std::pair<double, std::complex<double>> nearest_pole(std::complex<double> zr,
                                                     const weierstrass::LatticeData& lat)
{
    const double tk = 2.0 * lat.K;
    const double tkp = 2.0 * lat.Kp;
    double best = std::numeric_limits<double>::infinity();
    std::complex<double> best_pole;
    for (int sx = -1; sx <= 1; ++sx) {
        for (int sy = -1; sy <= 1; ++sy) {
            for (const double sgn : {1.0, -1.0}) {
                const std::complex<double> cand{tk * sx, tkp * sy + sgn * (2.0 / 3.0) * lat.Kp};
                const double d = std::abs(zr - cand);
                if (d < best) {
                    best = d;
                    best_pole = cand;
                }
            }
        }
    }
    return {best, best_pole};
}

struct ReducedPoint {
    std::complex<double> zr;
    bool at_lattice;  // within pole proximity of a lattice point (dn3 is 1 there)
};

ReducedPoint reduce_for_dn3(std::complex<double> z, const Modulus& mod, const char* who)
{
    const auto& lat = mod.lattice;
    const auto zr = weierstrass::reduce_to_cell(z, lat);
    const auto [dist, pole] = nearest_pole(zr, lat);
    if (dist < weierstrass::kPoleProximity) {
        throw PoleError(std::string(who) + ": argument within pole proximity of a dn3 pole",
                        pole + (z - zr));
    }
    const auto near = weierstrass::nearest_lattice_point(zr, lat);
    return {zr - near, std::abs(zr - near) < weierstrass::kPoleProximity};
}

}  // namespace

Modulus modulus_new(double kappa2)
{
    if (!(kappa2 > 0.0 && kappa2 < 1.0)) {
        throw std::domain_error("modulus_new: kappa^2 must lie in (0, 1)");
    }
    Modulus m{};
    m.kappa2 = kappa2;
    m.kappa = std::sqrt(kappa2);
    m.lambda = std::sqrt(1.0 - kappa2);
    m.angle_a = std::acos(m.lambda) / 3.0;
    m.invariants = weierstrass::invariants_from_modulus(kappa2);
    m.lattice = weierstrass::half_periods(m.invariants);
    return m;
}

double f_integral(double T, const Modulus& mod)
{
    if (T == 0.0) {
        return 0.0;
    }
    if (T < 0.0) {
        return -f_integral(-T, mod);  // even integrand, odd integral
    }
    const double pi = std::numbers::pi;
    const auto integrand = [&mod](double t) { return hypergeo::hyp_half_closed(t, mod.kappa); };
    const double periods = std::floor(T / pi);
    const double rest = T - periods * pi;
    double value = 0.0;
    if (periods > 0.0) {
        value = periods * adaptive_quad(integrand, 0.0, pi, kQuadTol);
    }
    return value + adaptive_quad(integrand, 0.0, rest, kQuadTol);
}

double phi(double u, const Modulus& mod)
{
    if (u == 0.0) {
        return 0.0;
    }
    if (u < 0.0) {
        return -phi(-u, mod);
    }
    const double pi = std::numbers::pi;
    const auto integrand = [&mod](double t) { return hypergeo::hyp_half_closed(t, mod.kappa); };
    const double two_K = adaptive_quad(integrand, 0.0, pi, kQuadTol);
    const double cycles = std::floor(u / two_K);
    const double v = u - cycles * two_K;
    if (v == 0.0) {
        return cycles * pi;
    }

    // f' ranges over [1, cos(psi_max/3)/lambda], so v/f'_max <= phi(v) <= min(v, pi).
    const double fp_max = std::cos(std::asin(mod.kappa) / 3.0) / mod.lambda;
    double lo = v / fp_max;
    double hi = std::min(v, pi);
    double T = std::clamp(v * pi / two_K, lo, hi);
    double residual = adaptive_quad(integrand, 0.0, T, kQuadTol) - v;
    for (int iter = 0; iter < 50 && std::abs(residual) > kPhiTol; ++iter) {
        if (residual > 0.0) {
            hi = T;
        } else {
            lo = T;
        }
        double next = T - residual / hypergeo::hyp_half_closed(T, mod.kappa);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);  // bisection fallback keeps the bracket
        }
        T = next;
        residual = adaptive_quad(integrand, 0.0, T, kQuadTol) - v;
    }
    if (std::abs(residual) > 1e-12) {
        throw NonConvergenceError("phi: inversion did not reach tolerance", T, 50);
    }
    return cycles * pi + T;
}

double dn3_direct(double u, const Modulus& mod)
{
    const double T = phi(u, mod);
    const double psi = std::asin(mod.kappa * std::sin(T));
    return std::cos(psi) / std::cos(psi / 3.0);
}

Sn3Cn3 sn3_cn3_direct(double u, const Modulus& mod)
{
    const double T = phi(u, mod);
    return {std::sin(T), std::cos(T)};
}

std::complex<double> dn3_wp(std::complex<double> z, const Modulus& mod)
{
    const auto red = reduce_for_dn3(z, mod, "dn3_wp");
    if (red.at_lattice) {
        return {1.0, 0.0};  // removable: wp blows up, dn3 -> 1
    }
    const auto w = weierstrass::detail::wp_core(red.zr, mod.lattice);
    return 1.0 - (4.0 / 9.0) * mod.kappa2 / (1.0 / 3.0 + w.p);
}

std::complex<double> dn3_derivative_wp(std::complex<double> z, const Modulus& mod)
{
    const auto red = reduce_for_dn3(z, mod, "dn3_derivative_wp");
    if (red.at_lattice) {
        return -(8.0 / 9.0) * mod.kappa2 * red.zr;  // leading Taylor term about the lattice point
    }
    const auto w = weierstrass::detail::wp_core(red.zr, mod.lattice);
    const std::complex<double> shifted = 1.0 / 3.0 + w.p;
    return (4.0 / 9.0) * mod.kappa2 * w.p_prime / (shifted * shifted);
}

std::complex<double> sn3_squared_elliptic(std::complex<double> z, const Modulus& mod)
{
    const auto red = reduce_for_dn3(z, mod, "sn3_squared_elliptic");
    if (red.at_lattice) {
        return {0.0, 0.0};
    }
    const auto w = weierstrass::detail::wp_core(red.zr, mod.lattice);
    const std::complex<double> dd = 1.0 - (4.0 / 9.0) * mod.kappa2 / (1.0 / 3.0 + w.p);
    const std::complex<double> two_plus = 2.0 + dd;
    return (1.0 - dd) * two_plus * two_plus / (4.0 * mod.kappa2);
}

CriticalValues critical_values(const Modulus& mod)
{
    const double a2 = 2.0 * mod.angle_a;
    const double third = std::numbers::pi / 3.0;
    return {2.0 * std::cos(a2) - 1.0, 1.0 + 2.0 * std::cos(a2 + third),
            1.0 + 2.0 * std::cos(a2 - third)};
}

std::array<double, 3> midpoint_wp_values(const Modulus& mod)
{
    const double a = mod.angle_a;
    const double sixth = std::numbers::pi / 6.0;
    const double scale = mod.kappa2 / 9.0;
    const double sa = std::sin(a);
    const double cp = std::cos(a + sixth);
    const double cm = std::cos(a - sixth);
    return {scale / (sa * sa) - 1.0 / 3.0, scale / (cp * cp) - 1.0 / 3.0,
            scale / (cm * cm) - 1.0 / 3.0};
}

GreenhillData greenhill_data(const Modulus& mod)
{
    const double a = mod.angle_a;
    const double sixth = std::numbers::pi / 6.0;
    const double cp = std::cos(a + sixth);
    const double cm = std::cos(a - sixth);
    const double c2m = std::cos(2.0 * a - sixth);
    const double c2p = std::cos(2.0 * a + sixth);
    const double sa = std::sin(a);
    const double denom = cp * cp * c2m;
    GreenhillData g{};
    g.M2 = 2.0 * std::sqrt(3.0) * denom;
    g.k2 = sa * sa * std::sin(2.0 * a) / denom;
    g.kp2 = cm * cm * c2p / denom;
    return g;
}

FundamentalGeometry periods_via_greenhill(const Modulus& mod)
{
    const auto g = greenhill_data(mod);
    const double three_over_2M = 1.5 / std::sqrt(g.M2);
    FundamentalGeometry geo{};
    geo.K = three_over_2M * hypergeo::complete_K_agm(g.k2);
    geo.Kp = three_over_2M * hypergeo::complete_K_agm(g.kp2);
    geo.pole_height = 2.0 * geo.Kp / 3.0;
    geo.band_halfwidth = geo.pole_height;
    return geo;
}

std::vector<std::complex<double>> pole_locations(const Modulus& mod, std::size_t n_cells)
{
    if (n_cells < 1) {
        throw std::domain_error("pole_locations: n_cells must be at least 1");
    }
    const double two_K = 2.0 * mod.lattice.K;
    const double two_Kp = 2.0 * mod.lattice.Kp;
    const double height = 2.0 * mod.lattice.Kp / 3.0;
    std::vector<std::complex<double>> poles;
    poles.reserve(2 * n_cells * n_cells);
    for (std::size_t ix = 0; ix < n_cells; ++ix) {
        for (std::size_t iy = 0; iy < n_cells; ++iy) {
            const double ox = two_K * static_cast<double>(ix);
            const double oy = two_Kp * static_cast<double>(iy);
            poles.emplace_back(ox, oy + height);
            poles.emplace_back(ox, oy - height);
        }
    }
    return poles;
}

namespace {

// Bisection for a strictly monotone real restriction of dn3_wp along one edge
// of the quarter-rectangle.
template <typename F>
double bisect_edge(F value, double lo, double hi, bool decreasing, const char* who)
{
    double flo = value(lo);
    double fhi = value(hi);
    if (decreasing ? !(flo > 0.0 && fhi < 0.0) : !(flo < 0.0 && fhi > 0.0)) {
        throw NonConvergenceError(std::string(who) + ": bracket failure", flo, 0);
    }
    for (int i = 0; i < 200 && hi - lo > kBisectTol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = value(mid);
        if ((fm > 0.0) == decreasing) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double zero_height_L(const Modulus& mod)
{
    const double K = mod.lattice.K;
    const auto edge = [&](double y) {
        const auto v = dn3_wp({K, y}, mod);
        if (std::abs(v.imag()) > 1e-9) {
            throw NonConvergenceError("zero_height_L: dn3 not real on the right edge",
                                      v.imag(), 0);
        }
        return v.real();
    };
    // dn3 decreases from x1 > 0 at y = 0 to -x2 < 0 at y = K'.
    const double eps = 1e-12 * mod.lattice.Kp;
    return bisect_edge(edge, eps, mod.lattice.Kp - eps, /*decreasing=*/true, "zero_height_L");
}

double minus_two_point(const Modulus& mod)
{
    const double Kp = mod.lattice.Kp;
    const auto edge = [&](double x) {
        const auto v = dn3_wp({x, Kp}, mod);
        if (std::abs(v.imag()) > 1e-9) {
            throw NonConvergenceError("minus_two_point: dn3 not real on the upper edge",
                                      v.imag(), 0);
        }
        return v.real() + 2.0;
    };
    // dn3 + 2 increases from 2 - x3 < 0 at x = 0 to 2 - x2 > 0 at x = K.
    const double eps = 1e-12 * mod.lattice.K;
    return bisect_edge(edge, eps, mod.lattice.K - eps, /*decreasing=*/false, "minus_two_point");
}

}  // namespace shen3

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "shen3/hypergeo.hpp"
#include "shen3/weierstrass.hpp"

namespace shen3 {

/// Parameter pack (kappa, lambda, a) with kappa^2 + lambda^2 = 1 and
/// lambda = cos(3a), a in (0, pi/6). The Weierstrass invariants and lattice
/// are cached at construction; the value is immutable and safe to share.
struct Modulus {
    double kappa2;
    double kappa;
    double lambda;
    double angle_a;
    weierstrass::Invariants invariants;
    weierstrass::LatticeData lattice;
};

Modulus modulus_new(double kappa2);

/// f(T) = integral of F(1/3, 2/3; 1/2; kappa^2 sin^2 t) over [0, T] by
/// adaptive Gauss-Kronrod quadrature. Strictly increasing; f(T + pi) = f(T) + 2K.
double f_integral(double T, const Modulus& mod);

/// Inverse of f on the real line: the unique T with f(T) = u.
/// Safeguarded Newton with the closed-form integrand as derivative.
double phi(double u, const Modulus& mod);

/// dn3 on the real line through the integral inversion:
/// cos(psi)/cos(psi/3) with psi = arcsin(kappa sin(phi(u))).
double dn3_direct(double u, const Modulus& mod);

struct Sn3Cn3 {
    double sn3;
    double cn3;
};

/// sn3 = sin(phi(u)), cn3 = cos(phi(u)).
Sn3Cn3 sn3_cn3_direct(double u, const Modulus& mod);

/// dn3 as an elliptic function: 1 - (4/9) kappa^2 / (1/3 + wp(z)).
/// Poles are simple and sit at +-(2/3) i K' modulo the lattice; arguments
/// within kPoleProximity of a pole raise PoleError.
std::complex<double> dn3_wp(std::complex<double> z, const Modulus& mod);

/// Derivative of dn3_wp: (4/9) kappa^2 wp'(z) / (1/3 + wp(z))^2.
std::complex<double> dn3_derivative_wp(std::complex<double> z, const Modulus& mod);

/// The elliptic extension of sn3^2: (1 - dn3)(2 + dn3)^2 / (4 kappa^2).
std::complex<double> sn3_squared_elliptic(std::complex<double> z, const Modulus& mod);

/// Zeros x1, -x2, -x3 of x^3 + 3x^2 - 4 lambda^2, the critical values of dn3:
/// x1 = 2cos(2a) - 1, x2 = 1 + 2cos(2a + pi/3), x3 = 1 + 2cos(2a - pi/3).
struct CriticalValues {
    double x1;  ///< dn3(K), in (0, 1)
    double x2;  ///< -dn3(K + iK'), in (0, 2)
    double x3;  ///< -dn3(iK'), in (2, 3)
};

CriticalValues critical_values(const Modulus& mod);

/// Midpoint values of wp in closed trigonometric form, ordered e1 > e2 > e3:
/// 1/3 + e = (kappa^2/9) csc^2(a), (kappa^2/9) sec^2(a + pi/6), (kappa^2/9) sec^2(a - pi/6).
std::array<double, 3> midpoint_wp_values(const Modulus& mod);

/// Quartic-reduction constants for the period integrals taken over the
/// ordered zeros 1 > x1 > -x2 > -x3 of (1 - x)(x^3 + 3x^2 - 4 lambda^2).
struct GreenhillData {
    double M2;   ///< M^2 = 2 sqrt(3) cos^2(a + pi/6) cos(2a - pi/6)
    double k2;   ///< modulus for the K integral
    double kp2;  ///< complementary modulus for the K' integral
};

GreenhillData greenhill_data(const Modulus& mod);

/// Half-periods from the quartic reduction: K = (3/2M) K(k^2) and likewise K'.
/// pole_height and band_halfwidth are both (2/3) K'.
struct FundamentalGeometry {
    double K;
    double Kp;
    double pole_height;
    double band_halfwidth;
};

FundamentalGeometry periods_via_greenhill(const Modulus& mod);

/// The poles +-(2/3) i K' translated over n_cells x n_cells lattice cells.
std::vector<std::complex<double>> pole_locations(const Modulus& mod, std::size_t n_cells);

/// Height L' in (0, K') of the zero K + iL' of dn3 on the right edge of the
/// quarter-rectangle, located by bisection of the real-valued restriction.
double zero_height_L(const Modulus& mod);

/// Abscissa x0 in (0, K) where dn3(x0 + iK') = -2; there sn3^2 has a
/// double zero.
double minus_two_point(const Modulus& mod);

}  // namespace shen3

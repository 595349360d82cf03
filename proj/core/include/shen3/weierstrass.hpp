#pragma once

#include <array>
#include <complex>

#include "shen3/errors.hpp"

namespace shen3::weierstrass {

/// Invariants g2, g3 of the Weierstrass cubic 4t^3 - g2 t - g3 together with
/// the discriminant delta = g2^3 - 27 g3^2. All moduli in scope give delta > 0,
/// i.e. three distinct real roots and a rectangular period lattice.
struct Invariants {
    double g2;
    double g3;
    double delta;
};

/// Ordered real roots e1 > e2 > e3 of the Weierstrass cubic and the
/// half-periods of the rectangular lattice generated by 2K and 2iK'.
/// The roots are the midpoint values: e1 = wp(K), e2 = wp(K + iK'), e3 = wp(iK').
struct LatticeData {
    double e1;
    double e2;
    double e3;
    double K;
    double Kp;
};

/// Arguments closer than this to a pole raise PoleError instead of overflowing.
inline constexpr double kPoleProximity = 1e-9;

/// g2 = (4/27)(9 - 8 kappa^2), g3 = (8/729)(8 kappa^4 - 36 kappa^2 + 27).
Invariants invariants_from_modulus(double kappa2);

/// Roots of 4t^3 - g2 t - g3, ordered descending. Requires delta > 0.
std::array<double, 3> cubic_e_roots(const Invariants& inv);

/// Half-periods by AGM on the root differences:
/// K = pi / (2 AGM(sqrt(e1-e3), sqrt(e1-e2))), K' likewise with sqrt(e2-e3).
LatticeData half_periods(const Invariants& inv);

/// z reduced modulo the lattice into the cell centered on the origin:
/// Re in [-K, K), Im in [-Kp, Kp).
std::complex<double> reduce_to_cell(std::complex<double> z, const LatticeData& lat);

/// Lattice point (2mK, 2nKp) nearest to z.
std::complex<double> nearest_lattice_point(std::complex<double> z, const LatticeData& lat);

struct WpPair {
    std::complex<double> p;
    std::complex<double> p_prime;
};

/// wp and wp' at z for the lattice generated by 2K and 2iK'.
/// Throws PoleError when z lies within kPoleProximity of a lattice point.
WpPair wp_with_derivative(std::complex<double> z, const LatticeData& lat, const Invariants& inv);
std::complex<double> wp(std::complex<double> z, const LatticeData& lat, const Invariants& inv);
std::complex<double> wp_prime(std::complex<double> z, const LatticeData& lat, const Invariants& inv);

/// The quartic w^4 - (1/2) g2 w^2 - g3 w - (1/48) g2^2 whose roots are the
/// wp values at the order-three points.
double order3_quartic(double w, const Invariants& inv);

/// Roots of the order-three quartic: -1/3 (exact for in-scope invariants),
/// one positive real root, and a conjugate pair (the +Im member is returned).
struct QuarticRoots {
    double neg_root;
    double pos_root;
    std::complex<double> complex_pair;
};

QuarticRoots order3_quartic_roots(const Invariants& inv);

namespace detail {

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

// Jacobi elliptic functions for real argument via the AGM/Landen chain.
// m and its complement mc = 1 - m are passed separately so neither end of the
// parameter range loses accuracy to cancellation.
JacobiTriple sncndn(double u, double m, double mc);

// wp and wp' with z already reduced to the centered cell and not a lattice
// point. No pole guard.
WpPair wp_core(std::complex<double> z, const LatticeData& lat);

}  // namespace detail

}  // namespace shen3::weierstrass

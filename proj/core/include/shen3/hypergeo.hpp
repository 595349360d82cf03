#pragma once

#include <cstddef>

#include "shen3/errors.hpp"

namespace shen3::hypergeo {

/// Truncation control for hypergeometric series evaluation.
struct SeriesControl {
    double rel_tol = 1e-15;       ///< stop when |term| <= rel_tol * |partial sum|
    std::size_t max_terms = 10000;
};

/// Parameters of the Gauss series 2F1(a, b; c; z).
struct HypParams {
    double a;
    double b;
    double c;
    double z;  ///< |z| < 1 for series evaluation
};

/// Gauss hypergeometric function by direct summation of the defining series.
/// Throws std::domain_error when c is zero or a negative integer, or |z| >= 1;
/// throws NonConvergenceError when max_terms is exhausted.
double gauss_2f1(const HypParams& params, const SeriesControl& ctrl = {});

/// F(1/3, 2/3; 1/2; kappa^2 sin^2 t) in closed form: cos(psi/3)/cos(psi) with
/// sin(psi) = kappa sin(t), psi on the principal branch.
double hyp_half_closed(double t, double kappa);

/// Arithmetic-geometric mean of two positive numbers.
double agm(double x, double y);

/// Complete elliptic integral K of the squared modulus m in [0, 1),
/// computed as pi / (2 AGM(1, sqrt(1 - m))).
double complete_K_agm(double m);

/// Half-period of the signature-three theory: (pi/2) F(1/3, 2/3; 1; kappa^2).
double signature3_K(double kappa2, const SeriesControl& ctrl = {});

}  // namespace shen3::hypergeo

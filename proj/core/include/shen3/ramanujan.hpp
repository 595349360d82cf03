#pragma once

#include "shen3/hypergeo.hpp"

namespace shen3::ramanujan {

/// The parameter p in (0, 1) of the signature-three identity
///   F(1/3, 2/3; 1; beta) = multiplier * F(1/2, 1/2; 1; alpha_r)
/// together with the quantities it determines.
struct PParam {
    double p;
    double angle_a;     ///< sin(a) = (sqrt(3)/2) p / sqrt(1 + p + p^2)
    double beta;        ///< (27/4) p^2 (1+p)^2 / (1 + p + p^2)^3
    double alpha_r;     ///< p^3 (2+p) / (1+2p)
    double multiplier;  ///< (1 + p + p^2) / sqrt(1 + 2p)
};

/// Unique p in (0, 1) with sin(a) = (sqrt(3)/2) p / sqrt(1 + p + p^2);
/// the positive root of p^2 (3 - 4 sin^2 a) - 4 p sin^2 a - 4 sin^2 a = 0.
double p_from_angle(double angle_a);

/// Forward direction of the same rule.
double angle_from_p(double p);

/// The three roots of S (3 - 4S)^2 = (27/4) p^2 (1+p)^2 / (1+p+p^2)^3.
/// mid = 3p^2 / (4(1+p+p^2)) is the root in (0, 1/4); the outer two exceed 1/4.
struct SCubicRoots {
    double outer_lo;  ///< 3 / (4(1+p+p^2))
    double mid;       ///< 3p^2 / (4(1+p+p^2)), equal to sin^2(a)
    double outer_hi;  ///< 3(1+p)^2 / (4(1+p+p^2))
};

SCubicRoots s_cubic_roots(double p);

PParam ramanujan_maps(double p);

struct IdentityCheck {
    double lhs;       ///< F(1/3, 2/3; 1; beta) by series
    double rhs;       ///< multiplier * (2/pi) K(alpha_r) by AGM
    double residual;  ///< |lhs - rhs| / |rhs|
};

/// Numerical check of the identity; the series side needs widened limits as
/// beta -> 1, hence the large default term cap.
IdentityCheck verify_identity_5_6(double p,
                                  const hypergeo::SeriesControl& ctrl = {1e-15, 2000000});

}  // namespace shen3::ramanujan

#pragma once

// Test-only reference implementations, deliberately independent of the
// library's evaluation paths: a Laurent-series Weierstrass function with
// argument halving, bisection root isolation, composite Simpson quadrature,
// plain AGM iteration, and central differences.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracles {

// wp via its Laurent expansion about 0 (coefficient recursion in g2, g3,
// 12 terms) combined with n-fold argument halving and the duplication formula.
inline std::complex<double> wp_laurent(std::complex<double> z, double g2, double g3)
{
    constexpr int kLast = 13;  // c_2 .. c_13
    std::array<double, kLast + 1> c{};
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for (int k = 4; k <= kLast; ++k) {
        double acc = 0.0;
        for (int m = 2; m <= k - 2; ++m) {
            acc += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        }
        c[static_cast<std::size_t>(k)] = 3.0 * acc / ((2.0 * k + 1.0) * (k - 3.0));
    }

    int halvings = 0;
    while (std::abs(z) > 0.4) {
        z *= 0.5;
        ++halvings;
    }
    const std::complex<double> z2 = z * z;
    std::complex<double> p = 1.0 / z2;
    std::complex<double> zpow = z2;  // z^(2k-2) for k = 2
    for (int k = 2; k <= kLast; ++k) {
        p += c[static_cast<std::size_t>(k)] * zpow;
        zpow *= z2;
    }
    for (int i = 0; i < halvings; ++i) {
        const std::complex<double> num = 6.0 * p * p - 0.5 * g2;
        const std::complex<double> den = 4.0 * p * p * p - g2 * p - g3;
        p = -2.0 * p + 0.25 * num * num / den;
    }
    return p;
}

// All real roots of the monic cubic x^3 + c2 x^2 + c1 x + c0 by sign-change
// scanning and bisection, sorted descending.
inline std::vector<double> cubic_real_roots(double c2, double c1, double c0)
{
    const auto f = [&](double x) { return ((x + c2) * x + c1) * x + c0; };
    const double bound = 1.0 + std::max(std::abs(c2), std::max(std::abs(c1), std::abs(c0)));
    constexpr int kScan = 40000;
    std::vector<double> roots;
    double prev_x = -bound;
    double prev_f = f(prev_x);
    for (int i = 1; i <= kScan; ++i) {
        const double x = -bound + 2.0 * bound * i / kScan;
        const double fx = f(x);
        if (prev_f == 0.0) {
            roots.push_back(prev_x);
        } else if ((prev_f < 0.0) != (fx < 0.0)) {
            double lo = prev_x;
            double hi = x;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((f(mid) < 0.0) == (prev_f < 0.0)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = fx;
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

// Composite Simpson rule; n is rounded up to an even panel count.
template <typename F>
double simpson(const F& f, double lo, double hi, int n)
{
    if (n % 2 != 0) {
        ++n;
    }
    const double h = (hi - lo) / n;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) {
        acc += f(lo + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return acc * h / 3.0;
}

// Plain AGM iteration, the hand oracle used to pin complete elliptic values.
inline double agm_iter(double a, double b, int iters)
{
    for (int i = 0; i < iters; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 0.5 * (a + b);
}

inline double central_diff(const std::function<double(double)>& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Discriminant of a monic quartic from its four roots.
inline double quartic_discriminant(double r1, double r2, std::complex<double> c)
{
    const std::complex<double> roots[4] = {{r1, 0.0}, {r2, 0.0}, c, std::conj(c)};
    std::complex<double> prod = 1.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            const std::complex<double> d = roots[i] - roots[j];
            prod *= d * d;
        }
    }
    return prod.real();
}

}  // namespace oracles

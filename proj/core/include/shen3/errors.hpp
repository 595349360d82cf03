#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace shen3 {

/// A series or iteration stopped before reaching its tolerance. Carries the
/// partial result and the number of terms/iterations consumed.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& what, double partial_sum, std::size_t terms)
        : std::runtime_error(what), partial_sum_(partial_sum), terms_(terms) {}

    double partial_sum() const noexcept { return partial_sum_; }
    std::size_t terms() const noexcept { return terms_; }

private:
    double partial_sum_;
    std::size_t terms_;
};

/// Evaluation was requested too close to a pole.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& what, std::complex<double> nearest)
        : std::runtime_error(what), nearest_(nearest) {}

    /// The offending pole (or lattice point) closest to the argument.
    std::complex<double> nearest() const noexcept { return nearest_; }

private:
    std::complex<double> nearest_;
};

}  // namespace shen3

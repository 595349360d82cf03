#pragma once

#include <cstddef>

#include "shen3/dn3.hpp"

#include "report.hpp"

namespace shen3::cli {

/// One row of the fixed tolerance table backing `verify`.
struct VerifyTolerance {
    const char* name;
    double tolerance;
};

/// The single source of truth for every verification tolerance.
const std::vector<VerifyTolerance>& verify_tolerances();

/// Tolerance lookup by entry name; throws std::logic_error for unknown names.
double verify_tolerance(const std::string& name);

/// Runs the full identity suite for one modulus. `grid` scales the sampled
/// point counts; grid == 0 produces an empty, vacuously passing report.
Report run_verify(const Modulus& mod, std::size_t grid);

}  // namespace shen3::cli

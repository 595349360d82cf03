#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "report.hpp"

namespace shen3::cli {

enum class Verb { eval, periods, critical, poles, ramanujan, verify, table };
enum class Route { direct, wp, both };
enum class Format { json, csv };

struct Command {
    Verb verb = Verb::verify;
    std::optional<double> kappa2;
    std::optional<double> p;
    std::optional<std::complex<double>> u;
    Route route = Route::both;
    std::optional<std::size_t> grid;  // defaults per verb: poles 1, verify/table 100
    Format format = Format::json;
    std::optional<std::string> out_path;
};

/// Violation of the per-verb flag invariants.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scalar output field; values are doubles except for the few descriptive
/// strings (route names and the like).
struct Field {
    std::string name;
    std::variant<double, std::string, bool> value;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct RunOutput {
    std::vector<Field> scalars;
    std::optional<Table> table;
    std::optional<Report> report;
};

/// Dispatches a validated command to the library. Throws UsageError when the
/// verb's required fields are missing or out of range.
RunOutput run(const Command& cmd);

/// Deterministic serialization; doubles are printed with 17 significant
/// digits so that re-parsing reproduces them exactly.
std::string format_output(const RunOutput& out, Format format);

/// 17-significant-digit decimal form of a double.
std::string format_double(double v);

/// 0 on success, 2 when a verification report failed.
int exit_code(const RunOutput& out);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

}  // namespace shen3::cli

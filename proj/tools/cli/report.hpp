#pragma once

#include <string>
#include <vector>

namespace shen3::cli {

struct ReportEntry {
    std::string name;
    double expected;
    double actual;
    double residual;
    double tolerance;
    bool pass;
};

struct Report {
    std::vector<ReportEntry> entries;
    bool overall = true;  // conjunction of entry flags; vacuously true
};

}  // namespace shen3::cli

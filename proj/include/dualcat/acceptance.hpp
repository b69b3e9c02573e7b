#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// The release gate: twelve exact criteria over fixed prime/parameter grids.
// "smoke" caps every prime range at 47 (everything oracle-checked);
// "full" runs the stated ranges (oracle cross-checks still cover p <= 47).
namespace dualcat::acceptance {

enum class Level { smoke, full };

struct Options {
    Level level = Level::full;
    int jobs = 0;  // 0 = hardware concurrency
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    uint64_t checked = 0;
    uint64_t failed = 0;
    std::string detail;
    double seconds = 0.0;
};

// Runs every criterion, streaming one deterministic pass/fail line per
// criterion to `out` (timings go to `timing`, which may be null).
std::vector<CriterionResult> run_all(const Options& opts, std::ostream& out,
                                     std::ostream* timing = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_line(const CriterionResult& r);

}  // namespace dualcat::acceptance

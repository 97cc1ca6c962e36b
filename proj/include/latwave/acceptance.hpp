// The acceptance suite: one entry per headline claim of the study, each
// checked at its stated tolerance against the baseline runs.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latwave::acceptance {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // measured values and tolerances
};

struct Report {
    std::vector<CriterionResult> results;
    int failed() const;
};

/// Runs all criteria, streaming one "[PASS]/[FAIL]" line each to `out` as
/// it completes. Heavy runs are shared between criteria.
Report run_all(std::ostream& out);

}  // namespace latwave::acceptance

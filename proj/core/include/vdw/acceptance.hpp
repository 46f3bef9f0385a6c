#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace vdw {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

struct AcceptanceOptions {
    /// Criteria to run; empty runs all twelve.
    std::set<int> only;
    unsigned workers = 1;
    std::uint64_t seed = 20240601;
};

/// Runs the acceptance criteria in order. A criterion passes only if its
/// checks hold and it finishes inside its time budget. An exception inside a
/// criterion counts as a failure with the message as detail.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 census exactness (0.01s / 1s): ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace vdw

#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace nakarig {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    std::chrono::milliseconds elapsed{0};
};

/// One line: "[PASS] 3 witness verification (n+m<=30): 406/406 ... (12 ms)".
std::string to_string(const CriterionResult& r);

struct Criterion {
    int id;
    std::string name;
    std::function<CriterionResult()> run;
};

/// The ten end-to-end acceptance criteria, in order. Each entry pins its own
/// parameter ranges; all comparisons are exact.
const std::vector<Criterion>& acceptance_criteria();

CriterionResult run_criterion(int id);

/// Runs the given ids (all when empty), calling `on_result` after each one.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

} // namespace nakarig

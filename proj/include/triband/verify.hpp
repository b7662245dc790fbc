#pragma once

#include <string>
#include <vector>

namespace triband {

/// Outcome of one acceptance criterion: a stable id, a short name, the
/// verdict, and the measured quantities backing it (9-significant-digit
/// formatting, deterministic across runs).
struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string measured;
};

/// Runs the ten computational acceptance criteria with fixed seeds and
/// pinned tolerances. Deterministic: identical output on every run.
std::vector<CriterionResult> run_acceptance_suite();

/// Fixed-format PASS/FAIL table, one line per criterion plus a summary line.
std::string render_verify_table(const std::vector<CriterionResult>& results);

}  // namespace triband

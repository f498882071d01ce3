#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qplane/betti.hpp"

namespace qplane {

/// What one application of T did.
struct ReductionStep {
    std::size_t chosen_s = 0;      // 1-based s = max{i : a_i < b_1}
    Degree decremented_value = 0;  // a_s before the step
    Degree pre_b1 = 0;             // b_1 before the step
    bool deletion_occurred = false;
    Rat p0_delta;                  // p0(T x) - p0(x) = pre_b1 - decremented_value

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct StepResult {
    BettiPair state;
    ReductionStep step;
};

/// One iteration of the reduction map T.
///
/// With v = a_s for the largest s having a_s < b_1: a_s and b_1 drop by one.
/// If that leaves b_1 equal to the entry now at position s, both are removed.
/// On sorted data this happens exactly when s >= 2, a_{s-1} = a_s and
/// b_1 = a_s + 1; the removed pair then has value a_s.
///
/// Throws InvalidInput on a terminal (m = 0) or inadmissible input.
StepResult reduce_step(const BettiPair& s);

/// reduce_step without the domain checks. Requires m >= 1 and s(1) >= 1.
BettiPair apply_step(const BettiPair& s, ReductionStep* info = nullptr);

struct ReductionTrace {
    std::vector<BettiPair> states;  // initial .. terminal
    std::vector<ReductionStep> steps;

    const BettiPair& initial() const { return states.front(); }
    const BettiPair& terminal() const { return states.back(); }
};

/// Applies T until b is empty. Throws InvalidInput if s is inadmissible and
/// ConsistencyError if the run exceeds its p0 budget.
ReductionTrace run_reduction(const BettiPair& s);

struct TraceIssue {
    std::size_t step;  // index of the offending transition (or state)
    std::string invariant;
    std::string detail;
};

struct TraceReport {
    std::vector<TraceIssue> issues;
    std::size_t steps_checked = 0;
    bool ok() const { return issues.empty(); }
};

/// Audits a trace: every state admissible with legal entries, each transition
/// equal to T, p2 and p1 fixed, p0 rising by the recorded integer delta >= 1,
/// and a terminal of length n - m whose entries sum to 3 p2 - p1.
TraceReport verify_T_invariants(const ReductionTrace& trace);

}  // namespace qplane

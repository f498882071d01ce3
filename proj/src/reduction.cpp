#include "qplane/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qplane/errors.hpp"

namespace qplane {

BettiPair apply_step(const BettiPair& x, ReductionStep* info) {
    std::vector<Degree> a(x.a().begin(), x.a().end());
    std::vector<Degree> b(x.b().begin(), x.b().end());
    const Degree b1 = b.front();
    const auto s = static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), b1) - a.begin());
    const Degree v = a[s - 1];
    const bool deletion = s >= 2 && a[s - 2] == v && b1 == v + 1;

    if (deletion) {
        // two copies of v become one copy of v - 1; b_1 (now v) is removed
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(s - 2), a.begin() + static_cast<std::ptrdiff_t>(s));
        b.erase(b.begin());
    } else {
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(s - 1));
        b.front() -= 1;
    }
    a.insert(std::upper_bound(a.begin(), a.end(), v - 1), v - 1);

    if (info) {
        info->chosen_s = s;
        info->decremented_value = v;
        info->pre_b1 = b1;
        info->deletion_occurred = deletion;
        info->p0_delta = Rat(b1 - v);
    }
    return BettiPair::trusted(std::move(a), std::move(b));
}

StepResult reduce_step(const BettiPair& s) {
    if (s.terminal())
        throw InvalidInput("already terminal: " + s.to_string());
    if (!is_admissible(s))
        throw InvalidInput("reduction step is only defined on admissible data: " + s.to_string());
    ReductionStep step;
    BettiPair next = apply_step(s, &step);
    return {std::move(next), step};
}

ReductionTrace run_reduction(const BettiPair& s) {
    if (!is_admissible(s))
        throw InvalidInput("reduction is only defined on admissible data: " + s.to_string());
    PValues p = p_values(s);
    auto p0max = max_terminal_p0(p.p2, p.p1);
    if (!p0max)
        throw ConsistencyError("admissible data " + s.to_string() + " has no terminal p-values");
    const BigInt budget = *p0max - p.p0.to_integer();
    if (budget < 0)
        throw ConsistencyError("p0 of " + s.to_string() + " already exceeds every terminal");

    ReductionTrace trace;
    trace.states.push_back(s);
    while (!trace.states.back().terminal()) {
        if (BigInt(trace.steps.size()) >= budget)
            throw ConsistencyError("reduction of " + s.to_string() + " exceeded its budget of " +
                                   budget.str() + " steps");
        ReductionStep step;
        BettiPair next = apply_step(trace.states.back(), &step);
        trace.states.push_back(std::move(next));
        trace.steps.push_back(step);
    }
    return trace;
}

TraceReport verify_T_invariants(const ReductionTrace& trace) {
    TraceReport report;
    auto issue = [&report](std::size_t at, std::string what, std::string detail) {
        report.issues.push_back({at, std::move(what), std::move(detail)});
    };
    if (trace.states.empty() || trace.states.size() != trace.steps.size() + 1) {
        issue(0, "shape", "expected one more state than steps");
        return report;
    }

    for (std::size_t i = 0; i < trace.states.size(); ++i) {
        const BettiPair& st = trace.states[i];
        auto a = st.a();
        auto b = st.b();
        if (a.empty() || !std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.begin(), b.end()) ||
            a.front() < 0 || (!b.empty() && b.front() < 1))
            issue(i, "entry ranges", st.to_string());
        if (!is_admissible(st))
            issue(i, "admissibility", st.to_string() + " violates condition (*)");
    }

    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const BettiPair& cur = trace.states[i];
        const BettiPair& next = trace.states[i + 1];
        const ReductionStep& step = trace.steps[i];
        ++report.steps_checked;
        if (cur.terminal()) {
            issue(i, "transition", "step taken from terminal state");
            continue;
        }
        if (!is_admissible(cur))
            continue;  // T undefined here; already reported
        ReductionStep expected;
        if (apply_step(cur, &expected) != next)
            issue(i, "transition", cur.to_string() + " does not map to " + next.to_string());
        PValues before = p_values(cur);
        PValues after = p_values(next);
        if (before.p2 != after.p2)
            issue(i, "p2 fixed", before.p2.to_string() + " -> " + after.p2.to_string());
        if (before.p1 != after.p1)
            issue(i, "p1 fixed", before.p1.to_string() + " -> " + after.p1.to_string());
        Rat delta = after.p0 - before.p0;
        if (delta != step.p0_delta)
            issue(i, "p0 delta", "recorded " + step.p0_delta.to_string() + ", actual " + delta.to_string());
        if (!delta.is_integer() || delta < Rat(1))
            issue(i, "p0 increases", "p0 changed by " + delta.to_string());
        if (step.p0_delta != Rat(step.pre_b1 - step.decremented_value))
            issue(i, "p0 delta", "recorded delta differs from b_1 - a_s");
        if (step != expected)
            issue(i, "step record", "recorded step metadata does not match T");
    }

    const BettiPair& first = trace.initial();
    const BettiPair& last = trace.terminal();
    if (!last.terminal())
        issue(trace.steps.size(), "termination", "final state " + last.to_string() + " still has b entries");
    if (last.n() + first.m() != first.n())
        issue(trace.steps.size(), "terminal length", "expected n - m = " + std::to_string(first.n() - first.m()));
    BigInt sum = std::accumulate(last.a().begin(), last.a().end(), BigInt(0),
                                 [](BigInt acc, Degree v) { return acc + v; });
    Rat sigma = p_values(first).sigma();
    if (Rat(sum) != sigma)
        issue(trace.steps.size(), "terminal sum", "sum " + sum.str() + " != 3 p2 - p1 = " + sigma.to_string());
    return report;
}

}  // namespace qplane

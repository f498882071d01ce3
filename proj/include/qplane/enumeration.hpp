#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qplane/betti.hpp"
#include "qplane/polynomial.hpp"

namespace qplane {

/// Every terminal state (b empty) with the given p2 and p1: the non-decreasing
/// sequences of 2 p2 non-negative integers summing to 3 p2 - p1. Sorted.
/// Empty when 2 p2 is not a positive integer or the sum is not a non-negative integer.
std::vector<BettiPair> terminals(const Rat& p2, const Rat& p1);

struct IterationBudget {
    std::optional<BigInt> p0_max;  // largest terminal p0, when terminals exist
    std::optional<BigInt> steps;   // p0_max - p0, when that is a non-negative integer

    bool empty() const { return !steps; }
};

/// How many reduction steps any element with these p-values can take.
IterationBudget iteration_budget(const Rat& p2, const Rat& p1, const Rat& p0);

/// All admissible x with T(x) = y, sorted. Requires y admissible.
std::vector<BettiPair> predecessors(const BettiPair& y);

/// A set of states closed under T: entries at most max_value, n <= max_n, m <= max_m.
/// T never raises an entry or lengthens a sequence, so every element of a region
/// reduces to a terminal inside it.
struct Region {
    Degree max_value = 0;
    std::size_t max_n = 0;
    std::size_t max_m = 0;

    bool contains(const BettiPair& s) const {
        return s.n() <= max_n && s.m() <= max_m && s.max_entry() <= max_value;
    }
};

struct SearchOptions {
    unsigned threads = 1;             // 0 picks std::thread::hardware_concurrency()
    std::optional<Region> region;     // prune the search to this region
    std::uint64_t max_nodes = 0;      // give up after this many states; 0 = no limit
};

struct SearchStats {
    std::uint64_t nodes = 0;       // states accepted into the search
    std::uint64_t candidates = 0;  // predecessor candidates tested
    std::uint64_t duplicates = 0;  // frontier states seen twice (0 while T is a function)
    std::size_t max_depth = 0;     // deepest reverse-search level reached
    std::size_t seeds = 0;         // terminals the search started from
};

struct AdmissibleSet {
    std::vector<BettiPair> elements;  // sorted by (n, a, b), no duplicates
    bool complete = true;             // false when max_nodes stopped the search
    SearchStats stats;
    std::optional<BigInt> budget;
    std::optional<std::string> note;
};

/// Every admissible BettiPair with exactly these p-values, found by reverse
/// breadth-first search from the terminals.
///
/// Each reverse step lowers p0 by at least one, so states below the target
/// p0 are dropped and the search depth never exceeds the iteration budget.
/// With options.region the result is exactly the unrestricted result
/// intersected with the region. Output does not depend on options.threads.
AdmissibleSet enumerate_admissible(const Rat& p2, const Rat& p1, const Rat& p0,
                                   const SearchOptions& options = {});

/// Quotients of R^l with Hilbert polynomial p1.
struct QuotQuery {
    std::int64_t l = 1;
    HilbPoly p1;
};

struct QuotOptions {
    bool hf_filter = true;    // drop tables with a negative quotient Hilbert function value
    bool rank_filter = true;  // drop queries whose kernel rank 2 p2 exceeds l
    SearchOptions search;
};

struct QuotTable {
    BettiPair betti;
    std::vector<BigInt> hN;  // h_N(t) for t = 0..stable_from
    Degree stable_from = 0;  // max entry; h_N agrees with P1 from here on
};

struct EnumerationResult {
    QuotQuery query;
    HilbPoly kernel_poly;  // l P_R - P1
    PValues p;
    bool zero_kernel = false;
    std::optional<BigInt> budget;  // iteration budget of the kernel p-values
    bool complete = true;          // false when the search hit max_nodes
    std::vector<QuotTable> tables;
    std::size_t admissible_count = 0;  // before the Hilbert-function filter
    std::size_t rejected_by_hf = 0;
    SearchStats stats;
    std::vector<std::string> notes;
};

/// Candidate Betti tables of kernels of torsionfree quotients R^l -> N with
/// Hilbert polynomial P1, each with its tabulated h_N.
///
/// Throws InvalidInput if l < 1 or l P_R - P1 has a negative leading coefficient.
EnumerationResult enumerate_quot(const QuotQuery& q, const QuotOptions& options = {});

}  // namespace qplane

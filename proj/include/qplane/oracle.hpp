#pragma once

// Brute-force ground truth over explicit, caller-chosen boxes.
//
// Nothing here derives a bound or walks the reduction map; the only code shared
// with the main search is the admissibility / torsion predicates and the
// p-value formulas. A disagreement therefore points at the search or at the
// derived bounds.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qplane/betti.hpp"
#include "qplane/torsion.hpp"

namespace qplane {

struct SearchBox {
    Degree max_value = 0;       // Betti entries lie in [0, max_value]
    std::size_t max_a_len = 1;  // n (or torsion n) at most this
    std::size_t max_b_len = 0;  // m at most this
    Degree a_min = 0;           // torsion: a entries in [a_min, a_max],
    Degree a_max = 0;           //          b entries in [a_min, a_max + e]
};

/// All admissible BettiPairs inside the box, sorted.
std::vector<BettiPair> oracle_admissible_in_box(const SearchBox& box);

/// Admissible BettiPairs inside the box with exactly these p-values, sorted.
std::vector<BettiPair> oracle_enumerate(const Rat& p2, const Rat& p1, const Rat& p0, const SearchBox& box);

/// Torsion candidates inside the box with sum (b_i - a_i) = e and constant term d, sorted.
std::vector<TorsionResolution> oracle_torsion(std::int64_t e, std::int64_t d, const SearchBox& box);

/// oracle_torsion for every constant term at once, keyed by d.
std::map<std::int64_t, std::vector<TorsionResolution>> oracle_torsion_by_constant(std::int64_t e,
                                                                                  const SearchBox& box);

bool in_box(const BettiPair& s, const SearchBox& box);
bool touches_boundary(const BettiPair& s, const SearchBox& box);
bool in_box(const TorsionResolution& r, const SearchBox& box, std::int64_t e);
bool touches_boundary(const TorsionResolution& r, const SearchBox& box, std::int64_t e);

enum class CheckStatus { ExactMatch, BoxLimited, Mismatch };

std::string to_string(CheckStatus s);

struct CrossCheckReport {
    CheckStatus status = CheckStatus::ExactMatch;
    std::size_t main_count = 0;
    std::size_t main_in_box = 0;
    std::size_t oracle_count = 0;
    std::vector<std::string> missing;   // oracle elements absent from the main result
    std::vector<std::string> extra;     // main elements inside the box the oracle rejects
    std::vector<std::string> boundary;  // main elements on or beyond the box boundary

    bool oracle_subset_of_main() const { return missing.empty(); }
    bool main_in_box_equals_oracle() const { return missing.empty() && extra.empty(); }
    bool touches_boundary() const { return !boundary.empty(); }
    std::string summary() const;
};

/// Compares a main-path result against the oracle for the same target and box.
CrossCheckReport cross_check(const std::vector<BettiPair>& main, const std::vector<BettiPair>& oracle,
                             const SearchBox& box);
CrossCheckReport cross_check(const std::vector<TorsionResolution>& main,
                             const std::vector<TorsionResolution>& oracle, const SearchBox& box, std::int64_t e);

}  // namespace qplane

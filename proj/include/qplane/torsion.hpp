#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qplane/betti.hpp"
#include "qplane/polynomial.hpp"

namespace qplane {

/// Degree data of 0 -> (+) R(-b_i) -> (+) R(-a_i) -> M -> 0 with equally many
/// generators and relations (rank zero). Entries may be negative.
class TorsionResolution {
public:
    /// Sorts both sequences; throws InvalidInput unless they have the same length n >= 1.
    TorsionResolution(std::vector<Degree> a, std::vector<Degree> b);

    std::span<const Degree> a() const { return a_; }
    std::span<const Degree> b() const { return b_; }
    std::size_t n() const { return a_.size(); }

    std::string to_string() const;

    friend bool operator==(const TorsionResolution&, const TorsionResolution&) = default;
    /// Orders by n, then a, then b.
    friend std::strong_ordering operator<=>(const TorsionResolution& x, const TorsionResolution& y);

private:
    std::vector<Degree> a_;
    std::vector<Degree> b_;
};

struct TorsionQuery {
    std::int64_t e = 1;  // multiplicity, >= 1
    std::int64_t d = 0;
};

/// sum (b_i - a_i) t + (1/2) sum (b_i - a_i)(3 - a_i - b_i).
HilbPoly torsion_poly(const TorsionResolution& r);

/// c in mu = t + c: the average of (3 - a_i - b_i)/2 weighted by b_i - a_i.
/// Throws InvalidInput when the weights sum to zero.
Rat slope_constant(const TorsionResolution& r);

struct WeightedAverageResult {
    bool holds;     // prefix average >= full average
    bool equality;  // prefix average == full average
};

/// Compares the weighted average of x_1..x_m against that of x_1..x_n.
/// Requires equal non-empty lengths, all w > 0, x non-increasing and 1 <= m <= n;
/// throws InvalidInput otherwise.
WeightedAverageResult weighted_average_holds(std::span<const Rat> w, std::span<const Rat> x, std::size_t m);

enum class TorsionCondition { PositiveDifference, Interleaving };  // b_i > a_i, b_m > a_{m+1}

struct TorsionViolation {
    std::size_t index;  // 1-based i (or m)
    TorsionCondition condition;
    std::string to_string() const;
    friend bool operator==(const TorsionViolation&, const TorsionViolation&) = default;
};

struct TorsionVerdict {
    std::vector<TorsionViolation> violations;
    bool passes() const { return violations.empty(); }
};

TorsionVerdict check_torsion_candidate(const TorsionResolution& r);

struct TorsionOptions {
    unsigned threads = 1;  // 0 picks std::thread::hardware_concurrency()
};

struct TorsionSearch {
    std::vector<TorsionResolution> resolutions;  // sorted, no duplicates
    std::int64_t a1_min = 0;                     // a_1 range searched
    std::int64_t a1_max = -1;
    std::uint64_t strata = 0;  // (n, a_1) pairs visited
    std::uint64_t leaves = 0;  // complete sequences tested against d
};

/// Every candidate passing check_torsion_candidate with sum (b_i - a_i) = e and
/// constant term d. Throws InvalidInput when e < 1.
TorsionSearch enumerate_torsion(const TorsionQuery& q, const TorsionOptions& options = {});

}  // namespace qplane

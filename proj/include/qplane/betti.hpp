#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qplane/polynomial.hpp"
#include "qplane/rational.hpp"

namespace qplane {

using Degree = std::int64_t;

/// Degree data of a resolution 0 -> (+) R(-b_j) -> (+) R(-a_i) -> M -> 0.
///
/// Both sequences are stored sorted, so relabelling is never needed. The
/// constructor enforces a_i >= 0, b_j >= 1 and n >= 1.
class BettiPair {
public:
    BettiPair(std::vector<Degree> a, std::vector<Degree> b);

    /// Skips validation and sorting. Caller guarantees the invariants hold.
    static BettiPair trusted(std::vector<Degree> a, std::vector<Degree> b);

    std::span<const Degree> a() const { return a_; }
    std::span<const Degree> b() const { return b_; }
    std::size_t n() const { return a_.size(); }
    std::size_t m() const { return b_.size(); }
    bool terminal() const { return b_.empty(); }

    /// Largest entry of a and b together.
    Degree max_entry() const;

    std::string to_string() const;  // "(1,1|2)"

    friend bool operator==(const BettiPair&, const BettiPair&) = default;
    /// Orders by n, then a, then b.
    friend std::strong_ordering operator<=>(const BettiPair& x, const BettiPair& y);

private:
    BettiPair() = default;
    std::vector<Degree> a_;
    std::vector<Degree> b_;
};

struct BettiPairHash {
    std::size_t operator()(const BettiPair& s) const noexcept;
};

/// Coefficients (p2, p1, p0) of the Hilbert polynomial carried by a BettiPair.
struct PValues {
    Rat p2;
    Rat p1;
    Rat p0;

    /// 3 p2 - p1, which equals sum(a) - sum(b).
    Rat sigma() const { return Rat(3) * p2 - p1; }
    HilbPoly as_poly() const { return {p2, p1, p0}; }
    static PValues of(const HilbPoly& p) { return {p.c2(), p.c1(), p.c0()}; }

    friend bool operator==(const PValues&, const PValues&) = default;
    friend std::strong_ordering operator<=>(const PValues& x, const PValues& y);
};

PValues p_values(const BettiPair& s);

/// p0 alone; always an integer since a(a-3)/2 is.
BigInt p0_value(const BettiPair& s);

/// Largest p0 of any terminal (b empty) with these p2, p1:
/// sigma^2/2 - 3 sigma/2 + 2 p2 with sigma = 3 p2 - p1, reached by putting the
/// whole sum in one entry. Empty unless 2 p2 is a positive integer and sigma
/// a non-negative integer.
std::optional<BigInt> max_terminal_p0(const Rat& p2, const Rat& p1);

/// sum binom2(a_i) - sum binom2(b_j). Computed independently of p_values.
HilbPoly hilbert_polynomial(const BettiPair& s);

/// A Hilbert-function value together with a diagnostic when it cannot come
/// from an actual module.
struct HilbertValue {
    BigInt value;
    std::optional<std::string> diagnostic;

    bool realizable() const { return !diagnostic; }
};

/// dim_k of the degree-t part of the resolved module, computed degreewise.
HilbertValue hilbert_function(const BettiPair& s, Degree t);

/// l h_R(t) - h_M(t): the Hilbert function of the quotient R^l / M. Requires l >= 1.
HilbertValue quotient_hilbert_function(std::int64_t l, const BettiPair& s, Degree t);

/// Largest 1-based i with a_i < b_r, or 0 if there is none. r is 1-based.
std::size_t s_of_r(const BettiPair& s, std::size_t r);

enum class Condition { SOverR, PrefixSum };  // (*1) s(r) > r, (*2) prefix-sum inequality

struct Violation {
    std::size_t r;
    Condition condition;
    std::size_t s;   // s(r)
    BigInt lhs;      // a_1 + ... + a_{s(r)}
    BigInt rhs;      // b_1 + ... + b_r

    std::string to_string() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct AdmissibilityVerdict {
    std::vector<Violation> violations;
    bool admissible() const { return violations.empty(); }
};

/// Condition (*) for every r in 1..m, listing each failing inequality.
AdmissibilityVerdict check_admissible(const BettiPair& s);

/// Same predicate as check_admissible, without building the report.
bool is_admissible(const BettiPair& s);

}  // namespace qplane

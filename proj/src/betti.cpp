#include "qplane/betti.hpp"

#include <algorithm>
#include <sstream>

#include "qplane/errors.hpp"

namespace qplane {

namespace {

void append_seq(std::ostringstream& os, std::span<const Degree> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
}

// C(t - c + 2, 2) when t >= c, else 0: the degree-t dimension of R(-c).
BigInt free_dim(Degree c, Degree t) {
    if (t < c)
        return 0;
    BigInt k = BigInt(t) - c;
    return (k + 2) * (k + 1) / 2;
}

}  // namespace

BettiPair::BettiPair(std::vector<Degree> a, std::vector<Degree> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty())
        throw InvalidInput("a must be non-empty (n >= 1)");
    std::sort(a_.begin(), a_.end());
    std::sort(b_.begin(), b_.end());
    if (a_.front() < 0)
        throw InvalidInput("a entries must be >= 0");
    if (!b_.empty() && b_.front() < 1)
        throw InvalidInput("b entries must be >= 1");
}

BettiPair BettiPair::trusted(std::vector<Degree> a, std::vector<Degree> b) {
    BettiPair s;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    return s;
}

Degree BettiPair::max_entry() const {
    Degree hi = a_.back();
    if (!b_.empty())
        hi = std::max(hi, b_.back());
    return hi;
}

std::string BettiPair::to_string() const {
    std::ostringstream os;
    os << '(';
    append_seq(os, a_);
    os << '|';
    append_seq(os, b_);
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const BettiPair& x, const BettiPair& y) {
    if (auto c = x.n() <=> y.n(); c != 0)
        return c;
    if (auto c = x.a_ <=> y.a_; c != 0)
        return c;
    return x.b_ <=> y.b_;
}

std::size_t BettiPairHash::operator()(const BettiPair& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ s.n();
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (Degree v : s.a())
        mix(static_cast<std::uint64_t>(v));
    mix(0xffffffffULL);
    for (Degree v : s.b())
        mix(static_cast<std::uint64_t>(v));
    return h;
}

std::strong_ordering operator<=>(const PValues& x, const PValues& y) {
    if (auto c = x.p2 <=> y.p2; c != 0)
        return c;
    if (auto c = x.p1 <=> y.p1; c != 0)
        return c;
    return x.p0 <=> y.p0;
}

PValues p_values(const BettiPair& s) {
    BigInt sum_a = 0, sum_b = 0, sq_a = 0, sq_b = 0;
    for (Degree v : s.a()) {
        sum_a += v;
        sq_a += BigInt(v) * v;
    }
    for (Degree v : s.b()) {
        sum_b += v;
        sq_b += BigInt(v) * v;
    }
    BigInt rank = BigInt(s.n()) - BigInt(s.m());  // n - m
    PValues p;
    p.p2 = Rat(rank, 2);
    p.p1 = Rat(BigInt(sum_b - sum_a)) + Rat(BigInt(3 * rank), 2);
    p.p0 = Rat(BigInt(sq_a - sq_b), 2) + Rat(BigInt(3 * (sum_b - sum_a)), 2) + Rat(rank);
    return p;
}

BigInt p0_value(const BettiPair& s) {
    // sum a(a-3)/2 - sum b(b-3)/2 + (n - m); each a(a-3) is even.
    BigInt total = BigInt(s.n()) - BigInt(s.m());
    for (Degree v : s.a())
        total += BigInt(v) * (v - 3) / 2;
    for (Degree v : s.b())
        total -= BigInt(v) * (v - 3) / 2;
    return total;
}

std::optional<BigInt> max_terminal_p0(const Rat& p2, const Rat& p1) {
    Rat len = Rat(2) * p2;
    Rat sigma = Rat(3) * p2 - p1;
    if (!len.is_integer() || len.sign() <= 0 || !sigma.is_integer() || sigma.sign() < 0)
        return std::nullopt;
    BigInt sg = sigma.to_integer();
    // sg^2 - 3 sg is even
    return (sg * sg - 3 * sg) / 2 + len.to_integer();
}

HilbPoly hilbert_polynomial(const BettiPair& s) {
    HilbPoly p;
    for (Degree v : s.a())
        p += binom2(v);
    for (Degree v : s.b())
        p -= binom2(v);
    return p;
}

HilbertValue hilbert_function(const BettiPair& s, Degree t) {
    HilbertValue h{0, std::nullopt};
    for (Degree v : s.a())
        h.value += free_dim(v, t);
    for (Degree v : s.b())
        h.value -= free_dim(v, t);
    if (h.value < 0)
        h.diagnostic = "numerically unrealizable at degree " + std::to_string(t);
    return h;
}

HilbertValue quotient_hilbert_function(std::int64_t l, const BettiPair& s, Degree t) {
    if (l < 1)
        throw InvalidInput("l must be >= 1");
    HilbertValue h{BigInt(l) * free_dim(0, t) - hilbert_function(s, t).value, std::nullopt};
    if (h.value < 0)
        h.diagnostic = "not a quotient of R^" + std::to_string(l) + " at degree " + std::to_string(t);
    return h;
}

std::size_t s_of_r(const BettiPair& s, std::size_t r) {
    if (r < 1 || r > s.m())
        throw InvalidInput("r = " + std::to_string(r) + " out of range 1.." + std::to_string(s.m()));
    auto a = s.a();
    Degree br = s.b()[r - 1];
    return static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), br) - a.begin());
}

std::string Violation::to_string() const {
    std::ostringstream os;
    if (condition == Condition::SOverR)
        os << "r=" << r << " (*1): s(r)=" << s << " is not > " << r;
    else
        os << "r=" << r << " (*2): a_1+...+a_" << s << " = " << lhs << " < b_1+...+b_" << r << " = " << rhs;
    return os.str();
}

AdmissibilityVerdict check_admissible(const BettiPair& s) {
    AdmissibilityVerdict verdict;
    auto a = s.a();
    auto b = s.b();
    BigInt rhs = 0;
    for (std::size_t r = 1; r <= s.m(); ++r) {
        rhs += b[r - 1];
        std::size_t sr = s_of_r(s, r);
        BigInt lhs = 0;
        for (std::size_t i = 0; i < sr; ++i)
            lhs += a[i];
        if (sr <= r)
            verdict.violations.push_back({r, Condition::SOverR, sr, lhs, rhs});
        if (lhs < rhs)
            verdict.violations.push_back({r, Condition::PrefixSum, sr, lhs, rhs});
    }
    return verdict;
}

bool is_admissible(const BettiPair& s) {
    auto a = s.a();
    auto b = s.b();
    __int128 lhs = 0, rhs = 0;
    std::size_t sr = 0;
    for (std::size_t r = 0; r < b.size(); ++r) {
        rhs += b[r];
        // b is sorted, so s(r) only moves forward
        while (sr < a.size() && a[sr] < b[r])
            lhs += a[sr++];
        if (sr <= r + 1 || lhs < rhs)
            return false;
    }
    return true;
}

}  // namespace qplane

#include "qplane/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace qplane {

namespace {

// Calls f on every non-decreasing sequence of length len with entries in [lo, hi].
template <typename F>
void for_each_multiset(Degree lo, Degree hi, std::size_t len, F&& f) {
    std::vector<Degree> v(len, lo);
    if (len == 0) {
        f(v);
        return;
    }
    if (lo > hi)
        return;
    while (true) {
        f(v);
        std::size_t i = len;
        while (i > 0 && v[i - 1] == hi)
            --i;
        if (i == 0)
            return;
        Degree next = v[i - 1] + 1;
        std::fill(v.begin() + static_cast<std::ptrdiff_t>(i - 1), v.end(), next);
    }
}

template <typename F>
void for_each_box_pair(const SearchBox& box, F&& f) {
    std::vector<std::vector<Degree>> bs;
    for (std::size_t m = 0; m <= box.max_b_len; ++m)
        for_each_multiset(1, box.max_value, m, [&](const std::vector<Degree>& b) { bs.push_back(b); });
    for (std::size_t n = 1; n <= box.max_a_len; ++n)
        for_each_multiset(0, box.max_value, n, [&](const std::vector<Degree>& a) {
            for (const auto& b : bs)
                f(a, b);
        });
}

Degree sum(const std::vector<Degree>& v) { return std::accumulate(v.begin(), v.end(), Degree{0}); }

template <typename T>
std::vector<std::string> names(const std::vector<T>& v) {
    std::vector<std::string> out;
    for (const auto& x : v)
        out.push_back(x.to_string());
    return out;
}

template <typename T, typename InBox, typename Touches>
CrossCheckReport compare(const std::vector<T>& main, const std::vector<T>& oracle, InBox in_box_fn,
                         Touches touches_fn) {
    CrossCheckReport rep;
    std::set<T> main_set(main.begin(), main.end());
    std::set<T> oracle_set(oracle.begin(), oracle.end());
    rep.main_count = main_set.size();
    rep.oracle_count = oracle_set.size();
    std::vector<T> missing, extra, boundary;
    for (const T& x : oracle_set)
        if (!main_set.count(x))
            missing.push_back(x);
    for (const T& x : main_set) {
        if (in_box_fn(x)) {
            ++rep.main_in_box;
            if (!oracle_set.count(x))
                extra.push_back(x);
        }
        if (touches_fn(x))
            boundary.push_back(x);
    }
    rep.missing = names(missing);
    rep.extra = names(extra);
    rep.boundary = names(boundary);
    if (!rep.main_in_box_equals_oracle())
        rep.status = CheckStatus::Mismatch;
    else if (rep.touches_boundary())
        rep.status = CheckStatus::BoxLimited;
    else
        rep.status = CheckStatus::ExactMatch;
    return rep;
}

}  // namespace

std::vector<BettiPair> oracle_admissible_in_box(const SearchBox& box) {
    std::vector<BettiPair> out;
    for_each_box_pair(box, [&](const std::vector<Degree>& a, const std::vector<Degree>& b) {
        BettiPair s(a, b);
        if (check_admissible(s).admissible())
            out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BettiPair> oracle_enumerate(const Rat& p2, const Rat& p1, const Rat& p0, const SearchBox& box) {
    const PValues target{p2, p1, p0};
    // p2 fixes n - m and p1 then fixes sum(b) - sum(a); both are read off
    // before the full evaluation only to skip work
    const Rat len = Rat(2) * p2;
    const Rat sum_gap = p1 - Rat(3) * p2;
    std::vector<BettiPair> out;
    if (!len.is_integer() || !sum_gap.is_integer())
        return out;
    const BigInt want_len = len.to_integer();
    const BigInt want_gap = sum_gap.to_integer();
    for_each_box_pair(box, [&](const std::vector<Degree>& a, const std::vector<Degree>& b) {
        if (BigInt(a.size()) - BigInt(b.size()) != want_len || BigInt(sum(b) - sum(a)) != want_gap)
            return;
        BettiPair s(a, b);
        if (p_values(s) == target && check_admissible(s).admissible())
            out.push_back(std::move(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::int64_t, std::vector<TorsionResolution>> oracle_torsion_by_constant(std::int64_t e,
                                                                                  const SearchBox& box) {
    std::map<std::int64_t, std::vector<TorsionResolution>> out;
    for (std::size_t n = 1; n <= box.max_a_len; ++n) {
        // b sequences indexed by their sum; sum(b) - sum(a) = e is part of the target
        std::map<Degree, std::vector<std::vector<Degree>>> by_sum;
        for_each_multiset(box.a_min, box.a_max + e, n,
                          [&](const std::vector<Degree>& b) { by_sum[sum(b)].push_back(b); });
        for_each_multiset(box.a_min, box.a_max, n, [&](const std::vector<Degree>& a) {
            auto it = by_sum.find(sum(a) + e);
            if (it == by_sum.end())
                return;
            for (const auto& b : it->second) {
                // both sides are sorted; b_i > a_i is implied by the candidate checks
                if (!std::equal(a.begin(), a.end(), b.begin(), std::less<>()))
                    continue;
                TorsionResolution r(a, b);
                if (!check_torsion_candidate(r).passes())
                    continue;
                // raw binomial differences, not the closed form the main search uses
                HilbPoly p;
                for (std::size_t i = 0; i < n; ++i)
                    p += binom2(r.a()[i]) - binom2(r.b()[i]);
                if (p.c1() != Rat(e) || !p.c0().is_integer())
                    continue;
                out[p.c0().to_integer().convert_to<std::int64_t>()].push_back(std::move(r));
            }
        });
    }
    for (auto& [d, v] : out)
        std::sort(v.begin(), v.end());
    return out;
}

std::vector<TorsionResolution> oracle_torsion(std::int64_t e, std::int64_t d, const SearchBox& box) {
    auto all = oracle_torsion_by_constant(e, box);
    auto it = all.find(d);
    return it == all.end() ? std::vector<TorsionResolution>{} : std::move(it->second);
}

bool in_box(const BettiPair& s, const SearchBox& box) {
    return s.n() <= box.max_a_len && s.m() <= box.max_b_len && s.max_entry() <= box.max_value;
}

bool touches_boundary(const BettiPair& s, const SearchBox& box) {
    return s.n() >= box.max_a_len || s.m() >= box.max_b_len || s.max_entry() >= box.max_value;
}

bool in_box(const TorsionResolution& r, const SearchBox& box, std::int64_t e) {
    return r.n() <= box.max_a_len && r.a().front() >= box.a_min && r.a().back() <= box.a_max &&
           r.b().front() >= box.a_min && r.b().back() <= box.a_max + e;
}

bool touches_boundary(const TorsionResolution& r, const SearchBox& box, std::int64_t e) {
    return r.n() >= box.max_a_len || r.a().front() <= box.a_min || r.a().back() >= box.a_max ||
           r.b().front() <= box.a_min || r.b().back() >= box.a_max + e;
}

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::ExactMatch: return "exact match";
    case CheckStatus::BoxLimited: return "box-limited";
    case CheckStatus::Mismatch: return "mismatch";
    }
    return "?";
}

std::string CrossCheckReport::summary() const {
    std::ostringstream os;
    os << to_string(status);
    if (status == CheckStatus::Mismatch)
        os << ": " << missing.size() << " missing, " << extra.size() << " extra";
    else
        os << ", " << oracle_count << (oracle_count == 1 ? " element" : " elements");
    if (status == CheckStatus::BoxLimited)
        os << " (" << boundary.size() << " main results on the box boundary)";
    return os.str();
}

CrossCheckReport cross_check(const std::vector<BettiPair>& main, const std::vector<BettiPair>& oracle,
                             const SearchBox& box) {
    return compare(main, oracle, [&](const BettiPair& s) { return in_box(s, box); },
                   [&](const BettiPair& s) { return touches_boundary(s, box); });
}

CrossCheckReport cross_check(const std::vector<TorsionResolution>& main,
                             const std::vector<TorsionResolution>& oracle, const SearchBox& box, std::int64_t e) {
    return compare(main, oracle, [&](const TorsionResolution& r) { return in_box(r, box, e); },
                   [&](const TorsionResolution& r) { return touches_boundary(r, box, e); });
}

}  // namespace qplane

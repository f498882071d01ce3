#include "qplane/torsion.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "qplane/errors.hpp"

namespace qplane {

TorsionResolution::TorsionResolution(std::vector<Degree> a, std::vector<Degree> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || a_.size() != b_.size())
        throw InvalidInput("torsion resolution needs equal-length non-empty a and b");
    std::sort(a_.begin(), a_.end());
    std::sort(b_.begin(), b_.end());
}

std::string TorsionResolution::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a_.size(); ++i)
        os << (i ? "," : "") << a_[i];
    os << '|';
    for (std::size_t i = 0; i < b_.size(); ++i)
        os << (i ? "," : "") << b_[i];
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const TorsionResolution& x, const TorsionResolution& y) {
    if (auto c = x.n() <=> y.n(); c != 0)
        return c;
    if (auto c = x.a_ <=> y.a_; c != 0)
        return c;
    return x.b_ <=> y.b_;
}

HilbPoly torsion_poly(const TorsionResolution& r) {
    BigInt e = 0, twice_d = 0;
    for (std::size_t i = 0; i < r.n(); ++i) {
        BigInt w = BigInt(r.b()[i]) - r.a()[i];
        e += w;
        twice_d += w * (3 - BigInt(r.a()[i]) - r.b()[i]);
    }
    return HilbPoly::linear(Rat(e), Rat(twice_d, 2));
}

Rat slope_constant(const TorsionResolution& r) {
    Rat weighted = 0, total = 0;
    for (std::size_t i = 0; i < r.n(); ++i) {
        Rat w(BigInt(BigInt(r.b()[i]) - r.a()[i]));
        Rat x = Rat(BigInt(3 - BigInt(r.a()[i]) - r.b()[i]), 2);
        weighted += w * x;
        total += w;
    }
    if (total.is_zero())
        throw InvalidInput("slope undefined: weights of " + r.to_string() + " sum to zero");
    return weighted / total;
}

WeightedAverageResult weighted_average_holds(std::span<const Rat> w, std::span<const Rat> x, std::size_t m) {
    if (w.empty() || w.size() != x.size())
        throw InvalidInput("weights and values must have the same non-zero length");
    if (m < 1 || m > w.size())
        throw InvalidInput("m out of range");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].sign() <= 0)
            throw InvalidInput("weights must be positive");
        if (i > 0 && x[i] > x[i - 1])
            throw InvalidInput("values must be non-increasing");
    }
    Rat prefix_wx = 0, prefix_w = 0, wx = 0, ws = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        wx += w[i] * x[i];
        ws += w[i];
        if (i + 1 == m) {
            prefix_wx = wx;
            prefix_w = ws;
        }
    }
    // compare prefix_wx / prefix_w against wx / ws without dividing
    auto cmp = prefix_wx * ws <=> wx * prefix_w;
    return {cmp >= 0, cmp == 0};
}

std::string TorsionViolation::to_string() const {
    std::ostringstream os;
    if (condition == TorsionCondition::PositiveDifference)
        os << "b_" << index << " > a_" << index << " fails";
    else
        os << "b_" << index << " > a_" << index + 1 << " fails";
    return os.str();
}

TorsionVerdict check_torsion_candidate(const TorsionResolution& r) {
    TorsionVerdict v;
    auto a = r.a();
    auto b = r.b();
    for (std::size_t i = 0; i < r.n(); ++i)
        if (!(b[i] > a[i]))
            v.violations.push_back({i + 1, TorsionCondition::PositiveDifference});
    for (std::size_t m = 0; m + 1 < r.n(); ++m)
        if (!(b[m] > a[m + 1]))
            v.violations.push_back({m + 1, TorsionCondition::Interleaving});
    return v;
}

namespace {

struct Stratum {
    std::size_t n;
    Degree a1;
};

struct StratumSearch {
    std::int64_t e;
    __int128 twice_d;
    std::size_t n;
    std::vector<Degree> a, b;
    std::vector<TorsionResolution> found;
    std::uint64_t leaves = 0;

    // weight: sum of b_i - a_i so far; acc: sum of w_i (3 - a_i - b_i) so far
    void place(std::size_t k, std::int64_t weight, __int128 acc) {
        if (k == n) {
            ++leaves;
            if (weight == e && acc == twice_d)
                found.emplace_back(a, b);
            return;
        }
        const auto later = static_cast<std::int64_t>(n - k - 1);  // each later position needs weight >= 1
        const Degree a_lo = k == 0 ? a.front() : a[k - 1];
        const Degree a_hi = k == 0 ? a.front() : b[k - 1] - 1;
        for (Degree ak = a_lo; ak <= a_hi; ++ak) {
            Degree b_lo = std::max<Degree>(ak + 1, k == 0 ? ak + 1 : b[k - 1]);
            Degree b_hi = ak + (e - weight - later);
            if (k + 1 == n)
                b_lo = std::max(b_lo, b_hi);  // the last weight is forced
            for (Degree bk = b_lo; bk <= b_hi; ++bk) {
                const std::int64_t w = bk - ak;
                if (k > 0)
                    a[k] = ak;
                b[k] = bk;
                place(k + 1, weight + w, acc + static_cast<__int128>(w) * (3 - static_cast<__int128>(ak) - bk));
            }
        }
    }
};

void search_stratum(const TorsionQuery& q, const Stratum& st, std::vector<TorsionResolution>& out,
                    std::uint64_t& leaves) {
    StratumSearch s{q.e, static_cast<__int128>(2) * q.d, st.n, std::vector<Degree>(st.n, st.a1),
                    std::vector<Degree>(st.n, 0), {}, 0};
    s.place(0, 0, 0);
    leaves += s.leaves;
    for (auto& r : s.found)
        out.push_back(std::move(r));
}

}  // namespace

TorsionSearch enumerate_torsion(const TorsionQuery& q, const TorsionOptions& options) {
    if (q.e < 1)
        throw InvalidInput("e must be >= 1");
    TorsionSearch result;

    // Every 3 - a_i - b_i lies in [3 - 2 a_1 - 2e, 3 - 2 a_1] and the weights
    // sum to e, so e (3 - 2 a_1 - 2e) <= 2d <= e (3 - 2 a_1).
    const Rat e(q.e), d(q.d);
    const BigInt lo = ceil((Rat(3) * e - Rat(2) * e * e - Rat(2) * d) / (Rat(2) * e));
    const BigInt hi = floor((Rat(3) * e - Rat(2) * d) / (Rat(2) * e));
    result.a1_min = lo.convert_to<std::int64_t>();
    result.a1_max = hi.convert_to<std::int64_t>();

    std::vector<Stratum> strata;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(q.e); ++n)
        for (Degree a1 = result.a1_min; a1 <= result.a1_max; ++a1)
            strata.push_back({n, a1});
    result.strata = strata.size();

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, strata.size()));
    std::vector<std::vector<TorsionResolution>> outs(workers);
    std::vector<std::uint64_t> leaves(workers, 0);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < strata.size(); i += workers)
                    search_stratum(q, strata[i], outs[w], leaves[w]);
            });
    }
    for (std::size_t w = 0; w < workers; ++w) {
        result.leaves += leaves[w];
        for (auto& r : outs[w])
            result.resolutions.push_back(std::move(r));
    }
    std::sort(result.resolutions.begin(), result.resolutions.end());
    result.resolutions.erase(std::unique(result.resolutions.begin(), result.resolutions.end()),
                             result.resolutions.end());
    for (const auto& r : result.resolutions)
        if (!check_torsion_candidate(r).passes())
            throw ConsistencyError("torsion search produced an invalid candidate " + r.to_string());
    return result;
}

}  // namespace qplane

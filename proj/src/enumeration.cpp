#include "qplane/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "qplane/errors.hpp"
#include "qplane/reduction.hpp"

namespace qplane {

namespace {

void partitions_with_zeros(std::size_t len, Degree remaining, Degree lo, std::vector<Degree>& prefix,
                           std::vector<BettiPair>& out) {
    if (prefix.size() + 1 == len) {
        if (remaining >= lo) {
            prefix.push_back(remaining);
            out.push_back(BettiPair::trusted(prefix, {}));
            prefix.pop_back();
        }
        return;
    }
    const auto slots = static_cast<Degree>(len - prefix.size());
    for (Degree v = lo; v * slots <= remaining; ++v) {
        prefix.push_back(v);
        partitions_with_zeros(len, remaining - v, v, prefix, out);
        prefix.pop_back();
    }
}

Degree to_degree(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<Degree>::max() || v < std::numeric_limits<Degree>::min())
        throw InvalidInput(std::string(what) + " out of range: " + v.str());
    return v.convert_to<Degree>();
}

// Calls f(x, p0_delta) for each admissible x with T(x) = y.
template <typename F>
void for_each_predecessor(const BettiPair& y, std::uint64_t& candidates, F&& f) {
    auto ya = y.a();
    auto yb = y.b();
    auto test = [&](std::vector<Degree>&& a, std::vector<Degree>&& b) {
        ++candidates;
        BettiPair x = BettiPair::trusted(std::move(a), std::move(b));
        if (!is_admissible(x))
            return;
        ReductionStep step;
        if (apply_step(x, &step) != y)
            return;
        f(std::move(x), step.pre_b1 - step.decremented_value);
    };

    for (std::size_t i = 0; i < ya.size(); ++i) {
        if (i + 1 < ya.size() && ya[i + 1] == ya[i])
            continue;  // i is the last copy of its value
        const Degree u = ya[i];

        if (!yb.empty()) {
            // undo a step without deletion: u was a_s - 1, b_1 was one larger
            std::vector<Degree> a(ya.begin(), ya.end());
            a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
            a.insert(std::upper_bound(a.begin(), a.end(), u + 1), u + 1);
            std::vector<Degree> b(yb.begin(), yb.end());
            b.front() += 1;
            std::sort(b.begin(), b.end());
            test(std::move(a), std::move(b));
        }

        // undo a step with deletion: two copies of w = u + 1 and b_1 = w + 1
        const Degree w = u + 1;
        std::vector<Degree> a(ya.begin(), ya.end());
        a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
        auto pos = std::upper_bound(a.begin(), a.end(), w);
        a.insert(pos, 2, w);
        std::vector<Degree> b(yb.begin(), yb.end());
        b.insert(std::upper_bound(b.begin(), b.end(), w + 1), w + 1);
        test(std::move(a), std::move(b));
    }
}

struct Node {
    BettiPair state;
    BigInt p0;
};

struct LevelOutput {
    std::vector<Node> next;
    std::vector<BettiPair> hits;
    std::uint64_t candidates = 0;
};

void expand(std::span<const Node> frontier, const BigInt& target, const std::optional<Region>& region,
            LevelOutput& out) {
    for (const Node& node : frontier) {
        if (node.p0 == target)
            out.hits.push_back(node.state);
        for_each_predecessor(node.state, out.candidates, [&](BettiPair&& x, Degree delta) {
            if (region && !region->contains(x))
                return;
            BigInt p0 = node.p0 - delta;
            if (p0 >= target)
                out.next.push_back({std::move(x), std::move(p0)});
        });
    }
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<BettiPair> terminals(const Rat& p2, const Rat& p1) {
    std::vector<BettiPair> out;
    Rat len = Rat(2) * p2;
    Rat sigma = Rat(3) * p2 - p1;
    if (!len.is_integer() || len.sign() <= 0 || !sigma.is_integer() || sigma.sign() < 0)
        return out;
    std::vector<Degree> prefix;
    partitions_with_zeros(static_cast<std::size_t>(to_degree(len.to_integer(), "length")),
                          to_degree(sigma.to_integer(), "sum"), 0, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

IterationBudget iteration_budget(const Rat& p2, const Rat& p1, const Rat& p0) {
    IterationBudget budget;
    budget.p0_max = max_terminal_p0(p2, p1);
    if (!budget.p0_max)
        return budget;
    Rat k = Rat(*budget.p0_max) - p0;
    if (k.is_integer() && k.sign() >= 0)
        budget.steps = k.to_integer();
    return budget;
}

std::vector<BettiPair> predecessors(const BettiPair& y) {
    if (!is_admissible(y))
        throw InvalidInput("predecessors requires admissible data: " + y.to_string());
    std::vector<BettiPair> out;
    std::uint64_t candidates = 0;
    for_each_predecessor(y, candidates, [&out](BettiPair&& x, Degree) { out.push_back(std::move(x)); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

AdmissibleSet enumerate_admissible(const Rat& p2, const Rat& p1, const Rat& p0, const SearchOptions& options) {
    AdmissibleSet result;
    IterationBudget budget = iteration_budget(p2, p1, p0);
    if (budget.empty()) {
        result.note = "no solutions possible";
        return result;
    }
    result.budget = budget.steps;
    const BigInt target = p0.to_integer();
    const unsigned threads = resolve_threads(options.threads);

    std::vector<Node> frontier;
    for (BettiPair& t : terminals(p2, p1)) {
        if (options.region && !options.region->contains(t))
            continue;
        BigInt tp0 = p0_value(t);
        if (tp0 >= target)
            frontier.push_back({std::move(t), std::move(tp0)});
    }
    result.stats.seeds = frontier.size();

    std::size_t depth = 0;
    while (!frontier.empty()) {
        if (BigInt(depth) > *budget.steps)
            throw ConsistencyError("reverse search went deeper than the iteration budget");
        if (options.max_nodes && result.stats.nodes + frontier.size() > options.max_nodes) {
            result.complete = false;
            result.note = "search stopped after " + std::to_string(result.stats.nodes) + " states";
            break;
        }
        result.stats.nodes += frontier.size();
        result.stats.max_depth = depth;

        // fixed chunking; outputs are concatenated in chunk order and sorted
        const std::size_t workers = frontier.size() < 512 ? 1 : std::min<std::size_t>(threads, frontier.size() / 256);
        std::vector<LevelOutput> outs(workers);
        std::span<const Node> all(frontier);
        if (workers == 1) {
            expand(all, target, options.region, outs[0]);
        } else {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (frontier.size() + workers - 1) / workers;
            for (std::size_t w = 0; w < workers; ++w) {
                std::size_t begin = std::min(frontier.size(), w * chunk);
                std::size_t end = std::min(frontier.size(), begin + chunk);
                pool.emplace_back([&, begin, end, w] { expand(all.subspan(begin, end - begin), target, options.region, outs[w]); });
            }
        }

        std::vector<Node> next;
        for (LevelOutput& out : outs) {
            result.stats.candidates += out.candidates;
            for (BettiPair& h : out.hits)
                result.elements.push_back(std::move(h));
            for (Node& n : out.next)
                next.push_back(std::move(n));
        }
        std::sort(next.begin(), next.end(), [](const Node& x, const Node& y) { return x.state < y.state; });
        auto last = std::unique(next.begin(), next.end(),
                                [](const Node& x, const Node& y) { return x.state == y.state; });
        result.stats.duplicates += static_cast<std::uint64_t>(next.end() - last);
        next.erase(last, next.end());
        frontier = std::move(next);
        ++depth;
    }

    std::sort(result.elements.begin(), result.elements.end());
    result.elements.erase(std::unique(result.elements.begin(), result.elements.end()), result.elements.end());
    return result;
}

EnumerationResult enumerate_quot(const QuotQuery& q, const QuotOptions& options) {
    if (q.l < 1)
        throw InvalidInput("l must be >= 1");
    EnumerationResult res;
    res.query = q;
    res.kernel_poly = binom2(0) * Rat(q.l) - q.p1;
    res.p = PValues::of(res.kernel_poly);

    if (res.kernel_poly.is_zero()) {
        res.zero_kernel = true;
        res.notes.push_back("M = 0, N = R^" + std::to_string(q.l));
        return res;
    }
    if (res.kernel_poly.leading().sign() < 0)
        throw InvalidInput("not a Hilbert polynomial of a submodule of R^" + std::to_string(q.l) + ": l P_R - P1 = " +
                           res.kernel_poly.to_string());
    if (res.p.p2.is_zero()) {
        res.notes.push_back("kernel of rank 0 cannot be a nonzero submodule of R^l");
        return res;
    }
    if (options.rank_filter && Rat(2) * res.p.p2 > Rat(q.l)) {
        res.notes.push_back("kernel rank " + (Rat(2) * res.p.p2).to_string() + " exceeds l");
        return res;
    }

    AdmissibleSet found = enumerate_admissible(res.p.p2, res.p.p1, res.p.p0, options.search);
    res.stats = found.stats;
    res.budget = found.budget;
    res.complete = found.complete;
    res.admissible_count = found.elements.size();
    if (found.note)
        res.notes.push_back(*found.note);

    for (BettiPair& s : found.elements) {
        QuotTable table{std::move(s), {}, 0};
        table.stable_from = table.betti.max_entry();
        bool negative = false;
        for (Degree t = 0; t <= table.stable_from; ++t) {
            HilbertValue h = quotient_hilbert_function(q.l, table.betti, t);
            negative = negative || !h.realizable();
            table.hN.push_back(std::move(h.value));
        }
        if (negative && options.hf_filter) {
            ++res.rejected_by_hf;
            continue;
        }
        res.tables.push_back(std::move(table));
    }
    return res;
}

}  // namespace qplane

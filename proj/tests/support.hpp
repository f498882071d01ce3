#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qplane/betti.hpp"
#include "qplane/torsion.hpp"

namespace qtest {

/// Seed for every randomized test; set with --seed=N on the test binary.
std::uint64_t seed();

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

inline qplane::BettiPair random_betti(std::mt19937_64& g, qplane::Degree max_value, std::size_t max_n,
                                      std::size_t max_m) {
    std::vector<qplane::Degree> a(static_cast<std::size_t>(uniform(g, 1, static_cast<std::int64_t>(max_n))));
    std::vector<qplane::Degree> b(static_cast<std::size_t>(uniform(g, 0, static_cast<std::int64_t>(max_m))));
    for (auto& x : a)
        x = uniform(g, 0, max_value);
    for (auto& x : b)
        x = uniform(g, 1, max_value);
    return {a, b};
}

inline qplane::TorsionResolution random_torsion(std::mt19937_64& g, std::int64_t lo, std::int64_t hi,
                                                std::size_t max_n) {
    std::vector<qplane::Degree> a(static_cast<std::size_t>(uniform(g, 1, static_cast<std::int64_t>(max_n))));
    std::vector<qplane::Degree> b(a.size());
    for (auto& x : a)
        x = uniform(g, lo, hi);
    for (auto& x : b)
        x = uniform(g, lo, hi);
    return {a, b};
}

/// Binomial coefficient C(n, 2) style helpers on plain integers.
inline std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace qtest

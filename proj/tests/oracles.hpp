#pragma once

// Test-only oracles. Everything here works on plain integers or brute-force
// enumeration and never calls into the analysis code it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "loewy/lattice.hpp"

namespace oracle {

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

inline bool prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d < p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

inline bool prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

/// Loewy recursion in D_n done arithmetically: the atoms of [s, n] are s*p
/// for primes p with s*p | n, and their join is their lcm.
inline std::vector<std::uint64_t> divisor_loewy_series(std::uint64_t n) {
    std::vector<std::uint64_t> series{1};
    while (series.back() != n) {
        const std::uint64_t s = series.back();
        std::uint64_t next = s;
        for (std::uint64_t d : divisors(n)) {
            if (d % s == 0 && prime(d / s)) next = std::lcm(next, d);
        }
        series.push_back(next);
    }
    return series;
}

/// Longest chain of D_n by brute-force dynamic programming over divisibility.
inline std::size_t divisor_length(std::uint64_t n) {
    const auto ds = divisors(n);
    std::vector<std::size_t> best(ds.size(), 0);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (ds[i] % ds[j] == 0) best[i] = std::max(best[i], best[j] + 1);
        }
    }
    return best.back();
}

/// Greatest lower bound by enumeration of the order relation only.
inline loewy::Index brute_meet(const loewy::FiniteLattice& l, loewy::Index a, loewy::Index b) {
    std::vector<loewy::Index> lower;
    for (loewy::Index c = 0; c < l.size(); ++c) {
        if (l.leq(c, a) && l.leq(c, b)) lower.push_back(c);
    }
    for (loewy::Index c : lower) {
        if (std::all_of(lower.begin(), lower.end(), [&](loewy::Index d) { return l.leq(d, c); })) return c;
    }
    return static_cast<loewy::Index>(l.size());
}

inline loewy::Index brute_join(const loewy::FiniteLattice& l, loewy::Index a, loewy::Index b) {
    std::vector<loewy::Index> upper;
    for (loewy::Index c = 0; c < l.size(); ++c) {
        if (l.leq(a, c) && l.leq(b, c)) upper.push_back(c);
    }
    for (loewy::Index c : upper) {
        if (std::all_of(upper.begin(), upper.end(), [&](loewy::Index d) { return l.leq(c, d); })) return c;
    }
    return static_cast<loewy::Index>(l.size());
}

/// Transitive reduction of the stored order, by enumeration.
inline std::vector<loewy::Cover> brute_covers(const loewy::FiniteLattice& l) {
    std::vector<loewy::Cover> out;
    for (loewy::Index a = 0; a < l.size(); ++a) {
        for (loewy::Index b = 0; b < l.size(); ++b) {
            if (!l.less(a, b)) continue;
            bool direct = true;
            for (loewy::Index c = 0; c < l.size() && direct; ++c) direct = !(l.less(a, c) && l.less(c, b));
            if (direct) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All maximal chain lengths from bottom to top, by exhaustive path search.
inline std::set<std::size_t> maximal_chain_lengths(const loewy::FiniteLattice& l, loewy::Index from) {
    if (from == l.top()) return {0};
    std::set<std::size_t> out;
    for (loewy::Index c : l.upper_covers(from)) {
        for (std::size_t len : maximal_chain_lengths(l, c)) out.insert(len + 1);
    }
    return out;
}

/// Distributivity straight from the order: meets and joins recomputed by enumeration.
inline bool brute_distributive(const loewy::FiniteLattice& l) {
    for (loewy::Index x = 0; x < l.size(); ++x) {
        for (loewy::Index y = 0; y < l.size(); ++y) {
            for (loewy::Index z = 0; z < l.size(); ++z) {
                if (brute_meet(l, x, brute_join(l, y, z)) != brute_join(l, brute_meet(l, x, y), brute_meet(l, x, z))) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace oracle

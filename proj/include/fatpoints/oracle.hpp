#pragma once

#include <random>

#include "fatpoints/core.hpp"
#include "fatpoints/hilbert.hpp"

namespace fatpoints {

// Brute-force ground truth at desk scale: the Hilbert function of fat points
// at random points over a large prime field, via the exact rank of the
// conditions matrix. Random points stand in for general ones; the max rank
// over independent trials is generic with overwhelming probability.

struct OracleConfig {
    Int prime = 2147483647; // 2^31 - 1
    std::uint64_t seed = 12345;
    int trials = 3;
};

namespace oracle_detail {

inline bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; } // p < 2^31, no overflow

inline u64 powmod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Row echelon rank, exact elimination mod p.
inline Int rank_mod_p(std::vector<std::vector<u64>>& rows, u64 p) {
    const std::size_t nrows = rows.size();
    if (nrows == 0) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[rank], rows[pivot]);
        const u64 inv = invmod(rows[rank][col], p);
        for (std::size_t j = col; j < ncols; ++j) rows[rank][j] = mulmod(rows[rank][j], inv, p);
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            const u64 f = rows[i][col];
            if (f == 0) continue;
            for (std::size_t j = col; j < ncols; ++j) {
                u64 v = rows[i][j] + p - mulmod(f, rows[rank][j], p);
                rows[i][j] = v >= p ? v - p : v;
            }
        }
        ++rank;
    }
    return static_cast<Int>(rank);
}

struct Point {
    u64 x, y;
};

// Deterministic per (seed, trial): identical inputs give identical matrices.
inline std::vector<Point> sample_points(Int n, u64 p, std::uint64_t seed, int trial) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(trial) + 1);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    while (static_cast<Int>(pts.size()) < n) {
        Point q{rng() % (p - 1) + 1, rng() % (p - 1) + 1}; // nonzero coordinates
        bool dup = false;
        for (const auto& o : pts)
            if (o.x == q.x && o.y == q.y) dup = true;
        if (!dup) pts.push_back(q);
    }
    return pts;
}

// Falling factorial e(e-1)...(e-a+1) mod p; exponents are < p.
inline u64 falling(Int e, Int a, u64 p) {
    u64 r = 1;
    for (Int k = 0; k < a; ++k) r = mulmod(r, static_cast<u64>(e - k) % p, p);
    return r;
}

// Rank of the conditions matrix for one trial: rows are the partial
// derivatives of order < m_i at p_i (chart z = 1), columns the degree-t
// monomials x^e0 y^e1 z^(t-e0-e1).
inline Int trial_rank(const MultiplicitySequence& mseq, Int t, u64 p, std::uint64_t seed,
                      int trial) {
    const Int n = mseq.n();
    const auto pts = sample_points(n, p, seed, trial);
    const std::size_t ncols = static_cast<std::size_t>(binom2(t + 2));
    std::vector<std::vector<u64>> rows;
    for (Int i = 0; i < n; ++i) {
        const Int mi = mseq[i];
        if (mi == 0) continue;
        std::vector<u64> xpow(static_cast<std::size_t>(t + 1)), ypow(xpow.size());
        xpow[0] = ypow[0] = 1;
        for (Int k = 1; k <= t; ++k) {
            xpow[static_cast<std::size_t>(k)] = mulmod(xpow[static_cast<std::size_t>(k - 1)], pts[static_cast<std::size_t>(i)].x, p);
            ypow[static_cast<std::size_t>(k)] = mulmod(ypow[static_cast<std::size_t>(k - 1)], pts[static_cast<std::size_t>(i)].y, p);
        }
        for (Int a = 0; a < mi; ++a) {
            for (Int b = 0; a + b < mi; ++b) {
                std::vector<u64> row(ncols, 0);
                std::size_t col = 0;
                for (Int e0 = 0; e0 <= t; ++e0) {
                    for (Int e1 = 0; e0 + e1 <= t; ++e1, ++col) {
                        if (e0 < a || e1 < b) continue;
                        u64 v = mulmod(falling(e0, a, p), falling(e1, b, p), p);
                        v = mulmod(v, xpow[static_cast<std::size_t>(e0 - a)], p);
                        v = mulmod(v, ypow[static_cast<std::size_t>(e1 - b)], p);
                        row[col] = v;
                    }
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rank_mod_p(rows, p);
}

inline void validate(const MultiplicitySequence& mseq, Int t, const OracleConfig& cfg) {
    if (t < 0) throw std::invalid_argument("oracle: t must be >= 0");
    if (!is_prime(cfg.prime)) throw std::invalid_argument("oracle: modulus must be prime");
    if (cfg.prime <= t) throw std::invalid_argument("oracle: prime must exceed t");
    if (cfg.trials < 1) throw std::invalid_argument("oracle: trials must be >= 1");
    // n distinct points with nonzero coordinates need (p-1)^2 >= n
    const Int side = cfg.prime - 1;
    if (checked::mul(side, side) < mseq.n())
        throw std::invalid_argument("oracle: prime too small for this many distinct points");
}

} // namespace oracle_detail

/// Generic rank of the conditions matrix, maximized over trials.
inline Int oracle_rank(const MultiplicitySequence& mseq, Int t, const OracleConfig& cfg = {}) {
    oracle_detail::validate(mseq, t, cfg);
    Int best = 0;
    for (int trial = 0; trial < cfg.trials; ++trial)
        best = std::max(best, oracle_detail::trial_rank(mseq, t, static_cast<oracle_detail::u64>(cfg.prime),
                                                        cfg.seed, trial));
    return best;
}

/// dim I(m)_t = C(t+2,2) - rank, with rank the generic conditions rank.
inline Int oracle_hilbert(const MultiplicitySequence& mseq, Int t, const OracleConfig& cfg = {}) {
    return checked::sub(binom2(t + 2), oracle_rank(mseq, t, cfg));
}

inline Int oracle_hilbert(Int n, Int m, Int t, const OracleConfig& cfg = {}) {
    return oracle_hilbert(MultiplicitySequence::uniform(n, m), t, cfg);
}

namespace oracle_detail {

inline void guard_size(Int n, Int m) {
    const Int conditions = condition_count(n, m);
    if (conditions > 5000)
        throw too_large_error("oracle: " + std::to_string(conditions) +
                              " conditions exceed the desk-scale guard (5000)");
}

} // namespace oracle_detail

/// Least t with a nonzero form: first t where oracle_hilbert > 0.
inline Int oracle_alpha(Int n, Int m, const OracleConfig& cfg = {}) {
    oracle_detail::guard_size(n, m);
    if (m == 0) return 0;
    const Int cap = checked::add(alpha_c(n, m), 20);
    for (Int t = 0; t <= cap; ++t)
        if (oracle_hilbert(n, m, t, cfg) > 0) return t;
    throw std::logic_error("oracle_alpha: no nonzero value up to alpha_c + 20");
}

/// Regularity: first t where the conditions have full rank.
inline Int oracle_tau(Int n, Int m, const OracleConfig& cfg = {}) {
    oracle_detail::guard_size(n, m);
    if (m == 0) return 0;
    const Int conditions = condition_count(n, m);
    const Int cap = checked::add(tau_c(n, m), 20);
    for (Int t = 0; t <= cap; ++t)
        if (oracle_rank(MultiplicitySequence::uniform(n, m), t, cfg) == conditions) return t;
    throw std::logic_error("oracle_tau: rank never reached the condition count up to tau_c + 20");
}

} // namespace fatpoints

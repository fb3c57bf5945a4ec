#pragma once

#include "fatpoints/core.hpp"

namespace fatpoints {

// Conjectural Hilbert function of n general points of multiplicity m, and
// the degrees alpha_c / tau_c it determines. These are the conjectural
// values; the bounds machinery is what certifies them.

/// Number of conditions imposed by the sequence: sum of C(m_i+1, 2).
inline Int condition_count(const MultiplicitySequence& mseq) {
    Int k = 0;
    for (Int m : mseq.mults()) k = checked::add(k, binom2(checked::add(m, 1)));
    return k;
}

inline Int condition_count(Int n, Int m) {
    if (n < 1) throw std::invalid_argument("condition_count: n must be >= 1");
    if (m < 0) throw std::invalid_argument("condition_count: m must be >= 0");
    return checked::mul(n, binom2(m + 1));
}

/// max(0, C(t+2,2) - n*C(m+1,2)).
inline Int expected_hilbert(Int n, Int m, Int t) {
    if (t < 0) throw std::invalid_argument("expected_hilbert: t must be >= 0");
    Int v = checked::sub(binom2(checked::add(t, 2)), condition_count(n, m));
    return v > 0 ? v : 0;
}

inline Int expected_hilbert(const MultiplicitySequence& mseq, Int t) {
    if (t < 0) throw std::invalid_argument("expected_hilbert: t must be >= 0");
    Int v = checked::sub(binom2(checked::add(t, 2)), condition_count(mseq));
    return v > 0 ? v : 0;
}

namespace detail {

// Least t >= 0 with C(t+2,2) > K (strict) or >= K. Seeded with isqrt so the
// correction loop is O(1).
inline Int least_degree(Int K, bool strict) {
    if (K <= 0) return 0;
    Int t = isqrt(checked::mul(2, K));
    while (t > 0 && binom2(t + 2) >= K + (strict ? 1 : 0)) --t;
    while (binom2(t + 2) < K + (strict ? 1 : 0)) ++t;
    return t;
}

} // namespace detail

/// Least t with C(t+2,2) - n*C(m+1,2) > 0.
inline Int alpha_c(Int n, Int m) { return detail::least_degree(condition_count(n, m), true); }

/// Least t with C(t+2,2) - n*C(m+1,2) >= 0.
inline Int tau_c(Int n, Int m) { return detail::least_degree(condition_count(n, m), false); }

inline Int alpha_c(const MultiplicitySequence& mseq) {
    return detail::least_degree(condition_count(mseq), true);
}

inline Int tau_c(const MultiplicitySequence& mseq) {
    return detail::least_degree(condition_count(mseq), false);
}

/// Betti data of the conjectural minimal free resolution
///   0 -> R[-a-2]^d (+) R[-a-1]^c -> R[-a-1]^b (+) R[-a]^a -> I(n;m) -> 0.
struct Resolution {
    Int alpha = 0;
    Int a = 0;
    Int b = 0;
    Int c = 0;
    Int dd = 0;

    bool operator==(const Resolution&) const = default;
};

inline Resolution conjectural_resolution(Int n, Int m) {
    if (n < 1) throw std::invalid_argument("conjectural_resolution: n must be >= 1");
    if (m < 1) throw std::invalid_argument("conjectural_resolution: m must be >= 1");
    Resolution res;
    res.alpha = alpha_c(n, m);
    Int h0 = expected_hilbert(n, m, res.alpha);
    Int h1 = expected_hilbert(n, m, res.alpha + 1);
    res.a = h0;
    res.b = std::max<Int>(checked::sub(h1, checked::mul(3, h0)), 0);
    res.c = std::max<Int>(checked::sub(checked::mul(3, h0), h1), 0);
    res.dd = res.a + res.b - res.c - 1;
    return res;
}

} // namespace fatpoints

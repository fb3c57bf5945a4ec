#pragma once

#include "fatpoints/core.hpp"

namespace fatpoints {

// Closed-form bounds: the explicit alpha/tau formulas proved from the
// degeneration algorithm, under r-semiuniformity and the stated ranges of
// (d, r).

/// m is r-semiuniform when m_r + 1 >= m_1 (entries already nonincreasing).
inline bool is_semiuniform(const MultiplicitySequence& mseq, Int r) {
    if (r < 1 || r > mseq.n()) throw std::invalid_argument("is_semiuniform: r out of range");
    return mseq[r - 1] + 1 >= mseq[0];
}

/// M_n = u*r + rho with u >= 0, 0 < rho <= r, and s the largest integer with
/// (s+1)(s+2) <= 2*rho and 0 <= s < d.
struct Decomposition {
    Int u = 0;
    Int rho = 0;
    Int s = 0;
    Int M_r = 0;
    Int M_n = 0;
};

inline Decomposition decompose(const MultiplicitySequence& mseq, Int r, Int d) {
    if (r < 1 || r > mseq.n()) throw std::invalid_argument("decompose: r out of range");
    if (d < 1) throw std::invalid_argument("decompose: d must be >= 1");
    Decomposition dec;
    dec.M_n = mseq.total();
    if (dec.M_n < 1) throw std::invalid_argument("decompose: all-zero multiplicity sequence");
    dec.M_r = mseq.prefix_sum(r);
    dec.u = ceil_div(dec.M_n, r) - 1;
    dec.rho = checked::sub(dec.M_n, checked::mul(r, dec.u));
    // rho >= 1, so s = 0 always qualifies.
    Int s = 0;
    while (s + 1 < d && checked::mul(s + 2, s + 3) <= checked::mul(2, dec.rho)) ++s;
    dec.s = s;
    return dec;
}

namespace detail {

inline void require(bool ok, const char* clause) {
    if (!ok) throw precondition_error(clause);
}

} // namespace detail

/// Small-r window (a)(i): alpha >= 1 + min(floor((M_r+g-1)/d), s+ud),
/// for r-semiuniform m with d(d+1)/2 <= r <= d^2.
inline Int thm_alpha_a(const MultiplicitySequence& mseq, const SpecializationConfig& cfg) {
    detail::require(is_semiuniform(mseq, cfg.r), "m must be r-semiuniform");
    detail::require(checked::mul(cfg.d, cfg.d + 1) / 2 <= cfg.r, "r must satisfy d(d+1)/2 <= r");
    detail::require(cfg.r <= checked::mul(cfg.d, cfg.d), "r must satisfy r <= d^2");
    const Decomposition dec = decompose(mseq, cfg.r, cfg.d);
    const Int g = cfg.genus();
    const Int lhs = floor_div(checked::sub(checked::add(dec.M_r, g), 1), cfg.d);
    const Int rhs = checked::add(dec.s, checked::mul(dec.u, cfg.d));
    return checked::add(std::min(lhs, rhs), 1);
}

/// Small-r window (a)(ii): tau <= max(ceil((rho+g-1)/d)+ud, ud+d-2),
/// for r-semiuniform m with r <= d^2.
inline Int thm_tau_a(const MultiplicitySequence& mseq, const SpecializationConfig& cfg) {
    detail::require(is_semiuniform(mseq, cfg.r), "m must be r-semiuniform");
    detail::require(cfg.r <= checked::mul(cfg.d, cfg.d), "r must satisfy r <= d^2");
    const Decomposition dec = decompose(mseq, cfg.r, cfg.d);
    const Int g = cfg.genus();
    const Int ud = checked::mul(dec.u, cfg.d);
    const Int lhs = checked::add(ceil_div(checked::sub(checked::add(dec.rho, g), 1), cfg.d), ud);
    const Int rhs = checked::add(ud, cfg.d - 2);
    return std::max(lhs, rhs);
}

/// Large-r window (b)(i): alpha >= s + ud + 1, for r-semiuniform m with
/// 2r >= n + d^2.
inline Int thm_alpha_b(const MultiplicitySequence& mseq, const SpecializationConfig& cfg) {
    detail::require(is_semiuniform(mseq, cfg.r), "m must be r-semiuniform");
    detail::require(checked::mul(2, cfg.r) >= checked::add(cfg.n, checked::mul(cfg.d, cfg.d)),
                    "r must satisfy 2r >= n + d^2");
    const Decomposition dec = decompose(mseq, cfg.r, cfg.d);
    return checked::add(checked::add(dec.s, checked::mul(dec.u, cfg.d)), 1);
}

/// Large-r window (b)(ii): tau <= max(ceil((M_r+g-1)/d), ud+d-2), for
/// r-semiuniform m with 2r >= n + d^2.
inline Int thm_tau_b(const MultiplicitySequence& mseq, const SpecializationConfig& cfg) {
    detail::require(is_semiuniform(mseq, cfg.r), "m must be r-semiuniform");
    detail::require(checked::mul(2, cfg.r) >= checked::add(cfg.n, checked::mul(cfg.d, cfg.d)),
                    "r must satisfy 2r >= n + d^2");
    const Decomposition dec = decompose(mseq, cfg.r, cfg.d);
    const Int g = cfg.genus();
    const Int lhs = ceil_div(checked::sub(checked::add(dec.M_r, g), 1), cfg.d);
    const Int rhs = checked::add(checked::mul(dec.u, cfg.d), cfg.d - 2);
    return std::max(lhs, rhs);
}

/// Uniform window (c): alpha >= 1 + min(floor((mr+g-1)/d), s+ud), for
/// uniform multiplicities with r*d(d+1)/2 <= r^2 <= d^2*n.
inline Int thm_alpha_c(Int n, Int m, const SpecializationConfig& cfg) {
    if (n != cfg.n) throw std::invalid_argument("thm_alpha_c: n mismatch");
    if (m < 1) throw std::invalid_argument("thm_alpha_c: m must be >= 1");
    const Int r2 = checked::mul(cfg.r, cfg.r);
    detail::require(checked::mul(cfg.r, checked::mul(cfg.d, cfg.d + 1) / 2) <= r2,
                    "r must satisfy r*d(d+1)/2 <= r^2");
    detail::require(r2 <= checked::mul(checked::mul(cfg.d, cfg.d), n),
                    "r must satisfy r^2 <= d^2*n");
    const MultiplicitySequence mseq = MultiplicitySequence::uniform(n, m);
    const Decomposition dec = decompose(mseq, cfg.r, cfg.d);
    const Int g = cfg.genus();
    const Int lhs = floor_div(checked::sub(checked::add(checked::mul(m, cfg.r), g), 1), cfg.d);
    const Int rhs = checked::add(dec.s, checked::mul(dec.u, cfg.d));
    return checked::add(std::min(lhs, rhs), 1);
}

} // namespace fatpoints

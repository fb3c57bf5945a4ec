#pragma once

#include <optional>
#include <set>

#include "fatpoints/bounds.hpp"
#include "fatpoints/engine.hpp"
#include "fatpoints/hilbert.hpp"
#include "fatpoints/parallel.hpp"

namespace fatpoints {

// Verification corollaries: best-(d,r) search, the Hilbert-function and
// Nagata checks, the V_n range scanner and the resolution case match.

enum class Method { algorithm, thm_a, thm_b, thm_c };

inline std::string_view to_string(Method m) {
    switch (m) {
        case Method::algorithm: return "algorithm";
        case Method::thm_a: return "thm-a";
        case Method::thm_b: return "thm-b";
        case Method::thm_c: return "thm-c";
    }
    return "?";
}

struct MethodSet {
    bool algorithm = true;
    bool thm_a = true;
    bool thm_b = true;
    bool thm_c = true;

    static MethodSet all() { return {}; }
    static MethodSet only(Method m) {
        MethodSet s{false, false, false, false};
        switch (m) {
            case Method::algorithm: s.algorithm = true; break;
            case Method::thm_a: s.thm_a = true; break;
            case Method::thm_b: s.thm_b = true; break;
            case Method::thm_c: s.thm_c = true; break;
        }
        return s;
    }
};

struct Range {
    Int lo;
    Int hi;
};

struct BoundHit {
    Int value = 0;
    Int d = 0;
    Int r = 0;
    Method method = Method::algorithm;
};

struct BestBounds {
    std::optional<BoundHit> alpha; // maximized
    std::optional<BoundHit> tau;   // minimized
};

inline Range default_d_range(Int n) { return {1, isqrt(n) + 2}; }
inline Range default_r_range(Int n) { return {1, n}; }

namespace detail {

struct ConfigBest {
    std::optional<BoundHit> alpha;
    std::optional<BoundHit> tau;
};

// Candidates for one (d, r); inapplicable formulas are skipped.
inline ConfigBest config_bounds(const MultiplicitySequence& mseq, Int n, Int d, Int r,
                                const MethodSet& methods) {
    ConfigBest out;
    SpecializationConfig cfg(n, d, r);
    auto offer_alpha = [&](Int v, Method meth) {
        if (!out.alpha || v > out.alpha->value) out.alpha = BoundHit{v, d, r, meth};
    };
    auto offer_tau = [&](Int v, Method meth) {
        if (!out.tau || v < out.tau->value) out.tau = BoundHit{v, d, r, meth};
    };
    if (methods.algorithm) {
        offer_alpha(alpha_lower_bound(mseq, cfg, TraceRetention::terminal_only).value,
                    Method::algorithm);
        try {
            offer_tau(tau_upper_bound(mseq, cfg, TraceRetention::terminal_only).value,
                      Method::algorithm);
        } catch (const no_certificate_error&) {
        }
    }
    auto try_formula = [&](auto&& fn, auto&& offer, Method meth) {
        try {
            offer(fn(), meth);
        } catch (const precondition_error&) {
        }
    };
    if (methods.thm_a) {
        try_formula([&] { return thm_alpha_a(mseq, cfg); }, offer_alpha, Method::thm_a);
        try_formula([&] { return thm_tau_a(mseq, cfg); }, offer_tau, Method::thm_a);
    }
    if (methods.thm_b) {
        try_formula([&] { return thm_alpha_b(mseq, cfg); }, offer_alpha, Method::thm_b);
        try_formula([&] { return thm_tau_b(mseq, cfg); }, offer_tau, Method::thm_b);
    }
    if (methods.thm_c && mseq[0] == mseq[mseq.n() - 1]) {
        try_formula([&] { return thm_alpha_c(n, mseq[0], cfg); }, offer_alpha, Method::thm_c);
    }
    return out;
}

} // namespace detail

/// Maximize the alpha lower bound and minimize the tau upper bound over the
/// (d, r) grid with the requested methods. Ties keep the smaller d, then the
/// smaller r. A zero sequence degenerates to alpha = tau = 0.
inline BestBounds best_bounds(const MultiplicitySequence& mseq, Range d_range, Range r_range,
                              MethodSet methods = MethodSet::all(), int jobs = 1) {
    const Int n = mseq.n();
    if (mseq.all_zero()) {
        SpecializationConfig cfg(n, std::max<Int>(d_range.lo, 1), std::max<Int>(r_range.lo, 1));
        BoundHit zero{0, cfg.d, cfg.r, Method::algorithm};
        return BestBounds{zero, zero};
    }
    if (d_range.lo < 1 || d_range.lo > d_range.hi)
        throw std::invalid_argument("best_bounds: empty d range");
    if (r_range.lo < 1 || r_range.hi > n || r_range.lo > r_range.hi)
        throw std::invalid_argument("best_bounds: r range must lie in [1, n]");

    const std::size_t d_count = static_cast<std::size_t>(d_range.hi - d_range.lo + 1);
    auto per_d = parallel_map<detail::ConfigBest>(d_count, jobs, [&](std::size_t di) {
        const Int d = d_range.lo + static_cast<Int>(di);
        detail::ConfigBest best;
        for (Int r = r_range.lo; r <= r_range.hi; ++r) {
            detail::ConfigBest cb = detail::config_bounds(mseq, n, d, r, methods);
            if (cb.alpha && (!best.alpha || cb.alpha->value > best.alpha->value))
                best.alpha = cb.alpha;
            if (cb.tau && (!best.tau || cb.tau->value < best.tau->value)) best.tau = cb.tau;
        }
        return best;
    });

    BestBounds out;
    for (const auto& cb : per_d) { // d ascending: ties keep the first hit
        if (cb.alpha && (!out.alpha || cb.alpha->value > out.alpha->value)) out.alpha = cb.alpha;
        if (cb.tau && (!out.tau || cb.tau->value < out.tau->value)) out.tau = cb.tau;
    }
    if (!out.alpha && mseq[0] >= 1)
        out.alpha = BoundHit{1, 0, 0, Method::algorithm}; // alpha >= 1 trivially for m >= 1
    return out;
}

inline BestBounds best_bounds(Int n, Int m, Range d_range, Range r_range,
                              MethodSet methods = MethodSet::all(), int jobs = 1) {
    return best_bounds(MultiplicitySequence::uniform(n, m), d_range, r_range, methods, jobs);
}

inline BestBounds best_bounds(Int n, Int m, MethodSet methods = MethodSet::all(), int jobs = 1) {
    return best_bounds(n, m, default_d_range(n), default_r_range(n), methods, jobs);
}

struct HilbertVerdict {
    bool verified = false;
    std::optional<BoundHit> alpha;
    std::optional<BoundHit> tau;
};

/// The Hilbert function of (n; m) is determined once some certified alpha
/// lower bound meets some certified tau upper bound.
inline HilbertVerdict verify_hilbert(Int n, Int m, int jobs = 1) {
    if (n < 10) throw std::invalid_argument("verify_hilbert: n must be >= 10");
    if (m < 1) throw std::invalid_argument("verify_hilbert: m must be >= 1");
    BestBounds bb = best_bounds(n, m, MethodSet::all(), jobs);
    HilbertVerdict v;
    v.alpha = bb.alpha;
    v.tau = bb.tau;
    v.verified = bb.alpha && bb.tau && bb.alpha->value >= bb.tau->value;
    return v;
}

enum class NagataStatus { known_square, covered, not_covered };

struct NagataResult {
    NagataStatus status = NagataStatus::not_covered;
    bool intro_cor_a = false; // m <= (n - 5 sqrt(n))/2, by cross-multiplication
    Int d = 0;                // floor(sqrt(n))
    Int delta = 0;            // n - d^2
};

/// alpha(n;m) >= m*sqrt(n), by the explicit multiplicity windows. Squares
/// report a distinguished known verdict. All irrational comparisons are done
/// by cross-multiplication.
inline NagataResult nagata_check(Int n, Int m) {
    if (n < 10) throw std::invalid_argument("nagata_check: n must be >= 10");
    if (m < 1) throw std::invalid_argument("nagata_check: m must be >= 1");
    NagataResult res;
    res.d = isqrt(n);
    res.delta = checked::sub(n, checked::mul(res.d, res.d));
    // m <= (n - 5 sqrt(n))/2  <=>  n - 2m >= 5 sqrt(n)  <=>  n - 2m >= 0 and (n-2m)^2 >= 25n
    const Int n2m = checked::sub(n, checked::mul(2, m));
    res.intro_cor_a = n2m >= 0 && checked::mul(n2m, n2m) >= checked::mul(25, n);
    const Int d = res.d;
    if (res.delta == 0) {
        res.status = NagataStatus::known_square;
        return res;
    }
    bool ok;
    if (res.delta % 2 != 0) {
        // m <= max(d(d-3), d(d-2)/delta)
        ok = m <= checked::mul(d, d - 3) ||
             checked::mul(m, res.delta) <= checked::mul(d, d - 2);
    } else {
        // m <= max(d(d-3)/2, 2d^2/delta)
        ok = m <= checked::mul(d, d - 3) / 2 ||
             checked::mul(m, res.delta) <= checked::mul(2, checked::mul(d, d));
    }
    res.status = ok ? NagataStatus::covered : NagataStatus::not_covered;
    return res;
}

/// Largest j with j(j+1) <= i (the l_i of the square-case window).
inline Int pronic_floor(Int i) {
    if (i < 0) throw std::invalid_argument("pronic_floor: negative argument");
    Int j = 0;
    while (checked::mul(j + 1, j + 2) <= i) ++j;
    return j;
}

/// Square case: n = sigma^2, m reachable as x + k(sigma-1) with x in the
/// window [sigma/2 - l_sigma, sigma/2] (even) or
/// [(sigma+1)/2 - l_{2 sigma}, (sigma+1)/2] (odd).
inline bool square_hilbert_check(Int sigma, Int m) {
    if (sigma < 4) throw std::invalid_argument("square_hilbert_check: sigma must be >= 4");
    if (m < 1) return false;
    Int lo, hi;
    if (sigma % 2 == 0) {
        Int l = pronic_floor(sigma);
        lo = sigma / 2 - l;
        hi = sigma / 2;
    } else {
        Int l = pronic_floor(checked::mul(2, sigma));
        lo = (sigma + 1) / 2 - l;
        hi = (sigma + 1) / 2;
    }
    for (Int x = lo; x <= hi; ++x)
        if (m >= x && (m - x) % (sigma - 1) == 0) return true;
    return false;
}

namespace detail {

// The verified multiplicity ranges for n = d^2 + 2e; calls f(m) for every
// member (duplicates allowed). Sweeps mirror the published data generator:
// e up to 2e <= (d+1)(d+3), i up to i*e <= d.
template <class F>
void for_each_range_m(Int d, Int e, F&& f) {
    // (a)  ceil((d-1)(d-2)/(2e)) <= m < (d+1)(d+2)/(2e)
    Int m = ceil_div(checked::mul(d - 1, d - 2), 2 * e);
    while (checked::mul(2 * e, m) < checked::mul(d + 1, d + 2)) f(m), ++m;
    for (Int i = 1; checked::mul(e, i) <= d; ++i) {
        const Int base = checked::mul(i, checked::add(checked::mul(d, d), e));
        const Int id2 = checked::mul(i, checked::mul(d, d));
        // (b)  (i(d^2+e) + (d-1)(d-2)/2)/e <= m <= (i d^2 + d(d-1)/2)/e
        m = ceil_div(checked::add(checked::mul(2, base), checked::mul(d - 1, d - 2)), 2 * e);
        while (checked::mul(e, m) <= checked::add(id2, checked::mul(d, d - 1) / 2)) f(m), ++m;
        // (c)  (i(d^2+e) + d(d-1)/2)/e <= m <= (i d^2 + d(d+1)/2)/e
        m = ceil_div(checked::add(checked::mul(2, base), checked::mul(d, d - 1)), 2 * e);
        while (checked::mul(e, m) <= checked::add(id2, checked::mul(d, d + 1) / 2)) f(m), ++m;
        // (d)  (i(d^2+e) + (d+1)d/2)/e <= m <= (i d^2 + d(d+3)/2)/e
        m = ceil_div(checked::add(checked::mul(2, base), checked::mul(d + 1, d)), 2 * e);
        while (checked::mul(e, m) <= checked::add(id2, checked::mul(d, d + 3) / 2)) f(m), ++m;
    }
}

inline bool valid_epsilon(Int d, Int e) { return e >= 1 && 2 * e <= checked::mul(d + 1, d + 3); }

} // namespace detail

/// V_n: the multiplicities for which the range scanner (plus the square
/// case when n is a square) settles the Hilbert function, capped at m_max.
inline std::set<Int> hilbert_range_set(Int n, Int m_max) {
    if (m_max < 1) throw std::invalid_argument("hilbert_range_set: m_max must be >= 1");
    std::set<Int> out;
    for (Int d = 3; checked::mul(d, d) + 2 <= n; ++d) {
        const Int diff = n - checked::mul(d, d);
        if (diff % 2 != 0) continue;
        const Int e = diff / 2;
        if (!detail::valid_epsilon(d, e)) continue;
        detail::for_each_range_m(d, e, [&](Int m) {
            if (m >= 1 && m <= m_max) out.insert(m);
        });
    }
    const Int sigma = isqrt(n);
    if (checked::mul(sigma, sigma) == n && sigma >= 4)
        for (Int m = 1; m <= m_max; ++m)
            if (square_hilbert_check(sigma, m)) out.insert(m);
    return out;
}

struct ResolutionCase {
    enum class Which { case_a, case_b, case_c, even_square };
    Which which;
    Int d = 0;
    Int epsilon = 0;
    bool plus_sign = false;
    Resolution resolution;
};

inline std::string_view to_string(ResolutionCase::Which w) {
    switch (w) {
        case ResolutionCase::Which::case_a: return "case-a";
        case ResolutionCase::Which::case_b: return "case-b";
        case ResolutionCase::Which::case_c: return "case-c";
        case ResolutionCase::Which::even_square: return "even-square";
    }
    return "?";
}

namespace detail {

inline ResolutionCase checked_case(Int n, Int m, ResolutionCase rc) {
    if (rc.resolution != conjectural_resolution(n, m))
        throw std::logic_error("resolution_cases: closed form disagrees with Hilbert data");
    return rc;
}

} // namespace detail

/// Match (n, m) against the closed-form resolution cases. The minus clause
/// is tried before plus for each case; the returned Betti data is checked
/// against conjectural_resolution.
inline std::optional<ResolutionCase> resolution_cases(Int n, Int m) {
    if (n < 10) throw std::invalid_argument("resolution_cases: n must be >= 10");
    if (m < 1) throw std::invalid_argument("resolution_cases: m must be >= 1");

    struct DE {
        Int d, e;
    };
    std::vector<DE> des;
    for (Int d = 3; checked::mul(d, d) + 2 <= n; ++d) {
        const Int diff = n - checked::mul(d, d);
        if (diff % 2 == 0 && diff / 2 >= 1) des.push_back({d, diff / 2});
    }

    // case (a): m = d(d±1)/(2e); resolution 0 -> R[-a-1]^a -> R[-a]^(a+1).
    for (const auto& [d, e] : des) {
        for (bool plus : {false, true}) {
            const Int num = checked::mul(d, plus ? d + 1 : d - 1);
            if (num % (2 * e) != 0) continue;
            const Int mm = num / (2 * e);
            if (mm != m || mm < 1) continue;
            const Int alpha = checked::add(checked::mul(m, d), plus ? d : d - 1);
            Resolution res{alpha, alpha + 1, 0, alpha, 0};
            return detail::checked_case(n, m, {ResolutionCase::Which::case_a, d, e, plus, res});
        }
    }
    // case (b): m = (d(d±1)/2 - 1)/e; exponents (b+m, b, m+1), b = (m+1)(d-2) (+1 for plus).
    for (const auto& [d, e] : des) {
        for (bool plus : {false, true}) {
            const Int num = checked::sub(checked::mul(d, plus ? d + 1 : d - 1), 2);
            if (num % (2 * e) != 0) continue;
            const Int mm = num / (2 * e);
            if (mm != m || mm < 1) continue;
            const Int alpha = checked::add(checked::mul(m, d), plus ? d - 1 : d - 2);
            const Int b = checked::add(checked::mul(m + 1, d - 2), plus ? 1 : 0);
            Resolution res{alpha, m + 1, b, 0, checked::add(b, m)};
            return detail::checked_case(n, m, {ResolutionCase::Which::case_b, d, e, plus, res});
        }
    }
    // case (c): n = d^2 + 2, m = d^2 + d(d±1)/2.
    {
        const Int d = isqrt(n - 2);
        if (d >= 3 && checked::mul(d, d) + 2 == n) {
            for (bool plus : {false, true}) {
                const Int mm = checked::add(checked::mul(d, d), checked::mul(d, plus ? d + 1 : d - 1) / 2);
                if (mm != m) continue;
                const Int alpha = checked::add(checked::mul(m + 1, d), plus ? d - 1 : d - 2);
                const Int a = checked::mul(d, plus ? d + 1 : d - 1) / 2;
                const Int b = checked::sub(alpha + 2, checked::mul(d, plus ? d + 1 : d - 1));
                Resolution res{alpha, a, b, 0, checked::sub(checked::add(a, b), 1)};
                return detail::checked_case(n, m, {ResolutionCase::Which::case_c, d, 1, plus, res});
            }
        }
    }
    // even squares via the square-case window.
    {
        const Int sigma = isqrt(n);
        if (checked::mul(sigma, sigma) == n && sigma > 3 && sigma % 2 == 0 &&
            square_hilbert_check(sigma, m)) {
            ResolutionCase rc{ResolutionCase::Which::even_square, sigma, 0, false,
                              conjectural_resolution(n, m)};
            return rc;
        }
    }
    return std::nullopt;
}

} // namespace fatpoints

#pragma once

#include <ostream>
#include <sstream>
#include <string_view>

#include "fatpoints/core.hpp"
#include "fatpoints/hilbert.hpp"

namespace fatpoints {

// The degeneration engine: iterate D_0 -> D_1 -> ... by subtract-and-unload
// and apply the curve vanishing criteria, yielding certified lower bounds
// for alpha and upper bounds for tau.

enum class Criterion {
    curve_h0_low_degree,     // t_j < d and (t_j+1)(t_j+2) <= 2 v_j
    curve_h0_genus,          // D_j.C <= g-1 and t_j >= d-2
    curve_h0_negative_degree,// t_j < 0
    curve_h1,                // t_j >= d-2 and D_j.C >= g-1
    terminal_h0,             // D_j.(L-E_1) < 0
    terminal_h1,             // h^1(X', D_j) = 0 known
    failed,
};

inline std::string_view to_string(Criterion c) {
    switch (c) {
        case Criterion::curve_h0_low_degree: return "CurveH0-low-degree";
        case Criterion::curve_h0_genus: return "CurveH0-genus";
        case Criterion::curve_h0_negative_degree: return "CurveH0-negative-degree";
        case Criterion::curve_h1: return "CurveH1";
        case Criterion::terminal_h0: return "Terminal-H0";
        case Criterion::terminal_h1: return "Terminal-H1";
        case Criterion::failed: return "Failed";
    }
    return "?";
}

struct TraceStep {
    Int index = 0;
    DivisorClass divisor;
    Int t_j = 0; // residual degree t - j*d
    Int c_j = 0; // D_j . C
    Int v_j = 0; // t_j*d - c_j
    Criterion criterion = Criterion::failed;
};

enum class TraceRetention { full, terminal_only };

struct Certification {
    bool certified = false;
    std::vector<TraceStep> trace;
};

struct BoundCertificate {
    enum class Kind { alpha_lower, tau_upper };
    Kind kind;
    Int value;
    Int t_witness;
    std::vector<TraceStep> trace;
    SpecializationConfig config;
    MultiplicitySequence mseq;
};

namespace detail {

inline TraceStep make_step(Int j, const DivisorClass& D, const SpecializationConfig& cfg,
                           Criterion crit) {
    TraceStep st;
    st.index = j;
    st.t_j = D.degree;
    st.c_j = intersect_curve(D, cfg);
    st.v_j = checked::sub(checked::mul(st.t_j, cfg.d), st.c_j);
    // v_j must equal the sum of the first r multiplicities; anything else
    // means the iteration state is corrupt.
    Int s = 0;
    for (Int i = 0; i < cfg.r; ++i) s += D.mults[static_cast<std::size_t>(i)];
    if (st.v_j != s) throw std::logic_error("trace invariant violated: v_j != sum of first r mults");
    st.divisor = D;
    st.criterion = crit;
    return st;
}

inline void record(std::vector<TraceStep>& trace, TraceRetention keep, TraceStep st) {
    if (keep == TraceRetention::full) {
        trace.push_back(std::move(st));
    } else {
        trace.clear();
        trace.push_back(std::move(st));
    }
}

// h^0(C, a L_C) for C a smooth plane curve of degree d.
inline Int h0_curve_section(Int a, Int d) {
    if (a < 0) return 0;
    if (a >= d - 2) return checked::add(checked::sub(checked::mul(a, d), genus(d)), 1);
    return checked::mul(a + 1, a + 2) / 2;
}

} // namespace detail

/// Try to certify h^0(X', F_t) = 0, i.e. t+1 <= alpha(m).
/// I is the least i with D_i.(L - E_1) < 0; for every i < I one of the three
/// curve criteria must hold. An all-zero D_i of nonnegative degree makes
/// h^0 visibly nonzero and fails immediately.
inline Certification certify_alpha(Int t, const MultiplicitySequence& mseq,
                                   const SpecializationConfig& cfg,
                                   TraceRetention keep = TraceRetention::full) {
    if (t < 0) throw std::invalid_argument("certify_alpha: t must be >= 0");
    if (mseq.n() != cfg.n) throw std::invalid_argument("certify_alpha: length mismatch");
    const Int g = cfg.genus();
    Certification cert;
    DivisorClass D = DivisorClass::from_mseq(t, mseq);
    for (Int j = 0;; ++j) {
        const Int tj = D.degree;
        const Int max_m = D.mults[0];
        if (tj - max_m < 0) { // I reached: h^0(X', D_I) = 0
            detail::record(cert.trace, keep, detail::make_step(j, D, cfg, Criterion::terminal_h0));
            cert.certified = true;
            return cert;
        }
        if (D.mults_all_zero()) { // nonnegative multiple of L: h^0 > 0
            detail::record(cert.trace, keep, detail::make_step(j, D, cfg, Criterion::failed));
            cert.certified = false;
            return cert;
        }
        const Int cj = intersect_curve(D, cfg);
        const Int vj = checked::sub(checked::mul(tj, cfg.d), cj);
        Criterion crit = Criterion::failed;
        if (cj <= g - 1 && tj >= cfg.d - 2) {
            crit = Criterion::curve_h0_genus;
        } else if (tj < 0) {
            crit = Criterion::curve_h0_negative_degree;
        } else if (tj < cfg.d &&
                   checked::mul(tj + 1, tj + 2) <= checked::mul(2, vj)) {
            crit = Criterion::curve_h0_low_degree;
        }
        detail::record(cert.trace, keep, detail::make_step(j, D, cfg, crit));
        if (crit == Criterion::failed) {
            cert.certified = false;
            return cert;
        }
        D = unload(subtract_curve(std::move(D), cfg));
    }
}

/// Try to certify h^1(X', F_t) = 0, i.e. t >= tau(m).
/// Terminates at the least j with h^1(X', D_j) = 0 known: either D_j is a
/// multiple of L, or D_j = aL - E_1 - ... - E_k with a >= 0 and
/// k <= min(r, h^0(C, aL_C)) (a curvilinear scheme of that length on C
/// imposes independent conditions at the general non-flex point). Every
/// earlier step needs t_j >= d-2 and D_j.C >= g-1.
inline Certification certify_tau(Int t, const MultiplicitySequence& mseq,
                                 const SpecializationConfig& cfg,
                                 TraceRetention keep = TraceRetention::full) {
    if (t < 0) throw std::invalid_argument("certify_tau: t must be >= 0");
    if (mseq.n() != cfg.n) throw std::invalid_argument("certify_tau: length mismatch");
    const Int g = cfg.genus();
    Certification cert;
    DivisorClass D = DivisorClass::from_mseq(t, mseq);
    for (Int j = 0;; ++j) {
        const Int tj = D.degree;
        if (D.mults_all_zero()) {
            detail::record(cert.trace, keep, detail::make_step(j, D, cfg, Criterion::terminal_h1));
            cert.certified = true;
            return cert;
        }
        if (tj >= 0 && D.max_mult() <= 1) {
            Int k = 0;
            for (Int a : D.mults) k += a;
            if (k <= cfg.r && k <= detail::h0_curve_section(tj, cfg.d)) {
                detail::record(cert.trace, keep,
                               detail::make_step(j, D, cfg, Criterion::terminal_h1));
                cert.certified = true;
                return cert;
            }
        }
        const Int cj = intersect_curve(D, cfg);
        Criterion crit = (tj >= cfg.d - 2 && cj >= g - 1) ? Criterion::curve_h1 : Criterion::failed;
        detail::record(cert.trace, keep, detail::make_step(j, D, cfg, crit));
        if (crit == Criterion::failed) {
            cert.certified = false;
            return cert;
        }
        D = unload(subtract_curve(std::move(D), cfg));
    }
}

/// Scan t = 0, 1, 2, ... and stop at the first uncertifiable t; the bound is
/// alpha >= (last certified t) + 1.
inline BoundCertificate alpha_lower_bound(const MultiplicitySequence& mseq,
                                          const SpecializationConfig& cfg,
                                          TraceRetention keep = TraceRetention::full) {
    if (mseq.all_zero())
        return BoundCertificate{BoundCertificate::Kind::alpha_lower, 0, -1, {}, cfg, mseq};
    const Int cap = checked::add(alpha_c(mseq), 2);
    std::vector<TraceStep> witness;
    for (Int t = 0; t <= cap; ++t) {
        Certification c = certify_alpha(t, mseq, cfg, keep);
        if (!c.certified)
            return BoundCertificate{BoundCertificate::Kind::alpha_lower, t, t - 1,
                                    std::move(witness), cfg, mseq};
        witness = std::move(c.trace);
    }
    // Soundness forces a failure at t = alpha_c at the latest.
    throw std::logic_error("alpha_lower_bound: scan passed alpha_c + 2, criteria unsound");
}

/// Scan t upward from tau_c and return the first certified t.
inline BoundCertificate tau_upper_bound(const MultiplicitySequence& mseq,
                                        const SpecializationConfig& cfg,
                                        TraceRetention keep = TraceRetention::full) {
    const Int start = tau_c(mseq);
    const Int cap = checked::add(checked::add(start, mseq.total()), cfg.d);
    for (Int t = start; t <= cap; ++t) {
        Certification c = certify_tau(t, mseq, cfg, keep);
        if (c.certified)
            return BoundCertificate{BoundCertificate::Kind::tau_upper, t, t,
                                    std::move(c.trace), cfg, mseq};
    }
    std::ostringstream os;
    os << "tau_upper_bound: no certificate up to t = " << cap
       << " (d=" << cfg.d << ", r=" << cfg.r << " yields no bound at sane range)";
    throw no_certificate_error(os.str());
}

/// One line per step: D_j = <t_j>L - (<a_1>,...,<a_n>), D_j.C=.., v_j=.., rule=..
inline void print_trace_step(std::ostream& os, const TraceStep& st) {
    os << "D_" << st.index << " = " << st.t_j << "L - (";
    for (Int i = 0; i < st.divisor.n(); ++i) {
        if (i) os << ',';
        os << st.divisor.mults[static_cast<std::size_t>(i)];
    }
    os << "), D_j.C=" << st.c_j << ", v_j=" << st.v_j << ", rule=" << to_string(st.criterion);
}

inline void print_trace(std::ostream& os, const std::vector<TraceStep>& trace) {
    for (const auto& st : trace) {
        print_trace_step(os, st);
        os << '\n';
    }
}

} // namespace fatpoints

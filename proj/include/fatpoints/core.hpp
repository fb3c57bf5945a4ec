#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "fatpoints/errors.hpp"

namespace fatpoints {

/// Genus (d-1)(d-2)/2 of a smooth plane curve of degree d >= 1.
inline Int genus(Int d) {
    if (d <= 0) throw std::invalid_argument("genus: d must be >= 1");
    return checked::mul(d - 1, d - 2) / 2;
}

/// x(x-1)/2 for x >= 2, clamped to 0 below that.
inline Int binom2(Int x) {
    if (x < 2) return 0;
    return checked::mul(x, x - 1) / 2;
}

/// Largest s with s*s <= x. All irrational comparisons elsewhere are done
/// by squaring through this, never by floating point. The float seed is
/// corrected by exact integer comparisons (s*s <= x iff s <= x/s).
inline Int isqrt(Int x) {
    if (x < 0) throw std::invalid_argument("isqrt: negative argument");
    if (x < 2) return x;
    Int s = static_cast<Int>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s > x / s) --s;
    while (s + 1 <= x / (s + 1)) ++s;
    return s;
}

/// The multiplicity vector m = (m_1,...,m_n), normalized nonincreasing.
class MultiplicitySequence {
public:
    explicit MultiplicitySequence(std::vector<Int> mults) : mults_(std::move(mults)) {
        if (mults_.empty())
            throw std::invalid_argument("MultiplicitySequence: need n >= 1");
        for (Int m : mults_)
            if (m < 0) throw std::invalid_argument("MultiplicitySequence: negative multiplicity");
        std::sort(mults_.begin(), mults_.end(), std::greater<Int>());
    }

    static MultiplicitySequence uniform(Int n, Int m) {
        if (n < 1) throw std::invalid_argument("MultiplicitySequence: need n >= 1");
        if (m < 0) throw std::invalid_argument("MultiplicitySequence: negative multiplicity");
        return MultiplicitySequence(std::vector<Int>(static_cast<std::size_t>(n), m));
    }

    Int n() const { return static_cast<Int>(mults_.size()); }
    Int operator[](Int i) const { return mults_[static_cast<std::size_t>(i)]; }
    const std::vector<Int>& mults() const { return mults_; }

    bool all_zero() const { return mults_[0] == 0; }

    /// M_r = m_1 + ... + m_r.
    Int prefix_sum(Int r) const {
        if (r < 0 || r > n()) throw std::invalid_argument("prefix_sum: r out of range");
        Int s = 0;
        for (Int i = 0; i < r; ++i) s = checked::add(s, (*this)[i]);
        return s;
    }

    /// M_n.
    Int total() const { return prefix_sum(n()); }

private:
    std::vector<Int> mults_;
};

/// The specialization choice: n points, the first r of them infinitely near
/// on an irreducible curve of degree d.
struct SpecializationConfig {
    Int n;
    Int d;
    Int r;

    SpecializationConfig(Int n_, Int d_, Int r_) : n(n_), d(d_), r(r_) {
        if (n < 1) throw std::invalid_argument("SpecializationConfig: n must be >= 1");
        if (d < 1) throw std::invalid_argument("SpecializationConfig: d must be >= 1");
        if (r < 1 || r > n) throw std::invalid_argument("r must satisfy 1<=r<=n");
    }

    Int genus() const { return fatpoints::genus(d); }
};

/// A class tL - a_1E_1 - ... - a_nE_n on the blown-up surface. Entries may
/// be negative only transiently, between subtraction and unloading.
struct DivisorClass {
    Int degree = 0;
    std::vector<Int> mults;

    DivisorClass() = default;
    DivisorClass(Int deg, std::vector<Int> m) : degree(deg), mults(std::move(m)) {}

    static DivisorClass from_mseq(Int t, const MultiplicitySequence& mseq) {
        return DivisorClass(t, mseq.mults());
    }

    Int n() const { return static_cast<Int>(mults.size()); }

    Int max_mult() const {
        return mults.empty() ? 0 : *std::max_element(mults.begin(), mults.end());
    }

    bool mults_all_zero() const {
        return std::all_of(mults.begin(), mults.end(), [](Int a) { return a == 0; });
    }

    bool operator==(const DivisorClass& o) const = default;
};

/// D . C for C = dL - E_1 - ... - E_r, i.e. degree*d - (a_1 + ... + a_r).
inline Int intersect_curve(const DivisorClass& D, const SpecializationConfig& cfg) {
    if (D.n() != cfg.n) throw std::invalid_argument("intersect_curve: length mismatch");
    Int s = 0;
    for (Int i = 0; i < cfg.r; ++i) s = checked::add(s, D.mults[static_cast<std::size_t>(i)]);
    return checked::sub(checked::mul(D.degree, cfg.d), s);
}

/// Unloading: sort the exceptional coefficients nonincreasing and zero the
/// negative ones. Degree is untouched.
inline DivisorClass unload(DivisorClass D) {
    std::sort(D.mults.begin(), D.mults.end(), std::greater<Int>());
    for (auto it = D.mults.rbegin(); it != D.mults.rend() && *it < 0; ++it) *it = 0;
    return D;
}

/// D - (dL - E_1 - ... - E_r).
inline DivisorClass subtract_curve(DivisorClass D, const SpecializationConfig& cfg) {
    if (D.n() != cfg.n) throw std::invalid_argument("subtract_curve: length mismatch");
    D.degree = checked::sub(D.degree, cfg.d);
    for (Int i = 0; i < cfg.r; ++i) {
        auto& a = D.mults[static_cast<std::size_t>(i)];
        a = checked::sub(a, 1);
    }
    return D;
}

} // namespace fatpoints

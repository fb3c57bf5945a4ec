#pragma once

#include <sstream>
#include <string>

#include "fatpoints/bounds.hpp"
#include "fatpoints/parallel.hpp"
#include "fatpoints/verify.hpp"

namespace fatpoints {

// Figure datasets in the compressed plt run encoding. The generators mirror
// the published data exactly: same sweeps, same run-length readout, same
// main-section-then-square-section layout for figures 1 and 2.

/// One vertical run: the pairs (n, m_start), ..., (n, m_start + span).
struct PltRun {
    Int span = 0;
    Int n = 0;
    Int m_start = 0;

    bool operator==(const PltRun&) const = default;
};

namespace detail {

// Run-length encode one n-column of marks; marks[m] for 1 <= m <= topm.
inline void emit_runs(const std::vector<char>& marks, Int n, Int topm,
                      std::vector<PltRun>& out) {
    bool open = false;
    Int least = 0, largest = 0;
    for (Int m = 1; m <= topm; ++m) {
        if (marks[static_cast<std::size_t>(m)]) {
            if (!open) least = largest = m, open = true;
            else ++largest;
        } else if (open) {
            out.push_back({largest - least, n, least});
            open = false;
        }
    }
    if (open) out.push_back({topm - least, n, least});
}

// Multiplicity-range grid marking (the non-square section of figure 1).
inline std::vector<std::vector<char>> verhilb_marks(Int topn, Int topm) {
    std::vector<std::vector<char>> marks(static_cast<std::size_t>(topn + 1),
                                         std::vector<char>(static_cast<std::size_t>(topm + 1), 0));
    for (Int d = 3; d <= isqrt(topn) + 1; ++d) {
        for (Int e = 1; 2 * e <= checked::mul(d + 1, d + 3); ++e) {
            const Int n = checked::add(checked::mul(d, d), 2 * e);
            if (n > topn) continue;
            for_each_range_m(d, e, [&](Int m) {
                if (m >= 1 && m <= topm) marks[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = 1;
            });
        }
    }
    return marks;
}

// Resolution-case grid marking (the non-square section of figure 2).
inline std::vector<std::vector<char>> smallm_marks(Int topn, Int topm) {
    std::vector<std::vector<char>> marks(static_cast<std::size_t>(topn + 1),
                                         std::vector<char>(static_cast<std::size_t>(topm + 1), 0));
    auto mark = [&](Int n, Int m) {
        if (n <= topn && m >= 1 && m <= topm)
            marks[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = 1;
    };
    const Int topd = isqrt(topn) + 1;
    for (Int d = 3; d <= topd; ++d) { // case (c): n = d^2 + 2
        const Int n = checked::mul(d, d) + 2;
        mark(n, checked::add(checked::mul(d, d), checked::mul(d, d - 1) / 2));
        mark(n, checked::add(checked::mul(d, d), checked::mul(d, d + 1) / 2));
    }
    for (Int d = 3; d <= topd; ++d) {
        for (Int e = 1; 2 * e <= checked::mul(d + 1, d); ++e) {
            const Int n = checked::add(checked::mul(d, d), 2 * e);
            for (bool plus : {false, true}) { // case (a): m = d(d±1)/(2e)
                const Int num = checked::mul(d, plus ? d + 1 : d - 1);
                if (num % (2 * e) == 0) mark(n, num / (2 * e));
            }
            for (bool plus : {false, true}) { // case (b): m = (d(d±1)-2)/(2e)
                const Int num = checked::sub(checked::mul(d, plus ? d + 1 : d - 1), 2);
                if (num % (2 * e) == 0) mark(n, num / (2 * e));
            }
        }
    }
    return marks;
}

// Square-case columns appended to figures 1 and 2.
inline void emit_square_runs(Int topn, Int topm, bool even_only, std::vector<PltRun>& out) {
    std::vector<char> marks;
    for (Int sigma = 4; checked::mul(sigma, sigma) <= topn; ++sigma) {
        if (even_only && sigma % 2 != 0) continue;
        marks.assign(static_cast<std::size_t>(topm + 1), 0);
        for (Int m = 1; m <= topm; ++m)
            if (square_hilbert_check(sigma, m)) marks[static_cast<std::size_t>(m)] = 1;
        emit_runs(marks, checked::mul(sigma, sigma), topm, out);
    }
}

// Nagata comparison marking for figures 3 and 4: does the closed-form bound
// at the figure's canonical (d, r) reach m*sqrt(n)?
inline std::vector<PltRun> nagata_figure(Int topn, Int topm, bool midpoint_r, int jobs) {
    auto rows = parallel_map<std::vector<PltRun>>(
        static_cast<std::size_t>(topn - 10 + 1), jobs, [&](std::size_t idx) {
            const Int n = 10 + static_cast<Int>(idx);
            const Int d = isqrt(n);
            std::vector<char> marks(static_cast<std::size_t>(topm + 1), 0);
            for (Int m = 1; m <= topm; ++m) {
                Int bound;
                if (!midpoint_r) { // figure 3: r = floor(d*sqrt(n))
                    const Int r = isqrt(checked::mul(checked::mul(d, d), n));
                    bound = thm_alpha_c(n, m, SpecializationConfig(n, d, r));
                } else { // figure 4: r = floor((n+d^2)/2)
                    const Int s = checked::add(n, checked::mul(d, d));
                    const Int r = s / 2;
                    SpecializationConfig cfg(n, d, r);
                    bound = (s % 2 == 0)
                                ? thm_alpha_b(MultiplicitySequence::uniform(n, m), cfg)
                                : thm_alpha_c(n, m, cfg);
                }
                if (checked::mul(bound, bound) >= checked::mul(checked::mul(m, m), n))
                    marks[static_cast<std::size_t>(m)] = 1;
            }
            std::vector<PltRun> runs;
            emit_runs(marks, n, topm, runs);
            return runs;
        });
    std::vector<PltRun> out;
    for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

} // namespace detail

/// The dataset behind figure k (1..4) for the grid 10 <= n <= topn,
/// 1 <= m <= topm.
inline std::vector<PltRun> figure_dataset(int k, Int topn, Int topm, int jobs = 1) {
    if (topn < 10) throw std::invalid_argument("figure_dataset: topn must be >= 10");
    if (topm < 1) throw std::invalid_argument("figure_dataset: topm must be >= 1");
    std::vector<PltRun> out;
    switch (k) {
        case 1: {
            auto marks = detail::verhilb_marks(topn, topm);
            for (Int n = 10; n <= topn; ++n)
                detail::emit_runs(marks[static_cast<std::size_t>(n)], n, topm, out);
            detail::emit_square_runs(topn, topm, /*even_only=*/false, out);
            return out;
        }
        case 2: {
            auto marks = detail::smallm_marks(topn, topm);
            for (Int n = 10; n <= topn; ++n)
                detail::emit_runs(marks[static_cast<std::size_t>(n)], n, topm, out);
            detail::emit_square_runs(topn, topm, /*even_only=*/true, out);
            return out;
        }
        case 3:
            return detail::nagata_figure(topn, topm, /*midpoint_r=*/false, jobs);
        case 4:
            return detail::nagata_figure(topn, topm, /*midpoint_r=*/true, jobs);
        default:
            throw std::invalid_argument("figure_dataset: k must be 1..4");
    }
}

/// plt text: one line per run, `\plt <span> <n> <m_start>` plus two trailing
/// spaces, byte-compatible with the published data.
inline std::string format_plt(const std::vector<PltRun>& runs) {
    std::ostringstream os;
    for (const auto& r : runs)
        os << "\\plt " << r.span << ' ' << r.n << ' ' << r.m_start << "  \n";
    return os.str();
}

/// CSV: the runs exploded into one `n,m` pair per line.
inline std::string format_csv(const std::vector<PltRun>& runs) {
    std::ostringstream os;
    os << "n,m\n";
    for (const auto& r : runs)
        for (Int m = r.m_start; m <= r.m_start + r.span; ++m) os << r.n << ',' << m << '\n';
    return os.str();
}

/// JSON: the run list as an array of {span, n, m} objects.
inline std::string format_json(const std::vector<PltRun>& runs) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i) os << ",";
        os << "{\"span\":" << runs[i].span << ",\"n\":" << runs[i].n
           << ",\"m\":" << runs[i].m_start << "}";
    }
    os << "]\n";
    return os.str();
}

} // namespace fatpoints

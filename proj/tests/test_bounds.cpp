#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fatpoints/bounds.hpp"
#include "fatpoints/engine.hpp"
#include "fatpoints/hilbert.hpp"

using namespace fatpoints;

TEST_CASE("semiuniformity windows") {
    MultiplicitySequence ms(std::vector<Int>{6, 6, 6, 5, 5, 5, 5, 4, 4, 4});
    for (Int r = 1; r <= 7; ++r) CHECK(is_semiuniform(ms, r));
    for (Int r = 8; r <= 10; ++r) CHECK_FALSE(is_semiuniform(ms, r));
    CHECK(is_semiuniform(MultiplicitySequence::uniform(9, 4), 5));
    CHECK_THROWS_AS(is_semiuniform(ms, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_semiuniform(ms, 11), std::invalid_argument);
}

TEST_CASE("decompose golden values") {
    Decomposition d1 = decompose(MultiplicitySequence::uniform(33, 29), 29, 5);
    CHECK(d1.u == 32);
    CHECK(d1.rho == 29);
    CHECK(d1.s == 4);

    Decomposition d2 = decompose(MultiplicitySequence::uniform(1000, 13), 981, 31);
    CHECK(d2.u == 13);
    CHECK(d2.rho == 247);
    CHECK(d2.s == 20);

    Decomposition d3 = decompose(MultiplicitySequence::uniform(7, 1), 7, 3);
    CHECK(d3.u == 0);
    CHECK(d3.rho == 7);
    CHECK(d3.s == 2); // (3)(4) = 12 <= 14, (4)(5) = 20 > 14

    CHECK_THROWS_AS(decompose(MultiplicitySequence::uniform(5, 0), 3, 2), std::invalid_argument);
}

TEST_CASE("decomposition consistency on a grid") {
    for (Int n = 1; n <= 25; ++n) {
        for (Int m = 1; m <= 6; ++m) {
            MultiplicitySequence ms = MultiplicitySequence::uniform(n, m);
            for (Int d = 1; d <= 7; ++d) {
                for (Int r = 1; r <= n; ++r) {
                    Decomposition dec = decompose(ms, r, d);
                    CHECK(dec.u >= 0);
                    CHECK(dec.u * r + dec.rho == dec.M_n);
                    CHECK(0 < dec.rho);
                    CHECK(dec.rho <= r);
                    CHECK(0 <= dec.s);
                    CHECK(dec.s < d);
                    CHECK((dec.s + 1) * (dec.s + 2) <= 2 * dec.rho);
                    if (dec.s != d - 1) CHECK((dec.s + 2) * (dec.s + 3) > 2 * dec.rho);
                }
            }
        }
    }
}

TEST_CASE("thm_alpha_a applies and respects the algorithm") {
    MultiplicitySequence ms = MultiplicitySequence::uniform(18, 2);
    SpecializationConfig cfg(18, 4, 10);
    const Int formula = thm_alpha_a(ms, cfg);
    CHECK(formula == 1 + std::min<Int>((20 + 3 - 1) / 4, 2 + 3 * 4));
    CHECK(formula <= alpha_lower_bound(ms, cfg).value);

    CHECK_THROWS_AS(thm_alpha_a(ms, SpecializationConfig(18, 4, 9)), precondition_error);
    CHECK_THROWS_AS(thm_alpha_a(ms, SpecializationConfig(18, 4, 17)), precondition_error);
    CHECK_THROWS_AS(
        thm_alpha_a(MultiplicitySequence(std::vector<Int>{5, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
                    SpecializationConfig(10, 3, 6)),
        precondition_error);
}

TEST_CASE("thm_tau_a golden values") {
    CHECK(thm_tau_a(MultiplicitySequence::uniform(33, 29), SpecializationConfig(33, 6, 33)) == 175);
    CHECK(thm_tau_a(MultiplicitySequence::uniform(119, 13), SpecializationConfig(119, 11, 119)) ==
          147);
    // d=5, r=n=18: value must dominate tau_c and the algorithm's bound
    MultiplicitySequence ms = MultiplicitySequence::uniform(18, 2);
    SpecializationConfig cfg(18, 5, 18);
    const Int v = thm_tau_a(ms, cfg);
    CHECK(v == 10);
    CHECK(v >= tau_c(18, 2));
    CHECK(v >= tau_upper_bound(ms, cfg).value);
    CHECK_THROWS_AS(thm_tau_a(ms, SpecializationConfig(18, 4, 17)), precondition_error);
}

TEST_CASE("thm_alpha_b golden values") {
    CHECK(thm_alpha_b(MultiplicitySequence::uniform(38, 16), SpecializationConfig(38, 6, 37)) ==
          101);
    CHECK(thm_alpha_b(MultiplicitySequence::uniform(1000, 13), SpecializationConfig(1000, 31, 981)) ==
          424);
    CHECK(thm_alpha_b(MultiplicitySequence::uniform(33, 29), SpecializationConfig(33, 5, 29)) ==
          165);
    // the alternative configuration: d=9, r=100 satisfies 2r >= n+d^2 with equality
    CHECK(thm_alpha_b(MultiplicitySequence::uniform(119, 13), SpecializationConfig(119, 9, 100)) ==
          144);
    CHECK_THROWS_AS(
        thm_alpha_b(MultiplicitySequence::uniform(38, 16), SpecializationConfig(38, 6, 36)),
        precondition_error);
}

TEST_CASE("thm_tau_b golden values") {
    CHECK(thm_tau_b(MultiplicitySequence::uniform(190, 100), SpecializationConfig(190, 13, 180)) ==
          1390);
    CHECK(thm_tau_b(MultiplicitySequence::uniform(38, 16), SpecializationConfig(38, 6, 37)) == 101);
    CHECK(thm_tau_b(MultiplicitySequence::uniform(119, 13), SpecializationConfig(119, 10, 111)) ==
          148);
    // tau(33;29) <= 170 via part (b) at (d=5, r=29)
    CHECK(thm_tau_b(MultiplicitySequence::uniform(33, 29), SpecializationConfig(33, 5, 29)) == 170);
}

TEST_CASE("uniform m=1 at n = r = d^2") {
    // part (a)(i) gives d and part (a)(ii) gives max(ceil((n+g-1)/d), d-2)
    for (Int d = 3; d <= 7; ++d) {
        const Int n = d * d;
        MultiplicitySequence ones = MultiplicitySequence::uniform(n, 1);
        SpecializationConfig cfg(n, d, n);
        Decomposition dec = decompose(ones, n, d);
        CHECK(dec.u == 0);
        CHECK(dec.rho == n);
        CHECK(dec.s == d - 1);
        CHECK(thm_alpha_a(ones, cfg) == d);
        CHECK(thm_tau_a(ones, cfg) ==
              std::max(ceil_div(n + genus(d) - 1, d), d - 2));
        CHECK(thm_alpha_a(ones, cfg) <= alpha_c(n, 1));
        CHECK(thm_tau_a(ones, cfg) >= tau_c(n, 1));
    }
}

TEST_CASE("thm_alpha_c golden values") {
    CHECK(thm_alpha_c(119, 13, SpecializationConfig(119, 10, 109)) == 146);
    CHECK(thm_alpha_c(33, 29, SpecializationConfig(33, 3, 17)) == 165);
    CHECK(thm_alpha_c(38, 16, SpecializationConfig(38, 6, 36)) == 98);
    CHECK_THROWS_AS(thm_alpha_c(38, 16, SpecializationConfig(38, 6, 20)), precondition_error);
    CHECK_THROWS_AS(thm_alpha_c(38, 16, SpecializationConfig(38, 3, 36)), precondition_error);
}

namespace {

// Random r-semiuniform sequence: first r entries from {m0, m0+1}, tail <= m0.
MultiplicitySequence random_semiuniform(std::mt19937_64& rng, Int n, Int r, Int m0) {
    const Int k = static_cast<Int>(rng() % static_cast<std::uint64_t>(r + 1));
    std::vector<Int> m(static_cast<std::size_t>(n));
    for (Int i = 0; i < n; ++i) {
        if (i < k) m[static_cast<std::size_t>(i)] = m0 + 1;
        else if (i < r) m[static_cast<std::size_t>(i)] = m0;
        else m[static_cast<std::size_t>(i)] = static_cast<Int>(rng() % static_cast<std::uint64_t>(m0 + 1));
    }
    return MultiplicitySequence(m);
}

} // namespace

TEST_CASE("formulas hold on nonuniform semiuniform sequences") {
    std::mt19937_64 rng(0xfeedface);
    int applied = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const Int n = 10 + static_cast<Int>(rng() % 15);
        const Int r = 1 + static_cast<Int>(rng() % n);
        const Int m0 = 1 + static_cast<Int>(rng() % 4);
        MultiplicitySequence ms = random_semiuniform(rng, n, r, m0);
        if (ms.all_zero()) continue;
        REQUIRE(is_semiuniform(ms, r));
        const Int ac = alpha_c(ms), tc = tau_c(ms);
        for (Int d = 1; d <= isqrt(n) + 2; ++d) {
            SpecializationConfig cfg(n, d, r);
            const Int alg_alpha = alpha_lower_bound(ms, cfg, TraceRetention::terminal_only).value;
            CHECK(alg_alpha <= ac);
            std::optional<Int> alg_tau;
            try {
                alg_tau = tau_upper_bound(ms, cfg, TraceRetention::terminal_only).value;
            } catch (const no_certificate_error&) {
            }
            if (alg_tau) CHECK(*alg_tau >= tc);
            auto try_alpha = [&](auto&& fn) {
                try {
                    const Int v = fn();
                    ++applied;
                    CHECK(v <= alg_alpha);
                    CHECK(v <= ac);
                } catch (const precondition_error&) {
                }
            };
            auto try_tau = [&](auto&& fn) {
                try {
                    const Int v = fn();
                    ++applied;
                    CHECK(v >= tc);
                    if (alg_tau) CHECK(v >= *alg_tau);
                    else CHECK(certify_tau(v, ms, cfg).certified);
                } catch (const precondition_error&) {
                }
            };
            try_alpha([&] { return thm_alpha_a(ms, cfg); });
            try_alpha([&] { return thm_alpha_b(ms, cfg); });
            try_tau([&] { return thm_tau_a(ms, cfg); });
            try_tau([&] { return thm_tau_b(ms, cfg); });
        }
    }
    CHECK(applied > 500); // the sampler must actually hit the formula windows
}

TEST_CASE("drift inequalities hold along nonuniform traces") {
    std::mt19937_64 rng(0xabad1dea);
    for (int iter = 0; iter < 300; ++iter) {
        const Int n = 10 + static_cast<Int>(rng() % 12);
        const Int r = 1 + static_cast<Int>(rng() % n);
        const Int m0 = 1 + static_cast<Int>(rng() % 3);
        MultiplicitySequence ms = random_semiuniform(rng, n, r, m0);
        for (Int d = 1; d <= isqrt(n) + 2; ++d) {
            SpecializationConfig cfg(n, d, r);
            const auto& tr = alpha_lower_bound(ms, cfg).trace;
            for (std::size_t j = 1; j < tr.size(); ++j) {
                if (r <= d * d) CHECK(tr[j].c_j <= tr[j - 1].c_j);
                if (2 * r >= n + d * d &&
                    tr[j - 1].divisor.mults[static_cast<std::size_t>(r - 1)] > 0)
                    CHECK(tr[j].c_j >= tr[j - 1].c_j);
            }
        }
    }
}

TEST_CASE("formula values bracket the algorithm on the grid") {
    // alpha formulas certify one t, the algorithm maximizes; tau formulas
    // are certified t's, the algorithm minimizes.
    for (Int n = 10; n <= 24; ++n) {
        for (Int m = 1; m <= 5; ++m) {
            MultiplicitySequence ms = MultiplicitySequence::uniform(n, m);
            const Int ac = alpha_c(n, m), tc = tau_c(n, m);
            for (Int d = 1; d <= isqrt(n) + 2; ++d) {
                for (Int r = 1; r <= n; ++r) {
                    SpecializationConfig cfg(n, d, r);
                    std::optional<Int> alg_alpha, alg_tau;
                    alg_alpha = alpha_lower_bound(ms, cfg, TraceRetention::terminal_only).value;
                    try {
                        alg_tau = tau_upper_bound(ms, cfg, TraceRetention::terminal_only).value;
                    } catch (const no_certificate_error&) {
                    }
                    CHECK(*alg_alpha <= ac);
                    if (alg_tau) CHECK(*alg_tau >= tc);

                    auto check_alpha = [&](auto&& fn) {
                        try {
                            Int v = fn();
                            CHECK(v <= *alg_alpha);
                            CHECK(v <= ac);
                        } catch (const precondition_error&) {
                        }
                    };
                    auto check_tau = [&](auto&& fn) {
                        try {
                            Int v = fn();
                            CHECK(v >= tc);
                            if (alg_tau) CHECK(v >= *alg_tau);
                            else CHECK(certify_tau(v, ms, cfg).certified);
                        } catch (const precondition_error&) {
                        }
                    };
                    check_alpha([&] { return thm_alpha_a(ms, cfg); });
                    check_alpha([&] { return thm_alpha_b(ms, cfg); });
                    check_alpha([&] { return thm_alpha_c(n, m, cfg); });
                    check_tau([&] { return thm_tau_a(ms, cfg); });
                    check_tau([&] { return thm_tau_b(ms, cfg); });
                }
            }
        }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "fatpoints/hilbert.hpp"

using namespace fatpoints;

TEST_CASE("expected hilbert values from the worked example") {
    CHECK(expected_hilbert(18, 2, 9) == 1);
    CHECK(expected_hilbert(18, 2, 10) == 12);
    CHECK(expected_hilbert(18, 2, 8) == 0);
    for (Int t = 0; t <= 6; ++t) CHECK(expected_hilbert(7, 0, t) == binom2(t + 2));
}

TEST_CASE("alpha_c and tau_c golden values") {
    CHECK(alpha_c(33, 29) == 168);
    CHECK(tau_c(33, 29) == 168);
    CHECK(alpha_c(1000, 13) == 426);
    CHECK(tau_c(190, 100) == 1384);
    CHECK(alpha_c(38, 16) == 101);
    CHECK(tau_c(38, 16) == 101);
    CHECK(alpha_c(119, 13) == 146);
    CHECK(tau_c(119, 13) == 146);
    CHECK(alpha_c(18, 2) == 9);
    CHECK(tau_c(18, 2) == 9);
    CHECK(alpha_c(7, 0) == 0);
    CHECK(tau_c(7, 0) == 0);
}

TEST_CASE("alpha_c is tau_c or tau_c + 1, split by exact equality") {
    for (Int n = 1; n <= 60; ++n) {
        for (Int m = 0; m <= 15; ++m) {
            const Int ac = alpha_c(n, m), tc = tau_c(n, m);
            CHECK((ac == tc || ac == tc + 1));
            const bool exact = binom2(tc + 2) == n * binom2(m + 1);
            CHECK(ac == tc + (exact ? 1 : 0));
        }
    }
}

TEST_CASE("general-sequence hilbert matches the uniform one") {
    MultiplicitySequence ms = MultiplicitySequence::uniform(18, 2);
    CHECK(alpha_c(ms) == 9);
    CHECK(tau_c(ms) == 9);
    CHECK(expected_hilbert(ms, 9) == 1);
    MultiplicitySequence mixed(std::vector<Int>{3, 1, 2});
    CHECK(condition_count(mixed) == 6 + 1 + 3);
}

TEST_CASE("conjectural resolution worked examples") {
    Resolution r = conjectural_resolution(18, 2);
    CHECK(r.alpha == 9);
    CHECK(r.a == 1);
    CHECK(r.b == 9);
    CHECK(r.c == 0);
    CHECK(r.dd == 9);

    r = conjectural_resolution(10, 1);
    CHECK(r.alpha == 4);
    CHECK(r.a == 5);
    CHECK(r.b == 0);
    CHECK(r.c == 4);
    CHECK(r.dd == 0);
}

TEST_CASE("resolution exponent invariants on the grid") {
    for (Int n = 10; n <= 40; ++n) {
        for (Int m = 1; m <= 12; ++m) {
            Resolution r = conjectural_resolution(n, m);
            CHECK(r.a >= 1);
            CHECK(r.b * r.c == 0);
            CHECK(r.dd == r.a + r.b - r.c - 1);
            CHECK(r.dd >= 0);
            CHECK(r.a == expected_hilbert(n, m, r.alpha));
            if (expected_hilbert(n, m, r.alpha + 1) == 3 * r.a) {
                CHECK(r.b == 0);
                CHECK(r.c == 0);
                CHECK(r.dd == r.a - 1);
            }
        }
    }
}

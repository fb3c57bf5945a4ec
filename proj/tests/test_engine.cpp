#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fatpoints/engine.hpp"

using namespace fatpoints;

namespace {

const MultiplicitySequence two18 = MultiplicitySequence::uniform(18, 2);
const SpecializationConfig ex24{18, 4, 17};

} // namespace

TEST_CASE("certify_alpha reproduces the worked example at t=8") {
    Certification c = certify_alpha(8, two18, ex24);
    REQUIRE(c.certified);
    REQUIRE(c.trace.size() == 3);
    CHECK(c.trace[0].criterion == Criterion::curve_h0_genus);
    CHECK(c.trace[0].c_j == -2);
    CHECK(c.trace[0].v_j == 34);
    CHECK(c.trace[1].criterion == Criterion::curve_h0_genus);
    // terminal divisor is -E_1 - E_2
    const DivisorClass& last = c.trace[2].divisor;
    CHECK(c.trace[2].criterion == Criterion::terminal_h0);
    CHECK(last.degree == 0);
    CHECK(last.mults[0] == 1);
    CHECK(last.mults[1] == 1);
    CHECK(last.mults[2] == 0);
}

TEST_CASE("certify_alpha fails at t=9 where L-E_1-E_2 blocks") {
    Certification c = certify_alpha(9, two18, ex24);
    REQUIRE_FALSE(c.certified);
    const TraceStep& last = c.trace.back();
    CHECK(last.criterion == Criterion::failed);
    CHECK(last.divisor.degree == 1);
    CHECK(last.divisor.mults[0] == 1);
    CHECK(last.divisor.mults[1] == 1);
}

TEST_CASE("certify_alpha with t=0 is vacuous for positive multiplicities") {
    MultiplicitySequence ms(std::vector<Int>{3, 1});
    CHECK(certify_alpha(0, ms, SpecializationConfig(2, 1, 1)).certified);
}

TEST_CASE("alpha_lower_bound golden values") {
    CHECK(alpha_lower_bound(two18, ex24).value == 9);
    CHECK(alpha_lower_bound(MultiplicitySequence::uniform(33, 29), SpecializationConfig(33, 4, 23))
              .value == 168);
    BoundCertificate zero =
        alpha_lower_bound(MultiplicitySequence::uniform(7, 0), SpecializationConfig(7, 2, 3));
    CHECK(zero.value == 0);
    CHECK(zero.t_witness == -1);
}

TEST_CASE("alpha certificate invariants") {
    BoundCertificate cert = alpha_lower_bound(two18, ex24);
    CHECK(cert.kind == BoundCertificate::Kind::alpha_lower);
    CHECK(cert.value == cert.t_witness + 1);
    REQUIRE_FALSE(cert.trace.empty());
    CHECK(cert.trace.back().criterion == Criterion::terminal_h0);
    for (const auto& st : cert.trace) {
        CHECK(st.t_j == st.divisor.degree);
        CHECK(st.v_j == st.t_j * ex24.d - st.c_j);
    }
}

TEST_CASE("certify_tau on the worked example") {
    CHECK(certify_tau(9, two18, ex24).certified);
    CHECK(certify_tau(100, two18, ex24).certified);
    CHECK_FALSE(certify_tau(8, two18, ex24).certified);
    // all-zero sequence: J = 0, vacuously certified for every t
    MultiplicitySequence zero = MultiplicitySequence::uniform(5, 0);
    SpecializationConfig cfg(5, 2, 3);
    for (Int t : {0, 1, 7}) {
        Certification c = certify_tau(t, zero, cfg);
        CHECK(c.certified);
        CHECK(c.trace.size() == 1);
        CHECK(c.trace[0].criterion == Criterion::terminal_h1);
    }
}

TEST_CASE("tau_upper_bound golden values") {
    CHECK(tau_upper_bound(two18, ex24).value == 9);
    CHECK(tau_upper_bound(MultiplicitySequence::uniform(33, 29), SpecializationConfig(33, 4, 23))
              .value == 169);
    CHECK(tau_upper_bound(MultiplicitySequence::uniform(119, 13), SpecializationConfig(119, 11, 119))
              .value == 147);
    // the trace bound at the uniform-window configuration
    CHECK(tau_upper_bound(MultiplicitySequence::uniform(38, 16), SpecializationConfig(38, 6, 36))
              .value == 103);
}

TEST_CASE("tau certificate ends in a terminal step") {
    BoundCertificate cert = tau_upper_bound(two18, ex24);
    CHECK(cert.kind == BoundCertificate::Kind::tau_upper);
    CHECK(cert.value == cert.t_witness);
    CHECK(cert.trace.back().criterion == Criterion::terminal_h1);
    BoundCertificate thin = tau_upper_bound(two18, ex24, TraceRetention::terminal_only);
    CHECK(thin.trace.size() == 1);
    CHECK(thin.trace.back().criterion == Criterion::terminal_h1);
}

TEST_CASE("tau_upper_bound reports hopeless configurations") {
    // a conic met in a single point drains multiplicity far too slowly:
    // certification would need t around 2*sum(m), beyond the scan cap
    CHECK_THROWS_AS(
        tau_upper_bound(MultiplicitySequence::uniform(18, 2), SpecializationConfig(18, 2, 1)),
        no_certificate_error);
    // the same sequence at (d=1, r=1) certifies late but within range
    CHECK(tau_upper_bound(MultiplicitySequence::uniform(18, 2), SpecializationConfig(18, 1, 1))
              .value == 35);
}

TEST_CASE("trace termination stays within the multiplicity budget") {
    for (Int n : {5, 12, 18}) {
        for (Int m : {1, 2, 4}) {
            MultiplicitySequence ms = MultiplicitySequence::uniform(n, m);
            for (Int d = 1; d <= 5; ++d) {
                for (Int r = 1; r <= n; r += 3) {
                    SpecializationConfig cfg(n, d, r);
                    Certification c = certify_alpha(m * d + 2, ms, cfg);
                    CHECK(static_cast<Int>(c.trace.size()) <= 1 + ms.total() + (m * d + 2) / d + 2);
                }
            }
        }
    }
}

TEST_CASE("monotone drift along traces (small-r and large-r regimes)") {
    for (Int n = 10; n <= 20; ++n) {
        for (Int m = 1; m <= 3; ++m) {
            MultiplicitySequence ms = MultiplicitySequence::uniform(n, m);
            for (Int d = 1; d <= isqrt(n) + 2; ++d) {
                for (Int r = 1; r <= n; ++r) {
                    SpecializationConfig cfg(n, d, r);
                    BoundCertificate cert = alpha_lower_bound(ms, cfg);
                    const auto& tr = cert.trace;
                    for (std::size_t j = 1; j < tr.size(); ++j) {
                        if (r <= d * d) CHECK(tr[j].c_j <= tr[j - 1].c_j);
                        if (2 * r >= n + d * d && tr[j - 1].divisor.mults[static_cast<std::size_t>(r - 1)] > 0)
                            CHECK(tr[j].c_j >= tr[j - 1].c_j);
                    }
                }
            }
        }
    }
}

TEST_CASE("exact rational window for uniform sequences") {
    // n (D_i.C - D_0.C) stays within [i(r^2-nd^2) - (rn-r^2), i(r^2-nd^2)]
    // for 0 <= i < omega' (the first all-zero step).
    for (Int n = 10; n <= 18; ++n) {
        for (Int m = 1; m <= 3; ++m) {
            for (Int d = 1; d <= isqrt(n) + 2; ++d) {
                for (Int r = 1; r <= n; ++r) {
                    SpecializationConfig cfg(n, d, r);
                    for (Int t : {Int(0), m * d, m * isqrt(n) + 2}) {
                        DivisorClass D = DivisorClass::from_mseq(t, MultiplicitySequence::uniform(n, m));
                        const Int c0 = intersect_curve(D, cfg);
                        for (Int i = 0; i < 1 + m * n; ++i) {
                            if (D.mults_all_zero()) break; // i == omega'
                            const Int ci = intersect_curve(D, cfg);
                            const Int mid = n * (ci - c0);
                            const Int slope = i * (r * r - n * d * d);
                            CHECK(slope - (r * n - r * r) <= mid);
                            CHECK(mid <= slope);
                            D = unload(subtract_curve(std::move(D), cfg));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("trace pretty printer format") {
    Certification c = certify_alpha(8, two18, ex24);
    std::ostringstream os;
    print_trace_step(os, c.trace[0]);
    CHECK(os.str() ==
          "D_0 = 8L - (2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2), D_j.C=-2, v_j=34, rule=CurveH0-genus");
}

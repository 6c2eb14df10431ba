#include "doctest.h"

#include <cmath>

#include "qpf/finder.hpp"

using namespace qpf;

TEST_CASE("hypothesize reads the candidate family off the profile") {
    const PeriodHypothesis unit = hypothesize(profile(Domain(3), 1));
    CHECK(unit.first_peak == 0);
    CHECK(unit.q_from_last == 0);
    CHECK(unit.candidates == std::vector<std::uint64_t>{1});

    const PeriodHypothesis three = hypothesize(profile(Domain(3), 3));
    CHECK(three.first_peak == 1);
    CHECK(three.q_from_last == 0);
    CHECK(three.candidates == std::vector<std::uint64_t>{3});

    const PeriodHypothesis twelve = hypothesize(profile(Domain(5), 12));
    CHECK(twelve.first_peak == 1);
    CHECK(twelve.q_from_last == 2);
    CHECK(twelve.candidates == std::vector<std::uint64_t>{12});

    MarginalProfile flat;
    flat.n = 4;
    flat.az.assign(4, 0.0);
    CHECK_THROWS_AS(hypothesize(flat), std::invalid_argument);
}

TEST_CASE("hypothesize brackets the true period for every r up to eight qubits") {
    for (int n = 1; n <= 8; ++n) {
        const Domain domain(n);
        for (std::uint64_t r = 1; r < domain.size; ++r) {
            const PeriodHypothesis hyp = hypothesize(profile(domain, r));
            const bool present =
                std::find(hyp.candidates.begin(), hyp.candidates.end(), r) !=
                hyp.candidates.end();
            CHECK(present);
        }
    }
}

TEST_CASE("secant_refine resolves candidates") {
    // Singleton list: no iteration needed.
    const MarginalProfile p3 = profile(Domain(3), 3);
    const FinderResult r3 = secant_refine(p3, hypothesize(p3));
    CHECK(r3.period == 3);
    CHECK(r3.iterations == 0);

    // Two candidates {5, 7}: nearest approximate marginal wins.
    const MarginalProfile p5 = profile(Domain(6), 5);
    const FinderResult r5 = secant_refine(p5, hypothesize(p5));
    CHECK(r5.period == 5);

    const MarginalProfile p1 = profile(Domain(4), 1);
    CHECK(secant_refine(p1, hypothesize(p1)).period == 1);

    // Four candidates {9, 11, 13, 15}: the secant iteration actually runs.
    const MarginalProfile p11 = profile(Domain(8), 11);
    const FinderResult r11 = secant_refine(p11, hypothesize(p11));
    CHECK(r11.period == 11);
    CHECK(r11.iterations >= 1);
    CHECK_FALSE(r11.trace.empty());
}

TEST_CASE("secant_refine validates its inputs") {
    const MarginalProfile p = profile(Domain(4), 3);
    PeriodHypothesis empty;
    empty.candidates.clear();
    CHECK_THROWS_AS(secant_refine(p, empty), std::invalid_argument);

    // Hand-built hypothesis pointing at a qubit without signal.
    PeriodHypothesis wrong;
    wrong.first_peak = 0;
    wrong.q_from_last = 1; // probe qubit n-2 has az = 0 below
    wrong.candidates = {2};
    MarginalProfile dead;
    dead.n = 4;
    dead.az = {0.5, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(secant_refine(dead, wrong), std::invalid_argument);
}

TEST_CASE("find_period end to end") {
    const FinderResult sawtooth21 =
        find_period(PeriodicFunction::sawtooth(Domain(6), 21), 6, 6);
    CHECK(sawtooth21.period == 21);
    CHECK(sawtooth21.qubits_used >= 6);

    const FinderResult modexp715 =
        find_period(PeriodicFunction::modexp(Domain(4), 7, 15), 4, 4);
    CHECK(modexp715.period == 4);

    const FinderResult tiny = find_period(PeriodicFunction::sawtooth(Domain(3), 2), 3, 3);
    CHECK(tiny.period == 2);
    CHECK(tiny.qubits_used == 4); // converges at the second register size

    CHECK_THROWS_AS(find_period(PeriodicFunction::sawtooth(Domain(6), 21), 4, 2),
                    std::invalid_argument); // 21 does not fit in 4 bits
}

TEST_CASE("find_period cross-validates through the full circuit") {
    const FinderResult full = find_period(PeriodicFunction::sawtooth(Domain(3), 5), 3, 3,
                                          ProfileMode::full_circuit);
    CHECK(full.period == 5);
    const FinderResult direct = find_period(PeriodicFunction::sawtooth(Domain(3), 5), 3, 3);
    CHECK(direct.period == 5);
}

TEST_CASE("find_period traces are deterministic") {
    const auto f = PeriodicFunction::modexp(Domain(4), 2, 15);
    const FinderResult a = find_period(f, 4, 4);
    const FinderResult b = find_period(f, 4, 4);
    CHECK(a.period == b.period);
    CHECK(a.iterations == b.iterations);
    CHECK(a.qubits_used == b.qubits_used);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) CHECK(a.trace[i] == b.trace[i]);
}

TEST_CASE("accuracy_sweep counts recovered periods") {
    const auto tiny = accuracy_sweep(3, {0});
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].total_periods == 7);
    CHECK(tiny[0].correct <= 7);
    CHECK(tiny[0].accuracy == doctest::Approx(tiny[0].correct / 7.0));

    const auto six = accuracy_sweep(6, {0, 6});
    REQUIRE(six.size() == 2);
    CHECK(six[0].total_periods == 63);
    CHECK(six[1].accuracy == 1.0);              // every period recovered at 2n qubits
    CHECK(six[1].accuracy >= six[0].accuracy); // adding qubits never hurts here

    const auto seven = accuracy_sweep(7, {0, 7});
    CHECK(seven[1].accuracy == 1.0);
    CHECK(seven[1].accuracy >= seven[0].accuracy);

    CHECK_THROWS_AS(accuracy_sweep(6, {30}), std::length_error);
    CHECK_THROWS_AS(accuracy_sweep(0, {1}), std::invalid_argument);
}

TEST_CASE("small-register sweeps recover the no-refinement families") {
    // Periods of the form 2^k and 3*2^k resolve from the hypothesis alone.
    const Domain domain(6);
    for (std::uint64_t r : {1, 2, 4, 8, 16, 32, 3, 6, 12, 24, 48}) {
        const MarginalProfile prof = profile(domain, r);
        const FinderResult res = secant_refine(prof, hypothesize(prof));
        CHECK(res.period == r);
        CHECK(res.iterations == 0);
    }
}

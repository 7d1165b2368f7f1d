#include "cwb/dovetail.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "cwb/enumerate.hpp"
#include "cwb/errors.hpp"

using namespace cwb;

namespace {

constexpr std::uint64_t kLoopIndex = 12;   // q0 1 P q0
constexpr std::uint64_t kEmptyLike = 24;   // q1 0 P q0: no q0 instruction, halts at once

bool replays(const HaltCertificate& cert) {
    const RunOutcome outcome = run(machine_at(cert.machine_index), {cert.input}, cert.steps);
    return outcome == RunOutcome{Halted{cert.output, cert.steps}};
}

}  // namespace

TEST_CASE("cantor_pair base cases and formula") {
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 2) == 8);  // (3*4)/2 + 2
    CHECK(cantor_pair(2, 1) == 7);
}

TEST_CASE("cantor roundtrip on an exhaustive grid") {
    for (std::uint64_t n = 0; n <= 300; ++n)
        for (std::uint64_t x = 0; x <= 300; ++x)
            CHECK(cantor_unpair(cantor_pair(n, x)) == std::pair{n, x});
}

TEST_CASE("cantor codes cover an initial segment bijectively") {
    std::set<std::uint64_t> codes;
    for (std::uint64_t n = 0; n < 40; ++n)
        for (std::uint64_t x = 0; x < 40; ++x) codes.insert(cantor_pair(n, x));
    CHECK(codes.size() == 1600);
    // Codes of the triangle n+x < 40 are exactly 0..819.
    std::set<std::uint64_t> triangle;
    for (std::uint64_t n = 0; n < 40; ++n)
        for (std::uint64_t x = 0; n + x < 40; ++x) triangle.insert(cantor_pair(n, x));
    CHECK(*triangle.rbegin() == 819);
    CHECK(triangle.size() == 820);
}

TEST_CASE("cantor_pair near the 64-bit boundary") {
    CHECK_THROWS_AS(cantor_pair(UINT64_MAX, UINT64_MAX), ResourceLimit);
    const std::uint64_t big = 2000000000;  // safely representable
    CHECK(cantor_unpair(cantor_pair(big, 3)) == std::pair{big, std::uint64_t{3}});
}

TEST_CASE("dovetail validates its arguments") {
    CHECK_THROWS_AS(dovetail(0), InvalidArgument);
    CHECK_THROWS_AS(dovetail(50, 10), ResourceLimit);
}

TEST_CASE("dovetail emissions are sound and deterministic") {
    const auto emissions = dovetail(25);
    CHECK(!emissions.empty());
    for (const auto& e : emissions) {
        CHECK(replays(e.certificate));
        // The first eligible round is exactly max(n, x, steps, 1).
        const std::uint64_t expected_round =
            std::max({e.certificate.machine_index, e.certificate.input, e.certificate.steps,
                      std::uint64_t{1}});
        CHECK(e.round == expected_round);
        // K as a set of codes: the certificate's code decodes to its pair.
        CHECK(cantor_unpair(pair_code(e.certificate)) ==
              std::pair{e.certificate.machine_index, e.certificate.input});
    }
    CHECK(emissions == dovetail(25));
}

TEST_CASE("dovetail emits each pair at most once, ordered by round then n then x") {
    const auto emissions = dovetail(20);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::size_t i = 0; i < emissions.size(); ++i) {
        const auto& e = emissions[i];
        CHECK(seen.emplace(e.certificate.machine_index, e.certificate.input).second);
        if (i > 0) {
            const auto& prev = emissions[i - 1];
            const auto key = [](const DovetailEmission& d) {
                return std::tuple(d.round, d.certificate.machine_index, d.certificate.input);
            };
            CHECK(key(prev) < key(e));
        }
    }
}

TEST_CASE("dovetail coverage: halting pairs within the grid are all certified") {
    const std::uint64_t rounds = 15;
    const auto emissions = dovetail(rounds);
    std::set<std::pair<std::uint64_t, std::uint64_t>> certified;
    for (const auto& e : emissions)
        certified.emplace(e.certificate.machine_index, e.certificate.input);
    // Independent exhaustive simulation of the full grid at full fuel.
    for (std::uint64_t n = 0; n <= rounds; ++n) {
        const Machine m = machine_at(n);
        for (std::uint64_t x = 0; x <= rounds; ++x) {
            const RunOutcome outcome = run(m, {x}, rounds);
            CHECK(std::holds_alternative<Halted>(outcome) == certified.contains({n, x}));
        }
    }
}

TEST_CASE("the empty-like machine is certified with steps 0 once the round covers it") {
    const auto emissions = dovetail(30);
    std::set<std::uint64_t> inputs_seen;
    for (const auto& e : emissions) {
        if (e.certificate.machine_index != kEmptyLike) continue;
        CHECK(e.certificate.steps == 0);
        CHECK(e.certificate.output == e.certificate.input);
        CHECK(e.round == std::max<std::uint64_t>(kEmptyLike, e.certificate.input));
        inputs_seen.insert(e.certificate.input);
    }
    CHECK(inputs_seen.size() == 31);  // every x <= rounds got its certificate
}

TEST_CASE("membership_in_K: loop machine stays Unknown") {
    for (std::uint64_t x : {1, 2, 3}) {
        const Verdict v = membership_in_K(kLoopIndex, x, 10000);
        CHECK(v == Verdict{Unknown{10000}});
    }
}

TEST_CASE("membership_in_K: empty-like machine halts instantly") {
    const Verdict v = membership_in_K(kEmptyLike, 7, 1);
    REQUIRE(std::holds_alternative<Halts>(v));
    const HaltCertificate cert = std::get<Halts>(v).certificate;
    CHECK(cert.steps == 0);
    CHECK(cert.output == 7);
    CHECK(replays(cert));
}

TEST_CASE("membership verdicts are fuel-monotone with identical certificates") {
    for (std::uint64_t n = 0; n < 40; ++n) {
        const Verdict low = membership_in_K(n, n, 20);
        if (const auto* halts = std::get_if<Halts>(&low)) {
            const Verdict high = membership_in_K(n, n, 2000);
            REQUIRE(std::holds_alternative<Halts>(high));
            CHECK(std::get<Halts>(high).certificate == halts->certificate);
        }
    }
}

TEST_CASE("audit refutes the constant-diverges decider") {
    const Decider always_diverges = [](std::uint64_t, std::uint64_t) {
        return Prediction::diverges;
    };
    const auto cx = audit_halting_heuristic(always_diverges, 200, 1000);
    REQUIRE(cx.has_value());
    CHECK(cx->n == cx->x);
    CHECK(replays(cx->evidence));
    // Machine 0 prints one 1 on blank input and halts: the very first
    // diagonal entry already refutes the decider.
    CHECK(cx->n == 0);
    CHECK(cx->evidence.steps == 1);
}

TEST_CASE("audit cannot refute the constant-converges decider") {
    const Decider always_converges = [](std::uint64_t, std::uint64_t) {
        return Prediction::converges;
    };
    CHECK_FALSE(audit_halting_heuristic(always_converges, 200, 1000).has_value());
}

TEST_CASE("audit catches the budget decider on a slow-but-halting machine") {
    // Machine 21 is q0 1 R q0: on input n it walks across n ones and halts
    // after n steps, so with budget 10 the diagonal entry n=21 is the first
    // false Diverges claim.
    CHECK(run(machine_at(21), {21}, 100) == RunOutcome{Halted{21, 21}});
    const auto cx = audit_halting_heuristic(make_budget_decider(10), 200, 100);
    REQUIRE(cx.has_value());
    CHECK(cx->n == 21);
    CHECK(cx->evidence.steps == 21);
    CHECK(replays(cx->evidence));
}

TEST_CASE("diagonal_value at the empty-like machine") {
    const DiagonalValue d = diagonal_value(kEmptyLike, 100);
    REQUIRE(d.value.has_value());
    CHECK(*d.value == kEmptyLike + 1);
}

TEST_CASE("diagonal_value at the loop machine is Unknown") {
    const DiagonalValue d = diagonal_value(kLoopIndex, 100000);
    CHECK_FALSE(d.value.has_value());
    CHECK(d.fuel_spent == 100000);
}

TEST_CASE("diagonal_value, when defined, exceeds f_n(n) by exactly one") {
    for (std::uint64_t n = 0; n < 60; ++n) {
        const DiagonalValue d = diagonal_value(n, 500);
        const RunOutcome outcome = run(machine_at(n), {n}, 500);
        if (const auto* halted = std::get_if<Halted>(&outcome)) {
            REQUIRE(d.value.has_value());
            CHECK(*d.value == halted->output + 1);
        } else {
            CHECK_FALSE(d.value.has_value());
        }
    }
}

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "cwb/tm.hpp"

namespace cwb {

// A replayable witness that machine `machine_index` halts on `input`:
// run(machine_at(machine_index), [input], steps) yields Halted{output, steps}.
struct HaltCertificate {
    std::uint64_t machine_index = 0;
    std::uint64_t input = 0;
    std::uint64_t steps = 0;
    std::uint64_t output = 0;

    friend bool operator==(const HaltCertificate&, const HaltCertificate&) = default;
};

// Cantor pairing (n+x)(n+x+1)/2 + x, the bijection N^2 <-> N. The halting
// set K is the set of pair codes of certified (n, x) pairs.
std::uint64_t cantor_pair(std::uint64_t n, std::uint64_t x);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t code);

// The certificate's membership code in K.
std::uint64_t pair_code(const HaltCertificate& certificate);

struct Halts {
    HaltCertificate certificate;

    friend bool operator==(const Halts&, const Halts&) = default;
};

// Never asserts divergence: the complement of the halting set has no
// effective listing, so "no" is not an expressible answer.
struct Unknown {
    std::uint64_t fuel_spent = 0;

    friend bool operator==(const Unknown&, const Unknown&) = default;
};

using Verdict = std::variant<Halts, Unknown>;

struct DovetailEmission {
    std::uint64_t round = 0;  // 1-based round in which the pair first halted
    HaltCertificate certificate;

    friend bool operator==(const DovetailEmission&, const DovetailEmission&) = default;
};

inline constexpr std::uint64_t kDefaultMaxRounds = 1000;

// Interleaved execution: round r runs machine n on input x with fuel r for
// all n <= r, x <= r, emitting a certificate the first round a pair halts.
// Emission order is by round, then n, then x. A pair halting in s steps is
// certified by round max(n, x, s, 1).
std::vector<DovetailEmission> dovetail(std::uint64_t rounds,
                                       std::uint64_t max_rounds = kDefaultMaxRounds);

// Fuel-bounded halting test for the pair (n, x); Halts carries a replayable
// certificate, Unknown reports the fuel spent.
Verdict membership_in_K(std::uint64_t n, std::uint64_t x, std::uint64_t fuel);

enum class Prediction { converges, diverges };

using Decider = std::function<Prediction(std::uint64_t, std::uint64_t)>;

struct Counterexample {
    std::uint64_t n = 0;
    std::uint64_t x = 0;
    HaltCertificate evidence;
};

// Cross-checks a claimed halting decider on the diagonal (n, n) for
// n <= search_limit: a Diverges claim refuted by a halt within
// refutation_fuel is returned as a counterexample. Absence of a
// counterexample never certifies the decider; Converges claims cannot be
// refuted with finite fuel at all.
std::optional<Counterexample> audit_halting_heuristic(const Decider& decider,
                                                      std::uint64_t search_limit,
                                                      std::uint64_t refutation_fuel);

// The decider that claims Converges exactly when the machine halts within
// the given fuel.
Decider make_budget_decider(std::uint64_t fuel);

struct DiagonalValue {
    std::optional<std::uint64_t> value;  // f_n(n)+1 when f_n(n) halted in budget
    std::uint64_t fuel_spent = 0;
};

// Evaluates f_n(n)+1 with the given fuel. Unknown (nullopt value) when the
// run does not halt in budget: the diagonal function is only partial.
DiagonalValue diagonal_value(std::uint64_t n, std::uint64_t fuel);

}  // namespace cwb

#include "cwb/dovetail.hpp"

#include <cmath>
#include <string>

#include "cwb/enumerate.hpp"
#include "cwb/errors.hpp"

namespace cwb {

namespace {

using u128 = unsigned __int128;

u128 isqrt(u128 v) {
    if (v == 0) return 0;
    auto x = static_cast<u128>(std::sqrt(static_cast<double>(v)));
    x += 2;  // start above the root so Newton descends
    for (;;) {
        const u128 next = (x + v / x) / 2;
        if (next >= x) break;
        x = next;
    }
    while (x * x > v) --x;
    return x;
}

}  // namespace

std::uint64_t cantor_pair(std::uint64_t n, std::uint64_t x) {
    const u128 s = static_cast<u128>(n) + x;
    const u128 code = s * (s + 1) / 2 + x;
    if (code > static_cast<u128>(UINT64_MAX))
        throw ResourceLimit("cantor_pair result does not fit in 64 bits");
    return static_cast<std::uint64_t>(code);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t code) {
    const u128 z = code;
    const u128 w = (isqrt(8 * z + 1) - 1) / 2;
    const u128 t = w * (w + 1) / 2;
    const auto x = static_cast<std::uint64_t>(z - t);
    const auto n = static_cast<std::uint64_t>(w) - x;
    return {n, x};
}

std::uint64_t pair_code(const HaltCertificate& certificate) {
    return cantor_pair(certificate.machine_index, certificate.input);
}

std::vector<DovetailEmission> dovetail(std::uint64_t rounds, std::uint64_t max_rounds) {
    if (rounds < 1) throw InvalidArgument("dovetail requires rounds >= 1");
    if (rounds > max_rounds)
        throw ResourceLimit("rounds " + std::to_string(rounds) + " exceeds cap " +
                            std::to_string(max_rounds));

    std::vector<Machine> machines;
    machines.reserve(rounds + 1);
    for (std::uint64_t n = 0; n <= rounds; ++n) machines.push_back(machine_at(n));

    const std::uint64_t side = rounds + 1;
    std::vector<bool> emitted(side * side, false);
    std::vector<DovetailEmission> emissions;
    for (std::uint64_t r = 1; r <= rounds; ++r) {
        for (std::uint64_t n = 0; n <= r; ++n) {
            for (std::uint64_t x = 0; x <= r; ++x) {
                if (emitted[n * side + x]) continue;
                const RunOutcome outcome = run(machines[n], {x}, r);
                if (const auto* halted = std::get_if<Halted>(&outcome)) {
                    emitted[n * side + x] = true;
                    emissions.push_back(
                        {r, HaltCertificate{n, x, halted->steps, halted->output}});
                }
            }
        }
    }
    return emissions;
}

Verdict membership_in_K(std::uint64_t n, std::uint64_t x, std::uint64_t fuel) {
    const Machine machine = machine_at(n);
    const RunOutcome outcome = run(machine, {x}, fuel);
    if (const auto* halted = std::get_if<Halted>(&outcome))
        return Halts{HaltCertificate{n, x, halted->steps, halted->output}};
    return Unknown{fuel};
}

std::optional<Counterexample> audit_halting_heuristic(const Decider& decider,
                                                      std::uint64_t search_limit,
                                                      std::uint64_t refutation_fuel) {
    for (std::uint64_t n = 0; n <= search_limit; ++n) {
        if (decider(n, n) != Prediction::diverges) continue;
        const Verdict verdict = membership_in_K(n, n, refutation_fuel);
        if (const auto* halts = std::get_if<Halts>(&verdict))
            return Counterexample{n, n, halts->certificate};
    }
    return std::nullopt;
}

Decider make_budget_decider(std::uint64_t fuel) {
    return [fuel](std::uint64_t n, std::uint64_t x) {
        const RunOutcome outcome = run(machine_at(n), {x}, fuel);
        return std::holds_alternative<Halted>(outcome) ? Prediction::converges
                                                       : Prediction::diverges;
    };
}

DiagonalValue diagonal_value(std::uint64_t n, std::uint64_t fuel) {
    const RunOutcome outcome = run(machine_at(n), {n}, fuel);
    if (const auto* halted = std::get_if<Halted>(&outcome))
        return DiagonalValue{halted->output + 1, fuel};
    return DiagonalValue{std::nullopt, fuel};
}

}  // namespace cwb

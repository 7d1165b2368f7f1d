#include "cwb/enumerate.hpp"

#include <string>

#include "cwb/errors.hpp"

namespace cwb {

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

BigInt int_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) result *= base;
    return result;
}

// A quadruple factors into a slot (state_in, symbol_in) and a variant
// (action, state_out). Determinism forces distinct slots, so a machine's
// ascending quadruple list has strictly increasing slots; a machine is an
// increasing slot sequence plus one variant per slot.
Quadruple quadruple_from(std::uint64_t slot, std::uint64_t variant, std::uint64_t states) {
    Quadruple q;
    q.state_in = static_cast<std::uint32_t>(slot / 2);
    q.symbol_in = static_cast<std::uint8_t>(slot % 2);
    q.action = static_cast<Action>(variant / states);
    q.state_out = static_cast<std::uint32_t>(variant % states);
    return q;
}

Machine unrank_in_group(std::uint64_t k, BigInt offset) {
    const std::uint64_t states = 2 * k + 1;
    const std::uint64_t slots = 2 * states;
    const std::uint64_t variants = 4 * states;

    Machine machine;
    machine.quadruples.reserve(k);
    std::uint64_t next_slot = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t remaining = k - 1 - i;
        for (std::uint64_t slot = next_slot; slot < slots; ++slot) {
            // Completions once this position is fixed to (slot, v): later
            // quadruples pick `remaining` slots above `slot`, any variants.
            const BigInt per_variant =
                binomial(slots - 1 - slot, remaining) * int_pow(variants, remaining);
            const BigInt slot_block = per_variant * variants;
            if (offset >= slot_block) {
                offset -= slot_block;
                continue;
            }
            const auto variant = static_cast<std::uint64_t>(offset / per_variant);
            offset %= per_variant;
            machine.quadruples.push_back(quadruple_from(slot, variant, states));
            next_slot = slot + 1;
            break;
        }
    }
    return machine;
}

}  // namespace

BigInt group_size(std::uint64_t k) {
    const std::uint64_t states = 2 * k + 1;
    return binomial(2 * states, k) * int_pow(4 * states, k);
}

Machine machine_at(std::uint64_t index, std::uint64_t budget) {
    if (index >= budget)
        throw ResourceLimit("machine index " + std::to_string(index) +
                            " exceeds generation budget " + std::to_string(budget));
    BigInt offset = index;
    for (std::uint64_t k = 1;; ++k) {
        const BigInt size = group_size(k);
        if (offset < size) return unrank_in_group(k, offset);
        offset -= size;
    }
}

std::vector<Machine> enumerate_prefix(std::uint64_t count, std::uint64_t budget) {
    if (count > budget)
        throw ResourceLimit("prefix length " + std::to_string(count) +
                            " exceeds generation budget " + std::to_string(budget));
    std::vector<Machine> machines;
    machines.reserve(count);
    for (std::uint64_t n = 0; n < count; ++n) machines.push_back(machine_at(n, budget));
    return machines;
}

}  // namespace cwb

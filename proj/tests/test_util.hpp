#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cwb/tm.hpp"

namespace cwb::test {

// Random deterministic machines over small alphabets, for property tests.
inline Machine random_machine(std::mt19937_64& rng, std::uint32_t max_states = 5,
                              std::size_t max_quadruples = 6) {
    std::uniform_int_distribution<std::uint32_t> state_dist(0, max_states - 1);
    std::uniform_int_distribution<int> symbol_dist(0, 1);
    std::uniform_int_distribution<int> action_dist(0, 3);
    std::uniform_int_distribution<std::size_t> count_dist(0, max_quadruples);

    Machine machine;
    std::set<std::pair<std::uint32_t, std::uint8_t>> used;
    const std::size_t count = count_dist(rng);
    for (std::size_t i = 0; i < count; ++i) {
        Quadruple q;
        q.state_in = state_dist(rng);
        q.symbol_in = static_cast<std::uint8_t>(symbol_dist(rng));
        if (!used.emplace(q.state_in, q.symbol_in).second) continue;
        q.action = static_cast<Action>(action_dist(rng));
        q.state_out = state_dist(rng);
        machine.quadruples.push_back(q);
    }
    return machine;
}

}  // namespace cwb::test

#pragma once

#include <cstdint>
#include <vector>

#include "cwb/bigint.hpp"
#include "cwb/tm.hpp"

namespace cwb {

// The canonical machine stream, 0-based. Machines are grouped by quadruple
// count k = 1, 2, ...; group k draws states from {q0..q_2k} and symbols from
// {0,1}. Within a group, a machine is its ascending quadruple list and
// machines are ordered lexicographically by that list, with quadruples
// compared as (state_in, symbol_in, action, state_out) tuples under
// P < E < L < R and state index order.

inline constexpr std::uint64_t kDefaultGenerationBudget = 1000000;

// Number of deterministic k-quadruple machines in group k.
BigInt group_size(std::uint64_t k);

// The machine at a given stream index. Deterministic across runs and
// platforms. Throws ResourceLimit when index >= budget.
Machine machine_at(std::uint64_t index, std::uint64_t budget = kDefaultGenerationBudget);

// Machines at indices 0..count-1. Throws ResourceLimit when count > budget.
std::vector<Machine> enumerate_prefix(std::uint64_t count,
                                      std::uint64_t budget = kDefaultGenerationBudget);

}  // namespace cwb

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cwb {

// Decimal digits of pi after the point; digits[i] is position i+1 of the
// expansion (1-based positions, integer part "3" excluded). Every digit
// within `precision` is guaranteed correct.
struct DigitStream {
    std::vector<std::uint8_t> digits;
    std::uint64_t precision = 0;
};

inline constexpr std::uint64_t kDefaultPrecisionCap = 1000000;

// First `count` decimal digits of pi after the point, computed with a
// Machin arctangent series over exact integers and 12 guard digits.
// Throws ResourceLimit when count exceeds the cap.
DigitStream pi_digits(std::uint64_t count, std::uint64_t cap = kDefaultPrecisionCap);

// 1-based position of the first digit of the first run of at least x
// consecutive 5s within digits 1..digit_limit, or nullopt when no such run
// completes inside the limit (which never claims one does not exist).
// Throws InvalidArgument for x = 0 and ResourceLimit past the cap.
std::optional<std::uint64_t> run_position(std::uint64_t x, std::uint64_t digit_limit,
                                          std::uint64_t cap = kDefaultPrecisionCap);

}  // namespace cwb

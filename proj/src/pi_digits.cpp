#include "cwb/pi_digits.hpp"

#include <string>

#include "cwb/bigint.hpp"
#include "cwb/errors.hpp"

namespace cwb {

namespace {

constexpr std::uint64_t kGuardDigits = 12;

// arctan(1/x) * scale, truncated. Error is below the number of series terms,
// which the guard digits absorb.
BigInt scaled_arctan_inverse(std::uint64_t x, const BigInt& scale) {
    const BigInt x_squared = BigInt(x) * x;
    BigInt power = scale / x;
    BigInt total = power;
    for (std::uint64_t i = 1; power != 0; ++i) {
        power /= x_squared;
        const BigInt term = power / (2 * i + 1);
        if (i % 2 == 1)
            total -= term;
        else
            total += term;
    }
    return total;
}

}  // namespace

DigitStream pi_digits(std::uint64_t count, std::uint64_t cap) {
    if (count > cap)
        throw ResourceLimit("requested " + std::to_string(count) +
                            " digits, precision cap is " + std::to_string(cap));
    DigitStream stream;
    stream.precision = count;
    if (count == 0) return stream;

    // Machin: pi = 16*arctan(1/5) - 4*arctan(1/239).
    BigInt scale = 1;
    for (std::uint64_t i = 0; i < count + kGuardDigits; ++i) scale *= 10;
    const BigInt pi_scaled =
        16 * scaled_arctan_inverse(5, scale) - 4 * scaled_arctan_inverse(239, scale);

    BigInt guard = 1;
    for (std::uint64_t i = 0; i < kGuardDigits; ++i) guard *= 10;
    const std::string text = BigInt(pi_scaled / guard).str();  // "3" + count digits

    stream.digits.reserve(count);
    for (std::size_t i = 1; i < text.size(); ++i)
        stream.digits.push_back(static_cast<std::uint8_t>(text[i] - '0'));
    return stream;
}

std::optional<std::uint64_t> run_position(std::uint64_t x, std::uint64_t digit_limit,
                                          std::uint64_t cap) {
    if (x == 0) throw InvalidArgument("run length x must be at least 1");
    const DigitStream stream = pi_digits(digit_limit, cap);

    std::uint64_t run_start = 0;  // 1-based; 0 = not in a run
    std::uint64_t run_length = 0;
    for (std::uint64_t pos = 1; pos <= stream.digits.size(); ++pos) {
        if (stream.digits[pos - 1] == 5) {
            if (run_length == 0) run_start = pos;
            if (++run_length >= x) return run_start;
        } else {
            run_length = 0;
        }
    }
    return std::nullopt;
}

}  // namespace cwb

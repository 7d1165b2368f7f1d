#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cwb {

// One tape operation. The declared order P < E < L < R is load-bearing: it
// fixes the canonical quadruple ordering used by the enumerator.
enum class Action : std::uint8_t { print1 = 0, erase = 1, move_left = 2, move_right = 3 };

char action_letter(Action a);

// One machine instruction: in state `state_in` reading `symbol_in`, perform
// `action` and switch to `state_out`.
struct Quadruple {
    std::uint32_t state_in = 0;
    std::uint8_t symbol_in = 0;  // 0 or 1
    Action action = Action::print1;
    std::uint32_t state_out = 0;

    // Member order gives exactly the canonical lexicographic quadruple order.
    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

// A deterministic machine: no two quadruples share (state_in, symbol_in).
// The empty machine is legal and halts immediately on every input.
struct Machine {
    std::vector<Quadruple> quadruples;
    std::string name;  // optional label, ignored by execution
};

// State q0, head position, and the finite set of cells holding symbol 1.
struct Configuration {
    std::uint32_t state = 0;
    std::set<std::int64_t> ones;
    std::int64_t head = 0;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct Halted {
    std::uint64_t output = 0;  // count of 1s on the final tape
    std::uint64_t steps = 0;   // quadruples applied before halting

    friend bool operator==(const Halted&, const Halted&) = default;
};

struct Exhausted {
    std::uint64_t fuel = 0;  // the budget that ran out

    friend bool operator==(const Exhausted&, const Exhausted&) = default;
};

using RunOutcome = std::variant<Halted, Exhausted>;

// Parses the machine file format: one `<state> <symbol> <action> <state>`
// quadruple per line, `#` comments and blank lines ignored. Validates
// determinism. Throws SyntaxError or DeterminismError.
Machine parse_machine(std::string_view text);

// Serializes back to the machine file format, one quadruple per line.
std::string machine_to_text(const Machine& machine);

// Throws DeterminismError if two quadruples share (state_in, symbol_in).
void validate_determinism(const Machine& machine);

// Builds the initial configuration for the given arguments: each argument x
// becomes a block of x consecutive 1s, blocks separated by a single 0 cell.
// Head at cell 0, state q0. The list must be non-empty; arguments may be 0.
Configuration encode_input(const std::vector<std::uint64_t>& args);

// Applies the unique matching quadruple, or returns nullopt (halt signal).
std::optional<Configuration> step(const Machine& machine, const Configuration& config);

// Runs the machine on the encoded input for at most `fuel` applied
// quadruples. Detecting the halt signal consumes no fuel, so a machine that
// halts after exactly `fuel` steps still reports Halted.
RunOutcome run(const Machine& machine, const std::vector<std::uint64_t>& input,
               std::uint64_t fuel);

inline constexpr std::uint64_t kDefaultTraceCap = 100000;

// Configuration sequence visited: the initial configuration plus one entry
// per applied step, at most fuel+1 entries. Throws TraceCapExceeded when
// fuel exceeds the cap.
std::vector<Configuration> trace(const Machine& machine,
                                 const std::vector<std::uint64_t>& input, std::uint64_t fuel,
                                 std::uint64_t cap = kDefaultTraceCap);

// "step=<n> state=<q> head=<i> ones=<sorted comma-separated cells>"
std::string format_trace_line(std::uint64_t step_index, const Configuration& config);

}  // namespace cwb

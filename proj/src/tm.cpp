#include "cwb/tm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "cwb/errors.hpp"

namespace cwb {

char action_letter(Action a) {
    switch (a) {
        case Action::print1: return 'P';
        case Action::erase: return 'E';
        case Action::move_left: return 'L';
        case Action::move_right: return 'R';
    }
    throw InvalidArgument("invalid action value");
}

namespace {

std::uint32_t parse_state_token(std::string_view tok, std::uint64_t line_no) {
    if (tok.size() < 2 || tok[0] != 'q')
        throw SyntaxError("line " + std::to_string(line_no) + ": bad state token '" +
                          std::string(tok) + "' (expected q<digits>)");
    std::uint32_t value = 0;
    const char* first = tok.data() + 1;
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw SyntaxError("line " + std::to_string(line_no) + ": bad state token '" +
                          std::string(tok) + "'");
    return value;
}

Action parse_action_token(std::string_view tok, std::uint64_t line_no) {
    if (tok.size() == 1) {
        switch (tok[0]) {
            case 'P': return Action::print1;
            case 'E': return Action::erase;
            case 'L': return Action::move_left;
            case 'R': return Action::move_right;
            default: break;
        }
    }
    throw SyntaxError("line " + std::to_string(line_no) + ": unknown action '" +
                      std::string(tok) + "' (expected P, E, L or R)");
}

std::uint8_t parse_symbol_token(std::string_view tok, std::uint64_t line_no) {
    if (tok == "0") return 0;
    if (tok == "1") return 1;
    throw SyntaxError("line " + std::to_string(line_no) + ": bad symbol '" + std::string(tok) +
                      "' (expected 0 or 1)");
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

const Quadruple* find_quadruple(const Machine& m, std::uint32_t state, std::uint8_t symbol) {
    for (const Quadruple& q : m.quadruples)
        if (q.state_in == state && q.symbol_in == symbol) return &q;
    return nullptr;
}

std::uint8_t cell_value(const Configuration& c) {
    return c.ones.contains(c.head) ? 1 : 0;
}

void apply(const Quadruple& q, Configuration& c) {
    switch (q.action) {
        case Action::print1: c.ones.insert(c.head); break;  // printing over a 1 is a no-op
        case Action::erase: c.ones.erase(c.head); break;
        case Action::move_left: --c.head; break;
        case Action::move_right: ++c.head; break;
    }
    c.state = q.state_out;
}

}  // namespace

Machine parse_machine(std::string_view text) {
    Machine machine;
    std::uint64_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0].front() == '#') continue;
        if (tokens.size() != 4)
            throw SyntaxError("line " + std::to_string(line_no) + ": expected 4 tokens, got " +
                              std::to_string(tokens.size()));
        Quadruple q;
        q.state_in = parse_state_token(tokens[0], line_no);
        q.symbol_in = parse_symbol_token(tokens[1], line_no);
        q.action = parse_action_token(tokens[2], line_no);
        q.state_out = parse_state_token(tokens[3], line_no);
        machine.quadruples.push_back(q);
    }
    validate_determinism(machine);
    return machine;
}

std::string machine_to_text(const Machine& machine) {
    std::string out;
    for (const Quadruple& q : machine.quadruples) {
        out += 'q';
        out += std::to_string(q.state_in);
        out += ' ';
        out += static_cast<char>('0' + q.symbol_in);
        out += ' ';
        out += action_letter(q.action);
        out += " q";
        out += std::to_string(q.state_out);
        out += '\n';
    }
    return out;
}

void validate_determinism(const Machine& machine) {
    std::set<std::pair<std::uint32_t, std::uint8_t>> seen;
    for (const Quadruple& q : machine.quadruples) {
        if (q.symbol_in > 1)
            throw SyntaxError("symbol must be 0 or 1");
        if (!seen.emplace(q.state_in, q.symbol_in).second)
            throw DeterminismError(q.state_in, q.symbol_in);
    }
}

Configuration encode_input(const std::vector<std::uint64_t>& args) {
    if (args.empty()) throw InvalidArgument("encode_input requires at least one argument");
    Configuration config;
    std::int64_t cell = 0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) ++cell;  // single 0 separator between blocks
        for (std::uint64_t j = 0; j < args[i]; ++j) config.ones.insert(cell++);
    }
    return config;
}

std::optional<Configuration> step(const Machine& machine, const Configuration& config) {
    const Quadruple* q = find_quadruple(machine, config.state, cell_value(config));
    if (!q) return std::nullopt;
    Configuration next = config;
    apply(*q, next);
    return next;
}

RunOutcome run(const Machine& machine, const std::vector<std::uint64_t>& input,
               std::uint64_t fuel) {
    Configuration config = encode_input(input);

    // Dense dispatch table keyed by state*2+symbol; falls back to a scan for
    // machines naming very large state ids.
    std::uint32_t max_state = 0;
    for (const Quadruple& q : machine.quadruples) max_state = std::max(max_state, q.state_in);
    std::vector<const Quadruple*> table;
    const bool use_table = machine.quadruples.empty() || max_state < (1u << 20);
    if (use_table) {
        table.assign(2 * (static_cast<std::size_t>(max_state) + 1), nullptr);
        for (const Quadruple& q : machine.quadruples)
            table[2 * static_cast<std::size_t>(q.state_in) + q.symbol_in] = &q;
    }

    std::uint64_t steps = 0;
    for (;;) {
        const std::uint8_t symbol = cell_value(config);
        const Quadruple* q =
            use_table ? (config.state <= max_state ? table[2 * config.state + symbol] : nullptr)
                      : find_quadruple(machine, config.state, symbol);
        if (!q) return Halted{config.ones.size(), steps};
        if (steps == fuel) return Exhausted{fuel};
        apply(*q, config);
        ++steps;
    }
}

std::vector<Configuration> trace(const Machine& machine,
                                 const std::vector<std::uint64_t>& input, std::uint64_t fuel,
                                 std::uint64_t cap) {
    if (fuel > cap)
        throw TraceCapExceeded("trace fuel " + std::to_string(fuel) + " exceeds cap " +
                               std::to_string(cap));
    std::vector<Configuration> configs;
    configs.push_back(encode_input(input));
    for (std::uint64_t i = 0; i < fuel; ++i) {
        auto next = step(machine, configs.back());
        if (!next) break;
        configs.push_back(std::move(*next));
    }
    return configs;
}

std::string format_trace_line(std::uint64_t step_index, const Configuration& config) {
    std::ostringstream out;
    out << "step=" << step_index << " state=q" << config.state << " head=" << config.head
        << " ones=";
    bool first = true;
    for (std::int64_t cell : config.ones) {
        if (!first) out << ',';
        out << cell;
        first = false;
    }
    return out.str();
}

}  // namespace cwb

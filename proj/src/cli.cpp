#include "cwb/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "cwb/diophantine.hpp"
#include "cwb/dovetail.hpp"
#include "cwb/enumerate.hpp"
#include "cwb/errors.hpp"
#include "cwb/pi_digits.hpp"
#include "cwb/primrec.hpp"
#include "cwb/tm.hpp"

namespace cwb {

namespace {

constexpr const char* kVersion = "0.1.0";

std::vector<std::uint64_t> parse_nat_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw InvalidArgument("empty entry in list '" + text + "'");
        values.push_back(std::stoull(item));
    }
    if (values.empty()) throw InvalidArgument("expected a comma-separated list, got '" + text + "'");
    return values;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Writes to the --out path when given, else to stdout.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw InvalidArgument("cannot open output file: " + path);
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int cmd_tm_run(const std::string& machine_path, const std::string& input_list,
               std::uint64_t fuel) {
    const Machine machine = parse_machine(read_file(machine_path));
    const RunOutcome outcome = run(machine, parse_nat_list(input_list), fuel);
    if (const auto* halted = std::get_if<Halted>(&outcome)) {
        std::cout << "halted output=" << halted->output << " steps=" << halted->steps << "\n";
        return kExitDefinite;
    }
    std::cout << "exhausted fuel=" << std::get<Exhausted>(outcome).fuel << "\n";
    return kExitUnknown;
}

int cmd_tm_trace(const std::string& machine_path, const std::string& input_list,
                 std::uint64_t fuel, std::uint64_t cap, const std::string& out_path) {
    const Machine machine = parse_machine(read_file(machine_path));
    const auto input = parse_nat_list(input_list);
    const auto configs = trace(machine, input, fuel, cap);
    OutputSink sink(out_path);
    for (std::size_t i = 0; i < configs.size(); ++i)
        sink.stream() << format_trace_line(i, configs[i]) << "\n";
    // Definite when the machine actually halted within fuel.
    const bool halted = !step(machine, configs.back()).has_value();
    return halted ? kExitDefinite : kExitUnknown;
}

int cmd_enumerate(std::uint64_t count, const std::string& format, std::uint64_t budget,
                  const std::string& out_path) {
    if (format != "text") throw InvalidArgument("unsupported format: " + format);
    const auto machines = enumerate_prefix(count, budget);
    OutputSink sink(out_path);
    for (std::size_t i = 0; i < machines.size(); ++i) {
        if (i > 0) sink.stream() << "---\n";
        sink.stream() << machine_to_text(machines[i]);
    }
    return kExitDefinite;
}

int cmd_dovetail(std::uint64_t rounds, std::uint64_t max_rounds, const std::string& out_path) {
    const auto emissions = dovetail(rounds, max_rounds);
    OutputSink sink(out_path);
    sink.stream() << "round,n,x,steps,output\n";
    for (const DovetailEmission& e : emissions)
        sink.stream() << e.round << ',' << e.certificate.machine_index << ','
                      << e.certificate.input << ',' << e.certificate.steps << ','
                      << e.certificate.output << "\n";
    return kExitDefinite;
}

Decider decider_from_spec(const std::string& spec, std::uint64_t& default_refutation_fuel) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    if (head == "budget") {
        if (colon == std::string::npos)
            throw InvalidArgument("budget decider needs a fuel value, e.g. budget:1000");
        const std::uint64_t fuel = std::stoull(spec.substr(colon + 1));
        default_refutation_fuel = 10 * fuel;
        return make_budget_decider(fuel);
    }
    if (spec == "const:diverges")
        return [](std::uint64_t, std::uint64_t) { return Prediction::diverges; };
    if (spec == "const:converges")
        return [](std::uint64_t, std::uint64_t) { return Prediction::converges; };
    throw InvalidArgument("unknown decider spec: " + spec);
}

int cmd_audit(const std::string& decider_spec, std::uint64_t limit,
              std::optional<std::uint64_t> refutation_fuel) {
    std::uint64_t fuel = 1000;
    const Decider decider = decider_from_spec(decider_spec, fuel);
    if (refutation_fuel) fuel = *refutation_fuel;
    const auto counterexample = audit_halting_heuristic(decider, limit, fuel);
    if (counterexample) {
        std::cout << "counterexample n=" << counterexample->n << " x=" << counterexample->x
                  << " steps=" << counterexample->evidence.steps
                  << " output=" << counterexample->evidence.output << "\n";
        return kExitDefinite;
    }
    std::cout << "no counterexample found limit=" << limit << " refutation-fuel=" << fuel
              << "\n";
    return kExitUnknown;
}

int cmd_primrec_eval(const std::string& expr_text, const std::string& args_list,
                     std::uint64_t budget) {
    const ExprPtr expr = parse_primrec(expr_text);
    std::vector<BigInt> args;
    if (!args_list.empty())
        for (std::uint64_t v : parse_nat_list(args_list)) args.emplace_back(v);
    const auto value = eval(expr, args, budget);
    if (value) {
        std::cout << "value=" << value->str() << "\n";
        return kExitDefinite;
    }
    std::cout << "budget exhausted budget=" << budget << "\n";
    return kExitUnknown;
}

int cmd_dio_solve(const std::string& expr, std::uint64_t bound, const std::string& domain_name,
                  std::uint64_t step_cap, const std::string& out_path) {
    Domain domain;
    if (domain_name == "nat")
        domain = Domain::naturals;
    else if (domain_name == "int")
        domain = Domain::integers;
    else
        throw InvalidArgument("domain must be nat or int, got '" + domain_name + "'");

    const Polynomial p = parse_polynomial(expr);
    OutputSink sink(out_path);

    std::optional<std::vector<BigInt>> linear_witness;
    if (p.degree() <= 1) {
        const SearchResult lin = solve_linear(p, domain);
        if (const auto* no = std::get_if<DecidedUnsolvable>(&lin)) {
            sink.stream() << "unsolvable: " << no->reason << "\n";
            return kExitDefinite;
        }
        if (const auto* yes = std::get_if<DecidedSolvable>(&lin)) linear_witness = yes->witness;
    }

    const auto write_header = [&] {
        for (std::size_t i = 0; i < p.variables().size(); ++i)
            sink.stream() << (i ? "," : "") << p.variables()[i];
        sink.stream() << "\n";
    };
    const auto write_row = [&](const std::vector<BigInt>& point) {
        for (std::size_t i = 0; i < point.size(); ++i)
            sink.stream() << (i ? "," : "") << point[i].str();
        sink.stream() << "\n";
    };

    if (p.variable_count() == 0) {
        // No variables at all: solvable iff the constant is zero.
        if (p.is_zero()) {
            sink.stream() << "solvable: the zero polynomial\n";
            return kExitDefinite;
        }
        sink.stream() << "unsolvable: constant term " << p.constant_term().str()
                      << " is nonzero\n";
        return kExitDefinite;
    }

    const SearchResult result = search_box(p, bound, domain, step_cap);
    if (const auto* no = std::get_if<DecidedUnsolvable>(&result)) {
        sink.stream() << "unsolvable: " << no->reason << "\n";
        return kExitDefinite;
    }
    if (const auto* box = std::get_if<AllSolutionsInBox>(&result)) {
        write_header();
        for (const auto& solution : box->solutions) write_row(solution);
        return kExitDefinite;
    }
    if (linear_witness) {
        // Solvable, but every solution lies outside the box.
        sink.stream() << "solvable beyond bound=" << bound << "\n";
        write_header();
        write_row(*linear_witness);
        return kExitDefinite;
    }
    sink.stream() << "unknown beyond bound=" << bound << "\n";
    return kExitUnknown;
}

int cmd_pi_run(std::uint64_t x, std::uint64_t limit, std::uint64_t cap) {
    const auto position = run_position(x, limit, cap);
    if (position) {
        std::cout << "position=" << *position << "\n";
        return kExitDefinite;
    }
    std::cout << "unknown beyond " << limit << "\n";
    return kExitUnknown;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"cwb: a desk-scale computability workbench"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // tm-run
    auto* tm_run_cmd = app.add_subcommand("tm-run", "Run a machine file on an input");
    std::string machine_path, input_list = "0";
    std::uint64_t fuel = 1000000;
    tm_run_cmd->add_option("--machine", machine_path, "machine file")->required();
    tm_run_cmd->add_option("--input", input_list, "comma-separated natural arguments");
    tm_run_cmd->add_option("--fuel", fuel, "step budget (default 1000000)");

    // tm-trace
    auto* tm_trace_cmd = app.add_subcommand("tm-trace", "Print the configuration sequence");
    std::string trace_machine, trace_input = "0", trace_out;
    std::uint64_t trace_fuel = 100, trace_cap = kDefaultTraceCap;
    tm_trace_cmd->add_option("--machine", trace_machine, "machine file")->required();
    tm_trace_cmd->add_option("--input", trace_input, "comma-separated natural arguments");
    tm_trace_cmd->add_option("--fuel", trace_fuel, "step budget (default 100)");
    tm_trace_cmd->add_option("--trace-cap", trace_cap, "maximum traceable fuel");
    tm_trace_cmd->add_option("--out", trace_out, "output path (default stdout)");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "Dump a prefix of the machine stream");
    std::uint64_t enum_count = 10, enum_budget = kDefaultGenerationBudget;
    std::string enum_format = "text", enum_out;
    enum_cmd->add_option("--count", enum_count, "number of machines (default 10)");
    enum_cmd->add_option("--format", enum_format, "output format (text)");
    enum_cmd->add_option("--budget", enum_budget, "generation budget");
    enum_cmd->add_option("--out", enum_out, "output path (default stdout)");

    // dovetail
    auto* dove_cmd = app.add_subcommand("dovetail", "Enumerate halting certificates");
    std::uint64_t rounds = 10, max_rounds = kDefaultMaxRounds;
    std::string dove_out;
    dove_cmd->add_option("--rounds", rounds, "dovetail rounds (default 10)");
    dove_cmd->add_option("--max-rounds", max_rounds, "rounds cap");
    dove_cmd->add_option("--out", dove_out, "CSV output path (default stdout)");

    // audit
    auto* audit_cmd = app.add_subcommand("audit", "Cross-check a halting decider");
    std::string decider_spec = "budget:100";
    std::uint64_t audit_limit = 100;
    std::optional<std::uint64_t> audit_fuel;
    audit_cmd->add_option("--decider", decider_spec,
                          "budget:<fuel>, const:diverges or const:converges");
    audit_cmd->add_option("--limit", audit_limit, "diagonal search limit (default 100)");
    audit_cmd->add_option("--refutation-fuel", audit_fuel,
                          "fuel for refutation runs (default 10x budget)");

    // primrec-eval
    auto* pr_cmd = app.add_subcommand("primrec-eval", "Evaluate a primitive recursive term");
    std::string pr_expr, pr_args;
    std::uint64_t pr_budget = kDefaultEvalBudget;
    pr_cmd->add_option("--expr", pr_expr, "term, e.g. comp(S; P[1,1])")->required();
    pr_cmd->add_option("--args", pr_args, "comma-separated natural arguments");
    pr_cmd->add_option("--budget", pr_budget, "recursion unfolding budget");

    // dio-solve
    auto* dio_cmd = app.add_subcommand("dio-solve", "Solve or search a Diophantine equation");
    std::string dio_expr, dio_domain = "nat", dio_out;
    std::uint64_t dio_bound = 100, dio_cap = kDefaultBoxStepCap;
    dio_cmd->add_option("--expr", dio_expr, "polynomial, e.g. \"x1^2 - x2^2 - 3\"")->required();
    dio_cmd->add_option("--bound", dio_bound, "box bound (default 100)");
    dio_cmd->add_option("--domain", dio_domain, "nat or int (default nat)");
    dio_cmd->add_option("--step-cap", dio_cap, "box size cap");
    dio_cmd->add_option("--out", dio_out, "CSV output path (default stdout)");

    // pi-run
    auto* pi_cmd = app.add_subcommand("pi-run", "Find a run of 5s in the digits of pi");
    std::uint64_t pi_x = 1, pi_limit = 10000, pi_cap = kDefaultPrecisionCap;
    pi_cmd->add_option("--x", pi_x, "run length (default 1)");
    pi_cmd->add_option("--limit", pi_limit, "digits to scan (default 10000)");
    pi_cmd->add_option("--precision-cap", pi_cap, "digit generation cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitDefinite : kExitError;
    }

    try {
        if (tm_run_cmd->parsed()) return cmd_tm_run(machine_path, input_list, fuel);
        if (tm_trace_cmd->parsed())
            return cmd_tm_trace(trace_machine, trace_input, trace_fuel, trace_cap, trace_out);
        if (enum_cmd->parsed())
            return cmd_enumerate(enum_count, enum_format, enum_budget, enum_out);
        if (dove_cmd->parsed()) return cmd_dovetail(rounds, max_rounds, dove_out);
        if (audit_cmd->parsed()) return cmd_audit(decider_spec, audit_limit, audit_fuel);
        if (pr_cmd->parsed()) return cmd_primrec_eval(pr_expr, pr_args, pr_budget);
        if (dio_cmd->parsed())
            return cmd_dio_solve(dio_expr, dio_bound, dio_domain, dio_cap, dio_out);
        if (pi_cmd->parsed()) return cmd_pi_run(pi_x, pi_limit, pi_cap);
        std::cerr << "no subcommand given\n";
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace cwb

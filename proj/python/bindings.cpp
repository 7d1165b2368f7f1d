#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cwb/diophantine.hpp"
#include "cwb/dovetail.hpp"
#include "cwb/enumerate.hpp"
#include "cwb/errors.hpp"
#include "cwb/pi_digits.hpp"
#include "cwb/primrec.hpp"
#include "cwb/tm.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// cwb::BigInt <-> Python int, via decimal strings.
template <>
struct type_caster<cwb::BigInt> {
    PYBIND11_TYPE_CASTER(cwb::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = cwb::BigInt(static_cast<std::string>(py::str(src)));
        return true;
    }

    static handle cast(const cwb::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

std::string outcome_repr(const cwb::RunOutcome& outcome) {
    if (const auto* h = std::get_if<cwb::Halted>(&outcome))
        return "Halted(output=" + std::to_string(h->output) +
               ", steps=" + std::to_string(h->steps) + ")";
    return "Exhausted(fuel=" + std::to_string(std::get<cwb::Exhausted>(outcome).fuel) + ")";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Turing machines, machine enumeration, dovetailing, primitive recursion, "
              "Diophantine search and digits of pi";

    // Base first: translators run newest-first, so the specific types below
    // must be registered after the catch-all.
    py::register_exception<cwb::Error>(m, "WorkbenchError");
    py::register_exception<cwb::SyntaxError>(m, "MachineSyntaxError");
    py::register_exception<cwb::DeterminismError>(m, "DeterminismError");
    py::register_exception<cwb::TraceCapExceeded>(m, "TraceCapExceeded");
    py::register_exception<cwb::ResourceLimit>(m, "ResourceLimit");
    py::register_exception<cwb::IllFormedExpr>(m, "IllFormedExpr");
    py::register_exception<cwb::ArityMismatch>(m, "ArityMismatch");

    // --- machines ---
    py::enum_<cwb::Action>(m, "Action")
        .value("PRINT1", cwb::Action::print1)
        .value("ERASE", cwb::Action::erase)
        .value("MOVE_LEFT", cwb::Action::move_left)
        .value("MOVE_RIGHT", cwb::Action::move_right);

    py::class_<cwb::Quadruple>(m, "Quadruple")
        .def(py::init<std::uint32_t, std::uint8_t, cwb::Action, std::uint32_t>(),
             py::arg("state_in"), py::arg("symbol_in"), py::arg("action"),
             py::arg("state_out"))
        .def_readonly("state_in", &cwb::Quadruple::state_in)
        .def_readonly("symbol_in", &cwb::Quadruple::symbol_in)
        .def_readonly("action", &cwb::Quadruple::action)
        .def_readonly("state_out", &cwb::Quadruple::state_out)
        .def(py::self == py::self)
        .def("__repr__", [](const cwb::Quadruple& q) {
            return "Quadruple(q" + std::to_string(q.state_in) + " " +
                   std::to_string(q.symbol_in) + " " + cwb::action_letter(q.action) + " q" +
                   std::to_string(q.state_out) + ")";
        });

    py::class_<cwb::Machine>(m, "Machine")
        .def_readonly("quadruples", &cwb::Machine::quadruples)
        .def_readonly("name", &cwb::Machine::name)
        .def("__repr__", [](const cwb::Machine& mach) {
            return "Machine(" + std::to_string(mach.quadruples.size()) + " quadruples)";
        });

    py::class_<cwb::Configuration>(m, "Configuration")
        .def_readonly("state", &cwb::Configuration::state)
        .def_readonly("head", &cwb::Configuration::head)
        .def_property_readonly("ones",
                               [](const cwb::Configuration& c) {
                                   return std::vector<std::int64_t>(c.ones.begin(),
                                                                    c.ones.end());
                               })
        .def(py::self == py::self);

    py::class_<cwb::Halted>(m, "Halted")
        .def_readonly("output", &cwb::Halted::output)
        .def_readonly("steps", &cwb::Halted::steps)
        .def("__repr__", [](const cwb::Halted& h) { return outcome_repr(h); });

    py::class_<cwb::Exhausted>(m, "Exhausted")
        .def_readonly("fuel", &cwb::Exhausted::fuel)
        .def("__repr__", [](const cwb::Exhausted& e) { return outcome_repr(e); });

    m.def("parse_machine", &cwb::parse_machine, py::arg("text"));
    m.def("machine_to_text", &cwb::machine_to_text, py::arg("machine"));
    m.def("encode_input", &cwb::encode_input, py::arg("args"));
    m.def("step", &cwb::step, py::arg("machine"), py::arg("config"));
    m.def("run", &cwb::run, py::arg("machine"), py::arg("input"), py::arg("fuel"));
    m.def("trace", &cwb::trace, py::arg("machine"), py::arg("input"), py::arg("fuel"),
          py::arg("cap") = cwb::kDefaultTraceCap);

    // --- enumeration ---
    m.def("machine_at", &cwb::machine_at, py::arg("index"),
          py::arg("budget") = cwb::kDefaultGenerationBudget);
    m.def("enumerate_prefix", &cwb::enumerate_prefix, py::arg("count"),
          py::arg("budget") = cwb::kDefaultGenerationBudget);
    m.def("group_size",
          [](std::uint64_t k) { return cwb::BigInt(cwb::group_size(k)); },
          py::arg("k"));

    // --- dovetailing ---
    py::class_<cwb::HaltCertificate>(m, "HaltCertificate")
        .def_readonly("machine_index", &cwb::HaltCertificate::machine_index)
        .def_readonly("input", &cwb::HaltCertificate::input)
        .def_readonly("steps", &cwb::HaltCertificate::steps)
        .def_readonly("output", &cwb::HaltCertificate::output)
        .def_property_readonly("pair_code",
                               [](const cwb::HaltCertificate& c) { return cwb::pair_code(c); })
        .def("__repr__", [](const cwb::HaltCertificate& c) {
            return "HaltCertificate(n=" + std::to_string(c.machine_index) +
                   ", x=" + std::to_string(c.input) + ", steps=" + std::to_string(c.steps) +
                   ", output=" + std::to_string(c.output) + ")";
        });

    py::class_<cwb::DovetailEmission>(m, "DovetailEmission")
        .def_readonly("round", &cwb::DovetailEmission::round)
        .def_readonly("certificate", &cwb::DovetailEmission::certificate);

    py::class_<cwb::Halts>(m, "Halts").def_readonly("certificate", &cwb::Halts::certificate);
    py::class_<cwb::Unknown>(m, "Unknown")
        .def_readonly("fuel_spent", &cwb::Unknown::fuel_spent);

    py::enum_<cwb::Prediction>(m, "Prediction")
        .value("CONVERGES", cwb::Prediction::converges)
        .value("DIVERGES", cwb::Prediction::diverges);

    py::class_<cwb::Counterexample>(m, "Counterexample")
        .def_readonly("n", &cwb::Counterexample::n)
        .def_readonly("x", &cwb::Counterexample::x)
        .def_readonly("evidence", &cwb::Counterexample::evidence);

    py::class_<cwb::DiagonalValue>(m, "DiagonalValue")
        .def_readonly("value", &cwb::DiagonalValue::value)
        .def_readonly("fuel_spent", &cwb::DiagonalValue::fuel_spent);

    m.def("cantor_pair", &cwb::cantor_pair, py::arg("n"), py::arg("x"));
    m.def("cantor_unpair", &cwb::cantor_unpair, py::arg("code"));
    m.def("dovetail", &cwb::dovetail, py::arg("rounds"),
          py::arg("max_rounds") = cwb::kDefaultMaxRounds);
    m.def("membership_in_K", &cwb::membership_in_K, py::arg("n"), py::arg("x"),
          py::arg("fuel"));
    m.def("audit_halting_heuristic", &cwb::audit_halting_heuristic, py::arg("decider"),
          py::arg("search_limit"), py::arg("refutation_fuel"));
    m.def("make_budget_decider", &cwb::make_budget_decider, py::arg("fuel"));
    m.def("diagonal_value", &cwb::diagonal_value, py::arg("n"), py::arg("fuel"));

    // --- primitive recursion ---
    py::class_<cwb::PrimRecExpr, std::shared_ptr<cwb::PrimRecExpr>>(m, "PrimRecExpr")
        .def_property_readonly("arity", &cwb::PrimRecExpr::arity);

    m.def("constant", &cwb::constant, py::arg("arity"), py::arg("value"));
    m.def("successor", &cwb::successor);
    m.def("projection", &cwb::projection, py::arg("arity"), py::arg("index"));
    m.def("compose", &cwb::compose, py::arg("outer"), py::arg("inners"));
    m.def("recurse", &cwb::recurse, py::arg("base"), py::arg("step"));
    m.def("add_expr", &cwb::add_expr);
    m.def("mul_expr", &cwb::mul_expr);
    m.def("parse_primrec", &cwb::parse_primrec, py::arg("text"));
    m.def("eval_primrec", &cwb::eval, py::arg("expr"), py::arg("args"),
          py::arg("budget") = cwb::kDefaultEvalBudget);
    m.def("polynomial_to_primrec", &cwb::polynomial_to_primrec, py::arg("polynomial"));

    // --- Diophantine ---
    py::enum_<cwb::Domain>(m, "Domain")
        .value("NATURALS", cwb::Domain::naturals)
        .value("INTEGERS", cwb::Domain::integers);

    py::class_<cwb::Polynomial>(m, "Polynomial")
        .def_property_readonly("variables", &cwb::Polynomial::variables)
        .def_property_readonly("degree", &cwb::Polynomial::degree)
        .def("evaluate", &cwb::Polynomial::evaluate, py::arg("point"))
        .def("__repr__", [](const cwb::Polynomial& p) {
            return "Polynomial(" + std::to_string(p.variable_count()) + " variables, " +
                   std::to_string(p.terms().size()) + " terms)";
        });

    py::class_<cwb::AllSolutionsInBox>(m, "AllSolutionsInBox")
        .def_readonly("solutions", &cwb::AllSolutionsInBox::solutions)
        .def_readonly("bound", &cwb::AllSolutionsInBox::bound);
    py::class_<cwb::DecidedSolvable>(m, "DecidedSolvable")
        .def_readonly("witness", &cwb::DecidedSolvable::witness);
    py::class_<cwb::DecidedUnsolvable>(m, "DecidedUnsolvable")
        .def_readonly("reason", &cwb::DecidedUnsolvable::reason);
    py::class_<cwb::UnknownBeyondBound>(m, "UnknownBeyondBound")
        .def_readonly("bound", &cwb::UnknownBeyondBound::bound);

    m.def("parse_polynomial", &cwb::parse_polynomial, py::arg("text"));
    m.def("solve_linear", &cwb::solve_linear, py::arg("polynomial"),
          py::arg("domain") = cwb::Domain::naturals);
    m.def("search_box", &cwb::search_box, py::arg("polynomial"), py::arg("bound"),
          py::arg("domain") = cwb::Domain::naturals,
          py::arg("step_cap") = cwb::kDefaultBoxStepCap);

    // --- pi ---
    py::class_<cwb::DigitStream>(m, "DigitStream")
        .def_property_readonly("digits",
                               [](const cwb::DigitStream& s) {
                                   return std::vector<int>(s.digits.begin(), s.digits.end());
                               })
        .def_readonly("precision", &cwb::DigitStream::precision);

    m.def("pi_digits", &cwb::pi_digits, py::arg("count"),
          py::arg("cap") = cwb::kDefaultPrecisionCap);
    m.def("run_position", &cwb::run_position, py::arg("x"), py::arg("digit_limit"),
          py::arg("cap") = cwb::kDefaultPrecisionCap);
}

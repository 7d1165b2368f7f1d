#include "cwb/primrec.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <utility>

#include "cwb/diophantine.hpp"
#include "cwb/errors.hpp"

namespace cwb {

ExprPtr constant(std::uint64_t arity, BigInt value) {
    if (value < 0) throw IllFormedExpr("constant value must be a natural number");
    std::shared_ptr<PrimRecExpr> node(new PrimRecExpr());
    node->kind_ = PrimRecExpr::Kind::constant;
    node->arity_ = arity;
    node->value_ = std::move(value);
    return node;
}

ExprPtr successor() {
    static const ExprPtr node = [] {
        std::shared_ptr<PrimRecExpr> n(new PrimRecExpr());
        n->kind_ = PrimRecExpr::Kind::successor;
        n->arity_ = 1;
        return n;
    }();
    return node;
}

ExprPtr projection(std::uint64_t arity, std::uint64_t index) {
    if (index < 1 || index > arity)
        throw IllFormedExpr("projection index " + std::to_string(index) +
                            " outside [1, " + std::to_string(arity) + "]");
    std::shared_ptr<PrimRecExpr> node(new PrimRecExpr());
    node->kind_ = PrimRecExpr::Kind::projection;
    node->arity_ = arity;
    node->index_ = index;
    return node;
}

ExprPtr compose(ExprPtr outer, std::vector<ExprPtr> inners) {
    if (!outer) throw IllFormedExpr("compose: null outer expression");
    if (inners.empty()) throw IllFormedExpr("compose requires at least one inner expression");
    for (const auto& inner : inners)
        if (!inner) throw IllFormedExpr("compose: null inner expression");
    const std::uint64_t shared_arity = inners.front()->arity();
    for (const auto& inner : inners)
        if (inner->arity() != shared_arity)
            throw IllFormedExpr("compose: inner arities differ (" +
                                std::to_string(shared_arity) + " vs " +
                                std::to_string(inner->arity()) + ")");
    if (outer->arity() != inners.size())
        throw IllFormedExpr("compose: outer arity " + std::to_string(outer->arity()) +
                            " != inner count " + std::to_string(inners.size()));
    std::shared_ptr<PrimRecExpr> node(new PrimRecExpr());
    node->kind_ = PrimRecExpr::Kind::compose;
    node->arity_ = shared_arity;
    node->outer_ = std::move(outer);
    node->inners_ = std::move(inners);
    return node;
}

ExprPtr recurse(ExprPtr base, ExprPtr step) {
    if (!base || !step) throw IllFormedExpr("recurse: null subexpression");
    if (step->arity() != base->arity() + 2)
        throw IllFormedExpr("recurse: step arity " + std::to_string(step->arity()) +
                            " != base arity " + std::to_string(base->arity()) + " + 2");
    std::shared_ptr<PrimRecExpr> node(new PrimRecExpr());
    node->kind_ = PrimRecExpr::Kind::recurse;
    node->arity_ = base->arity() + 1;
    node->base_ = std::move(base);
    node->step_ = std::move(step);
    return node;
}

std::uint64_t arity(const ExprPtr& e) {
    if (!e) throw IllFormedExpr("null expression");
    return e->arity();
}

namespace {

struct Budget {
    std::uint64_t remaining;
};

// Returns false when the Rec-unfolding budget runs out.
bool eval_node(const PrimRecExpr& e, const std::vector<BigInt>& args, Budget& budget,
               BigInt& out) {
    switch (e.kind()) {
        case PrimRecExpr::Kind::constant:
            out = e.value();
            return true;
        case PrimRecExpr::Kind::successor:
            out = args[0] + 1;
            return true;
        case PrimRecExpr::Kind::projection:
            out = args[e.index() - 1];
            return true;
        case PrimRecExpr::Kind::compose: {
            std::vector<BigInt> results(e.inners().size());
            for (std::size_t i = 0; i < e.inners().size(); ++i)
                if (!eval_node(*e.inners()[i], args, budget, results[i])) return false;
            return eval_node(*e.outer(), results, budget, out);
        }
        case PrimRecExpr::Kind::recurse: {
            const BigInt& n = args[0];
            std::vector<BigInt> rest(args.begin() + 1, args.end());
            BigInt acc;
            if (!eval_node(*e.base(), rest, budget, acc)) return false;
            std::vector<BigInt> step_args(rest.size() + 2);
            for (std::size_t i = 0; i < rest.size(); ++i) step_args[i + 2] = rest[i];
            for (BigInt i = 0; i < n; ++i) {
                if (budget.remaining == 0) return false;
                --budget.remaining;
                step_args[0] = i;
                step_args[1] = acc;
                if (!eval_node(*e.step(), step_args, budget, acc)) return false;
            }
            out = std::move(acc);
            return true;
        }
    }
    throw IllFormedExpr("invalid expression kind");
}

}  // namespace

std::optional<BigInt> eval(const ExprPtr& e, const std::vector<BigInt>& args,
                           std::uint64_t budget) {
    if (!e) throw IllFormedExpr("null expression");
    if (args.size() != e->arity())
        throw ArityMismatch("expected " + std::to_string(e->arity()) + " arguments, got " +
                            std::to_string(args.size()));
    for (const BigInt& a : args)
        if (a < 0) throw InvalidArgument("arguments must be natural numbers");
    Budget b{budget};
    BigInt out;
    if (!eval_node(*e, args, b, out)) return std::nullopt;
    return out;
}

ExprPtr add_expr() {
    // add(u, v): add(0, v) = v; add(n+1, v) = S(add(n, v)).
    static const ExprPtr node =
        recurse(projection(1, 1), compose(successor(), {projection(3, 2)}));
    return node;
}

ExprPtr mul_expr() {
    // mul(u, v): mul(0, v) = 0; mul(n+1, v) = add(mul(n, v), v).
    static const ExprPtr node = recurse(
        constant(1, 0), compose(add_expr(), {projection(3, 2), projection(3, 3)}));
    return node;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw SyntaxError("expected '" + std::string(1, c) + "' at offset " +
                              std::to_string(pos));
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
};

std::uint64_t parse_nat(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
        ++cur.pos;
    if (cur.pos == start)
        throw SyntaxError("expected a natural number at offset " + std::to_string(start));
    std::uint64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(cur.text.data() + start, cur.text.data() + cur.pos, value);
    if (ec != std::errc{}) throw SyntaxError("number too large at offset " + std::to_string(start));
    (void)ptr;
    return value;
}

bool match_keyword(Cursor& cur, std::string_view word) {
    cur.skip_ws();
    if (cur.text.substr(cur.pos, word.size()) != word) return false;
    cur.pos += word.size();
    return true;
}

ExprPtr parse_expr(Cursor& cur) {
    cur.skip_ws();
    if (match_keyword(cur, "comp")) {
        cur.expect('(');
        ExprPtr outer = parse_expr(cur);
        cur.expect(';');
        std::vector<ExprPtr> inners;
        inners.push_back(parse_expr(cur));
        while (cur.eat(',')) inners.push_back(parse_expr(cur));
        cur.expect(')');
        return compose(std::move(outer), std::move(inners));
    }
    if (match_keyword(cur, "rec")) {
        cur.expect('(');
        ExprPtr base = parse_expr(cur);
        cur.expect(';');
        ExprPtr step = parse_expr(cur);
        cur.expect(')');
        return recurse(std::move(base), std::move(step));
    }
    if (match_keyword(cur, "C")) {
        cur.expect('[');
        std::uint64_t k = parse_nat(cur);
        cur.expect(',');
        std::uint64_t c = parse_nat(cur);
        cur.expect(']');
        return constant(k, BigInt(c));
    }
    if (match_keyword(cur, "P")) {
        cur.expect('[');
        std::uint64_t k = parse_nat(cur);
        cur.expect(',');
        std::uint64_t i = parse_nat(cur);
        cur.expect(']');
        return projection(k, i);
    }
    if (match_keyword(cur, "S")) return successor();
    throw SyntaxError("expected an expression at offset " + std::to_string(cur.pos));
}

}  // namespace

ExprPtr parse_primrec(std::string_view text) {
    Cursor cur{text};
    ExprPtr e = parse_expr(cur);
    cur.skip_ws();
    if (cur.pos != text.size())
        throw SyntaxError("trailing input at offset " + std::to_string(cur.pos));
    return e;
}

ExprPtr polynomial_to_primrec(const Polynomial& p) {
    for (const auto& [exps, coeff] : p.terms())
        if (coeff < 0)
            throw UnsupportedCoefficient("coefficient " + coeff.str() +
                                         " is negative; only natural coefficients convert");

    const std::uint64_t k = p.variable_count();
    if (k == 0) return constant(0, p.constant_term());

    const auto wrap_const = [k](const BigInt& c) { return constant(k, c); };
    const auto sum = [](ExprPtr a, ExprPtr b) {
        return compose(add_expr(), {std::move(a), std::move(b)});
    };
    const auto product = [](ExprPtr a, ExprPtr b) {
        return compose(mul_expr(), {std::move(a), std::move(b)});
    };

    ExprPtr total;
    for (const auto& [exps, coeff] : p.terms()) {
        // Build c * x1^e1 * ... right-associated with the coefficient
        // innermost: mul's cost is driven by its first argument, so the
        // small projection values go first.
        ExprPtr term = wrap_const(coeff);
        for (std::size_t v = exps.size(); v-- > 0;)
            for (std::uint32_t e = 0; e < exps[v]; ++e)
                term = product(projection(k, v + 1), std::move(term));
        total = total ? sum(std::move(total), std::move(term)) : std::move(term);
    }
    return total ? total : wrap_const(0);
}

}  // namespace cwb

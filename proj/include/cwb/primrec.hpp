#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "cwb/bigint.hpp"

namespace cwb {

class Polynomial;

// Immutable primitive recursive function term. Ill-formed combinations are
// unrepresentable: the factory functions validate arities and throw
// IllFormedExpr, so every reachable node carries a definite arity.
class PrimRecExpr {
public:
    enum class Kind { constant, successor, projection, compose, recurse };

    Kind kind() const { return kind_; }
    std::uint64_t arity() const { return arity_; }

    const BigInt& value() const { return value_; }          // constant
    std::uint64_t index() const { return index_; }          // projection, 1-based
    const std::shared_ptr<const PrimRecExpr>& outer() const { return outer_; }
    const std::vector<std::shared_ptr<const PrimRecExpr>>& inners() const { return inners_; }
    const std::shared_ptr<const PrimRecExpr>& base() const { return base_; }
    const std::shared_ptr<const PrimRecExpr>& step() const { return step_; }

private:
    friend std::shared_ptr<const PrimRecExpr> constant(std::uint64_t, BigInt);
    friend std::shared_ptr<const PrimRecExpr> successor();
    friend std::shared_ptr<const PrimRecExpr> projection(std::uint64_t, std::uint64_t);
    friend std::shared_ptr<const PrimRecExpr> compose(
        std::shared_ptr<const PrimRecExpr>,
        std::vector<std::shared_ptr<const PrimRecExpr>>);
    friend std::shared_ptr<const PrimRecExpr> recurse(std::shared_ptr<const PrimRecExpr>,
                                                      std::shared_ptr<const PrimRecExpr>);

    PrimRecExpr() = default;

    Kind kind_ = Kind::successor;
    std::uint64_t arity_ = 1;
    BigInt value_;
    std::uint64_t index_ = 0;
    std::shared_ptr<const PrimRecExpr> outer_;
    std::vector<std::shared_ptr<const PrimRecExpr>> inners_;
    std::shared_ptr<const PrimRecExpr> base_;
    std::shared_ptr<const PrimRecExpr> step_;
};

using ExprPtr = std::shared_ptr<const PrimRecExpr>;

// f(x1..xk) = c
ExprPtr constant(std::uint64_t arity, BigInt value);
// f(x) = x + 1
ExprPtr successor();
// f(x1..xk) = xi, 1 <= i <= k
ExprPtr projection(std::uint64_t arity, std::uint64_t index);
// f(x..) = outer(inner1(x..), ..., innerm(x..)); all inners share one arity,
// outer's arity equals the inner count.
ExprPtr compose(ExprPtr outer, std::vector<ExprPtr> inners);
// f(0, x..) = base(x..); f(n+1, x..) = step(n, f(n, x..), x..).
// Recursion variable first; base arity k gives step arity k+2 and f arity k+1.
ExprPtr recurse(ExprPtr base, ExprPtr step);

std::uint64_t arity(const ExprPtr& e);

inline constexpr std::uint64_t kDefaultEvalBudget = 100000000;

// Evaluates on natural arguments. The budget counts Rec unfoldings (the only
// unbounded work); nullopt signals budget exhaustion, never divergence.
// Throws ArityMismatch when args.size() != arity(e).
std::optional<BigInt> eval(const ExprPtr& e, const std::vector<BigInt>& args,
                           std::uint64_t budget = kDefaultEvalBudget);

// add(u, v) = u + v and mul(u, v) = u * v, built from the base functions.
ExprPtr add_expr();
ExprPtr mul_expr();

// Expression syntax: C[k,c], S, P[k,i], comp(outer; in1, in2, ...),
// rec(base; step). Whitespace-insensitive.
ExprPtr parse_primrec(std::string_view text);

// A term for a natural-coefficient polynomial: eval agrees with direct
// polynomial evaluation on all natural points. Throws UnsupportedCoefficient
// on negative coefficients.
ExprPtr polynomial_to_primrec(const Polynomial& p);

}  // namespace cwb

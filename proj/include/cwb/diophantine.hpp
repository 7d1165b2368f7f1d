#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cwb/bigint.hpp"

namespace cwb {

// Multivariate polynomial over arbitrary-precision integers, stored as a
// canonical map from exponent vectors to nonzero coefficients. The variable
// order is fixed at construction (first appearance in the source text).
class Polynomial {
public:
    using Exponents = std::vector<std::uint32_t>;

    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial constant(std::vector<std::string> variables, const BigInt& value);
    static Polynomial variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const { return variables_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    std::size_t variable_count() const { return variables_.size(); }

    // Max total degree over stored terms; 0 for the zero polynomial.
    std::uint64_t degree() const;
    bool is_zero() const { return terms_.empty(); }
    BigInt constant_term() const;

    // Exact evaluation; throws DimensionMismatch unless
    // point.size() == variable_count().
    BigInt evaluate(const std::vector<BigInt>& point) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial pow(std::uint32_t exponent) const;
    Polynomial negate() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Exponents& exps, const BigInt& coeff);

    std::vector<std::string> variables_;
    std::map<Exponents, BigInt> terms_;
};

// Expression grammar: integer literals, identifiers, + - * ^ and parentheses,
// with natural literal exponents. The parsed form is expanded to the
// canonical term map. Throws SyntaxError / NonNaturalExponent.
Polynomial parse_polynomial(std::string_view text);

// Solutions are sought over N (the default) or over Z.
enum class Domain { naturals, integers };

struct AllSolutionsInBox {
    std::vector<std::vector<BigInt>> solutions;  // lexicographic order
    std::uint64_t bound = 0;

    friend bool operator==(const AllSolutionsInBox&, const AllSolutionsInBox&) = default;
};

struct DecidedSolvable {
    std::vector<BigInt> witness;

    friend bool operator==(const DecidedSolvable&, const DecidedSolvable&) = default;
};

struct DecidedUnsolvable {
    std::string reason;

    friend bool operator==(const DecidedUnsolvable&, const DecidedUnsolvable&) = default;
};

struct UnknownBeyondBound {
    std::uint64_t bound = 0;

    friend bool operator==(const UnknownBeyondBound&, const UnknownBeyondBound&) = default;
};

using SearchResult =
    std::variant<AllSolutionsInBox, DecidedSolvable, DecidedUnsolvable, UnknownBeyondBound>;

// Exact decision procedure for total degree <= 1 (throws DegreeTooHigh
// otherwise). Over Z the extended Euclidean algorithm decides outright. Over
// N: one and two variables are decided exactly by intersecting the solution
// line with the non-negative quadrant; three or more variables try every
// variable pair exactly, then exhaust the finite solution region when the
// coefficients share one sign, and otherwise fall back to a bounded box
// search that may end UnknownBeyondBound.
SearchResult solve_linear(const Polynomial& p, Domain domain = Domain::naturals);

inline constexpr std::uint64_t kDefaultBoxStepCap = 10000000;

// Exhaustive scan of {0..bound}^k (naturals) or {-bound..bound}^k (integers)
// in lexicographic order. A syntactic positivity or negativity certificate
// (all-even exponents, same-sign coefficients, nonzero constant) decides
// unsolvability outright; roots found are returned as AllSolutionsInBox; an
// empty scan yields UnknownBeyondBound, never a divergence claim. Throws
// ResourceLimit when the box exceeds step_cap points.
SearchResult search_box(const Polynomial& p, std::uint64_t bound,
                        Domain domain = Domain::naturals,
                        std::uint64_t step_cap = kDefaultBoxStepCap);

}  // namespace cwb

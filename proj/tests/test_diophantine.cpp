#include "cwb/diophantine.hpp"

#include <doctest.h>

#include <set>
#include <string>

#include "cwb/errors.hpp"

using namespace cwb;

namespace {

std::vector<BigInt> point(std::initializer_list<long long> values) {
    std::vector<BigInt> p;
    for (auto v : values) p.emplace_back(v);
    return p;
}

// Independent oracle: plain nested loops over the box, no shared machinery
// with search_box.
std::vector<std::vector<BigInt>> naive_roots_2d(const Polynomial& p, long long lo,
                                                long long hi) {
    std::vector<std::vector<BigInt>> roots;
    for (long long a = lo; a <= hi; ++a)
        for (long long b = lo; b <= hi; ++b)
            if (p.evaluate(point({a, b})) == 0) roots.push_back(point({a, b}));
    return roots;
}

}  // namespace

TEST_CASE("parse_polynomial canonicalizes the linear example") {
    const Polynomial p = parse_polynomial("2*x1 - 3*x2 - 1");
    CHECK(p.variables() == std::vector<std::string>{"x1", "x2"});
    CHECK(p.degree() == 1);
    CHECK(p.constant_term() == -1);
    CHECK(p.terms().size() == 3);
    CHECK(p.evaluate(point({0, 0})) == -1);
}

TEST_CASE("parse_polynomial handles the quadratic example") {
    const Polynomial p = parse_polynomial("x1^2 - x2^2 - 3");
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(point({2, 1})) == 0);
    CHECK(p.evaluate(point({4, 2})) == 9);
}

TEST_CASE("parse_polynomial on the zero polynomial") {
    const Polynomial p = parse_polynomial("0");
    CHECK(p.is_zero());
    CHECK(p.degree() == 0);
    CHECK(p.variable_count() == 0);
}

TEST_CASE("parse_polynomial expands products and powers") {
    const Polynomial p = parse_polynomial("(x + y)^2 - x^2 - 2*x*y - y^2");
    CHECK(p.is_zero());
    const Polynomial q = parse_polynomial("(x - 1)*(x + 1)");
    CHECK(q.evaluate(point({5})) == 24);
}

TEST_CASE("parse_polynomial error taxonomy") {
    CHECK_THROWS_AS(parse_polynomial("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x ? 3"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x^-2"), NonNaturalExponent);
    CHECK_THROWS_AS(parse_polynomial("x^y"), NonNaturalExponent);
}

TEST_CASE("evaluate is exact at any magnitude") {
    const Polynomial p = parse_polynomial("x^3 - 1");
    const BigInt big("1000000000000000000000000");  // 10^24
    std::vector<BigInt> at{big};
    CHECK(p.evaluate(at) == big * big * big - 1);
}

TEST_CASE("evaluate rejects wrong dimensions") {
    const Polynomial p = parse_polynomial("x + y");
    CHECK_THROWS_AS(p.evaluate(point({1})), DimensionMismatch);
}

TEST_CASE("evaluate at the zero vector gives the constant term") {
    const Polynomial p = parse_polynomial("x^2 + 3*y - 17");
    CHECK(p.evaluate(point({0, 0})) == -17);
}

TEST_CASE("solve_linear: the worked degree-1 example over N") {
    const Polynomial p = parse_polynomial("2*x1 - 3*x2 - 1");
    const SearchResult r = solve_linear(p);
    REQUIRE(std::holds_alternative<DecidedSolvable>(r));
    const auto& witness = std::get<DecidedSolvable>(r).witness;
    CHECK(witness == point({2, 1}));  // k = 0 of x1 = 2+3k, x2 = 1+2k
    CHECK(p.evaluate(witness) == 0);
}

TEST_CASE("solve_linear: gcd obstruction") {
    const SearchResult r = solve_linear(parse_polynomial("2*x1 - 4*x2 - 1"));
    REQUIRE(std::holds_alternative<DecidedUnsolvable>(r));
    CHECK(std::get<DecidedUnsolvable>(r).reason.find("gcd") != std::string::npos);
}

TEST_CASE("solve_linear: zero polynomial is solvable by the zero vector") {
    const SearchResult r = solve_linear(parse_polynomial("0"));
    REQUIRE(std::holds_alternative<DecidedSolvable>(r));
    CHECK(std::get<DecidedSolvable>(r).witness.empty());
}

TEST_CASE("solve_linear rejects higher degrees") {
    CHECK_THROWS_AS(solve_linear(parse_polynomial("x^2 - 1")), DegreeTooHigh);
}

TEST_CASE("solve_linear over N: line misses the non-negative quadrant") {
    // x + y + 1 = 0 has integer solutions but none with x, y >= 0.
    const SearchResult nat = solve_linear(parse_polynomial("x + y + 1"));
    CHECK(std::holds_alternative<DecidedUnsolvable>(nat));
    const SearchResult integers = solve_linear(parse_polynomial("x + y + 1"), Domain::integers);
    REQUIRE(std::holds_alternative<DecidedSolvable>(integers));
    CHECK(parse_polynomial("x + y + 1").evaluate(std::get<DecidedSolvable>(integers).witness) ==
          0);
}

TEST_CASE("solve_linear over Z decides any variable count by extended gcd") {
    const Polynomial p = parse_polynomial("6*x - 10*y + 15*z - 1");
    const SearchResult r = solve_linear(p, Domain::integers);
    REQUIRE(std::holds_alternative<DecidedSolvable>(r));
    CHECK(p.evaluate(std::get<DecidedSolvable>(r).witness) == 0);
}

TEST_CASE("solve_linear over N with three variables: no pair suffices") {
    // 6x - 10y + 15z = 1 has no two-variable natural solution (pairwise gcds
    // 2, 3, 5 all miss 1) but (1, 2, 1) works.
    const Polynomial p = parse_polynomial("6*x - 10*y + 15*z - 1");
    const SearchResult r = solve_linear(p);
    REQUIRE(std::holds_alternative<DecidedSolvable>(r));
    const auto witness = std::get<DecidedSolvable>(r).witness;
    CHECK(p.evaluate(witness) == 0);
    for (const BigInt& w : witness) CHECK(w >= 0);
}

TEST_CASE("solve_linear over N: same-sign coefficients exhaust a finite region") {
    // 3x + 5y + 7z = 1 has no natural solution; the region is tiny.
    const SearchResult r = solve_linear(parse_polynomial("3*x + 5*y + 7*z - 1"));
    REQUIRE(std::holds_alternative<DecidedUnsolvable>(r));
    CHECK(std::get<DecidedUnsolvable>(r).reason.find("finite solution region") !=
          std::string::npos);
    // ... and 3x + 5y + 7z = 22 is solvable.
    const SearchResult yes = solve_linear(parse_polynomial("3*x + 5*y + 7*z - 22"));
    CHECK(std::holds_alternative<DecidedSolvable>(yes));
}

TEST_CASE("search_box finds the unique quadratic solution") {
    const Polynomial p = parse_polynomial("x1^2 - x2^2 - 3");
    const SearchResult r = search_box(p, 100);
    REQUIRE(std::holds_alternative<AllSolutionsInBox>(r));
    const auto& box = std::get<AllSolutionsInBox>(r);
    REQUIRE(box.solutions.size() == 1);
    CHECK(box.solutions[0] == point({2, 1}));
}

TEST_CASE("search_box on the linear example matches the closed form") {
    const Polynomial p = parse_polynomial("2*x1 - 3*x2 - 1");
    const SearchResult r = search_box(p, 20);
    REQUIRE(std::holds_alternative<AllSolutionsInBox>(r));
    std::vector<std::vector<BigInt>> expected;
    for (long long k = 0; 2 + 3 * k <= 20; ++k) expected.push_back(point({2 + 3 * k, 1 + 2 * k}));
    CHECK(std::get<AllSolutionsInBox>(r).solutions == expected);
    CHECK(expected.size() == 7);
}

TEST_CASE("search_box applies the positivity certificate at any bound") {
    const SearchResult r = search_box(parse_polynomial("x1^2 + 1"), 0);
    REQUIRE(std::holds_alternative<DecidedUnsolvable>(r));
    CHECK(std::get<DecidedUnsolvable>(r).reason.find("positivity") != std::string::npos);
    // Mirror image.
    const SearchResult neg = search_box(parse_polynomial("-x1^2 - 1"), 0);
    REQUIRE(std::holds_alternative<DecidedUnsolvable>(neg));
}

TEST_CASE("search_box: no roots in the box is Unknown, not a refusal") {
    const SearchResult r = search_box(parse_polynomial("x^3 - 5"), 10);
    CHECK(r == SearchResult{UnknownBeyondBound{10}});
}

TEST_CASE("search_box over Z scans the symmetric box") {
    const Polynomial p = parse_polynomial("x^2 - 4");
    const SearchResult r = search_box(p, 5, Domain::integers);
    REQUIRE(std::holds_alternative<AllSolutionsInBox>(r));
    CHECK(std::get<AllSolutionsInBox>(r).solutions ==
          std::vector<std::vector<BigInt>>{point({-2}), point({2})});
}

TEST_CASE("search_box enforces the step cap") {
    CHECK_THROWS_AS(search_box(parse_polynomial("x + y + z - 1000"), 1000), ResourceLimit);
}

TEST_CASE("search_box rejects zero variables") {
    CHECK_THROWS_AS(search_box(parse_polynomial("1"), 10), InvalidArgument);
}

TEST_CASE("search_box matches the naive oracle and is bound-monotone") {
    const char* exprs[] = {"x^2 - y^2 - 3", "2*x - 3*y - 1", "x*y - 12", "x^2 + y^2 - 25"};
    for (const char* text : exprs) {
        const Polynomial p = parse_polynomial(text);
        const auto oracle_small = naive_roots_2d(p, 0, 12);
        const auto oracle_large = naive_roots_2d(p, 0, 30);

        const auto as_set = [](const std::vector<std::vector<BigInt>>& v) {
            return std::set<std::vector<BigInt>>(v.begin(), v.end());
        };
        const auto extract = [&](const SearchResult& r) {
            if (const auto* box = std::get_if<AllSolutionsInBox>(&r)) return box->solutions;
            return std::vector<std::vector<BigInt>>{};
        };
        const auto small = extract(search_box(p, 12));
        const auto large = extract(search_box(p, 30));
        CHECK(small == oracle_small);
        CHECK(large == oracle_large);
        // Every reported solution evaluates to zero; enlarging keeps them.
        for (const auto& s : small) {
            CHECK(p.evaluate(s) == 0);
            CHECK(as_set(large).contains(s));
        }
    }
}

TEST_CASE("solve_linear and search_box agree on degree-1 instances") {
    // Exhaustive cross-check over coefficients in [-5,5]^2 x [-5,5], 2
    // variables, bound 50, natural domain.
    for (int a = -5; a <= 5; ++a) {
        for (int b = -5; b <= 5; ++b) {
            for (int c = -5; c <= 5; ++c) {
                const std::string text = std::to_string(a) + "*x + " + std::to_string(b) +
                                         "*y + " + std::to_string(c);
                const Polynomial p = parse_polynomial(text);
                if (p.variable_count() != 2) continue;  // degenerate coefficient 0 forms
                const SearchResult lin = solve_linear(p);
                const SearchResult box = search_box(p, 50);

                if (std::holds_alternative<DecidedUnsolvable>(lin)) {
                    // No solutions may appear in any box.
                    CHECK(!std::holds_alternative<AllSolutionsInBox>(box));
                } else if (const auto* found = std::get_if<AllSolutionsInBox>(&box)) {
                    for (const auto& s : found->solutions) CHECK(p.evaluate(s) == 0);
                    CHECK(std::holds_alternative<DecidedSolvable>(lin));
                } else {
                    // Solvable but the least witness lies beyond 50.
                    REQUIRE(std::holds_alternative<DecidedSolvable>(lin));
                    const auto& w = std::get<DecidedSolvable>(lin).witness;
                    CHECK(p.evaluate(w) == 0);
                    bool outside = false;
                    for (const BigInt& coord : w) outside |= coord > 50;
                    CHECK(outside);
                }
            }
        }
    }
}

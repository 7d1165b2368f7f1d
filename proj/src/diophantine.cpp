#include "cwb/diophantine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <utility>

#include "cwb/errors.hpp"

namespace cwb {

Polynomial::Polynomial(std::vector<std::string> variables)
    : variables_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const BigInt& value) {
    Polynomial p(std::move(variables));
    p.add_term(Exponents(p.variable_count(), 0), value);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
    Polynomial p(std::move(variables));
    Exponents exps(p.variable_count(), 0);
    exps.at(index) = 1;
    p.add_term(exps, 1);
    return p;
}

void Polynomial::add_term(const Exponents& exps, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t deg = 0;
    for (const auto& [exps, coeff] : terms_) {
        std::uint64_t total = 0;
        for (std::uint32_t e : exps) total += e;
        deg = std::max(deg, total);
    }
    return deg;
}

BigInt Polynomial::constant_term() const {
    const Exponents zero(variable_count(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Polynomial::evaluate(const std::vector<BigInt>& point) const {
    if (point.size() != variable_count())
        throw DimensionMismatch("point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " +
                                std::to_string(variable_count()) + " variables");
    BigInt total = 0;
    for (const auto& [exps, coeff] : terms_) {
        BigInt term = coeff;
        for (std::size_t v = 0; v < exps.size(); ++v)
            for (std::uint32_t e = 0; e < exps[v]; ++e) term *= point[v];
        total += term;
    }
    return total;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial result = *this;
    for (const auto& [exps, coeff] : other.terms_) result.add_term(exps, coeff);
    return result;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial result = *this;
    for (const auto& [exps, coeff] : other.terms_) result.add_term(exps, -coeff);
    return result;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial result(variables_);
    for (const auto& [le, lc] : terms_) {
        for (const auto& [re, rc] : other.terms_) {
            Exponents exps(le.size());
            for (std::size_t i = 0; i < le.size(); ++i) exps[i] = le[i] + re[i];
            result.add_term(exps, lc * rc);
        }
    }
    return result;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result = Polynomial::constant(variables_, 1);
    for (std::uint32_t i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

Polynomial Polynomial::negate() const {
    Polynomial result(variables_);
    for (const auto& [exps, coeff] : terms_) result.add_term(exps, -coeff);
    return result;
}

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens.push_back({Token::Kind::number, std::string(text.substr(start, i - start)),
                              start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                ++i;
            tokens.push_back({Token::Kind::ident, std::string(text.substr(start, i - start)),
                              start});
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::Kind::plus; break;
            case '-': kind = Token::Kind::minus; break;
            case '*': kind = Token::Kind::star; break;
            case '^': kind = Token::Kind::caret; break;
            case '(': kind = Token::Kind::lparen; break;
            case ')': kind = Token::Kind::rparen; break;
            default:
                throw SyntaxError("unexpected character '" + std::string(1, c) +
                                  "' at offset " + std::to_string(i));
        }
        tokens.push_back({kind, std::string(1, c), i});
        ++i;
    }
    tokens.push_back({Token::Kind::end, "", text.size()});
    return tokens;
}

class PolyParser {
public:
    PolyParser(std::vector<Token> tokens, std::vector<std::string> variables)
        : tokens_(std::move(tokens)), variables_(std::move(variables)) {}

    Polynomial parse() {
        Polynomial p = parse_sum();
        if (peek().kind != Token::Kind::end)
            throw SyntaxError("trailing input at offset " + std::to_string(peek().offset));
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool eat(Token::Kind kind) {
        if (peek().kind == kind) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial parse_sum() {
        bool negate_first = false;
        if (eat(Token::Kind::minus))
            negate_first = true;
        else
            eat(Token::Kind::plus);
        Polynomial total = parse_product();
        if (negate_first) total = total.negate();
        for (;;) {
            if (eat(Token::Kind::plus))
                total = total + parse_product();
            else if (eat(Token::Kind::minus))
                total = total - parse_product();
            else
                return total;
        }
    }

    Polynomial parse_product() {
        Polynomial total = parse_power();
        while (eat(Token::Kind::star)) total = total * parse_power();
        return total;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        if (!eat(Token::Kind::caret)) return base;
        if (peek().kind == Token::Kind::minus)
            throw NonNaturalExponent("negative exponent at offset " +
                                     std::to_string(peek().offset));
        if (peek().kind != Token::Kind::number)
            throw NonNaturalExponent("exponent must be a natural literal at offset " +
                                     std::to_string(peek().offset));
        const Token& tok = advance();
        std::uint32_t exponent = 0;
        auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(),
                                         exponent);
        if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
            throw SyntaxError("exponent too large at offset " + std::to_string(tok.offset));
        return base.pow(exponent);
    }

    Polynomial parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Kind::number: {
                advance();
                return Polynomial::constant(variables_, BigInt(tok.text));
            }
            case Token::Kind::ident: {
                advance();
                auto it = std::find(variables_.begin(), variables_.end(), tok.text);
                return Polynomial::variable(
                    variables_, static_cast<std::size_t>(it - variables_.begin()));
            }
            case Token::Kind::lparen: {
                advance();
                Polynomial inner = parse_sum();
                if (!eat(Token::Kind::rparen))
                    throw SyntaxError("expected ')' at offset " +
                                      std::to_string(peek().offset));
                return inner;
            }
            case Token::Kind::minus:
            case Token::Kind::plus: {
                advance();
                Polynomial inner = parse_atom();
                return tok.kind == Token::Kind::minus ? inner.negate() : inner;
            }
            default:
                throw SyntaxError("unexpected token '" + tok.text + "' at offset " +
                                  std::to_string(tok.offset));
        }
    }

    std::vector<Token> tokens_;
    std::vector<std::string> variables_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    auto tokens = tokenize(text);
    // Variable order is first appearance in the source.
    std::vector<std::string> variables;
    for (const Token& tok : tokens)
        if (tok.kind == Token::Kind::ident &&
            std::find(variables.begin(), variables.end(), tok.text) == variables.end())
            variables.push_back(tok.text);
    return PolyParser(std::move(tokens), std::move(variables)).parse();
}

namespace {

// gcd(a, b) >= 0 together with x, y such that a*x + b*y = gcd.
struct ExtGcd {
    BigInt g, x, y;
};

ExtGcd extended_gcd(BigInt a, BigInt b) {
    BigInt old_r = std::move(a), r = std::move(b);
    BigInt old_x = 1, x = 0;
    BigInt old_y = 0, y = 1;
    while (r != 0) {
        const BigInt q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
        old_y -= q * y;
        std::swap(old_y, y);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {std::move(old_r), std::move(old_x), std::move(old_y)};
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// Exact decision of c1*x + c2*y = target over the naturals; assumes c1, c2
// nonzero. Walks the integer solution line and intersects the t-range with
// the non-negative quadrant.
std::optional<std::pair<BigInt, BigInt>> two_var_naturals(const BigInt& c1, const BigInt& c2,
                                                          const BigInt& target) {
    const ExtGcd e = extended_gcd(c1, c2);
    if (target % e.g != 0) return std::nullopt;
    const BigInt scale = target / e.g;
    const BigInt x0 = e.x * scale;
    const BigInt y0 = e.y * scale;
    const BigInt dx = c2 / e.g;
    const BigInt dy = -c1 / e.g;

    std::optional<BigInt> lo, hi;
    const auto constrain = [&](const BigInt& v0, const BigInt& dv) {
        // v0 + dv*t >= 0
        if (dv > 0) {
            BigInt bound = ceil_div(-v0, dv);
            if (!lo || bound > *lo) lo = bound;
        } else {
            BigInt bound = floor_div(-v0, dv);
            if (!hi || bound < *hi) hi = bound;
        }
    };
    constrain(x0, dx);
    constrain(y0, dy);
    if (lo && hi && *lo > *hi) return std::nullopt;
    const BigInt t = lo ? *lo : *hi;
    return std::make_pair(x0 + dx * t, y0 + dy * t);
}

struct LinearForm {
    std::vector<BigInt> coeffs;  // one per variable
    BigInt constant;
};

LinearForm linear_form(const Polynomial& p) {
    LinearForm form;
    form.coeffs.assign(p.variable_count(), 0);
    form.constant = 0;
    for (const auto& [exps, coeff] : p.terms()) {
        std::uint64_t total = 0;
        std::size_t var = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            total += exps[i];
            if (exps[i] == 1) var = i;
        }
        if (total == 0)
            form.constant = coeff;
        else
            form.coeffs[var] = coeff;
    }
    return form;
}

SearchResult solve_linear_integers(const LinearForm& form) {
    const BigInt target = -form.constant;
    // Chain the extended Euclidean algorithm: after step i we can generate
    // gcd(c1..ci) from x1..xi.
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < form.coeffs.size(); ++i)
        if (form.coeffs[i] != 0) active.push_back(i);

    std::vector<BigInt> witness(form.coeffs.size(), 0);
    if (active.empty()) {
        if (target == 0) return DecidedSolvable{std::move(witness)};
        return DecidedUnsolvable{"constant term " + form.constant.str() + " is nonzero"};
    }

    BigInt g = form.coeffs[active[0]];
    std::vector<BigInt> multipliers{1};
    for (std::size_t i = 1; i < active.size(); ++i) {
        const ExtGcd e = extended_gcd(g, form.coeffs[active[i]]);
        for (BigInt& m : multipliers) m *= e.x;
        multipliers.push_back(e.y);
        g = e.g;
    }
    if (g < 0) {
        g = -g;
        for (BigInt& m : multipliers) m = -m;
    }
    if (target % g != 0)
        return DecidedUnsolvable{"gcd of coefficients " + g.str() + " does not divide " +
                                 target.str()};
    const BigInt scale = target / g;
    for (std::size_t i = 0; i < active.size(); ++i) witness[active[i]] = multipliers[i] * scale;
    return DecidedSolvable{std::move(witness)};
}

std::vector<std::vector<BigInt>> box_roots(const Polynomial& p, const BigInt& lo,
                                           const BigInt& hi);

SearchResult solve_linear_naturals(const Polynomial& p, const LinearForm& form) {
    const BigInt target = -form.constant;
    const std::size_t k = form.coeffs.size();
    std::vector<BigInt> witness(k, 0);

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < k; ++i)
        if (form.coeffs[i] != 0) active.push_back(i);

    if (active.empty()) {
        if (target == 0) return DecidedSolvable{std::move(witness)};
        return DecidedUnsolvable{"constant term " + form.constant.str() + " is nonzero"};
    }
    if (target == 0) return DecidedSolvable{std::move(witness)};

    BigInt g = 0;
    for (std::size_t i : active) g = boost::multiprecision::gcd(g, form.coeffs[i]);
    if (g < 0) g = -g;
    if (target % g != 0)
        return DecidedUnsolvable{"gcd of coefficients " + g.str() + " does not divide " +
                                 target.str()};

    if (active.size() == 1) {
        const std::size_t i = active[0];
        const BigInt q = target / form.coeffs[i];
        if (target % form.coeffs[i] == 0 && q >= 0) {
            witness[i] = q;
            return DecidedSolvable{std::move(witness)};
        }
        return DecidedUnsolvable{
            "the unique rational solution is not a natural number"};
    }

    if (active.size() == 2) {
        auto pair = two_var_naturals(form.coeffs[active[0]], form.coeffs[active[1]], target);
        if (pair) {
            witness[active[0]] = pair->first;
            witness[active[1]] = pair->second;
            return DecidedSolvable{std::move(witness)};
        }
        return DecidedUnsolvable{
            "no lattice point of the solution line lies in the non-negative quadrant"};
    }

    // Three or more variables. Sign obstructions give finite certificates.
    const bool all_positive = std::all_of(active.begin(), active.end(),
                                          [&](std::size_t i) { return form.coeffs[i] > 0; });
    const bool all_negative = std::all_of(active.begin(), active.end(),
                                          [&](std::size_t i) { return form.coeffs[i] < 0; });
    if (all_positive && target < 0)
        return DecidedUnsolvable{"all coefficients positive but the target is negative"};
    if (all_negative && target > 0)
        return DecidedUnsolvable{"all coefficients negative but the target is positive"};

    // Try every variable pair exactly (covers single-variable witnesses too).
    for (std::size_t a = 0; a < active.size(); ++a) {
        for (std::size_t b = a + 1; b < active.size(); ++b) {
            auto pair =
                two_var_naturals(form.coeffs[active[a]], form.coeffs[active[b]], target);
            if (pair) {
                std::vector<BigInt> w(k, 0);
                w[active[a]] = pair->first;
                w[active[b]] = pair->second;
                return DecidedSolvable{std::move(w)};
            }
        }
    }

    // Same-sign coefficients bound every coordinate by |target / ci|, so a
    // small enough region can be exhausted for a definite NO.
    if (all_positive || all_negative) {
        BigInt region_bound = 0;
        for (std::size_t i : active) {
            const BigInt candidate = BigInt(abs(target)) / BigInt(abs(form.coeffs[i]));
            if (candidate > region_bound) region_bound = candidate;
        }
        BigInt points = 1;
        bool within_cap = true;
        for (std::size_t i = 0; i < k && within_cap; ++i) {
            points *= region_bound + 1;
            if (points > kDefaultBoxStepCap) within_cap = false;
        }
        if (within_cap) {
            auto roots = box_roots(p, 0, region_bound);
            if (!roots.empty()) return DecidedSolvable{std::move(roots.front())};
            return DecidedUnsolvable{"exhausted the finite solution region (bound " +
                                     region_bound.str() + ")"};
        }
    }

    // Mixed signs with no two-variable witness: search boxes of growing
    // size, capped at ~1e6 points, and otherwise admit ignorance.
    std::uint64_t max_bound = 1;
    while (true) {
        BigInt points = 1;
        for (std::size_t i = 0; i < k; ++i) points *= BigInt(max_bound + 2);
        if (points > 1000000) break;
        ++max_bound;
    }
    for (std::uint64_t bound : {std::min<std::uint64_t>(8, max_bound), max_bound}) {
        auto roots = box_roots(p, 0, bound);
        if (!roots.empty()) return DecidedSolvable{std::move(roots.front())};
    }
    return UnknownBeyondBound{max_bound};
}

// Independent exhaustive scan of {lo..hi}^k in lexicographic order.
std::vector<std::vector<BigInt>> box_roots(const Polynomial& p, const BigInt& lo,
                                           const BigInt& hi) {
    const std::size_t k = p.variable_count();
    std::vector<std::vector<BigInt>> roots;
    std::vector<BigInt> point(k, lo);
    for (;;) {
        if (p.evaluate(point) == 0) roots.push_back(point);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (point[i] < hi) {
                ++point[i];
                for (std::size_t j = i + 1; j < k; ++j) point[j] = lo;
                break;
            }
            if (i == 0) return roots;
        }
    }
}

bool positivity_certificate(const Polynomial& p, bool negate) {
    // All-even exponent vectors with same-sign coefficients and a strictly
    // signed constant term keep the polynomial away from zero everywhere.
    bool has_constant = false;
    for (const auto& [exps, coeff] : p.terms()) {
        const BigInt signed_coeff = negate ? -coeff : coeff;
        std::uint64_t total = 0;
        for (std::uint32_t e : exps) {
            if (e % 2 != 0) return false;
            total += e;
        }
        if (total == 0) {
            if (signed_coeff <= 0) return false;
            has_constant = true;
        } else if (signed_coeff < 0) {
            return false;
        }
    }
    return has_constant;
}

}  // namespace

SearchResult solve_linear(const Polynomial& p, Domain domain) {
    if (p.degree() > 1)
        throw DegreeTooHigh("solve_linear requires total degree <= 1, got degree " +
                            std::to_string(p.degree()));
    const LinearForm form = linear_form(p);
    if (domain == Domain::integers) return solve_linear_integers(form);
    return solve_linear_naturals(p, form);
}

SearchResult search_box(const Polynomial& p, std::uint64_t bound, Domain domain,
                        std::uint64_t step_cap) {
    if (p.variable_count() == 0)
        throw InvalidArgument("search_box requires at least one variable");

    if (positivity_certificate(p, false))
        return DecidedUnsolvable{"positivity certificate: every value is >= the constant term"};
    if (positivity_certificate(p, true))
        return DecidedUnsolvable{"negativity certificate: every value is <= the constant term"};

    const BigInt lo = domain == Domain::naturals ? BigInt(0) : -BigInt(bound);
    const BigInt hi = bound;
    BigInt points = 1;
    for (std::size_t i = 0; i < p.variable_count(); ++i) {
        points *= hi - lo + 1;
        if (points > step_cap)
            throw ResourceLimit("box of " + points.str() + "+ points exceeds step cap " +
                                std::to_string(step_cap));
    }

    auto roots = box_roots(p, lo, hi);
    if (roots.empty()) return UnknownBeyondBound{bound};
    return AllSolutionsInBox{std::move(roots), bound};
}

}  // namespace cwb

#ifndef CURVEPROG_PARSE_HPP
#define CURVEPROG_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "curveprog/errors.hpp"
#include "curveprog/homogpoly.hpp"
#include "curveprog/unipoly.hpp"

namespace curveprog {

// Parsed curve input: the source text plus its homogeneous polynomial.
struct CurveExpr {
    std::string source;
    HomogPoly poly;
    bool uses[3] = {false, false, false}; // X, Y, Z
};

namespace parse_detail {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(pos, why + " at position " + std::to_string(pos) + " in '" +
                                  std::string(s) + "'");
    }
};

inline Integer parse_natural(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    if (c.pos == start) c.fail("expected digits");
    return Integer(std::string(c.s.substr(start, c.pos - start)), 10);
}

inline int variable_index(char ch) {
    switch (ch) {
        case 'X': case 'x': return 0;
        case 'Y': case 'y': return 1;
        case 'Z': case 'z': return 2;
        default: return -1;
    }
}

// one term: [coeff][*]V^a[*]W^b...; at least a coefficient or a variable
struct Term {
    Rational coeff;
    int exp[3] = {0, 0, 0};
};

inline Term parse_term(Cursor& c) {
    Term t;
    t.coeff = Rational(1);
    bool saw_anything = false;

    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        Integer num = parse_natural(c);
        if (c.peek() == '/') {
            c.take();
            Integer den = parse_natural(c);
            if (den == 0) c.fail("zero denominator");
            t.coeff = Rational(num, den);
        } else {
            t.coeff = Rational(num);
        }
        saw_anything = true;
        if (c.peek() == '*') c.take();
    }

    while (true) {
        char ch = c.peek();
        int v = variable_index(ch);
        if (v < 0) break;
        c.take();
        saw_anything = true;
        long e = 1;
        if (c.peek() == '^') {
            c.take();
            Integer n = parse_natural(c);
            if (n > 64) c.fail("exponent too large");
            e = n.get_si();
        }
        t.exp[v] += static_cast<int>(e);
        if (c.peek() == '*') c.take();
    }
    if (!saw_anything) c.fail("expected a coefficient or a variable");
    return t;
}

} // namespace parse_detail

// Homogeneous trivariate grammar: signed terms of coefficient and X/Y/Z
// powers. Lowercase variables are aliases. The total degrees of all terms
// must agree.
inline CurveExpr parse_curve(std::string_view text) {
    parse_detail::Cursor c{text};
    if (c.done()) throw ParseError(0, "empty curve expression");

    struct Raw {
        Rational coeff;
        int exp[3];
        int degree;
    };
    std::vector<Raw> terms;
    bool negate = false;
    if (c.peek() == '+' || c.peek() == '-') negate = c.take() == '-';
    while (true) {
        parse_detail::Term t = parse_detail::parse_term(c);
        Rational coeff = negate ? -t.coeff : t.coeff;
        terms.push_back({coeff, {t.exp[0], t.exp[1], t.exp[2]}, t.exp[0] + t.exp[1] + t.exp[2]});
        if (c.done()) break;
        char op = c.take();
        if (op == '+')
            negate = false;
        else if (op == '-')
            negate = true;
        else
            c.fail("expected '+' or '-'");
    }

    int degree = terms.front().degree;
    for (const auto& t : terms)
        if (t.degree != degree)
            throw NotHomogeneous(degree, t.degree,
                                 "terms of degree " + std::to_string(degree) + " and " +
                                     std::to_string(t.degree) + " in '" + std::string(text) +
                                     "'");

    CurveExpr out{std::string(text), HomogPoly(degree), {false, false, false}};
    for (const auto& t : terms) {
        out.poly.add_term(t.coeff, {t.exp[0], t.exp[1], t.exp[2]});
        for (int v = 0; v < 3; ++v)
            if (t.exp[v] > 0) out.uses[v] = true;
    }
    return out;
}

// Univariate grammar in a single letter (x, y, z or w), same term syntax.
inline UniPoly parse_unipoly(std::string_view text, char expect = '\0') {
    parse_detail::Cursor c{text};
    if (c.done()) throw ParseError(0, "empty polynomial");

    char var = expect ? static_cast<char>(std::tolower(static_cast<unsigned char>(expect))) : '\0';
    std::vector<Rational> coeffs;
    auto bump = [&](std::size_t e, const Rational& v) {
        if (coeffs.size() <= e) coeffs.resize(e + 1, Rational(0));
        coeffs[e] += v;
    };

    bool negate = false;
    if (c.peek() == '+' || c.peek() == '-') negate = c.take() == '-';
    while (true) {
        Rational coeff(1);
        bool saw = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            Integer num = parse_detail::parse_natural(c);
            if (c.peek() == '/') {
                c.take();
                Integer den = parse_detail::parse_natural(c);
                if (den == 0) c.fail("zero denominator");
                coeff = Rational(num, den);
            } else {
                coeff = Rational(num);
            }
            saw = true;
            if (c.peek() == '*') c.take();
        }
        long e = 0;
        while (true) {
            char ch = c.peek();
            char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            if (low != 'x' && low != 'y' && low != 'z' && low != 'w') break;
            if (var == '\0') var = low;
            if (low != var) c.fail(std::string("unexpected variable '") + ch + "'");
            c.take();
            saw = true;
            long step = 1;
            if (c.peek() == '^') {
                c.take();
                Integer n = parse_detail::parse_natural(c);
                if (n > 4096) c.fail("exponent too large");
                step = n.get_si();
            }
            e += step;
            if (c.peek() == '*') c.take();
        }
        if (!saw) c.fail("expected a coefficient or the variable");
        bump(static_cast<std::size_t>(e), negate ? -coeff : coeff);
        if (c.done()) break;
        char op = c.take();
        if (op == '+')
            negate = false;
        else if (op == '-')
            negate = true;
        else
            c.fail("expected '+' or '-'");
    }
    return UniPoly(std::move(coeffs), var ? std::string(1, var) : "x");
}

// Binary form of a fixed degree in X, Y (used by the tower subcommand). A
// plain "0" is accepted for the zero form.
inline HomogPoly parse_binary_form(std::string_view text, int degree) {
    parse_detail::Cursor probe{text};
    if (probe.peek() == '0') {
        probe.take();
        if (probe.done()) return HomogPoly(degree);
    }
    CurveExpr e = parse_curve(text);
    if (e.uses[2]) throw ParseError(0, "binary form must use only X and Y");
    if (e.poly.degree() != degree)
        throw NotHomogeneous(degree, e.poly.degree(),
                             "expected a binary form of degree " + std::to_string(degree));
    return e.poly;
}

} // namespace curveprog

#endif

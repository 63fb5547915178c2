#ifndef CURVEPROG_HOMOGPOLY_HPP
#define CURVEPROG_HOMOGPOLY_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "curveprog/errors.hpp"
#include "curveprog/rational.hpp"
#include "curveprog/unipoly.hpp"

namespace curveprog {

using Exp3 = std::array<int, 3>; // exponents of X, Y, Z

// Graded reverse lexicographic order on exponent triples of equal total
// degree: u > v iff the last nonzero entry of u - v is negative. Printing
// walks terms in descending degrevlex, which puts X^3*Y before Y^3*Z before
// Z^3*X.
inline bool degrevlex_greater(const Exp3& u, const Exp3& v) {
    for (int i = 2; i >= 0; --i) {
        int diff = u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)];
        if (diff != 0) return diff < 0;
    }
    return false;
}

struct DegrevlexDesc {
    bool operator()(const Exp3& u, const Exp3& v) const { return degrevlex_greater(u, v); }
};

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// 3x3 rational matrix; just enough linear algebra for coordinate changes.
struct Mat3 {
    std::array<std::array<Rational, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        for (int i = 0; i < 3; ++i) r.at(i, i) = Rational(1);
        return r;
    }
    Rational& at(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const Rational& at(int i, int j) const {
        return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rational s(0);
                for (int k = 0; k < 3; ++k) s += a.at(i, k) * b.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    std::array<Rational, 3> apply(const std::array<Rational, 3>& v) const {
        std::array<Rational, 3> r{Rational(0), Rational(0), Rational(0)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        return r;
    }

    Rational det() const {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    Mat3 inverse() const {
        Rational d = det();
        if (d.is_zero()) throw ZeroInput("singular matrix");
        Mat3 adj;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
                int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                adj.at(j, i) = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) / d;
            }
        return adj;
    }
};

// Homogeneous polynomial in X, Y, Z: sparse exponent map, declared total
// degree. Every stored term has a+b+c equal to the declared degree and a
// nonzero coefficient; the zero polynomial keeps its degree tag so partial
// derivatives of constants stay typed.
class HomogPoly {
public:
    explicit HomogPoly(int degree = 0) : d_(degree) { assert(degree >= 0); }

    static HomogPoly monomial(const Rational& c, int a, int b, int cc) {
        HomogPoly f(a + b + cc);
        f.add_term(c, {a, b, cc});
        return f;
    }

    int degree() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp3, Rational>& terms() const { return terms_; }

    void add_term(const Rational& c, const Exp3& e) {
        assert(e[0] >= 0 && e[1] >= 0 && e[2] >= 0);
        assert(e[0] + e[1] + e[2] == d_);
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Exp3& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    friend HomogPoly operator+(const HomogPoly& a, const HomogPoly& b) {
        assert(a.d_ == b.d_);
        HomogPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(c, e);
        return r;
    }
    friend HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) {
        assert(a.d_ == b.d_);
        HomogPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(-c, e);
        return r;
    }
    friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
        HomogPoly r(a.d_ + b.d_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ca * cb, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]});
        return r;
    }
    friend HomogPoly operator*(const Rational& s, const HomogPoly& a) {
        HomogPoly r(a.d_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.add_term(s * c, e);
        return r;
    }

    Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_)
            acc += c * x.pow(e[0]) * y.pow(e[1]) * z.pow(e[2]);
        return acc;
    }

    Rational evaluate(const std::array<Rational, 3>& p) const {
        return evaluate(p[0], p[1], p[2]);
    }

    // Formal partial derivative; homogeneous of degree d-1 (possibly zero).
    HomogPoly partial(int var) const {
        assert(var >= 0 && var < 3);
        HomogPoly r(d_ > 0 ? d_ - 1 : 0);
        for (const auto& [e, c] : terms_) {
            int k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Exp3 ne = e;
            --ne[static_cast<std::size_t>(var)];
            r.add_term(Rational(k) * c, ne);
        }
        return r;
    }

    // X -> t0*Y + t*X, the homogenized form of x -> t0 + t*x. Degree is
    // preserved; requires t != 0 so the change is invertible.
    HomogPoly substitute_shift_scale(const Rational& t0, const Rational& t) const {
        if (t.is_zero()) throw InvalidScale();
        HomogPoly r(d_);
        for (const auto& [e, c] : terms_) {
            int a = e[0];
            for (int k = 0; k <= a; ++k) {
                Rational w = c * Rational(binomial(static_cast<unsigned long>(a),
                                                   static_cast<unsigned long>(k))) *
                             t.pow(k) * t0.pow(a - k);
                r.add_term(w, {k, e[1] + (a - k), e[2]});
            }
        }
        return r;
    }

    // F(v) -> F(M*v): each variable is replaced by the linear form read off
    // the matching row of m.
    HomogPoly substitute_linear(const Mat3& m) const {
        std::array<HomogPoly, 3> forms = {HomogPoly(1), HomogPoly(1), HomogPoly(1)};
        for (int i = 0; i < 3; ++i) {
            forms[static_cast<std::size_t>(i)].add_term(m.at(i, 0), {1, 0, 0});
            forms[static_cast<std::size_t>(i)].add_term(m.at(i, 1), {0, 1, 0});
            forms[static_cast<std::size_t>(i)].add_term(m.at(i, 2), {0, 0, 1});
        }
        HomogPoly r(d_);
        for (const auto& [e, c] : terms_) {
            HomogPoly prod(0);
            prod.add_term(c, {0, 0, 0});
            for (int v = 0; v < 3; ++v)
                for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k)
                    prod = prod * forms[static_cast<std::size_t>(v)];
            r = r + prod;
        }
        return r;
    }

    // F(x0, 1, z) as a polynomial in z.
    UniPoly fiber_poly_raw(const Rational& x0) const {
        std::vector<Rational> cz(static_cast<std::size_t>(d_) + 1, Rational(0));
        for (const auto& [e, c] : terms_)
            cz[static_cast<std::size_t>(e[2])] += c * x0.pow(e[0]);
        return UniPoly(std::move(cz), "z");
    }

    // F(1, 0, z): the fiber of the x-reversed affine model at x = infinity.
    UniPoly fiber_at_infinity() const {
        std::vector<Rational> cz(static_cast<std::size_t>(d_) + 1, Rational(0));
        for (const auto& [e, c] : terms_)
            if (e[1] == 0) cz[static_cast<std::size_t>(e[2])] += c;
        return UniPoly(std::move(cz), "z");
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exp3, Rational>> ordered(terms_.begin(), terms_.end());
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return degrevlex_greater(a.first, b.first); });
        static const char* names[3] = {"X", "Y", "Z"};
        std::string out;
        for (const auto& [e, c] : ordered) {
            Rational a = c.abs();
            if (out.empty()) {
                if (c.signum() < 0) out += "-";
            } else {
                out += c.signum() < 0 ? " - " : " + ";
            }
            bool any_var = e[0] + e[1] + e[2] > 0;
            bool unit = (a == Rational(1)) && any_var;
            std::string parts;
            for (int v = 0; v < 3; ++v) {
                int k = e[static_cast<std::size_t>(v)];
                if (k == 0) continue;
                if (!parts.empty()) parts += "*";
                parts += names[v];
                if (k > 1) parts += "^" + std::to_string(k);
            }
            if (!unit) {
                out += a.str();
                if (any_var) out += "*";
            }
            out += parts;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const HomogPoly& f) {
        return os << f.str();
    }

private:
    std::map<Exp3, Rational> terms_;
    int d_;
};

struct FiberPoly {
    UniPoly poly;    // F(x0, 1, z)
    int deficiency;  // d - deg_z, the multiplicity absorbed by the
                     // projection center and the z-infinity direction
};

// Projection fiber above x = x0 on the affine patch y = 1. A fiber that
// vanishes identically means the curve contains the whole line x = x0*y,
// i.e. the input was reducible.
inline FiberPoly fiber_poly(const HomogPoly& F, const Rational& x0) {
    UniPoly f = F.fiber_poly_raw(x0);
    if (f.is_zero())
        throw FiberIdenticallyZero("fiber at x = " + x0.str() +
                                   " vanishes identically; curve contains the line x = " +
                                   x0.str() + "*y");
    return {f, static_cast<int>(F.degree() - f.degree())};
}

} // namespace curveprog

#endif

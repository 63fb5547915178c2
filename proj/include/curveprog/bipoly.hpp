#ifndef CURVEPROG_BIPOLY_HPP
#define CURVEPROG_BIPOLY_HPP

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "curveprog/homogpoly.hpp"
#include "curveprog/unipoly.hpp"

namespace curveprog {

// Affine model shape: a polynomial in z whose coefficients are univariate
// polynomials in x. This is what the y = 1 dehomogenization of a plane curve
// looks like, and the shape the power substitution x -> x^s operates on.
class AffineZPoly {
public:
    AffineZPoly() = default;
    explicit AffineZPoly(std::vector<UniPoly> coeffs_by_z) : cz_(std::move(coeffs_by_z)) {
        trim();
    }

    static AffineZPoly from_homog(const HomogPoly& F) {
        std::vector<UniPoly> cz(static_cast<std::size_t>(F.degree()) + 1);
        std::vector<std::vector<Rational>> acc(cz.size());
        for (const auto& [e, c] : F.terms()) {
            auto& row = acc[static_cast<std::size_t>(e[2])];
            if (row.size() <= static_cast<std::size_t>(e[0]))
                row.resize(static_cast<std::size_t>(e[0]) + 1, Rational(0));
            row[static_cast<std::size_t>(e[0])] += c;
        }
        for (std::size_t i = 0; i < cz.size(); ++i) cz[i] = UniPoly(std::move(acc[i]), "x");
        return AffineZPoly(std::move(cz));
    }

    bool is_zero() const { return cz_.empty(); }
    long degree_z() const { return static_cast<long>(cz_.size()) - 1; }
    long degree_x() const {
        long d = -1;
        for (const auto& f : cz_) d = std::max(d, f.degree());
        return d;
    }
    const std::vector<UniPoly>& coeffs() const { return cz_; }
    UniPoly coeff_z(std::size_t j) const {
        return j < cz_.size() ? cz_[j] : UniPoly("x");
    }

    friend bool operator==(const AffineZPoly& a, const AffineZPoly& b) {
        return a.cz_ == b.cz_;
    }

    Rational evaluate(const Rational& x, const Rational& z) const {
        Rational acc(0);
        for (auto it = cz_.rbegin(); it != cz_.rend(); ++it) acc = acc * z + it->eval(x);
        return acc;
    }

    // z-polynomial above a fixed x
    UniPoly at_x(const Rational& x0) const {
        std::vector<Rational> c(cz_.size());
        for (std::size_t i = 0; i < cz_.size(); ++i) c[i] = cz_[i].eval(x0);
        return UniPoly(std::move(c), "z");
    }

    // x -> x^s in every coefficient
    AffineZPoly substitute_power(unsigned s) const {
        assert(s >= 1);
        std::vector<UniPoly> r(cz_.size());
        for (std::size_t i = 0; i < cz_.size(); ++i) r[i] = cz_[i].substitute_power(s);
        return AffineZPoly(std::move(r));
    }

    // x -> t0 * x^s
    AffineZPoly substitute_scaled_power(const Rational& t0, unsigned s) const {
        std::vector<UniPoly> r(cz_.size());
        for (std::size_t i = 0; i < cz_.size(); ++i)
            r[i] = cz_[i].substitute_scaled_power(t0, s);
        return AffineZPoly(std::move(r));
    }

    std::string str(const std::string& zname = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (long j = degree_z(); j >= 0; --j) {
            const UniPoly& f = cz_[static_cast<std::size_t>(j)];
            if (f.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (j == 0) {
                out += f.str();
                continue;
            }
            std::string zpow = zname + (j > 1 ? "^" + std::to_string(j) : "");
            if (f.degree() == 0 && f.coeff(0) == Rational(1)) {
                out += zpow;
            } else if (f.degree() == 0) {
                out += f.coeff(0).str() + "*" + zpow;
            } else {
                out += "(" + f.str() + ")*" + zpow;
            }
        }
        return out;
    }

private:
    void trim() {
        while (!cz_.empty() && cz_.back().is_zero()) cz_.pop_back();
    }

    std::vector<UniPoly> cz_;
};

namespace detail {

// bivariate integer polynomials, z-major: v[j] is the x-coefficient of z^j
using BivInt = std::vector<IntPoly>;

inline void biv_trim(BivInt& f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
}

inline IntPoly biv_content_x(const BivInt& f) {
    IntPoly g;
    for (const auto& row : f) g = ip_gcd(g, row);
    return g;
}

inline BivInt biv_divide_content(const BivInt& f, const IntPoly& c) {
    BivInt r;
    for (const auto& row : f) r.push_back(row.empty() ? IntPoly{} : ip_divexact(row, c));
    return r;
}

inline BivInt biv_mulrow(const BivInt& f, const IntPoly& c) {
    BivInt r;
    for (const auto& row : f) r.push_back(ip_mul(row, c));
    biv_trim(r);
    return r;
}

// pseudo-remainder in z with IntPoly coefficients
inline BivInt biv_prem_z(BivInt a, const BivInt& b) {
    biv_trim(a);
    assert(!b.empty());
    long db = static_cast<long>(b.size()) - 1;
    const IntPoly& lb = b.back();
    while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
        long k = static_cast<long>(a.size()) - 1 - db;
        IntPoly la = a.back();
        a = biv_mulrow(a, lb);
        for (long j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(k + j)] =
                ip_sub(a[static_cast<std::size_t>(k + j)], ip_mul(la, b[static_cast<std::size_t>(j)]));
        biv_trim(a);
    }
    return a;
}

} // namespace detail

// gcd of two bivariate polynomials with rational coefficients, returned as a
// primitive integer bivariate (content in x split off and gcd-ed back in).
// Primitive PRS in z; desk-scale degrees keep the coefficient growth tame.
inline AffineZPoly biv_gcd(const AffineZPoly& fq, const AffineZPoly& gq) {
    auto to_int = [](const AffineZPoly& p) {
        Integer den(1);
        for (const auto& row : p.coeffs())
            for (const auto& c : row.coeffs())
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        detail::BivInt r;
        for (const auto& row : p.coeffs()) {
            IntPoly ip(row.coeffs().size());
            for (std::size_t i = 0; i < row.coeffs().size(); ++i) {
                const Rational& c = row.coeffs()[i];
                ip[i] = c.num() * (den / c.den());
            }
            ip_trim(ip);
            r.push_back(std::move(ip));
        }
        detail::biv_trim(r);
        return r;
    };
    auto to_affine = [](const detail::BivInt& p) {
        std::vector<UniPoly> rows;
        for (const auto& row : p) rows.push_back(UniPoly::from_int(row, "x"));
        return AffineZPoly(std::move(rows));
    };

    detail::BivInt a = to_int(fq), b = to_int(gq);
    if (a.empty()) return to_affine(b);
    if (b.empty()) return to_affine(a);

    IntPoly ca = detail::biv_content_x(a), cb = detail::biv_content_x(b);
    a = detail::biv_divide_content(a, ca);
    b = detail::biv_divide_content(b, cb);
    IntPoly cg = ip_gcd(ca, cb);

    if (a.size() < b.size()) std::swap(a, b);
    while (true) {
        if (b.size() == 1) {
            // x-primitive operands sharing a z-free poly are coprime in z;
            // only the x-content gcd survives
            return to_affine(detail::BivInt{cg});
        }
        detail::BivInt r = detail::biv_prem_z(a, b);
        if (r.empty()) {
            detail::BivInt prim = detail::biv_divide_content(b, detail::biv_content_x(b));
            return to_affine(detail::biv_mulrow(prim, cg));
        }
        IntPoly cr = detail::biv_content_x(r);
        a = std::move(b);
        b = detail::biv_divide_content(r, cr);
    }
}

inline AffineZPoly biv_gcd(const AffineZPoly& a, const AffineZPoly& b, const AffineZPoly& c) {
    return biv_gcd(biv_gcd(a, b), c);
}

// Res_z of two bivariate polynomials, computed fraction-free: denominators
// are cleared, the Sylvester matrix is built with integer-polynomial entries
// and eliminated Bareiss-style, and the cleared factors are divided back out.
inline UniPoly resultant_z(const AffineZPoly& f, const AffineZPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroInput("resultant of zero polynomial");
    long m = f.degree_z(), n = g.degree_z();

    // clear denominators: lcm over every rational coefficient of the operand
    auto clear = [](const AffineZPoly& p) {
        Integer den(1);
        for (const auto& row : p.coeffs())
            for (const auto& c : row.coeffs())
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        std::vector<IntPoly> rows;
        for (const auto& row : p.coeffs()) {
            IntPoly ip(row.coeffs().size());
            for (std::size_t i = 0; i < row.coeffs().size(); ++i) {
                const Rational& c = row.coeffs()[i];
                ip[i] = c.num() * (den / c.den());
            }
            ip_trim(ip);
            rows.push_back(std::move(ip));
        }
        return std::pair<std::vector<IntPoly>, Integer>{std::move(rows), den};
    };
    auto [fi, df] = clear(f);
    auto [gi, dg] = clear(g);

    Rational unscale = Rational(Integer(1), Integer(1));
    unscale = Rational(1) / (Rational(df).pow(n) * Rational(dg).pow(m));

    if (m == 0 && n == 0) return UniPoly::constant(Rational(1), "x");
    IntPolyOps ops;
    if (m == 0 || n == 0) {
        const IntPoly& base = (m == 0) ? fi[0] : gi[0];
        long e = (m == 0) ? n : m;
        IntPoly acc = ops.one();
        for (long i = 0; i < e; ++i) acc = ip_mul(acc, base);
        return unscale * UniPoly::from_int(acc, "x");
    }

    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<IntPoly>> s(size, std::vector<IntPoly>(size));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = fi[static_cast<std::size_t>(m - j)];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = gi[static_cast<std::size_t>(n - j)];
    IntPoly det = bareiss_determinant(std::move(s), ops);
    return unscale * UniPoly::from_int(det, "x");
}

} // namespace curveprog

#endif

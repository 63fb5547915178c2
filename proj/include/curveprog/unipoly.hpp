#ifndef CURVEPROG_UNIPOLY_HPP
#define CURVEPROG_UNIPOLY_HPP

#include <algorithm>
#include <cassert>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "curveprog/rational.hpp"

namespace curveprog {

// ---------------------------------------------------------------------------
// Integer polynomials (dense, lowest degree first). Internal workhorse for
// gcd/resultant computations where fraction-free arithmetic keeps
// coefficients under control.
// ---------------------------------------------------------------------------

using IntPoly = std::vector<Integer>;

inline void ip_trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long ip_degree(const IntPoly& f) { return static_cast<long>(f.size()) - 1; }

inline bool ip_is_zero(const IntPoly& f) { return f.empty(); }

inline IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ip_trim(r);
    return r;
}

inline IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ip_trim(r);
    return r;
}

inline IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ip_trim(r);
    return r;
}

inline IntPoly ip_scale(const IntPoly& a, const Integer& c) {
    if (c == 0) return {};
    IntPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

// Division known to be exact; asserts if a remainder appears.
inline IntPoly ip_divexact(const IntPoly& a, const IntPoly& b) {
    assert(!b.empty());
    if (a.empty()) return {};
    assert(a.size() >= b.size());
    IntPoly rem = a, q(a.size() - b.size() + 1, Integer(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Integer c = rem[i + b.size() - 1];
        if (c == 0) continue;
        assert(c % b.back() == 0);
        c /= b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
    }
    for ([[maybe_unused]] const auto& x : rem) assert(x == 0);
    return q;
}

inline Integer ip_content(const IntPoly& f) {
    Integer g(0);
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g; // 0 for the zero polynomial
}

// Primitive part with positive leading coefficient.
inline IntPoly ip_primitive(const IntPoly& f) {
    if (f.empty()) return {};
    Integer c = ip_content(f);
    if (sgn(f.back()) < 0) c = -c;
    IntPoly r = f;
    for (auto& x : r) x /= c;
    return r;
}

// prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
inline IntPoly ip_pseudo_rem(IntPoly a, const IntPoly& b) {
    assert(!b.empty());
    long db = ip_degree(b);
    long e = ip_degree(a) - db + 1;
    if (e <= 0) return a;
    const Integer& lb = b.back();
    while (!a.empty() && ip_degree(a) >= db) {
        long k = ip_degree(a) - db;
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (long j = 0; j <= db; ++j) a[static_cast<std::size_t>(k + j)] -= la * b[j];
        ip_trim(a);
        --e;
    }
    Integer scale(1);
    for (long i = 0; i < e; ++i) scale *= lb;
    for (auto& c : a) c *= scale;
    return a;
}

// Subresultant polynomial remainder sequence; returns the last nonzero
// remainder in primitive form, i.e. gcd of the primitive parts.
inline IntPoly ip_gcd(IntPoly a, IntPoly b) {
    ip_trim(a);
    ip_trim(b);
    if (a.empty()) return ip_primitive(b);
    if (b.empty()) return ip_primitive(a);
    a = ip_primitive(a);
    b = ip_primitive(b);
    if (ip_degree(a) < ip_degree(b)) std::swap(a, b);
    Integer g(1), h(1);
    while (true) {
        long delta = ip_degree(a) - ip_degree(b);
        IntPoly r = ip_pseudo_rem(a, b);
        if (r.empty()) return ip_primitive(b);
        if (ip_degree(r) == 0) return {Integer(1)};
        a = b;
        Integer divisor = g;
        for (long i = 0; i < delta; ++i) divisor *= h;
        b = r;
        for (auto& c : b) c /= divisor;
        g = a.back();
        if (delta >= 1) {
            // h <- g^delta / h^(delta-1), exact by the subresultant theory
            Integer hp(1);
            for (long i = 0; i < delta; ++i) hp *= g;
            Integer hd(1);
            for (long i = 0; i < delta - 1; ++i) hd *= h;
            h = hp / hd;
        }
    }
}

// ---------------------------------------------------------------------------
// Fraction-free (Bareiss) determinant, generic over an integral domain with
// exact division. Used with Integer entries for scalar resultants and with
// IntPoly entries for resultants of bivariate polynomials.
// ---------------------------------------------------------------------------

template <class R, class Ops>
R bareiss_determinant(std::vector<std::vector<R>> m, const Ops& ops) {
    const std::size_t n = m.size();
    if (n == 0) return ops.one();
    bool negate = false;
    R prev = ops.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ops.is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && ops.is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return ops.zero();
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = ops.sub(ops.mul(m[i][j], m[k][k]), ops.mul(m[i][k], m[k][j]));
                m[i][j] = ops.divexact(num, prev);
            }
            m[i][k] = ops.zero();
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? ops.neg(det) : det;
}

struct IntegerOps {
    Integer zero() const { return Integer(0); }
    Integer one() const { return Integer(1); }
    bool is_zero(const Integer& a) const { return a == 0; }
    Integer mul(const Integer& a, const Integer& b) const { return a * b; }
    Integer sub(const Integer& a, const Integer& b) const { return a - b; }
    Integer neg(const Integer& a) const { return -a; }
    Integer divexact(const Integer& a, const Integer& b) const {
        assert(b != 0 && a % b == 0);
        return a / b;
    }
};

struct IntPolyOps {
    IntPoly zero() const { return {}; }
    IntPoly one() const { return {Integer(1)}; }
    bool is_zero(const IntPoly& a) const { return a.empty(); }
    IntPoly mul(const IntPoly& a, const IntPoly& b) const { return ip_mul(a, b); }
    IntPoly sub(const IntPoly& a, const IntPoly& b) const { return ip_sub(a, b); }
    IntPoly neg(const IntPoly& a) const { return ip_scale(a, Integer(-1)); }
    IntPoly divexact(const IntPoly& a, const IntPoly& b) const { return ip_divexact(a, b); }
};

// Resultant of integer polynomials via Bareiss on the Sylvester matrix.
inline Integer ip_resultant(const IntPoly& f, const IntPoly& g) {
    long m = ip_degree(f), n = ip_degree(g);
    assert(m >= 0 && n >= 0);
    if (m == 0 && n == 0) return Integer(1);
    if (m == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, Integer(0)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
    return bareiss_determinant(std::move(s), IntegerOps{});
}

// ---------------------------------------------------------------------------
// Univariate polynomials over the rationals.
// ---------------------------------------------------------------------------

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::vector<Rational> coeffs, std::string var = "z")
        : c_(std::move(coeffs)), var_(std::move(var)) {
        trim();
    }
    static UniPoly constant(const Rational& c, std::string var = "z") {
        return UniPoly({c}, std::move(var));
    }
    static UniPoly identity(std::string var = "z") {
        return UniPoly({Rational(0), Rational(1)}, std::move(var));
    }
    static UniPoly from_int(const IntPoly& f, std::string var = "z") {
        std::vector<Rational> c;
        c.reserve(f.size());
        for (const auto& x : f) c.emplace_back(x);
        return UniPoly(std::move(c), std::move(var));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Rational(0);
    }
    const Rational& lc() const {
        assert(!c_.empty());
        return c_.back();
    }

    // coefficient comparison only; the variable symbol is presentation
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return a.c_ != b.c_; }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r), a.var_);
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r), a.var_);
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        UniPoly r = a;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(var_);
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(long(i)) * c_[i];
        return UniPoly(std::move(r), var_);
    }

    // f(x) -> f(t0 * x^s)
    UniPoly substitute_scaled_power(const Rational& t0, unsigned s) const {
        assert(s >= 1);
        if (is_zero()) return *this;
        std::vector<Rational> r(static_cast<std::size_t>(degree()) * s + 1, Rational(0));
        Rational t0k(1);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (!c_[k].is_zero()) r[k * s] = c_[k] * t0k;
            t0k *= t0;
        }
        return UniPoly(std::move(r), var_);
    }

    // f(x) -> f(x^s)
    UniPoly substitute_power(unsigned s) const {
        return substitute_scaled_power(Rational(1), s);
    }

    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        assert(!d.is_zero());
        UniPoly q(var_), r = *this;
        if (degree() < d.degree()) return {q, r};
        q.c_.assign(static_cast<std::size_t>(degree() - d.degree()) + 1, Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.lc() / d.lc();
            long k = r.degree() - d.degree();
            q.c_[static_cast<std::size_t>(k)] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[static_cast<std::size_t>(k) + i] -= f * d.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    bool divides(const UniPoly& f) const { // *this | f
        if (is_zero()) return f.is_zero();
        return f.divmod(*this).second.is_zero();
    }

    // content c and primitive integer part P with c * P == *this, lc(P) > 0
    std::pair<Rational, IntPoly> primitive_int() const {
        if (is_zero()) return {Rational(0), IntPoly{}};
        Integer den(1);
        for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.den().get_mpz_t());
        IntPoly scaled(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            scaled[i] = c_[i].num() * (den / c_[i].den());
        Integer cont = ip_content(scaled);
        if (sgn(scaled.back()) < 0) cont = -cont;
        for (auto& x : scaled) x /= cont;
        return {Rational(cont, den), scaled};
    }

    UniPoly primitive_part() const {
        auto [c, p] = primitive_int();
        (void)c;
        return from_int(p, var_);
    }

    UniPoly monic() const {
        assert(!is_zero());
        Rational inv = lc().inverse();
        return inv * *this;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const Rational& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            Rational a = c.abs();
            if (out.empty()) {
                if (c.signum() < 0) out += "-";
            } else {
                out += c.signum() < 0 ? " - " : " + ";
            }
            bool unit = (a == Rational(1)) && i > 0;
            if (!unit) out += a.str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var_;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
        return os << p.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_; // lowest degree first
    std::string var_ = "z";
};

// gcd over Q, returned as the primitive integer form with positive leading
// coefficient (constant 1 when coprime).
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    auto [ca, pa] = a.primitive_int();
    auto [cb, pb] = b.primitive_int();
    (void)ca;
    (void)cb;
    return UniPoly::from_int(ip_gcd(pa, pb), a.var());
}

// Count of distinct roots in an algebraic closure.
inline long distinct_root_count(const UniPoly& f) {
    assert(!f.is_zero());
    if (f.degree() == 0) return 0;
    return f.degree() - gcd(f, f.derivative()).degree();
}

inline bool is_squarefree(const UniPoly& f) {
    return !f.is_zero() && f.degree() >= 1 && gcd(f, f.derivative()).degree() == 0;
}

// Sylvester resultant. For constant inputs Res(a, b) = 1; Res(a, g) = a^deg g.
inline Rational resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroInput("resultant of zero polynomial");
    auto [cf, pf] = f.primitive_int();
    auto [cg, pg] = g.primitive_int();
    Integer base = ip_resultant(pf, pg);
    // Res(c*F, G) = c^deg(G) * Res(F, G)
    return Rational(base) * cf.pow(g.degree()) * cg.pow(f.degree());
}

// Canonical ordering used everywhere factors are listed: by degree, then by
// the dense coefficient vector, lowest degree first.
inline bool canonical_poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = 0; i <= a.degree(); ++i) {
        Rational ca = a.coeff(static_cast<std::size_t>(i));
        Rational cb = b.coeff(static_cast<std::size_t>(i));
        if (ca != cb) return ca < cb;
    }
    return false;
}

} // namespace curveprog

#endif

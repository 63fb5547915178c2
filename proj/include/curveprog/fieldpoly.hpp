#ifndef CURVEPROG_FIELDPOLY_HPP
#define CURVEPROG_FIELDPOLY_HPP

#include <cassert>
#include <cstdint>
#include <tuple>
#include <vector>

#include "curveprog/rational.hpp"
#include "curveprog/unipoly.hpp"

namespace curveprog {

// Dense univariate polynomials over an abstract field. A field object
// carries the context (the prime, the extension modulus, ...) and exposes
// Elem plus arithmetic. One generic gcd then serves F_p, F_{p^e}, Q and
// Q[x]/(q) alike.
template <class F>
using FPoly = std::vector<typename F::Elem>;

template <class F>
void fp_trim(const F& K, FPoly<F>& f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

template <class E>
long fp_degree(const std::vector<E>& f) {
    return static_cast<long>(f.size()) - 1;
}

template <class F>
FPoly<F> fp_add(const F& K, const FPoly<F>& a, const FPoly<F>& b) {
    FPoly<F> r(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.add(r[i], a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    fp_trim(K, r);
    return r;
}

template <class F>
FPoly<F> fp_sub(const F& K, const FPoly<F>& a, const FPoly<F>& b) {
    FPoly<F> r(std::max(a.size(), b.size()), K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = K.add(r[i], a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
    fp_trim(K, r);
    return r;
}

template <class F>
FPoly<F> fp_mul(const F& K, const FPoly<F>& a, const FPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    FPoly<F> r(a.size() + b.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (K.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    }
    fp_trim(K, r);
    return r;
}

template <class F>
FPoly<F> fp_scale(const F& K, const FPoly<F>& a, const typename F::Elem& c) {
    if (K.is_zero(c)) return {};
    FPoly<F> r = a;
    for (auto& x : r) x = K.mul(x, c);
    return r;
}

template <class F>
std::pair<FPoly<F>, FPoly<F>> fp_divmod(const F& K, FPoly<F> a, const FPoly<F>& b) {
    assert(!b.empty());
    if (fp_degree(a) < fp_degree(b)) return {{}, std::move(a)};
    auto binv = K.inv(b.back());
    FPoly<F> q(a.size() - b.size() + 1, K.zero());
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        std::size_t top = static_cast<std::size_t>(i) + b.size() - 1;
        if (top >= a.size() || K.is_zero(a[top])) continue;
        auto c = K.mul(a[top], binv);
        q[static_cast<std::size_t>(i)] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[static_cast<std::size_t>(i) + j] = K.sub(a[static_cast<std::size_t>(i) + j], K.mul(c, b[j]));
    }
    fp_trim(K, a);
    fp_trim(K, q);
    return {std::move(q), std::move(a)};
}

template <class F>
FPoly<F> fp_rem(const F& K, FPoly<F> a, const FPoly<F>& b) {
    return fp_divmod(K, std::move(a), b).second;
}

template <class F>
FPoly<F> fp_make_monic(const F& K, FPoly<F> f) {
    if (f.empty()) return f;
    auto inv = K.inv(f.back());
    for (auto& c : f) c = K.mul(c, inv);
    return f;
}

template <class F>
FPoly<F> fp_gcd(const F& K, FPoly<F> a, FPoly<F> b) {
    fp_trim(K, a);
    fp_trim(K, b);
    while (!b.empty()) {
        auto r = fp_rem(K, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_make_monic(K, std::move(a));
}

// extended gcd: returns (g, s, t) with s*a + t*b = g, g monic
template <class F>
std::tuple<FPoly<F>, FPoly<F>, FPoly<F>> fp_xgcd(const F& K, FPoly<F> a, FPoly<F> b) {
    fp_trim(K, a);
    fp_trim(K, b);
    FPoly<F> s0{K.one()}, s1{}, t0{}, t1{K.one()};
    if (a.empty()) std::swap(s0, t0), std::swap(s1, t1), std::swap(a, b);
    while (!b.empty()) {
        auto [q, r] = fp_divmod(K, a, b);
        a = std::move(b);
        b = std::move(r);
        auto s2 = fp_sub(K, s0, fp_mul(K, q, s1));
        auto t2 = fp_sub(K, t0, fp_mul(K, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty()) return {a, {}, {}};
    auto inv = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, inv);
    for (auto& c : s0) c = K.mul(c, inv);
    for (auto& c : t0) c = K.mul(c, inv);
    return {std::move(a), std::move(s0), std::move(t0)};
}

template <class F>
typename F::Elem fp_eval(const F& K, const FPoly<F>& f, const typename F::Elem& x) {
    auto acc = K.zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = K.add(K.mul(acc, x), *it);
    return acc;
}

template <class F>
FPoly<F> fp_derivative(const F& K, const FPoly<F>& f) {
    if (f.size() <= 1) return {};
    FPoly<F> r(f.size() - 1, K.zero());
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = K.mul_small(f[i], static_cast<long>(i));
    fp_trim(K, r);
    return r;
}

// x^e mod f by binary exponentiation, e an arbitrary-precision integer
template <class F>
FPoly<F> fp_powmod(const F& K, FPoly<F> base, const Integer& e, const FPoly<F>& mod) {
    assert(fp_degree(mod) >= 1);
    FPoly<F> result{K.one()};
    base = fp_rem(K, std::move(base), mod);
    long bits = (e == 0) ? 0 : static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        result = fp_rem(K, fp_mul(K, result, result), mod);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            result = fp_rem(K, fp_mul(K, result, base), mod);
    }
    return result;
}

// ---------------------------------------------------------------------------
// The prime field F_p (p odd, fits in 32 bits throughout this project).
// ---------------------------------------------------------------------------

struct GFpField {
    using Elem = std::uint64_t;
    std::uint64_t p;

    explicit GFpField(std::uint64_t prime) : p(prime) { assert(p >= 2 && p < (1ull << 32)); }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem mul_small(Elem a, long k) const {
        long km = k % static_cast<long>(p);
        if (km < 0) km += static_cast<long>(p);
        return mul(a, static_cast<Elem>(km));
    }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), b = a % p;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        assert(a % p != 0);
        return pow(a % p, p - 2);
    }
    Elem from_integer(const Integer& z) const {
        Integer r = z % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        return r.get_ui();
    }
};

using FpPoly = std::vector<std::uint64_t>;

// ---------------------------------------------------------------------------
// F_{p^e} = F_p[t]/(q), elements reduced mod q.
// ---------------------------------------------------------------------------

struct GFpExtField {
    using Elem = FpPoly; // degree < deg q
    GFpField base;
    FpPoly modulus; // monic irreducible over F_p

    GFpExtField(std::uint64_t p, FpPoly q) : base(p), modulus(std::move(q)) {
        assert(fp_degree(modulus) >= 1);
        assert(modulus.back() == 1);
    }

    Elem zero() const { return {}; }
    Elem one() const { return {1}; }
    bool is_zero(const Elem& a) const { return a.empty(); }
    Elem reduce(FpPoly a) const { return fp_rem(base, std::move(a), modulus); }
    Elem add(const Elem& a, const Elem& b) const { return fp_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return fp_sub(base, a, b); }
    Elem neg(const Elem& a) const { return fp_scale(base, a, base.neg(1 % base.p)); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(fp_mul(base, a, b)); }
    Elem mul_small(const Elem& a, long k) const {
        long km = k % static_cast<long>(base.p);
        if (km < 0) km += static_cast<long>(base.p);
        return fp_scale(base, a, static_cast<std::uint64_t>(km));
    }
    Elem inv(const Elem& a) const {
        auto [g, s, t] = fp_xgcd(base, a, modulus);
        (void)t;
        assert(fp_degree(g) == 0);
        return s;
    }
    Elem embed(std::uint64_t c) const { return c % base.p == 0 ? Elem{} : Elem{c % base.p}; }
    // the residue class of t itself
    Elem generator() const { return reduce(FpPoly{0, 1}); }
};

// ---------------------------------------------------------------------------
// Q and Q[x]/(q) — used by the exact singularity checks.
// ---------------------------------------------------------------------------

struct QField {
    using Elem = Rational;
    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem mul_small(const Elem& a, long k) const { return a * Rational(k); }
    Elem inv(const Elem& a) const { return a.inverse(); }
};

struct NumberField {
    using Elem = std::vector<Rational>; // residues mod the defining polynomial
    QField base;
    std::vector<Rational> modulus; // monic irreducible over Q

    explicit NumberField(const UniPoly& q) {
        assert(q.degree() >= 1);
        UniPoly m = q.monic();
        modulus = m.coeffs();
    }

    Elem zero() const { return {}; }
    Elem one() const { return {Rational(1)}; }
    bool is_zero(const Elem& a) const { return a.empty(); }
    Elem reduce(std::vector<Rational> a) const { return fp_rem(base, std::move(a), modulus); }
    Elem add(const Elem& a, const Elem& b) const { return fp_add(base, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return fp_sub(base, a, b); }
    Elem neg(const Elem& a) const { return fp_scale(base, a, Rational(-1)); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(fp_mul(base, a, b)); }
    Elem mul_small(const Elem& a, long k) const { return fp_scale(base, a, Rational(k)); }
    Elem inv(const Elem& a) const {
        auto [g, s, t] = fp_xgcd(base, a, modulus);
        (void)t;
        assert(fp_degree(g) == 0);
        return s;
    }
    Elem embed(const Rational& c) const { return c.is_zero() ? Elem{} : Elem{c}; }
    Elem generator() const { return reduce({Rational(0), Rational(1)}); }
};

} // namespace curveprog

#endif

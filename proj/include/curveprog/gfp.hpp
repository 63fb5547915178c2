#ifndef CURVEPROG_GFP_HPP
#define CURVEPROG_GFP_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "curveprog/errors.hpp"
#include "curveprog/fieldpoly.hpp"
#include "curveprog/homogpoly.hpp"

namespace curveprog {

// ---------------------------------------------------------------------------
// Factorization over F_p: characteristic-p squarefree decomposition,
// distinct-degree splitting, Cantor-Zassenhaus equal-degree splitting. The
// random choices come from a fixed-seed generator so identical inputs give
// identical factor sequences.
// ---------------------------------------------------------------------------

inline FpPoly fp_pth_root(const GFpField& K, const FpPoly& f) {
    // over the prime field, f = u(x)^p iff f = u(x^p) coefficientwise
    FpPoly u((f.size() - 1) / K.p + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        assert(i % K.p == 0);
        u[i / K.p] = f[i];
    }
    return u;
}

inline std::vector<std::pair<FpPoly, unsigned>> fp_squarefree_decomposition(const GFpField& K,
                                                                            FpPoly f) {
    std::vector<std::pair<FpPoly, unsigned>> out;
    f = fp_make_monic(K, std::move(f));
    if (fp_degree(f) < 1) return out;
    FpPoly df = fp_derivative(K, f);
    if (df.empty()) {
        for (auto& [g, m] : fp_squarefree_decomposition(K, fp_pth_root(K, f)))
            out.emplace_back(g, m * static_cast<unsigned>(K.p));
        return out;
    }
    FpPoly c = fp_gcd(K, f, df);
    FpPoly w = fp_divmod(K, f, c).first;
    unsigned i = 1;
    while (fp_degree(w) > 0) {
        FpPoly y = fp_gcd(K, w, c);
        FpPoly z = fp_divmod(K, w, y).first;
        if (fp_degree(z) > 0) out.emplace_back(z, i);
        w = std::move(y);
        c = fp_divmod(K, c, w).first;
        ++i;
    }
    if (fp_degree(c) > 0)
        for (auto& [g, m] : fp_squarefree_decomposition(K, fp_pth_root(K, c)))
            out.emplace_back(g, m * static_cast<unsigned>(K.p));
    return out;
}

// distinct-degree: returns (product of irreducibles of degree d, d)
inline std::vector<std::pair<FpPoly, long>> fp_distinct_degree(const GFpField& K, FpPoly f) {
    std::vector<std::pair<FpPoly, long>> out;
    f = fp_make_monic(K, std::move(f));
    FpPoly x{0, 1};
    FpPoly h = x;
    long d = 0;
    while (fp_degree(f) > 2 * d) {
        ++d;
        h = fp_powmod(K, h, Integer(static_cast<unsigned long>(K.p)), f);
        FpPoly g = fp_gcd(K, fp_sub(K, h, x), f);
        if (fp_degree(g) > 0) {
            out.emplace_back(g, d);
            f = fp_divmod(K, f, g).first;
            h = fp_rem(K, h, f);
        }
    }
    if (fp_degree(f) > 0) out.emplace_back(f, fp_degree(f));
    return out;
}

// equal-degree Cantor-Zassenhaus for odd p
inline void fp_equal_degree(const GFpField& K, const FpPoly& f, long d,
                            std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (fp_degree(f) == d) {
        out.push_back(fp_make_monic(K, f));
        return;
    }
    assert(K.p % 2 == 1);
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(K.p), static_cast<unsigned long>(d));
    Integer e = (q - 1) / 2;
    while (true) {
        FpPoly a(static_cast<std::size_t>(fp_degree(f)), 0);
        for (auto& c : a) c = rng() % K.p;
        fp_trim(K, a);
        if (fp_degree(a) < 1) continue;
        FpPoly g = fp_gcd(K, a, f);
        if (fp_degree(g) > 0 && fp_degree(g) < fp_degree(f)) {
            fp_equal_degree(K, g, d, rng, out);
            fp_equal_degree(K, fp_divmod(K, f, g).first, d, rng, out);
            return;
        }
        FpPoly b = fp_powmod(K, a, e, f);
        b = fp_sub(K, b, FpPoly{1});
        g = fp_gcd(K, b, f);
        if (fp_degree(g) > 0 && fp_degree(g) < fp_degree(f)) {
            fp_equal_degree(K, g, d, rng, out);
            fp_equal_degree(K, fp_divmod(K, f, g).first, d, rng, out);
            return;
        }
    }
}

// canonical order for mod-p factors: degree, then coefficient vector
inline bool fp_poly_less(const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Complete monic factorization over F_p.
inline std::vector<std::pair<FpPoly, unsigned>> fp_factor(const GFpField& K, const FpPoly& f) {
    assert(fp_degree(f) >= 1);
    std::mt19937_64 rng(0x5eedc0de5eedc0deULL);
    std::vector<std::pair<FpPoly, unsigned>> out;
    for (const auto& [part, mult] : fp_squarefree_decomposition(K, f)) {
        for (const auto& [prod, d] : fp_distinct_degree(K, part)) {
            std::vector<FpPoly> irr;
            fp_equal_degree(K, prod, d, rng, irr);
            for (auto& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return fp_poly_less(a.first, b.first); });
    return out;
}

inline bool fp_is_squarefree(const GFpField& K, const FpPoly& f) {
    FpPoly df = fp_derivative(K, f);
    if (df.empty()) return false;
    return fp_degree(fp_gcd(K, f, df)) == 0;
}

// ---------------------------------------------------------------------------
// Trivariate homogeneous polynomials over F_p and reduction from Q.
// ---------------------------------------------------------------------------

struct HomogPolyP {
    std::uint64_t p = 0;
    int degree = 0;
    std::map<Exp3, std::uint64_t> terms; // nonzero coefficients only

    bool is_zero() const { return terms.empty(); }

    HomogPolyP partial(int var) const {
        HomogPolyP r{p, degree > 0 ? degree - 1 : 0, {}};
        for (const auto& [e, c] : terms) {
            int k = e[static_cast<std::size_t>(var)];
            std::uint64_t nc = (c * (static_cast<std::uint64_t>(k) % p)) % p;
            if (nc == 0) continue;
            Exp3 ne = e;
            --ne[static_cast<std::size_t>(var)];
            r.terms[ne] = (r.terms.count(ne) ? (r.terms[ne] + nc) % p : nc);
            if (r.terms[ne] == 0) r.terms.erase(ne);
        }
        return r;
    }

    std::uint64_t evaluate(std::uint64_t x, std::uint64_t y, std::uint64_t z) const {
        GFpField K(p);
        std::uint64_t acc = 0;
        for (const auto& [e, c] : terms) {
            std::uint64_t t = c;
            t = K.mul(t, K.pow(x, static_cast<std::uint64_t>(e[0])));
            t = K.mul(t, K.pow(y, static_cast<std::uint64_t>(e[1])));
            t = K.mul(t, K.pow(z, static_cast<std::uint64_t>(e[2])));
            acc = K.add(acc, t);
        }
        return acc;
    }
};

// Shared power table so point enumeration over P^2(F_p) costs lookups, not
// repeated binary exponentiation.
struct FpEvaluator {
    std::uint64_t p;
    int maxexp;
    std::vector<std::uint64_t> table; // table[v * (maxexp+1) + e] = v^e

    FpEvaluator(std::uint64_t prime, int degree) : p(prime), maxexp(degree) {
        table.assign(p * static_cast<std::uint64_t>(maxexp + 1), 1);
        for (std::uint64_t v = 0; v < p; ++v) {
            std::uint64_t* row = &table[v * static_cast<std::uint64_t>(maxexp + 1)];
            row[0] = 1;
            for (int e = 1; e <= maxexp; ++e) row[e] = (row[e - 1] * v) % p;
        }
    }

    std::uint64_t pw(std::uint64_t v, int e) const {
        return table[v * static_cast<std::uint64_t>(maxexp + 1) + static_cast<std::uint64_t>(e)];
    }

    std::uint64_t eval(const HomogPolyP& f, std::uint64_t x, std::uint64_t y,
                       std::uint64_t z) const {
        std::uint64_t acc = 0;
        for (const auto& [e, c] : f.terms) {
            std::uint64_t t = (c * pw(x, e[0])) % p;
            t = (t * pw(y, e[1])) % p;
            t = (t * pw(z, e[2])) % p;
            acc = (acc + t) % p;
        }
        return acc;
    }
};

// Coefficientwise reduction. Fails if p divides any denominator or if the
// whole polynomial vanishes mod p (for homogeneous input a vanishing
// reduction is exactly a total-degree drop).
inline HomogPolyP reduce_mod_p(const HomogPoly& F, std::uint64_t p) {
    GFpField K(p);
    HomogPolyP r{p, F.degree(), {}};
    for (const auto& [e, c] : F.terms()) {
        if (mpz_divisible_ui_p(c.den().get_mpz_t(), p))
            throw BadReductionPrime("denominator of coefficient " + c.str() +
                                    " vanishes mod " + std::to_string(p));
        std::uint64_t num = K.from_integer(c.num());
        std::uint64_t den = K.from_integer(c.den());
        std::uint64_t v = K.mul(num, K.inv(den));
        if (v != 0) r.terms[e] = v;
    }
    if (!F.is_zero() && r.terms.empty())
        throw BadReductionPrime("total degree drops mod " + std::to_string(p));
    return r;
}

// ---------------------------------------------------------------------------
// Bivariate (x, z) polynomials over F_p: the y = 1 chart of a reduced curve.
// ---------------------------------------------------------------------------

struct AffineZPolyP {
    std::vector<FpPoly> cz; // index = z-degree, entries polynomials in x

    bool is_zero() const { return cz.empty(); }
    long degree_z() const { return static_cast<long>(cz.size()) - 1; }
    long degree_x() const {
        long d = -1;
        for (const auto& f : cz) d = std::max(d, fp_degree(f));
        return d;
    }
    void trim(const GFpField& K) {
        for (auto& f : cz) fp_trim(K, f);
        while (!cz.empty() && cz.back().empty()) cz.pop_back();
    }
    bool depends_on_z() const { return degree_z() >= 1; }

    FpPoly at_x(const GFpField& K, std::uint64_t x0) const {
        FpPoly r(cz.size(), 0);
        for (std::size_t i = 0; i < cz.size(); ++i) r[i] = fp_eval(K, cz[i], x0 % K.p);
        fp_trim(K, r);
        return r;
    }

    // coefficients of z^j collected as an x-polynomial; zero if absent
    const FpPoly& coeff_z(std::size_t j) const {
        static const FpPoly kZero{};
        return j < cz.size() ? cz[j] : kZero;
    }
};

inline AffineZPolyP dehomog_y(const HomogPolyP& F) {
    AffineZPolyP r;
    r.cz.assign(static_cast<std::size_t>(F.degree) + 1, FpPoly{});
    for (const auto& [e, c] : F.terms) {
        auto& row = r.cz[static_cast<std::size_t>(e[2])];
        if (row.size() <= static_cast<std::size_t>(e[0]))
            row.resize(static_cast<std::size_t>(e[0]) + 1, 0);
        row[static_cast<std::size_t>(e[0])] = (row[static_cast<std::size_t>(e[0])] + c) % F.p;
    }
    GFpField K(F.p);
    r.trim(K);
    return r;
}

// gcd of bivariate polynomials over F_p, z-major coefficient lists.
// Primitive PRS in z over the Euclidean coefficient ring F_p[x].
namespace bivp {

inline void trim(AffineZPolyP& f, const GFpField& K) { f.trim(K); }

inline FpPoly content_x(const GFpField& K, const AffineZPolyP& f) {
    FpPoly g;
    for (const auto& row : f.cz) g = fp_gcd(K, g, row);
    return g;
}

inline AffineZPolyP divide_content(const GFpField& K, const AffineZPolyP& f, const FpPoly& c) {
    AffineZPolyP r;
    for (const auto& row : f.cz)
        r.cz.push_back(row.empty() ? FpPoly{} : fp_divmod(K, row, c).first);
    return r;
}

inline AffineZPolyP mulrow(const GFpField& K, const AffineZPolyP& f, const FpPoly& c) {
    AffineZPolyP r;
    for (const auto& row : f.cz) r.cz.push_back(fp_mul(K, row, c));
    r.trim(K);
    return r;
}

inline AffineZPolyP prem_z(const GFpField& K, AffineZPolyP a, const AffineZPolyP& b) {
    a.trim(K);
    long db = b.degree_z();
    const FpPoly& lb = b.cz.back();
    while (a.degree_z() >= db && !a.is_zero()) {
        long k = a.degree_z() - db;
        FpPoly la = a.cz.back();
        a = mulrow(K, a, lb);
        for (long j = 0; j <= db; ++j) {
            auto& slot = a.cz[static_cast<std::size_t>(k + j)];
            slot = fp_sub(K, slot, fp_mul(K, la, b.cz[static_cast<std::size_t>(j)]));
        }
        a.trim(K);
    }
    return a;
}

} // namespace bivp

inline AffineZPolyP fp_biv_gcd(const GFpField& K, AffineZPolyP a, AffineZPolyP b) {
    a.trim(K);
    b.trim(K);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    FpPoly ca = bivp::content_x(K, a), cb = bivp::content_x(K, b);
    a = bivp::divide_content(K, a, ca);
    b = bivp::divide_content(K, b, cb);
    FpPoly cg = fp_gcd(K, ca, cb);

    if (a.cz.size() < b.cz.size()) std::swap(a, b);
    while (true) {
        if (b.cz.size() == 1) return AffineZPolyP{{cg}};
        AffineZPolyP r = bivp::prem_z(K, a, b);
        if (r.is_zero()) {
            AffineZPolyP prim = bivp::divide_content(K, b, bivp::content_x(K, b));
            return bivp::mulrow(K, prim, cg);
        }
        a = std::move(b);
        b = bivp::divide_content(K, r, bivp::content_x(K, r));
    }
}

inline std::uint64_t fp_det(const GFpField& K, std::vector<std::vector<std::uint64_t>> m) {
    std::size_t n = m.size();
    std::uint64_t det = K.one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = K.neg(det);
        }
        det = K.mul(det, m[k][k]);
        std::uint64_t inv = K.inv(m[k][k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            std::uint64_t f = K.mul(m[i][k], inv);
            for (std::size_t j = k; j < n; ++j)
                m[i][j] = K.sub(m[i][j], K.mul(f, m[k][j]));
        }
    }
    return det;
}

// Res_z over F_p[x] by evaluation and Lagrange interpolation. The Sylvester
// shape is fixed from the symbolic z-degrees, so evaluation commutes with
// the determinant even where leading coefficients vanish at a sample point.
inline FpPoly fp_resultant_z(const GFpField& K, const AffineZPolyP& f, const AffineZPolyP& g) {
    long m = f.degree_z(), n = g.degree_z();
    assert(m >= 0 && n >= 0);
    if (m == 0 && n == 0) return FpPoly{1};
    if (m == 0) {
        FpPoly acc{1};
        for (long i = 0; i < n; ++i) acc = fp_mul(K, acc, f.coeff_z(0));
        return acc;
    }
    if (n == 0) {
        FpPoly acc{1};
        for (long i = 0; i < m; ++i) acc = fp_mul(K, acc, g.coeff_z(0));
        return acc;
    }
    long bound = m * std::max<long>(g.degree_x(), 0) + n * std::max<long>(f.degree_x(), 0);
    if (bound + 1 > static_cast<long>(K.p))
        throw BadReductionPrime("prime too small for resultant interpolation");

    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::uint64_t> xs, ys;
    for (long t = 0; t <= bound; ++t) {
        std::uint64_t x0 = static_cast<std::uint64_t>(t);
        std::vector<std::vector<std::uint64_t>> s(size, std::vector<std::uint64_t>(size, 0));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j <= m; ++j)
                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                    fp_eval(K, f.coeff_z(static_cast<std::size_t>(m - j)), x0);
        for (long i = 0; i < m; ++i)
            for (long j = 0; j <= n; ++j)
                s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] =
                    fp_eval(K, g.coeff_z(static_cast<std::size_t>(n - j)), x0);
        xs.push_back(x0);
        ys.push_back(fp_det(K, std::move(s)));
    }

    // Lagrange interpolation through (xs, ys)
    FpPoly result{};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0) continue;
        FpPoly basis{1};
        std::uint64_t denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = fp_mul(K, basis, FpPoly{K.neg(xs[j]), 1});
            denom = K.mul(denom, K.sub(xs[i], xs[j]));
        }
        basis = fp_scale(K, basis, K.mul(ys[i], K.inv(denom)));
        result = fp_add(K, result, basis);
    }
    return result;
}

} // namespace curveprog

#endif

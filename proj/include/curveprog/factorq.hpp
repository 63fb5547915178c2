#ifndef CURVEPROG_FACTORQ_HPP
#define CURVEPROG_FACTORQ_HPP

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "curveprog/errors.hpp"
#include "curveprog/gfp.hpp"
#include "curveprog/intfactor.hpp"
#include "curveprog/unipoly.hpp"

namespace curveprog {

// ---------------------------------------------------------------------------
// Polynomial arithmetic modulo p^k with bignum coefficients, used only by
// the Hensel lifting below. Coefficients are kept in [0, m).
// ---------------------------------------------------------------------------

namespace zp {

using Poly = std::vector<Integer>;

inline void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly reduce(Poly f, const Integer& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(f);
    return f;
}

inline Poly add(const Poly& a, const Poly& b, const Integer& m) {
    Poly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return reduce(std::move(r), m);
}

inline Poly sub(const Poly& a, const Poly& b, const Integer& m) {
    Poly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return reduce(std::move(r), m);
}

inline Poly mul(const Poly& a, const Poly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce(std::move(r), m);
}

// division by a monic divisor, valid over Z/m
inline std::pair<Poly, Poly> divmod_monic(Poly a, const Poly& b, const Integer& m) {
    assert(!b.empty() && b.back() == 1);
    if (a.size() < b.size()) return {{}, std::move(a)};
    Poly q(a.size() - b.size() + 1, Integer(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Integer c = a[static_cast<std::size_t>(i) + b.size() - 1] % m;
        if (c < 0) c += m;
        if (c == 0) continue;
        q[static_cast<std::size_t>(i)] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto& slot = a[static_cast<std::size_t>(i) + j];
            slot = (slot - c * b[j]) % m;
        }
    }
    return {reduce(std::move(q), m), reduce(std::move(a), m)};
}

// lift residues to the symmetric range (-m/2, m/2]
inline IntPoly symmetric(const Poly& f, const Integer& m) {
    IntPoly r = f;
    Integer half = m / 2;
    for (auto& c : r)
        if (c > half) c -= m;
    ip_trim(r);
    return r;
}

} // namespace zp

// ---------------------------------------------------------------------------
// Hensel lifting (quadratic step), monic flavor: every polynomial involved
// is monic, which keeps divisions valid over Z/m^2.
// ---------------------------------------------------------------------------

namespace detail {

struct HenselPair {
    zp::Poly g, h; // monic factors, f = g*h mod m
    zp::Poly s, t; // Bezout data, s*g + t*h = 1 mod m
};

// one step: modulus m -> m^2
inline void hensel_step(const zp::Poly& f, HenselPair& pr, const Integer& m) {
    Integer m2 = m * m;
    zp::Poly e = zp::sub(zp::reduce(f, m2), zp::mul(pr.g, pr.h, m2), m2);
    auto [q, r] = zp::divmod_monic(zp::mul(pr.s, e, m2), pr.h, m2);
    zp::Poly g1 = zp::add(zp::add(pr.g, zp::mul(pr.t, e, m2), m2), zp::mul(q, pr.g, m2), m2);
    zp::Poly h1 = zp::add(pr.h, r, m2);

    zp::Poly b = zp::sub(zp::add(zp::mul(pr.s, g1, m2), zp::mul(pr.t, h1, m2), m2), zp::Poly{Integer(1)}, m2);
    auto [c, d] = zp::divmod_monic(zp::mul(pr.s, b, m2), h1, m2);
    zp::Poly s1 = zp::sub(pr.s, d, m2);
    zp::Poly t1 = zp::sub(zp::sub(pr.t, zp::mul(pr.t, b, m2), m2), zp::mul(c, g1, m2), m2);

    pr = {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

// Lift the monic mod-p factors u_i of the monic f to monic factors mod
// p^(2^j) >= target, one cascade pair at a time.
inline std::vector<zp::Poly> hensel_lift_monic(const IntPoly& f_int, const Integer& p,
                                               const std::vector<FpPoly>& us,
                                               const Integer& target, Integer& modulus_out) {
    Integer m = p;
    while (m < target) m *= m;
    modulus_out = m;

    GFpField K(p.get_ui());
    std::vector<zp::Poly> lifted;
    zp::Poly f = zp::reduce(f_int, m);

    // remaining = product of u_j for j > i, over F_p
    std::vector<FpPoly> suffix(us.size() + 1, FpPoly{1});
    for (std::size_t i = us.size(); i-- > 0;)
        suffix[i] = fp_mul(K, us[i], suffix[i + 1]);

    zp::Poly current = f;
    for (std::size_t i = 0; i + 1 < us.size(); ++i) {
        // split current into (u_i, rest) and lift the pair
        auto to_zp = [](const FpPoly& a) {
            zp::Poly r(a.size());
            for (std::size_t j = 0; j < a.size(); ++j) r[j] = Integer(static_cast<unsigned long>(a[j]));
            return r;
        };
        auto [gb, sb, tb] = fp_xgcd(K, us[i], suffix[i + 1]);
        assert(fp_degree(gb) == 0);
        HenselPair pr{to_zp(us[i]), to_zp(suffix[i + 1]), to_zp(sb), to_zp(tb)};
        Integer mm = p;
        while (mm < m) {
            hensel_step(current, pr, mm);
            mm *= mm;
        }
        lifted.push_back(pr.g);
        current = pr.h;
    }
    lifted.push_back(current);
    return lifted;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Factorization over Q.
// ---------------------------------------------------------------------------

struct Factorization {
    Rational unit; // f = unit * prod factors^mult
    std::vector<std::pair<UniPoly, unsigned>> factors; // primitive, positive lc, irreducible

    UniPoly recompose() const {
        UniPoly r = UniPoly::constant(unit);
        for (const auto& [f, m] : factors)
            for (unsigned i = 0; i < m; ++i) r = r * f;
        return r;
    }
};

struct FactorOptions {
    long degree_bound = 24;
    unsigned primes_to_try = 5;
};

inline const FactorOptions& default_factor_options() {
    static const FactorOptions opt;
    return opt;
}

// All rational roots with multiplicity, ordered by |root| ascending with the
// positive one first on ties. Candidates come from divisors of the trailing
// and leading coefficients of the primitive part.
inline std::vector<Rational> rational_roots(const UniPoly& f_in) {
    if (f_in.is_zero()) throw ZeroInput("rational_roots of zero polynomial");
    std::vector<Rational> out;
    if (f_in.degree() == 0) return out;

    auto [cont, P] = f_in.primitive_int();
    (void)cont;
    // strip powers of x
    unsigned val = 0;
    while (P.size() > 1 && P[0] == 0) {
        P.erase(P.begin());
        ++val;
    }
    UniPoly g = UniPoly::from_int(P, f_in.var());
    for (unsigned i = 0; i < val; ++i) out.push_back(Rational(0));
    if (g.degree() < 1) return out;

    auto divisors = [](const Integer& n) {
        std::vector<Integer> ds{Integer(1)};
        for (const auto& [p, e] : factor_integer(n).factors) {
            std::size_t base = ds.size();
            Integer pk(1);
            for (unsigned i = 1; i <= e; ++i) {
                pk *= p;
                for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
            }
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    };

    Integer a0 = g.coeff(0).num(); // integer poly, so num() is the value
    Integer an = g.lc().num();
    std::vector<Rational> candidates;
    for (const Integer& p : divisors(a0))
        for (const Integer& q : divisors(an)) {
            Rational c(p, q);
            if (c.num() != p || c.den() != q) continue; // not coprime, seen elsewhere
            candidates.push_back(c);
        }
    std::sort(candidates.begin(), candidates.end(), [](const Rational& a, const Rational& b) {
        if (a.abs() != b.abs()) return a.abs() < b.abs();
        return a > b; // positive first
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& c : candidates) {
        for (int sign = 0; sign < 2; ++sign) {
            Rational r = sign ? -c : c;
            if (!g.eval(r).is_zero()) continue;
            UniPoly lin({-r, Rational(1)}, f_in.var());
            UniPoly cur = g;
            while (true) {
                auto [q, rem] = cur.divmod(lin);
                if (!rem.is_zero()) break;
                out.push_back(r);
                cur = q;
            }
        }
    }
    // stable presentation: keep discovery order (|r| ascending, + before -)
    return out;
}

// Yun squarefree decomposition over Q; parts are primitive with positive
// leading coefficient, pairwise coprime, listed by ascending multiplicity.
inline std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw ZeroInput("squarefree decomposition needs a nonconstant polynomial");
    std::vector<std::pair<UniPoly, unsigned>> out;
    UniPoly fp = f.primitive_part();
    UniPoly d0 = gcd(fp, fp.derivative());
    UniPoly b = fp.divmod(d0).first;
    UniPoly c = fp.derivative().divmod(d0).first;
    UniPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a.primitive_part(), i);
        b = b.divmod(a).first;
        c = d.divmod(a).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace detail {

// Mignotte-style bound: coefficients of lc(P) * g for any factor g of P are
// at most sqrt(n+1) * 2^n * |P|_inf * |lc(P)|.
inline Integer factor_coeff_bound(const IntPoly& P) {
    long n = ip_degree(P);
    Integer maxc(0);
    for (const auto& c : P) {
        Integer a = ::abs(c);
        if (a > maxc) maxc = a;
    }
    Integer root;
    mpz_sqrt(root.get_mpz_t(), Integer(n + 1).get_mpz_t());
    root += 1;
    Integer b = root * maxc * ::abs(P.back());
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    return b;
}

// Factor a squarefree primitive integer polynomial (positive lc, P(0) != 0,
// degree >= 2) into primitive irreducible integer polynomials.
inline std::vector<IntPoly> factor_squarefree_primitive(IntPoly P, const FactorOptions& opt) {
    std::vector<IntPoly> result;
    const Integer lc0 = P.back();

    // prime selection: smallest good primes >= 17, keep the one with the
    // fewest modular factors among the first few that reduce well
    std::uint64_t chosen_p = 0;
    std::vector<FpPoly> chosen_factors;
    unsigned tried = 0;
    for (std::uint32_t p : primes_below()) {
        if (p < 17) continue;
        if (tried >= opt.primes_to_try) break;
        GFpField K(p);
        if (lc0 % p == 0) continue;
        FpPoly fbar(P.size());
        for (std::size_t i = 0; i < P.size(); ++i) fbar[i] = K.from_integer(P[i]);
        fp_trim(K, fbar);
        if (fp_degree(fbar) != ip_degree(P)) continue;
        if (!fp_is_squarefree(K, fbar)) continue;
        ++tried;
        auto fac = fp_factor(K, fbar);
        std::vector<FpPoly> us;
        us.reserve(fac.size());
        for (auto& [g, m] : fac) {
            assert(m == 1);
            us.push_back(std::move(g));
        }
        if (chosen_p == 0 || us.size() < chosen_factors.size()) {
            chosen_p = p;
            chosen_factors = std::move(us);
        }
    }
    assert(chosen_p != 0); // squarefree integer polys have good primes

    if (chosen_factors.size() == 1) {
        result.push_back(std::move(P));
        return result;
    }

    // lift to exceed twice the Mignotte bound
    Integer p(static_cast<unsigned long>(chosen_p));
    Integer bound = factor_coeff_bound(P);
    Integer target = 2 * bound + 1;
    GFpField K(chosen_p);

    // monic version of P over Z/p^k
    Integer modulus;
    // f_monic = P / lc mod p^k, computed after we know the modulus; the
    // cascade needs the monic integer image up front, so lift the modulus
    // first, then build it.
    {
        Integer m = p;
        while (m < target) m *= m;
        modulus = m;
    }
    Integer lcinv;
    [[maybe_unused]] int ok = mpz_invert(lcinv.get_mpz_t(), lc0.get_mpz_t(), modulus.get_mpz_t());
    assert(ok);
    zp::Poly fmonic(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) fmonic[i] = P[i] * lcinv;
    fmonic = zp::reduce(std::move(fmonic), modulus);
    IntPoly fmonic_int = fmonic; // already in [0, m)

    Integer mod_out;
    std::vector<zp::Poly> lifted =
        detail::hensel_lift_monic(fmonic_int, p, chosen_factors, target, mod_out);
    assert(mod_out == modulus);

    // Zassenhaus recombination over subsets of the lifted factors
    std::vector<std::size_t> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    IntPoly remaining = P;

    auto try_subset = [&](const std::vector<std::size_t>& subset) -> bool {
        Integer lc = remaining.back();
        zp::Poly prod{lc % modulus};
        if (prod[0] < 0) prod[0] += modulus;
        for (std::size_t idx : subset) prod = zp::mul(prod, lifted[idx], modulus);
        IntPoly cand = zp::symmetric(prod, modulus);
        if (cand.empty()) return false;
        // quick trailing-coefficient divisibility prune
        if (remaining[0] != 0 && cand[0] != 0) {
            if ((lc * remaining[0]) % cand[0] != 0) return false;
        }
        IntPoly pp = ip_primitive(cand);
        UniPoly candq = UniPoly::from_int(pp);
        UniPoly remq = UniPoly::from_int(remaining);
        auto [q, r] = remq.divmod(candq);
        if (!r.is_zero()) return false;
        result.push_back(pp);
        auto [qc, qint] = q.primitive_int();
        (void)qc;
        remaining = qint;
        // drop used factor indices
        std::vector<std::size_t> next;
        for (std::size_t idx : alive)
            if (std::find(subset.begin(), subset.end(), idx) == subset.end()) next.push_back(idx);
        alive = std::move(next);
        return true;
    };

    for (std::size_t card = 1; 2 * card <= alive.size();) {
        // enumerate cardinality-card subsets of alive
        std::vector<std::size_t> pick(card);
        bool found = false;
        std::vector<std::size_t> idx(card);
        for (std::size_t i = 0; i < card; ++i) idx[i] = i;
        while (true) {
            for (std::size_t i = 0; i < card; ++i) pick[i] = alive[idx[i]];
            long deg = 0;
            for (std::size_t i : pick) deg += static_cast<long>(lifted[i].size()) - 1;
            if (2 * deg <= ip_degree(remaining) && try_subset(pick)) {
                found = true;
                break;
            }
            // next combination
            long pos = static_cast<long>(card) - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                                   alive.size() - card + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < card; ++i)
                idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++card; // retry same cardinality after a hit
    }

    if (ip_degree(remaining) >= 1) result.push_back(ip_primitive(remaining));
    return result;
}

} // namespace detail

inline Factorization factor_over_Q(const UniPoly& f,
                                   const FactorOptions& opt = default_factor_options()) {
    if (f.is_zero()) throw ZeroInput("factor_over_Q(0)");
    if (f.degree() > opt.degree_bound)
        throw DegreeBoundExceeded("degree " + std::to_string(f.degree()) +
                                  " exceeds the factorization bound " +
                                  std::to_string(opt.degree_bound));
    Factorization out;
    auto [cont, P] = f.primitive_int();
    out.unit = cont;
    if (ip_degree(P) < 1) return out;

    std::vector<std::pair<UniPoly, unsigned>> collected;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        auto [pc, pi] = part.primitive_int();
        (void)pc;
        // strip x^v
        IntPoly Q = pi;
        unsigned val = 0;
        while (Q.size() > 1 && Q[0] == 0) {
            Q.erase(Q.begin());
            ++val;
        }
        if (val > 0)
            collected.emplace_back(UniPoly({Rational(0), Rational(1)}, f.var()), mult);
        if (ip_degree(Q) == 1) {
            collected.emplace_back(UniPoly::from_int(Q, f.var()), mult);
        } else if (ip_degree(Q) >= 2) {
            for (auto& irr : detail::factor_squarefree_primitive(Q, opt))
                collected.emplace_back(UniPoly::from_int(irr, f.var()), mult);
        }
    }
    std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) {
        return canonical_poly_less(a.first, b.first);
    });
    out.factors = std::move(collected);
    return out;
}

inline bool is_irreducible(const UniPoly& f,
                           const FactorOptions& opt = default_factor_options()) {
    if (f.is_zero() || f.degree() < 1)
        throw ZeroInput("irreducibility is about nonconstant polynomials");
    auto fac = factor_over_Q(f, opt);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace curveprog

#endif

// Test-only oracles, deliberately written as naive independent routes so the
// library implementations are checked against something that cannot share
// their bugs.
#ifndef CURVEPROG_TESTS_ORACLES_HPP
#define CURVEPROG_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "curveprog/rational.hpp"
#include "curveprog/unipoly.hpp"

namespace oracles {

using curveprog::Integer;
using curveprog::Rational;

// Plain trial division, no sieve, no rho.
inline std::map<Integer, unsigned> trial_division(Integer n) {
    std::map<Integer, unsigned> out;
    n = abs(n);
    for (Integer p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

// Direct p^2 | D scan. Divisors p <= 10^6 are scanned one by one; what
// remains afterwards has no factor below 10^6, so for |D| <= 10^18 it can
// only be 1, a prime, a square of a prime, or a product of two distinct
// primes. A square-root check settles those, keeping the scan complete
// without a billion-iteration loop.
inline bool is_squarefree_by_scan(const Integer& D) {
    Integer a = abs(D);
    if (a == 0) return false;
    Integer rest = a;
    for (Integer p = 2; p * p <= rest && p <= 1000000; ++p) {
        if (rest % p == 0) {
            rest /= p;
            if (rest % p == 0) return false;
        }
    }
    if (rest > Integer(1000000) * 1000000 * 1000000)
        throw std::runtime_error("squarefree scan oracle limited to cofactors <= 10^18");
    return mpz_perfect_square_p(rest.get_mpz_t()) == 0 || rest == 1;
}

// Longest subset of distinct rationals that can be ordered into an
// arithmetic progression; exhaustive over all subsets, usable for |S| <= 12.
// An AP with nonzero step is strictly monotone, so sorting by value is the
// only candidate order.
inline std::size_t longest_ap_exhaustive(std::vector<Rational> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t n = xs.size(), best = std::min<std::size_t>(n, 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Rational> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(xs[i]);
        if (sub.size() < 2 || sub.size() <= best) continue;
        Rational d = sub[1] - sub[0];
        bool ok = !d.is_zero();
        for (std::size_t i = 2; ok && i < sub.size(); ++i)
            ok = (sub[i] - sub[i - 1]) == d;
        if (ok) best = sub.size();
    }
    return best;
}

// Geometric counterpart. A GP with |ratio| not in {0,1} has strictly
// monotone absolute values, so order by |value|.
inline std::size_t longest_gp_exhaustive(std::vector<Rational> xs) {
    std::sort(xs.begin(), xs.end(), [](const Rational& a, const Rational& b) {
        if (a.abs() != b.abs()) return a.abs() < b.abs();
        return a < b;
    });
    std::size_t n = xs.size(), best = std::min<std::size_t>(n, 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Rational> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(xs[i]);
        if (sub.size() < 2 || sub.size() <= best) continue;
        Rational r = sub[1] / sub[0];
        bool ok = !r.is_zero() && r.abs() != Rational(1);
        for (std::size_t i = 2; ok && i < sub.size(); ++i)
            ok = (sub[i] / sub[i - 1]) == r;
        if (ok) best = sub.size();
    }
    return best;
}

// Reducibility oracle for degree <= 4 over Q: a rational root settles
// degrees 2 and 3; a quartic with no rational root is reducible iff its
// primitive part splits into two integer quadratics. The outer coefficients
// of such a split divide the leading/trailing coefficients and the inner
// ones then satisfy integer linear (or quadratic) identities, so the search
// below is exhaustive.
inline bool reducible_up_to_quartic(const curveprog::UniPoly& f) {
    using curveprog::Integer;
    using curveprog::UniPoly;
    long n = f.degree();
    if (n <= 1) return false;
    auto [cont, P] = f.primitive_int();
    (void)cont;
    UniPoly Pq = UniPoly::from_int(P);

    Integer a0 = P.front(), an = P.back();
    if (a0 == 0) return true; // x divides

    // rational root scan from the definition
    for (Integer p = 1; p <= abs(a0); ++p) {
        if (abs(a0) % p != 0) continue;
        for (Integer q = 1; q <= abs(an); ++q) {
            if (abs(an) % q != 0) continue;
            if (Pq.eval(Rational(p, q)).is_zero()) return true;
            if (Pq.eval(Rational(-p, q)).is_zero()) return true;
        }
    }
    if (n <= 3) return false;

    // two-quadratic split: P = (a2 x^2 + a1 x + c0)(b2 x^2 + b1 x + b0)
    Integer P1 = P[1], P2 = P[2], P3 = P[3];
    auto check = [&](const Integer& a2, const Integer& a1, const Integer& c0) {
        curveprog::IntPoly g{c0, a1, a2};
        return UniPoly::from_int(g).divides(Pq);
    };
    for (Integer a2 = 1; a2 <= abs(an); ++a2) {
        if (abs(an) % a2 != 0) continue;
        Integer b2 = an / a2;
        for (Integer c0a = 1; c0a <= abs(a0); ++c0a) {
            if (abs(a0) % c0a != 0) continue;
            for (int cs = -1; cs <= 1; cs += 2) {
                Integer c0 = cs * c0a;
                Integer b0 = a0 / c0;
                Integer D = b0 * a2 - c0 * b2;
                if (D != 0) {
                    Integer num = P1 * a2 - c0 * P3;
                    if (num % D != 0) continue;
                    Integer a1 = num / D;
                    if (check(a2, a1, c0)) return true;
                } else {
                    // a1 drops out of the linear system; the x^2 coefficient
                    // forces b2*a1^2 - P3*a1 + (P2 - a2*b0 - c0*b2)*a2 = 0
                    Integer M = (P2 - a2 * b0 - c0 * b2) * a2;
                    Integer disc = P3 * P3 - 4 * b2 * M;
                    if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
                    Integer root;
                    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
                    for (int s = -1; s <= 1; s += 2) {
                        Integer num = P3 + s * root;
                        if (num % (2 * b2) != 0) continue;
                        if (check(a2, num / (2 * b2), c0)) return true;
                    }
                }
            }
        }
    }
    return false;
}

// Naive double-loop rational point search: enumerate every reduced p/q up
// to the height bound, build the fiber polynomial by walking the terms of F
// directly, and find its rational roots by plain divisor trial. Independent
// of the library's enumeration, fiber, and root machinery.
inline std::vector<std::pair<Rational, Rational>>
naive_rational_points(const curveprog::HomogPoly& F, long H) {
    using curveprog::Integer;
    std::vector<std::pair<Rational, Rational>> out;
    for (long q = 1; q <= H; ++q) {
        for (long p = -H; p <= H; ++p) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), Integer(p).get_mpz_t(), Integer(q).get_mpz_t());
            if (g != 1) continue;
            Rational x(p, q);
            // fiber coefficients assembled term by term
            std::vector<Rational> cz(static_cast<std::size_t>(F.degree()) + 1, Rational(0));
            for (const auto& [e, c] : F.terms())
                cz[static_cast<std::size_t>(e[2])] += c * x.pow(e[0]);
            while (!cz.empty() && cz.back().is_zero()) cz.pop_back();
            if (cz.empty()) throw std::runtime_error("oracle hit an identically zero fiber");
            if (cz.size() == 1) continue;

            // clear denominators, then rational-root candidates a/b with
            // a | constant term, b | leading term
            Integer den(1);
            for (const auto& c : cz)
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
            std::vector<Integer> ic;
            for (const auto& c : cz) ic.push_back(c.num() * (den / c.den()));
            // strip zero trailing coefficient: z = 0 is then a root
            std::vector<Rational> roots;
            std::size_t shift = 0;
            while (shift + 1 < ic.size() && ic[shift] == 0) ++shift;
            if (shift > 0) roots.emplace_back(0);
            Integer a0 = ic[shift], an = ic.back();
            auto divisors = [](Integer n) {
                n = abs(n);
                std::vector<Integer> ds;
                for (Integer d = 1; d * d <= n; ++d) {
                    if (n % d != 0) continue;
                    ds.push_back(d);
                    if (d * d != n) ds.push_back(n / d);
                }
                return ds;
            };
            for (const Integer& aa : divisors(a0)) {
                for (const Integer& bb : divisors(an)) {
                    for (int s = -1; s <= 1; s += 2) {
                        Rational z(s * aa, bb);
                        Rational val(0);
                        for (auto it = cz.rbegin(); it != cz.rend(); ++it) val = val * z + *it;
                        if (val.is_zero()) roots.push_back(z);
                    }
                }
            }
            std::sort(roots.begin(), roots.end());
            roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
            for (const auto& z : roots) out.emplace_back(x, z);
        }
    }
    return out;
}

} // namespace oracles

#endif

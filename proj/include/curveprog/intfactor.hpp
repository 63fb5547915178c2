#ifndef CURVEPROG_INTFACTOR_HPP
#define CURVEPROG_INTFACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "curveprog/rational.hpp"

namespace curveprog {

struct FactorConfig {
    // |n| beyond this bound may fail with FactorizationTooHard instead of
    // burning unbounded time. 2^96 keeps every desk-scale input factorable.
    Integer bound = Integer(1) << 96;
    unsigned long trial_limit = 1000000;
    unsigned long rho_iterations = 1ul << 26;
    unsigned rho_restarts = 24;
};

inline const FactorConfig& default_factor_config() {
    static const FactorConfig cfg;
    return cfg;
}

inline const std::vector<std::uint32_t>& primes_below(std::uint32_t limit = 1000000) {
    static const std::vector<std::uint32_t> table = [] {
        const std::uint32_t n = 1000000;
        std::vector<bool> composite(n + 1, false);
        std::vector<std::uint32_t> ps;
        for (std::uint32_t i = 2; i <= n; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i)
                composite[static_cast<std::uint32_t>(j)] = true;
        }
        return ps;
    }();
    (void)limit;
    return table;
}

namespace detail {

inline bool miller_rabin_witness(const Integer& n, const Integer& base,
                                 const Integer& d, unsigned long s) {
    Integer a = base % n;
    if (a == 0) return false; // base divisible by n proves nothing
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true; // composite witnessed
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
inline bool strong_lucas_prp(const Integer& n) {
    // find D = 5, -7, 9, -11, ... with jacobi(D, n) == -1
    Integer d(5);
    while (true) {
        int j = mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0 && ::abs(d) != n) return false; // proper factor found
        d = d > 0 ? Integer(-(d + 2)) : Integer(-(d - 2));
    }
    Integer p(1), q = (1 - d) / 4;

    Integer delta = n + 1;
    unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
    Integer m = delta >> s;

    // compute U_m, V_m by binary ladder on the bits of m
    Integer u(1), v = p, qk = q;
    long bits = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
    Integer inv2;
    mpz_invert(inv2.get_mpz_t(), Integer(2).get_mpz_t(), n.get_mpz_t());
    for (long i = bits - 2; i >= 0; --i) {
        // double: U_{2k} = U_k V_k, V_{2k} = V_k^2 - 2 Q^k
        Integer u2 = (u * v) % n;
        Integer v2 = (v * v - 2 * qk) % n;
        Integer qk2 = (qk * qk) % n;
        u = u2; v = v2; qk = qk2;
        if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            // add one: U_{k+1} = (P U_k + V_k)/2, V_{k+1} = (D U_k + P V_k)/2
            Integer un = ((p * u + v) % n * inv2) % n;
            Integer vn = ((d * u + p * v) % n * inv2) % n;
            u = un; v = vn;
            qk = (qk * q) % n;
        }
    }
    u %= n; if (u < 0) u += n;
    v %= n; if (v < 0) v += n;
    if (u == 0 || v == 0) return true;
    for (unsigned long i = 1; i < s; ++i) {
        v = (v * v - 2 * qk) % n;
        qk = (qk * qk) % n;
        if (v == 0) return true;
    }
    return false;
}

} // namespace detail

// Deterministic for n < 3.317e24 via the 13-base Miller-Rabin set; above
// that the Baillie-PSW combination (base-2 MR + strong Lucas) decides, which
// has no known counterexample and uses no randomness.
inline bool is_prime(const Integer& n_in) {
    Integer n = ::abs(n_in);
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    static const Integer kDeterministicLimit("3317044064679887385961981");
    if (n < kDeterministicLimit) {
        for (int b : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
            if (detail::miller_rabin_witness(n, Integer(b), d, s)) return false;
        return true;
    }
    if (detail::miller_rabin_witness(n, Integer(2), d, s)) return false;
    return detail::strong_lucas_prp(n);
}

namespace detail {

// Brent's cycle variant of Pollard rho with fixed parameters so repeated
// runs factor identically.
inline Integer pollard_brent(const Integer& n, unsigned long c, unsigned long max_iters) {
    if (n % 2 == 0) return Integer(2);
    Integer y(2), g(1), q(1), x, ys;
    unsigned long r = 1, m = 128;
    unsigned long spent = 0;
    while (g == 1 && spent < max_iters) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = (q * (x - y)) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
            spent += lim;
        }
        r <<= 1;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (ys * ys + c) % n;
            Integer diff = x - ys;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g; // 1 (gave up), n (cycle degenerate), or a proper factor
}

inline void factor_into(const Integer& n, std::map<Integer, unsigned>& out,
                        const FactorConfig& cfg, bool within_bound) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned attempt = 0; attempt < cfg.rho_restarts; ++attempt) {
        Integer g = pollard_brent(n, 2 * attempt + 1, cfg.rho_iterations);
        if (g > 1 && g < n) {
            factor_into(g, out, cfg, within_bound);
            factor_into(n / g, out, cfg, within_bound);
            return;
        }
    }
    throw FactorizationTooHard("composite cofactor " + n.get_str() +
                               " resisted the configured effort" +
                               (within_bound ? "" : " (input exceeds the factorization bound)"));
}

} // namespace detail

struct IntFactorization {
    int sign = 1; // -1 for negative inputs
    std::vector<std::pair<Integer, unsigned>> factors; // ascending primes

    Integer recompose() const {
        Integer r(sign);
        for (const auto& [p, e] : factors) {
            Integer pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            r *= pe;
        }
        return r;
    }
};

inline IntFactorization factor_integer(const Integer& n,
                                       const FactorConfig& cfg = default_factor_config()) {
    if (n == 0) throw ZeroInput("factor_integer(0)");
    IntFactorization result;
    result.sign = sgn(n) < 0 ? -1 : 1;
    Integer m = ::abs(n);
    bool within_bound = m <= cfg.bound;

    std::map<Integer, unsigned> acc;
    for (std::uint32_t p : primes_below(cfg.trial_limit)) {
        if (m == 1) break;
        if (Integer(p) * p > m) break;
        unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Integer(p).get_mpz_t());
        if (e > 0) acc[Integer(p)] = static_cast<unsigned>(e);
    }
    if (m > 1) detail::factor_into(m, acc, cfg, within_bound);

    result.factors.assign(acc.begin(), acc.end());
    return result;
}

// r = c^2 * D with D a squarefree integer carrying the sign of r.
// D names the quadratic field Q(sqrt(D)) attached to a square root of r.
struct SquarefreeDecomp {
    Integer D;
    Rational c;

    bool is_square() const { return D == 1; }
    Rational recompose() const { return c * c * Rational(D); }
};

inline SquarefreeDecomp squarefree_part(const Rational& r,
                                        const FactorConfig& cfg = default_factor_config()) {
    if (r.is_zero()) return {Integer(0), Rational(1)};
    IntFactorization fn = factor_integer(r.num(), cfg);
    IntFactorization fd = factor_integer(r.den(), cfg);

    std::map<Integer, long> exps;
    for (const auto& [p, e] : fn.factors) exps[p] += static_cast<long>(e);
    for (const auto& [p, e] : fd.factors) exps[p] -= static_cast<long>(e);

    Integer D(fn.sign);
    Rational c(1);
    for (const auto& [p, e] : exps) {
        long half = (e >= 0 ? e : e - 1) / 2; // floor division
        if (half != 0) c *= Rational(p).pow(half);
        if (e % 2 != 0) D *= p;
    }
    return {D, c};
}

} // namespace curveprog

#endif

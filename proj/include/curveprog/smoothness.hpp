#ifndef CURVEPROG_SMOOTHNESS_HPP
#define CURVEPROG_SMOOTHNESS_HPP

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curveprog/bipoly.hpp"
#include "curveprog/errors.hpp"
#include "curveprog/factorq.hpp"
#include "curveprog/gfp.hpp"
#include "curveprog/homogpoly.hpp"

namespace curveprog {

enum class Smoothness { Smooth, Singular };

// A SMOOTH certificate names the prime whose reduction has no singular point
// over the algebraic closure (which pins smoothness over Q: the Macaulay
// resultant of the partials is then a unit mod p, hence nonzero), or records
// that the exact elimination came up empty. A SINGULAR certificate carries a
// rational witness point when one exists, otherwise the eliminant factor cut
// out by the analysis.
struct SmoothnessCertificate {
    Smoothness kind;
    std::string method; // "modular" | "exact-elimination"
    std::optional<std::uint64_t> witness_prime;
    std::optional<std::array<Rational, 3>> singular_point;
    std::string detail;

    bool smooth() const { return kind == Smoothness::Smooth; }
};

namespace smooth_detail {

// ---- modular path --------------------------------------------------------

// any P^2(F_p)-rational common zero of the three partials?
inline bool fp_rational_singular_point(const std::array<HomogPolyP, 3>& parts, std::uint64_t p) {
    int maxexp = 0;
    for (const auto& part : parts)
        for (const auto& [e, c] : part.terms) {
            (void)c;
            maxexp = std::max({maxexp, e[0], e[1], e[2]});
        }
    FpEvaluator ev(p, maxexp);
    auto vanish_all = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        return ev.eval(parts[0], x, y, z) == 0 && ev.eval(parts[1], x, y, z) == 0 &&
               ev.eval(parts[2], x, y, z) == 0;
    };
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y)
            if (vanish_all(x, y, 1)) return true;
    for (std::uint64_t x = 0; x < p; ++x)
        if (vanish_all(x, 1, 0)) return true;
    return vanish_all(1, 0, 0);
}

// common zero of the partials over extensions of F_p, decided by elimination
// on the y = 1 chart plus the line Y = 0
inline bool fp_extension_singular_point(const std::array<HomogPolyP, 3>& parts, std::uint64_t p) {
    GFpField K(p);
    int d1 = parts[0].degree; // common degree d - 1

    // the line Y = 0: binary forms in (X, Z), dehomogenized at Z = 1
    {
        std::vector<FpPoly> line;
        bool all_zero = true;
        for (const auto& part : parts) {
            FpPoly u(static_cast<std::size_t>(d1) + 1, 0);
            bool nonzero = false;
            for (const auto& [e, c] : part.terms)
                if (e[1] == 0) {
                    u[static_cast<std::size_t>(e[0])] = c;
                    nonzero = true;
                }
            fp_trim(K, u);
            if (nonzero) {
                all_zero = false;
                line.push_back(std::move(u));
            }
        }
        if (all_zero) return true; // partials vanish on the whole line
        FpPoly g = line[0];
        for (std::size_t i = 1; i < line.size(); ++i) g = fp_gcd(K, g, line[i]);
        if (fp_degree(g) >= 1) return true; // shared root (xi : 0 : 1)
    }

    // chart y = 1
    std::vector<AffineZPolyP> chart;
    for (const auto& part : parts) {
        AffineZPolyP c = dehomog_y(part);
        if (!c.is_zero()) chart.push_back(std::move(c));
    }
    if (chart.empty()) return true;
    for (const auto& c : chart)
        if (c.degree_z() == 0 && fp_degree(c.cz[0]) == 0) return false; // nonzero constant

    // shared positive-dimensional locus
    AffineZPolyP G = chart[0];
    for (std::size_t i = 1; i < chart.size(); ++i) G = fp_biv_gcd(K, G, chart[i]);
    if (G.degree_z() >= 1 || G.degree_x() >= 1) return true;

    std::vector<AffineZPolyP> zdep;
    std::vector<FpPoly> xonly;
    for (auto& c : chart) {
        if (c.degree_z() >= 1)
            zdep.push_back(std::move(c));
        else
            xonly.push_back(c.coeff_z(0));
    }

    std::vector<FpPoly> constraints = xonly;
    for (std::size_t i = 0; i < zdep.size(); ++i)
        for (std::size_t j = i + 1; j < zdep.size(); ++j) {
            FpPoly r = fp_resultant_z(K, zdep[i], zdep[j]);
            if (!r.empty()) constraints.push_back(std::move(r));
        }
    if (constraints.empty())
        throw Inconclusive("pairwise resultants of the partials vanish mod " +
                           std::to_string(p) + "; candidate x-locus cannot be bounded");

    FpPoly h = constraints[0];
    for (std::size_t i = 1; i < constraints.size(); ++i) h = fp_gcd(K, h, constraints[i]);
    if (fp_degree(h) == 0) return false;
    if (zdep.empty()) return true; // x-only partials share a root, z is free

    for (const auto& [q, mult] : fp_factor(K, h)) {
        (void)mult;
        GFpExtField Ke(p, q);
        std::vector<FPoly<GFpExtField>> fibers;
        bool all_vanish = true;
        for (const auto& P : zdep) {
            FPoly<GFpExtField> f;
            for (const auto& row : P.cz) f.push_back(Ke.reduce(row));
            fp_trim(Ke, f);
            if (!f.empty()) all_vanish = false;
            fibers.push_back(std::move(f));
        }
        if (all_vanish) return true;
        FPoly<GFpExtField> g;
        for (const auto& f : fibers) g = fp_gcd(Ke, g, f);
        if (fp_degree(g) >= 1) return true;
    }
    return false;
}

// Full smoothness decision for the reduction mod p. nullopt: p unusable.
inline std::optional<bool> smooth_mod_p(const HomogPoly& F, std::uint64_t p) {
    HomogPolyP Fp;
    try {
        Fp = reduce_mod_p(F, p);
    } catch (const BadReductionPrime&) {
        return std::nullopt;
    }
    std::array<HomogPolyP, 3> parts{Fp.partial(0), Fp.partial(1), Fp.partial(2)};
    if (parts[0].is_zero() && parts[1].is_zero() && parts[2].is_zero()) return false;
    if (fp_rational_singular_point(parts, p)) return false;
    if (fp_extension_singular_point(parts, p)) return false;
    return true;
}

// ---- exact path ----------------------------------------------------------

struct ExactFinding {
    bool singular = false;
    std::optional<std::array<Rational, 3>> point; // rational witness
    std::string detail;
};

// try to lift a singular x-locus factor to a rational point on the chart
inline std::optional<Rational> rational_z_on_fiber(const std::vector<AffineZPoly>& zdep,
                                                   const Rational& x0) {
    UniPoly g("z");
    for (const auto& P : zdep) g = g.is_zero() ? P.at_x(x0) : gcd(g, P.at_x(x0));
    if (g.is_zero()) return Rational(0); // whole fiber is singular
    auto roots = rational_roots(g);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

inline ExactFinding exact_chart_analysis(const std::array<HomogPoly, 3>& parts) {
    ExactFinding out;

    std::vector<AffineZPoly> chart;
    for (const auto& part : parts) {
        AffineZPoly c = AffineZPoly::from_homog(part);
        if (!c.is_zero()) chart.push_back(std::move(c));
    }
    if (chart.empty()) {
        out.singular = true;
        out.point = {{Rational(0), Rational(1), Rational(0)}};
        out.detail = "all partials vanish identically";
        return out;
    }
    for (const auto& c : chart)
        if (c.degree_z() == 0 && c.coeff_z(0).degree() == 0) return out; // chart clean

    std::vector<AffineZPoly> zdep;
    std::vector<UniPoly> xonly;
    for (auto& c : chart) {
        if (c.degree_z() >= 1)
            zdep.push_back(std::move(c));
        else
            xonly.push_back(c.coeff_z(0));
    }

    // positive-dimensional common locus
    AffineZPoly G;
    {
        bool first = true;
        for (const auto& c : zdep) {
            G = first ? c : biv_gcd(G, c);
            first = false;
        }
        for (const auto& u : xonly) {
            AffineZPoly lift(std::vector<UniPoly>{u});
            G = first ? lift : biv_gcd(G, lift);
            first = false;
        }
    }
    if (G.degree_z() >= 1 || G.degree_x() >= 1) {
        out.singular = true;
        out.detail = "partials share the common factor " + G.str("z");
        // a rational point anywhere on the shared locus witnesses it
        if (G.degree_z() >= 1) {
            for (long xi = 0; xi <= 16 && !out.point; ++xi) {
                for (int s = 1; s >= -1 && !out.point; s -= 2) {
                    Rational x0(s * xi);
                    UniPoly f = G.at_x(x0);
                    if (f.is_zero()) {
                        out.point = {{x0, Rational(1), Rational(0)}};
                        break;
                    }
                    if (f.degree() < 1) continue;
                    auto roots = rational_roots(f);
                    if (!roots.empty()) out.point = {{x0, Rational(1), roots.front()}};
                }
            }
        } else {
            auto roots = rational_roots(G.coeff_z(0));
            if (!roots.empty()) out.point = {{roots.front(), Rational(1), Rational(0)}};
        }
        return out;
    }

    std::vector<UniPoly> constraints = xonly;
    for (std::size_t i = 0; i < zdep.size(); ++i)
        for (std::size_t j = i + 1; j < zdep.size(); ++j) {
            UniPoly r = resultant_z(zdep[i], zdep[j]);
            if (!r.is_zero()) constraints.push_back(std::move(r));
        }
    if (constraints.empty())
        throw Inconclusive("pairwise resultants of the partials vanish identically; "
                           "candidate x-locus cannot be bounded");

    UniPoly h = constraints[0];
    for (std::size_t i = 1; i < constraints.size(); ++i) h = gcd(h, constraints[i]);
    if (h.degree() == 0) return out;
    if (zdep.empty()) {
        out.singular = true;
        out.detail = "z-free partials share the factor " + h.str();
        auto roots = rational_roots(h);
        if (!roots.empty()) out.point = {{roots.front(), Rational(1), Rational(0)}};
        return out;
    }

    Factorization hf = factor_over_Q(h);
    for (const auto& [q, mult] : hf.factors) {
        (void)mult;
        if (q.degree() == 1) {
            Rational x0 = -q.coeff(0) / q.coeff(1);
            UniPoly g("z");
            bool whole_fiber = true;
            for (const auto& P : zdep) {
                UniPoly f = P.at_x(x0);
                if (!f.is_zero()) whole_fiber = false;
                g = g.is_zero() ? f : gcd(g, f);
            }
            if (whole_fiber) {
                out.singular = true;
                out.point = {{x0, Rational(1), Rational(0)}};
                out.detail = "partials vanish along the whole fiber x = " + x0.str();
                return out;
            }
            if (g.degree() >= 1) {
                out.singular = true;
                out.detail = "common zero above x = " + x0.str() + ", minimal polynomial " +
                             g.str() + " in z";
                auto roots = rational_roots(g);
                if (!roots.empty()) out.point = {{x0, Rational(1), roots.front()}};
                return out;
            }
        } else {
            NumberField Ke(q);
            std::vector<FPoly<NumberField>> fibers;
            bool all_vanish = true;
            for (const auto& P : zdep) {
                FPoly<NumberField> f;
                for (const auto& row : P.coeffs()) f.push_back(Ke.reduce(row.coeffs()));
                fp_trim(Ke, f);
                if (!f.empty()) all_vanish = false;
                fibers.push_back(std::move(f));
            }
            bool hit = all_vanish;
            if (!hit) {
                FPoly<NumberField> g;
                for (const auto& f : fibers) g = fp_gcd(Ke, g, f);
                hit = fp_degree(g) >= 1;
            }
            if (hit) {
                out.singular = true;
                out.detail = "common zero above the irrational x-locus " + q.str() +
                             " (consistent across the y = 1 chart elimination)";
                return out;
            }
        }
    }
    return out;
}

inline ExactFinding exact_line_analysis(const std::array<HomogPoly, 3>& parts, int d1) {
    ExactFinding out;
    std::vector<UniPoly> line;
    bool all_zero = true;
    std::array<Rational, 3> at_infinity{Rational(0), Rational(0), Rational(0)};
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rational> u(static_cast<std::size_t>(d1) + 1, Rational(0));
        bool nonzero = false;
        for (const auto& [e, c] : parts[i].terms())
            if (e[1] == 0) {
                u[static_cast<std::size_t>(e[0])] = c;
                nonzero = true;
            }
        at_infinity[i] = parts[i].evaluate(Rational(1), Rational(0), Rational(0));
        if (nonzero) {
            all_zero = false;
            line.emplace_back(std::move(u), "x");
        }
    }
    if (all_zero) {
        out.singular = true;
        out.point = {{Rational(1), Rational(0), Rational(0)}};
        out.detail = "partials vanish along the line Y = 0";
        return out;
    }
    if (at_infinity[0].is_zero() && at_infinity[1].is_zero() && at_infinity[2].is_zero()) {
        out.singular = true;
        out.point = {{Rational(1), Rational(0), Rational(0)}};
        out.detail = "common zero at (1:0:0)";
        return out;
    }
    UniPoly g = line[0];
    for (std::size_t i = 1; i < line.size(); ++i) g = gcd(g, line[i]);
    if (g.degree() >= 1) {
        out.singular = true;
        out.detail = "partials restricted to Y = 0 share the factor " + g.str();
        auto roots = rational_roots(g);
        if (!roots.empty()) out.point = {{roots.front(), Rational(0), Rational(1)}};
    }
    return out;
}

} // namespace smooth_detail

// Prime schedule for the modular certificate: the primes in [101, 499].
inline const std::vector<std::uint64_t>& smoothness_prime_schedule() {
    static const std::vector<std::uint64_t> schedule = [] {
        std::vector<std::uint64_t> ps;
        for (std::uint32_t p : primes_below())
            if (p >= 101 && p <= 499) ps.push_back(p);
        return ps;
    }();
    return schedule;
}

// Smoothness of the projective plane curve F = 0 over Q. Modular certificate
// first; if every scheduled prime reports a singular reduction, exact
// elimination over Q decides (and digs up a rational witness when there is
// one). Inconclusive is reported honestly, never guessed.
inline SmoothnessCertificate certify_smoothness(const HomogPoly& F) {
    if (F.is_zero() || F.degree() < 1) throw ZeroInput("smoothness of a degenerate form");

    auto try_prime = [&](std::uint64_t p) -> std::optional<bool> {
        try {
            return smooth_detail::smooth_mod_p(F, p);
        } catch (const Inconclusive&) {
            return std::nullopt;
        }
    };
    auto smooth_cert = [&](std::uint64_t p) {
        SmoothnessCertificate cert;
        cert.kind = Smoothness::Smooth;
        cert.method = "modular";
        cert.witness_prime = p;
        cert.detail = "reduction mod " + std::to_string(p) + " has degree " +
                      std::to_string(F.degree()) +
                      " and no singular point over the algebraic closure";
        return cert;
    };

    // Singular reductions on a handful of primes almost always mean the
    // curve is singular over Q; hand over to the exact path early instead of
    // walking the whole schedule.
    const auto& schedule = smoothness_prime_schedule();
    std::size_t tried = 0;
    unsigned singular_seen = 0;
    for (; tried < schedule.size() && singular_seen < 5; ++tried) {
        auto verdict = try_prime(schedule[tried]);
        if (!verdict) continue;
        if (*verdict) return smooth_cert(schedule[tried]);
        ++singular_seen;
    }

    std::array<HomogPoly, 3> parts{F.partial(0), F.partial(1), F.partial(2)};
    smooth_detail::ExactFinding line;
    smooth_detail::ExactFinding chart;
    try {
        line = smooth_detail::exact_line_analysis(parts, F.degree() - 1);
        chart = smooth_detail::exact_chart_analysis(parts);
    } catch (const Error&) {
        // exact route out of budget: fall back to the rest of the schedule
        for (; tried < schedule.size(); ++tried) {
            auto verdict = try_prime(schedule[tried]);
            if (verdict && *verdict) return smooth_cert(schedule[tried]);
        }
        throw Inconclusive("modular path failed on every scheduled prime and exact "
                           "elimination exceeded the degree budget");
    }

    SmoothnessCertificate cert;
    cert.method = "exact-elimination";
    if (chart.singular || line.singular) {
        cert.kind = Smoothness::Singular;
        const auto& found = chart.singular ? chart : line;
        cert.detail = found.detail;
        cert.singular_point = found.point;
        if (!cert.singular_point && line.singular && line.point) cert.singular_point = line.point;
        if (!cert.singular_point && chart.singular && chart.point)
            cert.singular_point = chart.point;
    } else {
        cert.kind = Smoothness::Smooth;
        cert.detail = "exact elimination found no common zero of the partials";
    }
    return cert;
}

} // namespace curveprog

#endif

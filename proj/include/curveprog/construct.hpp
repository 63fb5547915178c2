#ifndef CURVEPROG_CONSTRUCT_HPP
#define CURVEPROG_CONSTRUCT_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curveprog/bipoly.hpp"
#include "curveprog/curve.hpp"
#include "curveprog/progression.hpp"

namespace curveprog {

// z^2 = f(x): the affine hyperelliptic-style model whose projection
// (x, 1, z) -> (x, 1) has degree 2, so every fiber over a rational x is a
// point of degree at most 2.
struct HyperellipticModel {
    UniPoly f; // degree >= 2, variable x

    explicit HyperellipticModel(UniPoly poly) : f(std::move(poly)) {
        if (f.is_zero()) throw ZeroInput("hyperelliptic model needs nonzero f");
        if (f.degree() < 2) throw Error("hyperelliptic model needs deg f >= 2");
        f.set_var("x");
    }
};

inline bool rational_square_root(const Rational& v, Rational& root) {
    if (v.signum() < 0) return false;
    if (v.is_zero()) {
        root = Rational(0);
        return true;
    }
    if (mpz_perfect_square_p(v.num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(v.den().get_mpz_t()) == 0) return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), v.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), v.den().get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

// z with z^2 = v, packaged as an algebraic point datum at x
inline AlgebraicPoint square_root_point(const Rational& x, const Rational& v) {
    Rational root;
    if (rational_square_root(v, root))
        return make_point(x, UniPoly({-root, Rational(1)}, "z"));
    return make_point(x, UniPoly({-v, Rational(0), Rational(1)}, "z"));
}

// One emitted stream element. A gap (no point) happens only where a fiber
// degenerates; the stream keeps going either way.
struct Emitted {
    unsigned long index; // progression index i >= 1
    Rational x;
    std::optional<AlgebraicPoint> point;
    std::string note;
};

// Stream of (x_i, 1, sqrt(f(x_i))): the quadratic progression the canonical
// degree-2 projection provides. Pull-based; take(count) materializes.
class HyperellipticStream {
public:
    HyperellipticStream(HyperellipticModel model, Progression law)
        : model_(std::move(model)), law_(std::move(law)) {}

    Emitted next() {
        unsigned long i = ++index_;
        Rational x = law_.term(i);
        Rational v = model_.f.eval(x);
        return {i, x, square_root_point(x, v), ""};
    }

    std::vector<Emitted> take(unsigned long count) {
        std::vector<Emitted> out;
        out.reserve(count);
        for (unsigned long k = 0; k < count; ++k) out.push_back(next());
        return out;
    }

private:
    HyperellipticModel model_;
    Progression law_;
    unsigned long index_ = 0;
};

inline std::vector<Emitted> hyperelliptic_progression(const HyperellipticModel& m,
                                                      const Progression& law,
                                                      unsigned long count) {
    if (count < 1) throw Error("count must be at least 1");
    return HyperellipticStream(m, law).take(count);
}

// ---------------------------------------------------------------------------
// Bielliptic quartics in normal form a Z^4 + L2(X,Y) Z^2 + L4(X,Y) = 0 and
// their quotient machinery.
// ---------------------------------------------------------------------------

struct BiellipticQuartic {
    Rational a;
    HomogPoly L2; // binary form of degree 2 in X, Y (may be zero)
    HomogPoly L4; // binary form of degree 4 in X, Y

    BiellipticQuartic(Rational a_in, HomogPoly l2, HomogPoly l4)
        : a(std::move(a_in)), L2(std::move(l2)), L4(std::move(l4)) {
        if (a.is_zero()) throw Error("bielliptic normal form needs a != 0");
        auto check_binary = [](const HomogPoly& f, int deg, const char* name) {
            if (f.degree() != deg)
                throw Error(std::string(name) + " must have degree " + std::to_string(deg));
            for (const auto& [e, c] : f.terms()) {
                (void)c;
                if (e[2] != 0)
                    throw Error(std::string(name) + " must be a binary form in X, Y");
            }
        };
        check_binary(L2, 2, "L2");
        check_binary(L4, 4, "L4");
    }

    UniPoly l2_affine() const { // L2(x, 1)
        std::vector<Rational> c(3, Rational(0));
        for (const auto& [e, v] : L2.terms()) c[static_cast<std::size_t>(e[0])] = v;
        return UniPoly(std::move(c), "x");
    }
    UniPoly l4_affine() const { // L4(x, 1)
        std::vector<Rational> c(5, Rational(0));
        for (const auto& [e, v] : L4.terms()) c[static_cast<std::size_t>(e[0])] = v;
        return UniPoly(std::move(c), "x");
    }
};

inline PlaneCurve assemble_bielliptic(const BiellipticQuartic& q) {
    HomogPoly F(4);
    F.add_term(q.a, {0, 0, 4});
    for (const auto& [e, c] : q.L2.terms()) F.add_term(c, {e[0], e[1], 2});
    for (const auto& [e, c] : q.L4.terms()) F.add_term(c, {e[0], e[1], 0});
    return PlaneCurve(std::move(F));
}

// a w^2 + B(x) w + C(x) = 0, the image of the z -> z^2 quotient map.
struct QuotientModel {
    Rational a;
    UniPoly B; // coefficient of w
    UniPoly C; // constant term

    Rational eval(const Rational& x, const Rational& w) const {
        return a * w * w + B.eval(x) * w + C.eval(x);
    }
    bool contains(const Rational& x, const Rational& w) const { return eval(x, w).is_zero(); }

    UniPoly discriminant() const { // B^2 - 4aC
        return B * B - Rational(4) * a * C;
    }

    std::string str() const {
        std::string out = (a == Rational(1) ? "" : a.str() + "*") + std::string("w^2");
        if (!B.is_zero()) out += " + (" + B.str() + ")*w";
        if (!C.is_zero()) out += " + " + C.str();
        return out + " = 0";
    }
};

// The genus-one quotient E: a w^2 + L2(x,1) w + L4(x,1) = 0 together with
// the pushforward (x, 1, z) -> (x, 1, z^2).
inline QuotientModel elliptic_quotient(const BiellipticQuartic& q) {
    return {q.a, q.l2_affine(), q.l4_affine()};
}

// image of an algebraic point under z -> z^2; the minimal polynomial of z^2
// is the unique irreducible factor of Res_z(minpoly(z), w - z^2)
inline AlgebraicPoint pushforward_point(const AlgebraicPoint& p) {
    if (p.degree == 1) {
        Rational z = *p.z_value();
        return make_point(p.x, UniPoly({-(z * z), Rational(1)}, "w"));
    }
    if (p.degree == 2 && p.minpoly_z.coeff(1).is_zero()) {
        // minpoly a z^2 + c: z^2 = -c/a is rational
        Rational w = -p.minpoly_z.coeff(0) / p.minpoly_z.coeff(2);
        return make_point(p.x, UniPoly({-w, Rational(1)}, "w"));
    }
    // general route: eliminate z from {minpoly(z) = 0, w = z^2}; both sides
    // are polynomials in z with coefficients in Q[w], minpoly rows constant
    // and w - z^2 equal to [w, 0, -1]
    std::vector<UniPoly> mu_rows;
    for (const auto& c : p.minpoly_z.coeffs()) mu_rows.push_back(UniPoly::constant(c, "w"));
    AffineZPoly muz(std::move(mu_rows));
    AffineZPoly wz(std::vector<UniPoly>{UniPoly::identity("w"), UniPoly("w"),
                                        UniPoly::constant(Rational(-1), "w")});
    UniPoly res = resultant_z(muz, wz);
    Factorization fac = factor_over_Q(res);
    // the resultant is a power of one irreducible polynomial
    AlgebraicPoint out = make_point(p.x, fac.factors.front().first);
    out.minpoly_z.set_var("w");
    return out;
}

// rational point on the quotient -> point of degree <= 2 on the quartic
inline AlgebraicPoint lift_quadratic(const BiellipticQuartic& q,
                                     const Rational& x0, const Rational& w0) {
    QuotientModel E = elliptic_quotient(q);
    if (!E.contains(x0, w0))
        throw NotOnQuotient("(" + x0.str() + ", " + w0.str() +
                            ") does not satisfy the quotient equation");
    return square_root_point(x0, w0);
}

// ---------------------------------------------------------------------------
// The substitution tower C_s: a z^4 + L2(t0 x^s, 1) z^2 + L4(t0 x^s, 1) = 0
// with quotients H_s and the degree-2 maps x -> x^2 between levels.
// ---------------------------------------------------------------------------

struct TowerLevel {
    unsigned s;   // substitution exponent
    Rational a;
    UniPoly B;    // L2(t0 x^s, 1)
    UniPoly C;    // L4(t0 x^s, 1)

    QuotientModel quotient() const { return {a, B, C}; }

    // the quartic-in-z plane model as a z-major polynomial
    AffineZPoly curve_model() const {
        std::vector<UniPoly> rows(5, UniPoly("x"));
        rows[0] = C;
        rows[2] = B;
        rows[4] = UniPoly::constant(a, "x");
        return AffineZPoly(std::move(rows));
    }

    std::string model_str() const { return curve_model().str("z"); }
};

inline TowerLevel tower_level(const BiellipticQuartic& q, const Rational& t0, unsigned s) {
    if (t0.is_zero()) throw Error("tower substitution needs t0 != 0");
    if (s < 1) throw Error("tower exponent must be >= 1");
    return {s, q.a, q.l2_affine().substitute_scaled_power(t0, s),
            q.l4_affine().substitute_scaled_power(t0, s)};
}

// Genus of the smooth model of a w^2 + B w + C = 0 read off the squarefree
// discriminant: completing the square gives w'^2 = B^2 - 4aC =: D(x), and a
// squarefree D of degree m has genus floor((m-1)/2). Non-squarefree or
// constant discriminants are refused, not guessed.
inline long hyperelliptic_genus_from_disc(const QuotientModel& H, const std::string& where) {
    UniPoly D = H.discriminant();
    if (D.is_zero() || D.degree() < 1)
        throw DegenerateModel("discriminant of " + where + " is constant; the quotient is not "
                              "a hyperelliptic curve");
    if (!is_squarefree(D))
        throw DegenerateModel("discriminant of " + where + " is not squarefree; refusing to "
                              "guess the geometric genus");
    return (D.degree() - 1) / 2;
}

struct TraceLevel {
    unsigned s;
    std::string model;        // C_s as a plane model
    std::string quotient;     // H_s
    long genus;               // smooth-model genus from the discriminant
    bool cs_flag;             // Castelnuovo-Severi obstruction reached
    // ramification bookkeeping of psi: H_{2s} -> H_s measured on H_s
    long points_over_zero;     // fiber analysis at x = 0
    long points_over_infinity; // from the parity of deg D (smooth model)
    long ramification;         // r entering Riemann-Hurwitz
    long genus_rh;             // genus of the NEXT level predicted by RH
};

struct FinitenessTrace {
    std::vector<TraceLevel> levels; // s = 1, 2, 4, ..., 2^n
    bool strictly_increasing;
    std::optional<unsigned> cs_level; // first s with genus > 3
};

// Walks the quotient tower H_1 -> H_2 -> H_4 -> ... recording the genus by
// two routes: the discriminant of each level, and Riemann-Hurwitz along the
// degree-2 maps x -> x^2. A hyperelliptic curve of genus above 3 cannot also
// be bielliptic, so the first level past genus 3 carries the flag.
inline FinitenessTrace finiteness_trace(const BiellipticQuartic& q, const Rational& t0,
                                        unsigned levels) {
    if (levels < 1 || levels > 8) throw Error("trace depth must be within 1..8");
    FinitenessTrace out;
    out.strictly_increasing = true;

    std::optional<long> predicted; // RH prediction for the current level
    long prev_genus = -1;
    unsigned s = 1;
    for (unsigned i = 0; i <= levels; ++i, s *= 2) {
        TowerLevel lvl = tower_level(q, t0, s);
        QuotientModel H = lvl.quotient();
        long g = hyperelliptic_genus_from_disc(H, "H_" + std::to_string(s));
        if (predicted && *predicted != g)
            throw InconsistentRamification(
                "Riemann-Hurwitz prediction " + std::to_string(*predicted) +
                " disagrees with the discriminant genus " + std::to_string(g) + " at level " +
                std::to_string(s));

        UniPoly D = H.discriminant();
        // points of H over x = 0: distinct roots of a w^2 + B(0) w + C(0)
        UniPoly fiber0({H.C.coeff(0), H.B.coeff(0), H.a}, "w");
        long n0 = fiber0.degree() >= 1 ? distinct_root_count(fiber0) : 0;
        // points over x = infinity on the smooth model: 2 when deg D is
        // even, 1 when odd (the hyperelliptic branch point at infinity)
        long ninf = (D.degree() % 2 == 0) ? 2 : 1;
        // psi ramifies exactly over x = 0 and x = infinity; each point of H
        // there contributes e - 1 with e = 2 over 0, and the two infinity
        // points of the cover land with e = 2 (even) or split (odd)
        long r = 2 * (n0 - 1) + 2 * (ninf - 1);
        long next_genus = riemann_hurwitz_genus({g, 2, r});

        bool flag = g > 3 && !out.cs_level.has_value();
        if (flag) out.cs_level = s;
        out.levels.push_back({s, lvl.model_str(), H.str(), g, flag, n0, ninf, r, next_genus});

        if (prev_genus >= 0 && g <= prev_genus) out.strictly_increasing = false;
        prev_genus = g;
        predicted = next_genus;
    }
    return out;
}

// ---------------------------------------------------------------------------
// n-level progressions through gonal projection.
// ---------------------------------------------------------------------------

// Stream of points above x_i = term(law, i) on the curve normalized through
// a rational point: after normalization the projection from (0:0:1) has
// fibers of degree at most d-1, so every emitted point has degree at most
// the gonality d-1. Fiber choice: the lowest-degree factor, ties by the
// canonical factor order.
class NLevelStream {
public:
    NLevelStream(const PlaneCurve& C, const std::array<Rational, 3>& P, Progression law)
        : law_(std::move(law)) {
        if (!C.is_smooth())
            throw NotSmooth("n-level generation requires a smooth curve; " +
                            C.smoothness().detail);
        auto [norm, transform] = normalize_through_point(C, P);
        normalized_ = std::make_unique<PlaneCurve>(std::move(norm));
        transform_ = transform;
        level_ = static_cast<unsigned>(C.degree() - 1);
    }

    const PlaneCurve& normalized() const { return *normalized_; }
    const Mat3& transform() const { return transform_; }
    unsigned level() const { return level_; }

    Emitted next() {
        unsigned long i = ++index_;
        Rational x = law_.term(i);
        FiberPoly fib = fiber_poly(normalized_->form(), x);
        if (fib.poly.degree() < 1)
            return {i, x, std::nullopt,
                    "fiber at index " + std::to_string(i) + " (x = " + x.str() +
                        ") is a nonzero constant: projection center collision"};
        auto pts = points_on_fiber(*normalized_, x, level_);
        return {i, x, pts.front(), ""};
    }

    std::vector<Emitted> take(unsigned long count) {
        std::vector<Emitted> out;
        out.reserve(count);
        for (unsigned long k = 0; k < count; ++k) out.push_back(next());
        return out;
    }

private:
    Progression law_;
    std::unique_ptr<PlaneCurve> normalized_;
    Mat3 transform_;
    unsigned level_ = 0;
    unsigned long index_ = 0;
};

inline std::vector<Emitted> n_level_progression(const PlaneCurve& C,
                                                const std::array<Rational, 3>& P,
                                                const Progression& law, unsigned long count) {
    if (count < 1) throw Error("count must be at least 1");
    return NLevelStream(C, P, law).take(count);
}

} // namespace curveprog

#endif

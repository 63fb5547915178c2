#ifndef CURVEPROG_CURVE_HPP
#define CURVEPROG_CURVE_HPP

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curveprog/factorq.hpp"
#include "curveprog/homogpoly.hpp"
#include "curveprog/intfactor.hpp"
#include "curveprog/smoothness.hpp"

namespace curveprog {

// A point (x, 1, z) on the affine patch y = 1 with rational x; z is carried
// by its minimal polynomial over Q, so a conjugate orbit is one object. For
// quadratic points the squarefree discriminant names the field Q(sqrt(D)).
struct AlgebraicPoint {
    Rational x;
    UniPoly minpoly_z;  // irreducible, primitive integer coefficients, lc > 0
    unsigned degree;    // deg(minpoly_z) = field-of-definition degree
    std::optional<SquarefreeDecomp> disc; // degree 2 only (omitted on overflow)

    bool is_rational() const { return degree == 1; }

    // the value of z for rational points
    std::optional<Rational> z_value() const {
        if (degree != 1) return std::nullopt;
        return -minpoly_z.coeff(0) / minpoly_z.coeff(1);
    }
};

inline AlgebraicPoint make_point(const Rational& x, const UniPoly& irreducible_minpoly) {
    AlgebraicPoint p;
    p.x = x;
    p.minpoly_z = irreducible_minpoly.primitive_part();
    p.minpoly_z.set_var("z");
    p.degree = static_cast<unsigned>(p.minpoly_z.degree());
    if (p.degree == 2) {
        Rational a = p.minpoly_z.coeff(2), b = p.minpoly_z.coeff(1), c = p.minpoly_z.coeff(0);
        try {
            p.disc = squarefree_part(b * b - Rational(4) * a * c);
        } catch (const FactorizationTooHard&) {
            p.disc = std::nullopt; // point still emitted, field name omitted
        }
    }
    return p;
}

// Riemann-Hurwitz data for an n-fold cover with total ramification r over a
// base of genus g: 2g' - 2 = n(2g - 2) + r.
struct RHData {
    long base_genus;
    long covering_degree;
    long ramification;
};

inline long riemann_hurwitz_genus(const RHData& d) {
    if (d.base_genus < 0 || d.covering_degree < 1 || d.ramification < 0)
        throw InconsistentRamification("negative entries in Riemann-Hurwitz data");
    long rhs = d.covering_degree * (2 * d.base_genus - 2) + d.ramification;
    if (rhs % 2 != 0)
        throw InconsistentRamification("parity violation: n(2g-2) + r = " + std::to_string(rhs) +
                                       " is odd");
    long g = (rhs + 2) / 2;
    if (g < 0)
        throw InconsistentRamification("negative genus from Riemann-Hurwitz data");
    return g;
}

// Smooth projective plane model, degree >= 2. The smoothness certificate is
// cached write-once; concurrent callers race only on who computes it.
class PlaneCurve {
public:
    explicit PlaneCurve(HomogPoly F) : F_(std::move(F)), cache_(std::make_shared<Cache>()) {
        if (F_.is_zero()) throw ZeroInput("plane curve needs a nonzero form");
        if (F_.degree() < 2) throw Error("plane curve model needs degree >= 2");
    }

    const HomogPoly& form() const { return F_; }
    int degree() const { return F_.degree(); }

    const SmoothnessCertificate& smoothness() const {
        std::call_once(cache_->flag, [this] { cache_->cert = certify_smoothness(F_); });
        return *cache_->cert;
    }

    bool is_smooth() const { return smoothness().smooth(); }

    // (d-1)(d-2)/2 for smooth models
    long genus() const {
        if (!is_smooth())
            throw NotSmooth("genus formula (d-1)(d-2)/2 applies to smooth curves only; " +
                            smoothness().detail);
        long d = degree();
        return (d - 1) * (d - 2) / 2;
    }

    bool contains(const std::array<Rational, 3>& p) const {
        return F_.evaluate(p[0], p[1], p[2]).is_zero();
    }

private:
    struct Cache {
        std::once_flag flag;
        std::optional<SmoothnessCertificate> cert;
    };

    HomogPoly F_;
    std::shared_ptr<Cache> cache_;
};

// One AlgebraicPoint per irreducible fiber factor of degree <= level;
// multiplicities collapse, order is (degree, coefficient vector).
inline std::vector<AlgebraicPoint> points_on_fiber(const PlaneCurve& C, const Rational& x0,
                                                   unsigned level) {
    FiberPoly fib = fiber_poly(C.form(), x0);
    std::vector<AlgebraicPoint> out;
    if (fib.poly.degree() < 1) return out; // constant fiber: nothing above x0
    Factorization fac = factor_over_Q(fib.poly);
    for (const auto& [g, mult] : fac.factors) {
        (void)mult;
        if (g.degree() >= 1 && g.degree() <= static_cast<long>(level))
            out.push_back(make_point(x0, g));
    }
    return out;
}

// Distinct geometric points above x0 (or above x = infinity on the
// x-reversed model) together with the fiber's degree deficiency d - deg_z.
struct FiberMultiplicity {
    long distinct_roots;
    int deficiency;
};

struct AtInfinity {};

inline FiberMultiplicity count_fiber_multiplicities(const PlaneCurve& C, const Rational& x0) {
    FiberPoly fib = fiber_poly(C.form(), x0);
    long roots = fib.poly.degree() >= 1 ? distinct_root_count(fib.poly) : 0;
    return {roots, fib.deficiency};
}

inline FiberMultiplicity count_fiber_multiplicities(const PlaneCurve& C, AtInfinity) {
    UniPoly f = C.form().fiber_at_infinity();
    if (f.is_zero())
        throw FiberIdenticallyZero("curve contains the line Y = 0");
    long roots = f.degree() >= 1 ? distinct_root_count(f) : 0;
    return {roots, static_cast<int>(C.degree() - f.degree())};
}

// Projective change of coordinates moving P to (0:0:1) and normalizing the
// Z^(d-1) slice to X, the shape whose projection from (0:0:1) has fibers of
// degree d-1. Returns the new model and the matrix sending its coordinates
// back to the original ones.
inline std::pair<PlaneCurve, Mat3> normalize_through_point(const PlaneCurve& C,
                                                           const std::array<Rational, 3>& P) {
    const HomogPoly& F = C.form();
    if (!F.evaluate(P[0], P[1], P[2]).is_zero())
        throw PointNotOnCurve("(" + P[0].str() + ":" + P[1].str() + ":" + P[2].str() +
                              ") does not lie on the curve");
    int d = F.degree();

    // invertible T0 with third column P; the other two columns are standard
    // basis vectors
    Mat3 T0;
    bool built = false;
    for (int i = 0; i < 3 && !built; ++i)
        for (int j = i + 1; j < 3 && !built; ++j) {
            Mat3 cand;
            for (int r = 0; r < 3; ++r) {
                cand.at(r, 0) = Rational(r == i ? 1 : 0);
                cand.at(r, 1) = Rational(r == j ? 1 : 0);
                cand.at(r, 2) = P[static_cast<std::size_t>(r)];
            }
            if (!cand.det().is_zero()) {
                T0 = cand;
                built = true;
            }
        }
    if (!built) throw ZeroInput("degenerate projective point");

    HomogPoly G = F.substitute_linear(T0);
    // (0:0:1) now lies on G, so the Z^d coefficient is zero; the Z^(d-1)
    // slice is the tangent data alpha*X + beta*Y
    Rational alpha = G.coeff({1, 0, d - 1});
    Rational beta = G.coeff({0, 1, d - 1});
    if (alpha.is_zero() && beta.is_zero())
        throw SingularCenter("the Z^" + std::to_string(d - 1) +
                             " slice vanishes after centering; the point is singular");

    Mat3 S = Mat3::identity();
    if (!alpha.is_zero()) {
        // X -> X/alpha - (beta/alpha) Y
        S.at(0, 0) = alpha.inverse();
        S.at(0, 1) = -beta / alpha;
    } else {
        // swap roles: X -> Y, Y -> X/beta
        S.at(0, 0) = Rational(0);
        S.at(0, 1) = Rational(1);
        S.at(1, 0) = beta.inverse();
        S.at(1, 1) = Rational(0);
    }
    HomogPoly Fn = G.substitute_linear(S);
    Mat3 T = T0 * S;
    return {PlaneCurve(std::move(Fn)), T};
}

} // namespace curveprog

#endif

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curveprog/construct.hpp"
#include "named_curves.hpp"

using namespace curveprog;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs, const char* var = "x") {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return UniPoly(std::move(c), var);
}

// a = 1, L2 = 0, L4 = X^4 - Y^4, so the quotient is w^2 = 1 - x^4... with
// L4(x,1) = x^4 - 1 the quotient reads w^2 + x^4 - 1 = 0
BiellipticQuartic fermat_like() {
    HomogPoly L2(2);
    HomogPoly L4(4);
    L4.add_term(Rational(1), {4, 0, 0});
    L4.add_term(Rational(-1), {0, 4, 0});
    return {Rational(1), L2, L4};
}

// a = 1, L2 = XY, L4 = X^4 + Y^4
BiellipticQuartic mixed_model() {
    HomogPoly L2(2);
    L2.add_term(Rational(1), {1, 1, 0});
    HomogPoly L4(4);
    L4.add_term(Rational(1), {4, 0, 0});
    L4.add_term(Rational(1), {0, 4, 0});
    return {Rational(1), L2, L4};
}

} // namespace

TEST_CASE("hyperelliptic progression, f = x^4 + 1") {
    HyperellipticModel m(upoly({1, 0, 0, 0, 1}));
    auto law = Progression::arithmetic(Rational(0), Rational(1)); // nonstandard t0
    auto pts = hyperelliptic_progression(m, law, 3);
    REQUIRE(pts.size() == 3);

    // x = 1: z^2 = 2, D = 2; x = 2: z^2 = 17; x = 3: z^2 = 82
    long expect_d[3] = {2, 17, 82};
    for (int i = 0; i < 3; ++i) {
        REQUIRE(pts[static_cast<std::size_t>(i)].point.has_value());
        const auto& p = *pts[static_cast<std::size_t>(i)].point;
        CHECK(p.x == Rational(i + 1));
        CHECK(p.degree == 2);
        Rational v = m.f.eval(p.x);
        CHECK(p.minpoly_z == UniPoly({-v, Rational(0), Rational(1)}));
        REQUIRE(p.disc.has_value());
        // disc of z^2 - v is 4v; its squarefree part equals that of v
        CHECK(p.disc->D == expect_d[i]);
    }
}

TEST_CASE("hyperelliptic progression squares give rational points") {
    HyperellipticModel sq(upoly({0, 0, 1})); // f = x^2
    auto law = Progression::geometric(Rational(1), Rational(2));
    auto pts = hyperelliptic_progression(sq, law, 4);
    for (const auto& e : pts) {
        REQUIRE(e.point.has_value());
        CHECK(e.point->degree == 1);
        CHECK(*e.point->z_value() == e.x); // z = x for f = x^2
    }

    HyperellipticModel m(upoly({1, 0, 1})); // f = x^2 + 1 at x = 0
    auto zero_law = Progression::arithmetic(Rational(-1), Rational(1)); // x_1 = 0
    auto p0 = hyperelliptic_progression(m, zero_law, 1);
    REQUIRE(p0[0].point.has_value());
    CHECK(p0[0].point->degree == 1);
    CHECK(*p0[0].point->z_value() == Rational(1));
}

TEST_CASE("emitted points satisfy z^2 = f(x) symbolically") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> c(3 + rng() % 4);
        for (auto& v : c) v = Rational(coeff(rng));
        if (c.back().is_zero()) c.back() = Rational(1);
        HyperellipticModel m((UniPoly(c, "x")));
        auto law = Progression::arithmetic(Rational(coeff(rng)),
                                           Rational(static_cast<long>(1 + (rng() % 3))));
        for (const auto& e : HyperellipticStream(m, law).take(10)) {
            REQUIRE(e.point.has_value());
            Rational v = m.f.eval(e.x);
            CHECK(e.point->degree <= 2);
            if (e.point->degree == 2) {
                CHECK(e.point->minpoly_z == UniPoly({-v, Rational(0), Rational(1)}));
            } else {
                Rational z = *e.point->z_value();
                CHECK(z * z == v);
            }
        }
    }
}

TEST_CASE("assemble_bielliptic") {
    auto C = assemble_bielliptic(fermat_like());
    HomogPoly expect = corpus::make({{1, 0, 0, 4}, {1, 4, 0, 0}, {-1, 0, 4, 0}});
    CHECK(C.form() == expect);

    auto C2 = assemble_bielliptic(mixed_model());
    CHECK(C2.form() == corpus::bielliptic_quartic());

    HomogPoly L2(2), L4(4);
    L4.add_term(Rational(1), {4, 0, 0});
    CHECK_THROWS_AS(BiellipticQuartic(Rational(0), L2, L4), Error);
}

TEST_CASE("elliptic quotient and pushforward") {
    auto q = fermat_like();
    QuotientModel E = elliptic_quotient(q);
    // w^2 + x^4 - 1 = 0
    CHECK(E.a == Rational(1));
    CHECK(E.B.is_zero());
    CHECK(E.C == upoly({-1, 0, 0, 0, 1}));

    // (1, 1, 0) on Z^4 + X^4 - Y^4 pushes to (1, 0)
    auto C = assemble_bielliptic(q);
    REQUIRE(C.contains({Rational(1), Rational(1), Rational(0)}));
    AlgebraicPoint p = make_point(Rational(1), UniPoly({Rational(0), Rational(1)}, "z"));
    AlgebraicPoint img = pushforward_point(p);
    CHECK(img.degree == 1);
    CHECK(*img.z_value() == Rational(0));
    CHECK(E.contains(Rational(1), Rational(0)));

    // quadratic point with z^2 = w0 rational pushes to a rational point
    AlgebraicPoint quad = make_point(Rational(0), UniPoly({Rational(-1), Rational(0), Rational(1)}, "z"));
    AlgebraicPoint down = pushforward_point(quad);
    CHECK(down.degree == 1);
    CHECK(*down.z_value() == Rational(1)); // z^2 = 1

    // degree-3 point: minimal polynomial of z^2 via elimination
    AlgebraicPoint cubic = make_point(Rational(1), UniPoly({Rational(1), Rational(1), Rational(0), Rational(1)}, "z"));
    AlgebraicPoint sq = pushforward_point(cubic);
    CHECK(sq.degree == 3); // z^2 generates the same cubic field here
}

TEST_CASE("quotient equation holds under symbolic pushforward") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> small(-8, 8);
    auto q = mixed_model();
    QuotientModel E = elliptic_quotient(q);
    auto C = assemble_bielliptic(q);
    for (int t = 0; t < 100; ++t) {
        // symbolic identity: curve(x, z) equals quotient(x, z^2)
        Rational x(small(rng), 1 + (rng() % 3));
        Rational z(small(rng), 1 + (rng() % 3));
        CHECK(C.form().evaluate(x, Rational(1), z) == E.eval(x, z * z));
    }
}

TEST_CASE("lift_quadratic") {
    auto q = fermat_like();
    // quotient w^2 = 1 - x^4: wait, w^2 + x^4 - 1 = 0 so w^2 = 1 - x^4;
    // (1, 0) sits on it
    auto p = lift_quadratic(q, Rational(1), Rational(0));
    CHECK(p.degree == 1);
    CHECK(*p.z_value() == Rational(0));

    CHECK_THROWS_AS(lift_quadratic(q, Rational(2), Rational(2)), NotOnQuotient);

    // a model whose quotient passes through (0, 2): w^2 + w - 6 at x = 0
    HomogPoly L2(2), L4(4);
    L2.add_term(Rational(1), {0, 2, 0});           // L2(x,1) = 1
    L4.add_term(Rational(1), {4, 0, 0});           // L4(x,1) = x^4 - 6
    L4.add_term(Rational(-6), {0, 4, 0});
    BiellipticQuartic q2(Rational(1), L2, L4);
    auto rational_lift = lift_quadratic(q2, Rational(0), Rational(2));
    CHECK(rational_lift.degree == 2); // z^2 = 2
    REQUIRE(rational_lift.disc.has_value());
    CHECK(rational_lift.disc->D == 2);
}

TEST_CASE("tower levels satisfy the doubling identity") {
    for (const auto& q : {fermat_like(), mixed_model()}) {
        for (const Rational& t0 : {Rational(1), Rational(2), Rational(-1, 2)}) {
            for (unsigned s : {1u, 2u, 4u}) {
                TowerLevel low = tower_level(q, t0, s);
                TowerLevel high = tower_level(q, t0, 2 * s);
                // F_{2s}(x, z) = F_s(x^2, z)
                CHECK(high.B == low.B.substitute_power(2));
                CHECK(high.C == low.C.substitute_power(2));
                CHECK(high.curve_model() == low.curve_model().substitute_power(2));
            }
        }
        CHECK(tower_level(q, Rational(1), 1).curve_model() ==
              AffineZPoly::from_homog(assemble_bielliptic(q).form()));
        CHECK_THROWS_AS(tower_level(q, Rational(0), 2), Error);
    }
}

TEST_CASE("points transport along the tower maps") {
    // (x, z) on C_{2s} maps to (x^2, z) on C_s: the defining equations agree
    auto q = mixed_model();
    TowerLevel c2 = tower_level(q, Rational(1), 2);
    TowerLevel c4 = tower_level(q, Rational(1), 4);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> small(-6, 6);
    for (int t = 0; t < 50; ++t) {
        Rational x(small(rng), 1 + (rng() % 2));
        Rational z(small(rng), 1 + (rng() % 2));
        CHECK(c4.curve_model().evaluate(x, z) == c2.curve_model().evaluate(x * x, z));
        // j-map (x, z) -> (x, z^2) into the quotient
        CHECK(c4.curve_model().evaluate(x, z) == c4.quotient().eval(x, z * z));
    }
}

TEST_CASE("finiteness trace of the Fermat-like model") {
    auto trace = finiteness_trace(fermat_like(), Rational(1), 3);
    REQUIRE(trace.levels.size() == 4); // s = 1, 2, 4, 8
    CHECK(trace.levels[0].genus == 1);
    CHECK(trace.levels[1].genus == 3);
    CHECK(trace.levels[2].genus == 7);
    CHECK(trace.levels[3].genus == 15);
    CHECK(trace.strictly_increasing);
    REQUIRE(trace.cs_level.has_value());
    CHECK(*trace.cs_level == 4); // first genus above 3
    CHECK(trace.levels[2].cs_flag);
    CHECK_FALSE(trace.levels[1].cs_flag);
    for (const auto& lvl : trace.levels) {
        CHECK(lvl.ramification % 2 == 0); // parity invariant
        CHECK(lvl.points_over_zero == 2);
    }
}

TEST_CASE("finiteness trace of the mixed model") {
    auto trace = finiteness_trace(mixed_model(), Rational(1), 3);
    REQUIRE(trace.levels.size() == 4);
    CHECK(trace.levels[0].genus == 1);
    CHECK(trace.levels[1].genus == 3);
    CHECK(trace.levels[2].genus == 7);
    CHECK(trace.levels[3].genus == 15);
    CHECK(trace.strictly_increasing);
    REQUIRE(trace.cs_level.has_value());
    CHECK(*trace.cs_level == 4);
}

TEST_CASE("degenerate towers are refused") {
    // L2^2 - 4a L4 = 0: take L2 = 2X^2, a = 1, L4 = X^4
    HomogPoly L2(2), L4(4);
    L2.add_term(Rational(2), {2, 0, 0});
    L4.add_term(Rational(1), {4, 0, 0});
    BiellipticQuartic degenerate(Rational(1), L2, L4);
    CHECK_THROWS_AS(finiteness_trace(degenerate, Rational(1), 2), DegenerateModel);
}

TEST_CASE("n-level progression on the Klein quartic") {
    PlaneCurve klein(corpus::klein());
    auto law = Progression::arithmetic(Rational(1), Rational(1));
    auto pts = n_level_progression(klein, {Rational(0), Rational(0), Rational(1)}, law, 2);
    REQUIRE(pts.size() == 2);

    // x = 2: fiber 2z^3 + z + 8, irreducible, degree 3
    REQUIRE(pts[0].point.has_value());
    CHECK(pts[0].x == Rational(2));
    CHECK(pts[0].point->degree == 3);
    CHECK(pts[0].point->minpoly_z == UniPoly({Rational(8), Rational(1), Rational(0), Rational(2)}));

    // x = 3: a factor of 3z^3 + z + 27 of degree <= 3
    REQUIRE(pts[1].point.has_value());
    CHECK(pts[1].x == Rational(3));
    CHECK(pts[1].point->degree <= 3);
    UniPoly fiber3({Rational(27), Rational(1), Rational(0), Rational(3)});
    CHECK(pts[1].point->minpoly_z.divides(fiber3));
}

TEST_CASE("n-level stream invariants") {
    PlaneCurve klein(corpus::klein());
    auto law = Progression::geometric(Rational(1), Rational(2));
    NLevelStream stream(klein, {Rational(0), Rational(0), Rational(1)}, law);
    CHECK(stream.level() == 3);
    std::vector<Rational> xs;
    for (const auto& e : stream.take(12)) {
        REQUIRE(e.point.has_value());
        CHECK(e.point->degree <= 3);
        UniPoly fib = fiber_poly(stream.normalized().form(), e.x).poly;
        CHECK(e.point->minpoly_z.divides(fib));
        xs.push_back(e.x);
    }
    auto fit = classify(xs);
    CHECK((fit.kind == FitKind::Geometric || fit.kind == FitKind::Both));
}

TEST_CASE("n-level generation requires smoothness and membership") {
    PlaneCurve nodal(corpus::nodal_cubic());
    auto law = Progression::arithmetic(Rational(1), Rational(1));
    CHECK_THROWS_AS(n_level_progression(nodal, {Rational(0), Rational(0), Rational(1)}, law, 1),
                    NotSmooth);

    PlaneCurve klein(corpus::klein());
    CHECK_THROWS_AS(n_level_progression(klein, {Rational(1), Rational(1), Rational(1)}, law, 1),
                    PointNotOnCurve);
}

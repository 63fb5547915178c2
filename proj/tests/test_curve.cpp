#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curveprog/curve.hpp"
#include "named_curves.hpp"

using namespace curveprog;

TEST_CASE("smoothness of the named corpus") {
    for (const auto& nc : corpus::all()) {
        INFO("curve: " << nc.name);
        PlaneCurve C(nc.form);
        CHECK(C.is_smooth() == nc.smooth);
    }
}

TEST_CASE("smooth certificates carry a witness prime") {
    PlaneCurve fermat(corpus::fermat4());
    const auto& cert = fermat.smoothness();
    REQUIRE(cert.smooth());
    CHECK(cert.method == "modular");
    REQUIRE(cert.witness_prime.has_value());
    CHECK(*cert.witness_prime >= 101);
    CHECK(*cert.witness_prime <= 499);

    PlaneCurve klein(corpus::klein());
    CHECK(klein.smoothness().smooth());
    CHECK(klein.smoothness().witness_prime.has_value());
}

TEST_CASE("singular certificates find rational witnesses") {
    PlaneCurve cusp(corpus::cuspidal_cubic());
    const auto& cert = cusp.smoothness();
    REQUIRE_FALSE(cert.smooth());
    REQUIRE(cert.singular_point.has_value());
    auto p = *cert.singular_point;
    // (0:0:1), up to the representative chosen
    CHECK(cusp.contains(p));
    CHECK(p[0].is_zero());
    CHECK(p[1].is_zero());

    PlaneCurve nodal(corpus::nodal_cubic());
    REQUIRE_FALSE(nodal.is_smooth());
    REQUIRE(nodal.smoothness().singular_point.has_value());

    PlaneCurve lines(corpus::triple_lines());
    REQUIRE_FALSE(lines.is_smooth());

    PlaneCurve doubled(corpus::doubled_conic());
    REQUIRE_FALSE(doubled.is_smooth());
    REQUIRE(doubled.smoothness().singular_point.has_value());
    CHECK(doubled.contains(*doubled.smoothness().singular_point));
}

TEST_CASE("singular only over an extension: elimination certificate") {
    PlaneCurve pair(corpus::conic_pair());
    const auto& cert = pair.smoothness();
    REQUIRE_FALSE(cert.smooth());
    CHECK(cert.method == "exact-elimination");
    CHECK_FALSE(cert.singular_point.has_value());
    CHECK_FALSE(cert.detail.empty());
}

TEST_CASE("modular and exact smoothness paths agree on the corpus") {
    for (const auto& nc : corpus::all()) {
        INFO("curve: " << nc.name);
        // exact route
        std::array<HomogPoly, 3> parts{nc.form.partial(0), nc.form.partial(1),
                                       nc.form.partial(2)};
        auto line = smooth_detail::exact_line_analysis(parts, nc.form.degree() - 1);
        auto chart = smooth_detail::exact_chart_analysis(parts);
        bool exact_singular = line.singular || chart.singular;
        CHECK(exact_singular == !nc.smooth);

        // modular route: first usable prime that concludes
        if (nc.smooth) {
            bool found_smooth_prime = false;
            for (std::uint64_t p : smoothness_prime_schedule()) {
                auto v = smooth_detail::smooth_mod_p(nc.form, p);
                if (v.has_value()) {
                    found_smooth_prime = *v;
                    break;
                }
            }
            CHECK(found_smooth_prime);
        } else {
            // a truly singular curve reduces singular at every usable prime
            int seen = 0;
            for (std::uint64_t p : smoothness_prime_schedule()) {
                if (seen >= 3) break;
                auto v = smooth_detail::smooth_mod_p(nc.form, p);
                if (!v.has_value()) continue;
                ++seen;
                CHECK_FALSE(*v);
            }
            CHECK(seen > 0);
        }
    }
}

TEST_CASE("genus of smooth plane curves") {
    CHECK(PlaneCurve(corpus::fermat3()).genus() == 1);
    CHECK(PlaneCurve(corpus::fermat4()).genus() == 3);
    CHECK(PlaneCurve(corpus::fermat5()).genus() == 6);
    CHECK(PlaneCurve(corpus::conic()).genus() == 0);
    CHECK_THROWS_AS(PlaneCurve(corpus::cuspidal_cubic()).genus(), NotSmooth);
}

TEST_CASE("points_on_fiber on the Klein quartic") {
    PlaneCurve klein(corpus::klein());

    auto level3 = points_on_fiber(klein, Rational(1), 3);
    REQUIRE(level3.size() == 1);
    CHECK(level3[0].degree == 3);
    CHECK(level3[0].minpoly_z == UniPoly({Rational(1), Rational(1), Rational(0), Rational(1)}));

    CHECK(points_on_fiber(klein, Rational(1), 2).empty());

    auto level1 = points_on_fiber(klein, Rational(0), 1);
    REQUIRE(level1.size() == 1);
    CHECK(level1[0].is_rational());
    CHECK(*level1[0].z_value() == Rational(0));
}

TEST_CASE("fiber points carry quadratic field names") {
    // fermat quartic at x = 0: z^4 = 1 gives two rational points and z^2+1
    PlaneCurve fermat(corpus::fermat4());
    auto pts = points_on_fiber(fermat, Rational(0), 2);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].degree == 1);
    CHECK(pts[1].degree == 1);
    CHECK(pts[2].degree == 2);
    REQUIRE(pts[2].disc.has_value());
    CHECK(pts[2].disc->D == -1);
}

TEST_CASE("minpoly divides the fiber polynomial exactly") {
    std::mt19937_64 rng(23);
    for (const auto& nc : corpus::all()) {
        if (!nc.smooth) continue;
        PlaneCurve C(nc.form);
        for (int t = 0; t < 5; ++t) {
            Rational x0(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 3));
            std::vector<AlgebraicPoint> pts;
            try {
                pts = points_on_fiber(C, x0, static_cast<unsigned>(nc.form.degree()));
            } catch (const FiberIdenticallyZero&) {
                continue;
            }
            UniPoly fib = fiber_poly(nc.form, x0).poly;
            for (const auto& pt : pts) {
                CHECK(pt.minpoly_z.divides(fib));
                CHECK(pt.degree == static_cast<unsigned>(pt.minpoly_z.degree()));
            }
        }
    }
}

TEST_CASE("count_fiber_multiplicities") {
    PlaneCurve klein(corpus::klein());
    auto m0 = count_fiber_multiplicities(klein, Rational(0));
    CHECK(m0.distinct_roots == 1);
    CHECK(m0.deficiency == 3);

    auto m1 = count_fiber_multiplicities(klein, Rational(1));
    CHECK(m1.distinct_roots == 3);
    CHECK(m1.deficiency == 1);

    auto minf = count_fiber_multiplicities(klein, AtInfinity{});
    CHECK(minf.distinct_roots == 1);
    CHECK(minf.deficiency == 1);

    // conic XZ - Y^2 at x = 0: fiber is the nonzero constant -1, and the
    // full degree 2 is absorbed at the projection center
    PlaneCurve conic(corpus::make({{1, 1, 0, 1}, {-1, 0, 2, 0}}));
    auto mc = count_fiber_multiplicities(conic, Rational(0));
    CHECK(mc.distinct_roots == 0);
    CHECK(mc.deficiency == 2);
}

TEST_CASE("riemann_hurwitz_genus") {
    CHECK(riemann_hurwitz_genus({1, 5, 10}) == 6); // genus >= 2 conclusion
    CHECK(riemann_hurwitz_genus({3, 2, 4}) == 7);
    CHECK(riemann_hurwitz_genus({0, 1, 0}) == 0);
    CHECK(riemann_hurwitz_genus({1, 2, 0}) == 1);
    CHECK_THROWS_AS(riemann_hurwitz_genus({0, 1, 1}), InconsistentRamification);
    CHECK_THROWS_AS(riemann_hurwitz_genus({0, 2, 0}), InconsistentRamification);
    CHECK_THROWS_AS(riemann_hurwitz_genus({-1, 2, 0}), InconsistentRamification);
}

TEST_CASE("normalize_through_point leaves the Klein quartic alone") {
    PlaneCurve klein(corpus::klein());
    auto [norm, T] = normalize_through_point(klein, {Rational(0), Rational(0), Rational(1)});
    CHECK(norm.form() == klein.form());
    CHECK(T.det() == Rational(1));
}

TEST_CASE("normalize_through_point postconditions on the Fermat quartic") {
    PlaneCurve fermat(corpus::fermat4());
    std::array<Rational, 3> P{Rational(1), Rational(0), Rational(1)};
    auto [norm, T] = normalize_through_point(fermat, P);
    const HomogPoly& G = norm.form();
    int d = G.degree();

    CHECK(G.evaluate(Rational(0), Rational(0), Rational(1)).is_zero());
    CHECK(G.coeff({0, 0, d}).is_zero());
    CHECK(G.coeff({1, 0, d - 1}) == Rational(1));
    CHECK(G.coeff({0, 1, d - 1}).is_zero());

    // the transform reproduces the original model exactly
    CHECK(fermat.form().substitute_linear(T) == G);

    // the image of (0:0:1) under T is P
    auto img = T.apply({Rational(0), Rational(0), Rational(1)});
    CHECK(img == P);

    // generic fibers now have degree d - 1
    auto fib = fiber_poly(G, Rational(7));
    CHECK(fib.poly.degree() == d - 1);
}

TEST_CASE("normalize_through_point error paths") {
    PlaneCurve fermat(corpus::fermat4());
    CHECK_THROWS_AS(
        normalize_through_point(fermat, {Rational(1), Rational(1), Rational(1)}),
        PointNotOnCurve);

    PlaneCurve nodal(corpus::nodal_cubic());
    CHECK_THROWS_AS(
        normalize_through_point(nodal, {Rational(0), Rational(0), Rational(1)}),
        SingularCenter);
}

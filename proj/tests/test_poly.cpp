#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "curveprog/bipoly.hpp"
#include "curveprog/gfp.hpp"
#include "curveprog/homogpoly.hpp"
#include "curveprog/unipoly.hpp"

using namespace curveprog;

namespace {

HomogPoly fermat_quartic() { // X^4 + Y^4 - Z^4
    HomogPoly f(4);
    f.add_term(Rational(1), {4, 0, 0});
    f.add_term(Rational(1), {0, 4, 0});
    f.add_term(Rational(-1), {0, 0, 4});
    return f;
}

HomogPoly klein_quartic() { // X^3*Y + Y^3*Z + Z^3*X
    HomogPoly f(4);
    f.add_term(Rational(1), {3, 1, 0});
    f.add_term(Rational(1), {0, 3, 1});
    f.add_term(Rational(1), {1, 0, 3});
    return f;
}

HomogPoly random_homog(std::mt19937_64& rng, int degree) {
    HomogPoly f(degree);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b)
            if (rng() % 3 == 0) f.add_term(Rational(coeff(rng)), {a, b, degree - a - b});
    return f;
}

UniPoly upoly(std::initializer_list<long> coeffs, const char* var = "z") {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return UniPoly(std::move(c), var);
}

} // namespace

TEST_CASE("unipoly arithmetic basics") {
    UniPoly f = upoly({1, 0, 1}); // 1 + z^2
    UniPoly g = upoly({-1, 1});   // z - 1
    CHECK((f * g).coeffs() == upoly({-1, 1, -1, 1}).coeffs());
    CHECK(f.eval(Rational(2)) == Rational(5));
    CHECK(f.derivative() == upoly({0, 2}));
    auto [q, r] = (f * g).divmod(g);
    CHECK(q == f);
    CHECK(r.is_zero());
}

TEST_CASE("unipoly gcd via subresultants") {
    UniPoly a = upoly({-1, 0, 1});      // z^2 - 1
    UniPoly b = upoly({1, 2, 1});       // (z+1)^2
    CHECK(gcd(a, b) == upoly({1, 1}));  // z + 1
    CHECK(gcd(a, upoly({1, 0, 1})) == upoly({1}));

    // coefficient-growth stress: gcd of large random products agrees with
    // the constructed common factor
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-20, 20);
    for (int trial = 0; trial < 30; ++trial) {
        auto rand_poly = [&](int deg) {
            std::vector<Rational> c;
            for (int i = 0; i <= deg; ++i) c.emplace_back(coeff(rng));
            c.back() = Rational(coeff(rng) | 1);
            return UniPoly(c, "z");
        };
        UniPoly common = rand_poly(3), u = rand_poly(4), v = rand_poly(2);
        UniPoly g = gcd(common * u, common * v);
        CHECK(g.divides(common * u));
        CHECK(g.divides(common * v));
        CHECK(common.primitive_part().divides(g));
    }
}

TEST_CASE("resultant worked examples") {
    CHECK(resultant(upoly({-1, 1}), upoly({1, 1})) == Rational(2));
    CHECK(resultant(upoly({0, 0, 1}), upoly({-2, 1})) == Rational(4)); // Res(z^2, z-2)
    UniPoly f = upoly({1, 1, 1});
    CHECK(resultant(f, f) == Rational(0));
    CHECK_THROWS_AS(resultant(UniPoly("z"), f), ZeroInput);
}

TEST_CASE("resultant vanishes exactly on common factors") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-10, 10);
    auto rand_poly = [&](int deg) {
        std::vector<Rational> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back(coeff(rng));
        if (c.back().is_zero()) c.back() = Rational(1);
        return UniPoly(c, "z");
    };
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly a = rand_poly(3), b = rand_poly(4);
        bool res_zero = resultant(a, b).is_zero();
        bool gcd_nonconst = gcd(a, b).degree() > 0;
        CHECK(res_zero == gcd_nonconst);
        UniPoly common = rand_poly(2);
        CHECK(resultant(a * common, b * common).is_zero());
    }
}

TEST_CASE("homogpoly evaluate") {
    CHECK(fermat_quartic().evaluate(Rational(1), Rational(0), Rational(1)) == Rational(0));
    CHECK(klein_quartic().evaluate(Rational(0), Rational(0), Rational(1)) == Rational(0));
    CHECK(fermat_quartic().evaluate(Rational(1), Rational(1), Rational(1)) == Rational(1));
}

TEST_CASE("homogpoly partial derivatives") {
    HomogPoly fermat_sum(4);
    fermat_sum.add_term(Rational(1), {4, 0, 0});
    fermat_sum.add_term(Rational(1), {0, 4, 0});
    fermat_sum.add_term(Rational(1), {0, 0, 4});
    HomogPoly dx = fermat_sum.partial(0);
    CHECK(dx == HomogPoly::monomial(Rational(4), 3, 0, 0));

    HomogPoly zd = HomogPoly::monomial(Rational(7), 0, 0, 3);
    CHECK(zd.partial(0).is_zero());
    CHECK(zd.partial(0).degree() == 2);

    HomogPoly x3y = HomogPoly::monomial(Rational(1), 3, 1, 0);
    CHECK(x3y.partial(1) == HomogPoly::monomial(Rational(1), 3, 0, 0));

    // homogeneity: every term of a partial has total degree d-1
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        HomogPoly f = random_homog(rng, 5);
        for (int v = 0; v < 3; ++v) {
            HomogPoly p = f.partial(v);
            for (const auto& [e, c] : p.terms()) {
                CHECK(e[0] + e[1] + e[2] == 4);
                CHECK(!c.is_zero());
            }
        }
    }
}

TEST_CASE("fiber_poly on the Klein quartic") {
    auto fib1 = fiber_poly(klein_quartic(), Rational(1));
    CHECK(fib1.poly == upoly({1, 1, 0, 1})); // z^3 + z + 1
    CHECK(fib1.deficiency == 1);

    auto fib0 = fiber_poly(klein_quartic(), Rational(0));
    CHECK(fib0.poly == upoly({0, 1})); // z
    CHECK(fib0.deficiency == 3);

    HomogPoly conic(2); // X^2 + Y^2 - Z^2
    conic.add_term(Rational(1), {2, 0, 0});
    conic.add_term(Rational(1), {0, 2, 0});
    conic.add_term(Rational(-1), {0, 0, 2});
    auto fibc = fiber_poly(conic, Rational(0));
    CHECK(fibc.poly == upoly({1, 0, -1})); // -z^2 + 1
}

TEST_CASE("fiber identically zero raises") {
    // (X - Y) * X: contains the line x = y
    HomogPoly f(2);
    f.add_term(Rational(1), {2, 0, 0});
    f.add_term(Rational(-1), {1, 1, 0});
    CHECK_THROWS_AS(fiber_poly(f, Rational(1)), FiberIdenticallyZero);
}

TEST_CASE("substitute_shift_scale worked examples") {
    HomogPoly x = HomogPoly::monomial(Rational(1), 1, 0, 0);
    CHECK(x.substitute_shift_scale(Rational(0), Rational(1)) == x);

    HomogPoly x2 = HomogPoly::monomial(Rational(1), 2, 0, 0);
    HomogPoly expect(2); // X^2 + 2XY + Y^2
    expect.add_term(Rational(1), {2, 0, 0});
    expect.add_term(Rational(2), {1, 1, 0});
    expect.add_term(Rational(1), {0, 2, 0});
    CHECK(x2.substitute_shift_scale(Rational(1), Rational(1)) == expect);

    HomogPoly xz = HomogPoly::monomial(Rational(1), 1, 0, 1);
    HomogPoly expect2(2); // 3XZ + 2YZ
    expect2.add_term(Rational(3), {1, 0, 1});
    expect2.add_term(Rational(2), {0, 1, 1});
    CHECK(xz.substitute_shift_scale(Rational(2), Rational(3)) == expect2);

    CHECK_THROWS_AS(x.substitute_shift_scale(Rational(1), Rational(0)), InvalidScale);
}

TEST_CASE("substitution commutes with evaluation") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> small(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        HomogPoly f = random_homog(rng, 4);
        Rational t0(small(rng)), t(small(rng));
        if (t.is_zero()) t = Rational(1);
        HomogPoly g = f.substitute_shift_scale(t0, t);
        Rational x(small(rng)), y(small(rng)), z(small(rng));
        CHECK(g.evaluate(x, y, z) == f.evaluate(t0 * y + t * x, y, z));
    }
}

TEST_CASE("fiber_poly agrees with evaluation") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> small(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        HomogPoly f = random_homog(rng, 4);
        Rational x0(small(rng), 1 + (rng() % 3));
        UniPoly fib = f.fiber_poly_raw(x0);
        Rational z0(small(rng));
        CHECK(fib.eval(z0) == f.evaluate(x0, Rational(1), z0));
    }
}

TEST_CASE("substitute_power on affine shapes") {
    CHECK(upoly({1, 1}, "x").substitute_power(2) == upoly({1, 0, 1}, "x"));
    CHECK(upoly({0, 0, 1}, "x").substitute_power(3) == upoly({0, 0, 0, 0, 0, 0, 1}, "x"));
    CHECK(upoly({-1, 0, 0, 0, 1}, "x").substitute_power(2) ==
          upoly({-1, 0, 0, 0, 0, 0, 0, 0, 1}, "x"));

    // whole-model substitution matches evaluation at x^s
    AffineZPoly model = AffineZPoly::from_homog(klein_quartic());
    AffineZPoly squared = model.substitute_power(2);
    for (long xv = -3; xv <= 3; ++xv)
        for (long zv = -2; zv <= 2; ++zv)
            CHECK(squared.evaluate(Rational(xv), Rational(zv)) ==
                  model.evaluate(Rational(xv * xv), Rational(zv)));
}

TEST_CASE("bivariate resultant in z") {
    // Res_z(z^2 - x, z - x) = x^2 - x
    AffineZPoly f(std::vector<UniPoly>{upoly({0, -1}, "x"), upoly({}, "x"), upoly({1}, "x")});
    AffineZPoly g(std::vector<UniPoly>{upoly({0, -1}, "x"), upoly({1}, "x")});
    CHECK(resultant_z(f, g) == upoly({0, -1, 1}, "x"));

    // mod-p route agrees
    GFpField K(101);
    AffineZPolyP fp{{FpPoly{0, 100}, FpPoly{}, FpPoly{1}}};
    AffineZPolyP gp{{FpPoly{0, 100}, FpPoly{1}}};
    FpPoly rp = fp_resultant_z(K, fp, gp);
    CHECK(rp == FpPoly({0, 100, 1}));
}

TEST_CASE("reduce_mod_p") {
    HomogPolyP r = reduce_mod_p(fermat_quartic(), 3);
    CHECK(r.terms.at({4, 0, 0}) == 1);
    CHECK(r.terms.at({0, 4, 0}) == 1);
    CHECK(r.terms.at({0, 0, 4}) == 2);

    HomogPoly half(2);
    half.add_term(Rational(1, 2), {2, 0, 0});
    CHECK_THROWS_AS(reduce_mod_p(half, 2), BadReductionPrime);

    HomogPoly five = HomogPoly::monomial(Rational(5), 3, 1, 0);
    CHECK_THROWS_AS(reduce_mod_p(five, 5), BadReductionPrime);
}

TEST_CASE("degrevlex printing") {
    CHECK(klein_quartic().str() == "X^3*Y + Y^3*Z + X*Z^3");
    CHECK(fermat_quartic().str() == "X^4 + Y^4 - Z^4");
    HomogPoly scaled(2);
    scaled.add_term(Rational(-3, 2), {1, 1, 0});
    scaled.add_term(Rational(1), {0, 0, 2});
    CHECK(scaled.str() == "-3/2*X*Y + Z^2");
}

TEST_CASE("mod-p factorization multiplies back") {
    GFpField K(17);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        FpPoly f(1 + rng() % 9, 0);
        for (auto& c : f) c = rng() % 17;
        f.push_back(1 + rng() % 16);
        auto factors = fp_factor(K, f);
        FpPoly prod{f.back()}; // unit = leading coefficient
        for (const auto& [g, m] : factors)
            for (unsigned i = 0; i < m; ++i) prod = fp_mul(K, prod, g);
        fp_trim(K, f);
        CHECK(prod == f);
        for (const auto& [g, m] : factors) CHECK(g.back() == 1);
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <random>

#include "curveprog/progression.hpp"
#include "oracles.hpp"

using namespace curveprog;

namespace {
std::vector<Rational> rats(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}
} // namespace

TEST_CASE("term accessor") {
    auto a = Progression::arithmetic(Rational(1), Rational(1));
    CHECK(a.term(3) == Rational(4));
    auto g = Progression::geometric(Rational(1), Rational(2));
    CHECK(g.term(4) == Rational(16));
    auto h = Progression::geometric(Rational(3), Rational(1, 2));
    CHECK(h.term(2) == Rational(3, 4));
    CHECK_THROWS_AS(a.term(0), Error);
}

TEST_CASE("law validation") {
    CHECK_THROWS_AS(Progression::arithmetic(Rational(1), Rational(0)), Error);
    CHECK_THROWS_AS(Progression::geometric(Rational(0), Rational(2)), Error);
    CHECK_THROWS_AS(Progression::geometric(Rational(1), Rational(1)), Error);
    CHECK_THROWS_AS(Progression::geometric(Rational(1), Rational(-1)), Error);
    ProgressionRules loose;
    loose.allow_degenerate_geometric = true;
    CHECK(Progression::geometric(Rational(1), Rational(-1), loose).t == Rational(-1));

    auto a0 = Progression::arithmetic(Rational(0), Rational(1));
    CHECK(a0.nonstandard_t0);
    CHECK_THROWS_AS(Progression::arithmetic(Rational(0), Rational(1), ProgressionRules::strict()),
                    Error);
}

TEST_CASE("longest_ap documented example") {
    auto r = longest_ap(rats({1, 3, 4, 5, 7, 9}));
    CHECK(r.law.t == Rational(2));
    REQUIRE(r.members.size() == 5);
    CHECK(r.members == rats({1, 3, 5, 7, 9}));
    CHECK(*r.law.length == 5);
    CHECK(r.law.t0 == Rational(-1)); // 1 = t0 + 1*2
}

TEST_CASE("longest_ap pair fallback") {
    auto r = longest_ap(rats({0, 10}));
    CHECK(r.members == rats({0, 10}));
    CHECK(r.law.t == Rational(10));
}

TEST_CASE("longest_gp documented examples") {
    auto r = longest_gp(rats({1, 2, 3, 4, 8, 16}));
    CHECK(r.law.t == Rational(2));
    CHECK(r.members == rats({1, 2, 4, 8, 16}));

    auto neg = longest_gp(rats({1, -2, 4, -8}));
    CHECK(neg.law.t == Rational(-2));
    CHECK(neg.members == rats({1, -2, 4, -8}));

    CHECK_THROWS_AS(longest_gp(rats({0, 1, 2})), ZeroInSet);
}

TEST_CASE("search results classify back to their law") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t sz = 3 + rng() % 10;
        std::vector<Rational> vals;
        for (std::size_t i = 0; i < sz; ++i) vals.emplace_back(num(rng), den(rng));

        auto ap = longest_ap(vals);
        if (ap.members.size() >= 3) {
            auto fit = classify(ap.members);
            bool arith_ok = fit.kind == FitKind::Arithmetic || fit.kind == FitKind::Both;
            CHECK(arith_ok);
            CHECK(fit.arithmetic->t == ap.law.t);
            CHECK(fit.arithmetic->t0 == ap.law.t0);
        }

        std::vector<Rational> nonzero;
        for (const auto& v : vals)
            if (!v.is_zero()) nonzero.push_back(v);
        if (nonzero.size() < 2) continue;
        auto gp = longest_gp(nonzero);
        if (gp.members.size() >= 3) {
            auto fit = classify(gp.members);
            bool geom_ok = fit.kind == FitKind::Geometric || fit.kind == FitKind::Both;
            CHECK(geom_ok);
            CHECK(fit.geometric->t == gp.law.t);
        }
    }
}

TEST_CASE("exhaustive oracle agreement on 500 random sets") {
    std::mt19937_64 rng(20260811);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t sz = 2 + rng() % 11; // up to 12
        std::vector<Rational> vals;
        for (std::size_t i = 0; i < sz; ++i) vals.emplace_back(num(rng), den(rng));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        if (vals.size() < 2) continue;

        auto ap = longest_ap(vals);
        CHECK(ap.members.size() == oracles::longest_ap_exhaustive(vals));

        std::vector<Rational> nonzero;
        for (const auto& v : vals)
            if (!v.is_zero()) nonzero.push_back(v);
        if (nonzero.size() >= 2) {
            auto gp_len = oracles::longest_gp_exhaustive(nonzero);
            if (gp_len >= 2) {
                auto gp = longest_gp(nonzero);
                CHECK(gp.members.size() == gp_len);
            }
        }
    }
}

TEST_CASE("classify worked examples") {
    auto a = classify(rats({2, 4, 6}));
    CHECK(a.kind == FitKind::Arithmetic);
    CHECK(a.arithmetic->t0 == Rational(0));
    CHECK(a.arithmetic->t == Rational(2));
    CHECK(a.arithmetic->nonstandard_t0);

    auto g = classify(rats({2, 4, 8}));
    CHECK(g.kind == FitKind::Geometric);
    CHECK(g.geometric->t0 == Rational(1));
    CHECK(g.geometric->t == Rational(2));

    CHECK(classify(rats({1, 2, 4, 7})).kind == FitKind::None);
    CHECK_THROWS_AS(classify(rats({1, 2})), Error);

    // strict mode rejects the t0 = 0 fit
    auto strict = classify(rats({2, 4, 6}), ProgressionRules::strict());
    CHECK(strict.kind == FitKind::None);
}

TEST_CASE("strict mode changes the reported law") {
    // {1, 2, 3} as consecutive terms from i = 1 forces t0 = 0; strict mode
    // bans that law, so only length-2 windows with t0 != 0 remain
    auto normal = longest_ap(rats({1, 2, 3}));
    CHECK(normal.law.t0 == Rational(0));
    CHECK(normal.law.nonstandard_t0);
    CHECK(normal.members.size() == 3);

    auto strict = longest_ap(rats({1, 2, 3}), ProgressionRules::strict());
    CHECK_FALSE(strict.law.t0.is_zero());
    CHECK(strict.members.size() == 2);
}

TEST_CASE("runtime scales to two thousand values") {
    std::mt19937_64 rng(5);
    std::vector<Rational> vals;
    for (int i = 0; i < 2000; ++i) vals.emplace_back(static_cast<long>(rng() % 100000), 1);
    auto start = std::chrono::steady_clock::now();
    auto r = longest_ap(vals);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.members.size() >= 2);
    CHECK(secs < 5.0);
}

#ifndef CURVEPROG_SEARCH_HPP
#define CURVEPROG_SEARCH_HPP

#include <atomic>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "curveprog/construct.hpp"
#include "curveprog/curve.hpp"
#include "curveprog/progression.hpp"

namespace curveprog {

struct HeightBound {
    Integer H; // height of p/q in lowest terms is max(|p|, |q|)

    explicit HeightBound(Integer h) : H(std::move(h)) {
        if (H < 1) throw Error("height bound must be at least 1");
    }
    explicit HeightBound(long h) : HeightBound(Integer(h)) {}
};

// All reduced rationals of height <= H, ordered by height then value.
// Height h contributes p/h for |p| <= h coprime to h, and +-h/q for q < h
// coprime to h.
inline std::vector<Rational> enumerate_by_height(const HeightBound& b) {
    std::vector<Rational> out;
    for (Integer h = 1; h <= b.H; ++h) {
        std::vector<Rational> layer;
        for (Integer p = -h; p <= h; ++p) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), h.get_mpz_t());
            if (g == 1 || (p == 0 && h == 1)) layer.emplace_back(p, h);
        }
        for (Integer q = 1; q < h; ++q) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            layer.emplace_back(h, q);
            layer.emplace_back(-h, q);
        }
        std::sort(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

inline unsigned default_worker_count() {
    if (const char* env = std::getenv("CURVEPROG_WORKERS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

struct SearchOptions {
    unsigned workers = 0; // 0: resolve from CURVEPROG_WORKERS / hardware

    unsigned resolved_workers() const { return workers ? workers : default_worker_count(); }
};

namespace detail {

// Data-parallel map over the x-candidates: workers pull indices from a
// shared counter and write into index-addressed slots, so the merged output
// never depends on scheduling.
template <class Fn>
void parallel_index_map(std::size_t count, unsigned workers, const Fn& fn) {
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    auto body = [&] {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<unsigned>(workers, static_cast<unsigned>(count));
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
}

} // namespace detail

// Every point (x, 1, z) with z rational and height(x) <= H; complete for the
// y = 1 patch by fiber root extraction over each reduced x.
inline std::vector<AlgebraicPoint> rational_points(const PlaneCurve& C, const HeightBound& b,
                                                   const SearchOptions& opts = {}) {
    std::vector<Rational> xs = enumerate_by_height(b);
    std::vector<std::vector<AlgebraicPoint>> slots(xs.size());
    detail::parallel_index_map(xs.size(), opts.resolved_workers(), [&](std::size_t i) {
        UniPoly fib = fiber_poly(C.form(), xs[i]).poly;
        if (fib.degree() < 1) return;
        std::vector<Rational> roots = rational_roots(fib);
        // canonical factor order: minpoly z - z0 sorts by its coefficient
        // vector, i.e. descending in z0
        std::sort(roots.begin(), roots.end(), [](const Rational& a, const Rational& b) {
            return b < a;
        });
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        for (const Rational& z : roots)
            slots[i].push_back(make_point(xs[i], UniPoly({-z, Rational(1)}, "z")));
    });
    std::vector<AlgebraicPoint> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

// Points of degree <= n above every x of height <= H; n = 1 recovers
// rational_points, n = 2 is the height-bounded slice of the quadratic
// points.
inline std::vector<AlgebraicPoint> level_points(const PlaneCurve& C, const HeightBound& b,
                                                unsigned n, const SearchOptions& opts = {}) {
    if (n < 1 || n > static_cast<unsigned>(C.degree()))
        throw Error("level must satisfy 1 <= n <= degree");
    std::vector<Rational> xs = enumerate_by_height(b);
    std::vector<std::vector<AlgebraicPoint>> slots(xs.size());
    detail::parallel_index_map(xs.size(), opts.resolved_workers(), [&](std::size_t i) {
        slots[i] = points_on_fiber(C, xs[i], n);
    });
    std::vector<AlgebraicPoint> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

struct CurveProgressionResult {
    Progression law;
    std::vector<Rational> members;
    std::vector<std::vector<AlgebraicPoint>> points; // realized points per member
    std::string note; // e.g. x = 0 dropped for geometric laws
};

// Longest progression among the x-coordinates that carry a point of degree
// <= n within the height bound. Maximal over the collected x-set only; no
// claim beyond height H.
inline CurveProgressionResult longest_progression_on_curve(const PlaneCurve& C,
                                                           const HeightBound& b, unsigned n,
                                                           ProgressionKind kind,
                                                           const ProgressionRules& rules = {},
                                                           const SearchOptions& opts = {}) {
    std::vector<AlgebraicPoint> pts = level_points(C, b, n, opts);
    std::vector<Rational> xs;
    for (const auto& p : pts) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    CurveProgressionResult out{Progression{kind, Rational(0), Rational(1), std::nullopt, false},
                               {}, {}, ""};
    if (kind == ProgressionKind::Geometric) {
        std::vector<Rational> nonzero;
        for (const auto& x : xs)
            if (!x.is_zero()) nonzero.push_back(x);
        if (nonzero.size() != xs.size())
            out.note = "x = 0 carries points but cannot join a geometric law";
        xs = std::move(nonzero);
    }
    if (xs.size() < 2)
        throw NotEnoughPoints("fewer than 2 usable x-values with points of degree <= " +
                              std::to_string(n) + " up to height " + b.H.get_str());

    ProgressionSearchResult found = kind == ProgressionKind::Arithmetic
                                        ? longest_ap(xs, rules)
                                        : longest_gp(xs, rules);
    out.law = found.law;
    out.members = found.members;
    for (const Rational& x : out.members) {
        std::vector<AlgebraicPoint> here;
        for (const auto& p : pts)
            if (p.x == x) here.push_back(p);
        out.points.push_back(std::move(here));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verdict engine: the finiteness/infinitude rule table with one citation
// anchor per line.
// ---------------------------------------------------------------------------

struct VerdictLine {
    std::string subject;   // what the line speaks about
    std::string status;    // FINITE | INFINITE_CONSTRUCTIVE | CONDITIONAL | NOT_COVERED
    std::string statement; // human-readable rule
    std::string citation;  // anchor phrase of the theorem used
};

struct Verdict {
    int degree = 0;
    bool smooth = false;
    std::optional<long> genus;
    std::optional<VerdictLine> rational_progressions;
    std::optional<VerdictLine> quadratic_progressions;
    std::optional<VerdictLine> quadratic_points; // the set, not the progressions
    std::optional<VerdictLine> n_level;          // n = gonality = d - 1
    unsigned n_level_n = 0;
    std::optional<QuotientModel> quotient; // attached for the conditional case
    std::vector<std::string> citations;

    std::vector<const VerdictLine*> lines() const {
        std::vector<const VerdictLine*> ls;
        if (rational_progressions) ls.push_back(&*rational_progressions);
        if (quadratic_progressions) ls.push_back(&*quadratic_progressions);
        if (quadratic_points) ls.push_back(&*quadratic_points);
        if (n_level) ls.push_back(&*n_level);
        return ls;
    }
};

// detects a Z -> -Z symmetric quartic: a Z^4 + L2(X,Y) Z^2 + L4(X,Y)
inline std::optional<BiellipticQuartic> bielliptic_normal_form(const HomogPoly& F) {
    if (F.degree() != 4) return std::nullopt;
    Rational a = F.coeff({0, 0, 4});
    if (a.is_zero()) return std::nullopt;
    HomogPoly L2(2), L4(4);
    for (const auto& [e, c] : F.terms()) {
        if (e[2] == 4) continue;
        if (e[2] == 2)
            L2.add_term(c, {e[0], e[1], 0});
        else if (e[2] == 0)
            L4.add_term(c, {e[0], e[1], 0});
        else
            return std::nullopt; // odd power of Z breaks the involution
    }
    if (L4.degree() != 4) return std::nullopt;
    return BiellipticQuartic(a, L2, L4);
}

inline Verdict verdict(const PlaneCurve& C,
                       const std::optional<HyperellipticModel>& hyperelliptic_hint = std::nullopt,
                       const std::optional<std::array<Rational, 3>>& rational_point = std::nullopt) {
    Verdict v;
    v.degree = C.degree();

    if (hyperelliptic_hint) {
        v.quadratic_progressions = VerdictLine{
            "quadratic progressions", "INFINITE_CONSTRUCTIVE",
            "the model z^2 = f(x) projects 2-to-1 onto the x-line, so any infinite "
            "progression of rational x lifts to quadratic points",
            "canonical 2-1 morphism"};
    }

    bool smooth = C.is_smooth();
    if (!smooth && !hyperelliptic_hint)
        throw NotSmooth("degree-based verdict rules need a smooth model; " +
                        C.smoothness().detail);
    v.smooth = smooth;
    if (!smooth) {
        for (const auto* line : v.lines()) v.citations.push_back(line->citation);
        return v;
    }

    long d = v.degree;
    v.genus = (d - 1) * (d - 2) / 2;

    if (*v.genus >= 1) {
        v.rational_progressions = VerdictLine{
            "rational progressions", "FINITE",
            "genus >= 1: rational progressions on the curve are finite", "must be finite"};
    } else {
        v.rational_progressions = VerdictLine{
            "rational progressions", "NOT_COVERED",
            "genus 0 leaves rational progressions outside the rule table", "genus 0"};
    }

    if (!v.quadratic_progressions) {
        if (d >= 5) {
            v.quadratic_progressions = VerdictLine{
                "quadratic progressions", "FINITE",
                "degree >= 5: the curve is neither hyperelliptic nor bielliptic, so "
                "quadratic progressions are finite",
                "is always finite"};
        } else if (d == 4) {
            v.quadratic_progressions = VerdictLine{
                "quadratic progressions", "FINITE",
                "smooth plane quartics never carry an infinite quadratic progression",
                "always of finite length"};
            if (auto nf = bielliptic_normal_form(C.form())) {
                v.quotient = elliptic_quotient(*nf);
                v.quadratic_points = VerdictLine{
                    "quadratic points", "CONDITIONAL",
                    "the set of quadratic points is infinite exactly when the emitted "
                    "degree-2 quotient has positive rank; rank is not computed here",
                    "is an infinite set if and only if"};
            }
        }
    }

    if (d >= 4 && rational_point) {
        if (!C.contains(*rational_point))
            throw PointNotOnCurve("the supplied point does not lie on the curve");
        v.n_level_n = static_cast<unsigned>(d - 1);
        v.n_level = VerdictLine{
            std::to_string(d - 1) + "-level progressions", "INFINITE_CONSTRUCTIVE",
            "projection from the rational point realizes the gonality " +
                std::to_string(d - 1) + "; every fiber has degree at most " +
                std::to_string(d - 1),
            "admits an n-level progression of infinite length"};
    }

    for (const auto* line : v.lines()) v.citations.push_back(line->citation);
    return v;
}

} // namespace curveprog

#endif

#ifndef CURVEPROG_PROGRESSION_HPP
#define CURVEPROG_PROGRESSION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "curveprog/errors.hpp"
#include "curveprog/rational.hpp"

namespace curveprog {

enum class ProgressionKind { Arithmetic, Geometric };

inline const char* to_string(ProgressionKind k) {
    return k == ProgressionKind::Arithmetic ? "arithmetic" : "geometric";
}

// Validation rules. The default accepts arithmetic laws with t0 = 0 (terms
// i*t), flagged nonstandard; strict mode insists on t0 != 0 as well, which
// matches reading the definition with t, t' both in k^*.
struct ProgressionRules {
    bool strict_t0 = false;
    bool allow_degenerate_geometric = false; // permit ratio 1 or -1

    static ProgressionRules strict() { return {true, false}; }
};

// x_i = t0 + i*t (arithmetic) or x_i = t0 * t^i (geometric), indexed from
// i = 1. Laws are conceptually infinite; `length` is set when the law is
// realized by a finite member list.
struct Progression {
    ProgressionKind kind;
    Rational t0;
    Rational t;
    std::optional<unsigned long> length; // nullopt: unbounded
    bool nonstandard_t0 = false;         // arithmetic law with t0 = 0

    static Progression arithmetic(const Rational& t0, const Rational& t,
                                  const ProgressionRules& rules = {}) {
        if (t.is_zero()) throw Error("arithmetic progression needs t != 0");
        if (t0.is_zero() && rules.strict_t0)
            throw Error("strict mode: arithmetic progression needs t0 != 0");
        Progression p{ProgressionKind::Arithmetic, t0, t, std::nullopt, t0.is_zero()};
        return p;
    }

    static Progression geometric(const Rational& t0, const Rational& t,
                                 const ProgressionRules& rules = {}) {
        if (t0.is_zero()) throw Error("geometric progression needs t0 != 0");
        if (t.is_zero()) throw Error("geometric progression needs t != 0");
        if (!rules.allow_degenerate_geometric && t.abs() == Rational(1))
            throw Error("geometric ratio +-1 gives non-distinct terms; "
                        "pass allow_degenerate to override");
        return {ProgressionKind::Geometric, t0, t, std::nullopt, false};
    }

    Rational term(unsigned long i) const {
        if (i < 1) throw Error("progressions are indexed from i = 1");
        if (kind == ProgressionKind::Arithmetic)
            return t0 + Rational(Integer(static_cast<unsigned long>(i))) * t;
        return t0 * t.pow(static_cast<long>(i));
    }
};

struct ProgressionSearchResult {
    Progression law;
    std::vector<Rational> members; // consecutive terms, as found in the set
};

namespace detail {

struct RationalHash {
    std::size_t operator()(const Rational& r) const { return std::hash<Rational>{}(r); }
};

} // namespace detail

// Longest arithmetic progression inside a finite set. The winning law is
// reported ascending (t > 0); among equal lengths the smallest t wins, then
// the smallest t0.
inline ProgressionSearchResult longest_ap(std::vector<Rational> values,
                                          const ProgressionRules& rules = {}) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) throw NotEnoughPoints("longest_ap needs at least two values");

    const std::size_t n = values.size();
    std::unordered_map<Rational, std::size_t, detail::RationalHash> pos;
    for (std::size_t i = 0; i < n; ++i) pos.emplace(values[i], i);

    // dp[i][j]: length of the AP starting v[i], v[j]; rows filled backwards
    std::vector<std::int32_t> dp(n * n, 0);
    long best_len = 0;
    Rational best_t, best_t0;
    std::size_t bi = 0, bj = 0;

    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational target = values[j] + (values[j] - values[i]);
            std::int32_t len = 2;
            auto it = pos.find(target);
            if (it != pos.end()) len = dp[j * n + it->second] + 1;
            dp[i * n + j] = len;

            Rational t = values[j] - values[i];
            Rational t0 = values[i] - t;
            if (rules.strict_t0 && t0.is_zero()) continue; // law banned, skip as a start
            bool better = false;
            if (len > best_len) {
                better = true;
            } else if (len == best_len) {
                if (t < best_t || (t == best_t && t0 < best_t0)) better = true;
            }
            if (better) {
                best_len = len;
                best_t = t;
                best_t0 = t0;
                bi = i;
                bj = j;
            }
        }
    }

    if (best_len < 2) throw NotEnoughPoints("no valid arithmetic pair under the active rules");
    std::vector<Rational> members{values[bi], values[bj]};
    while (static_cast<long>(members.size()) < best_len) {
        Rational next = members.back() + best_t;
        members.push_back(next);
    }
    Progression law = Progression::arithmetic(best_t0, best_t, rules);
    law.length = static_cast<unsigned long>(best_len);
    return {law, members};
}

// Longest geometric progression; 0 must not be in the set. Member order is
// by ascending absolute value, so the reported ratio has |t| > 1.
inline ProgressionSearchResult longest_gp(std::vector<Rational> values,
                                          const ProgressionRules& rules = {}) {
    for (const auto& v : values)
        if (v.is_zero()) throw ZeroInSet();
    std::sort(values.begin(), values.end(), [](const Rational& a, const Rational& b) {
        if (a.abs() != b.abs()) return a.abs() < b.abs();
        return a < b;
    });
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) throw NotEnoughPoints("longest_gp needs at least two values");

    const std::size_t n = values.size();
    std::unordered_map<Rational, std::size_t, detail::RationalHash> pos;
    for (std::size_t i = 0; i < n; ++i) pos.emplace(values[i], i);

    std::vector<std::int32_t> dp(n * n, 0);
    long best_len = 0;
    Rational best_t, best_t0;
    std::size_t bi = 0, bj = 0;

    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (values[i].abs() == values[j].abs()) continue; // ratio +-1
            Rational ratio = values[j] / values[i];
            Rational target = values[j] * ratio;
            std::int32_t len = 2;
            auto it = pos.find(target);
            if (it != pos.end()) len = dp[j * n + it->second] + 1;
            dp[i * n + j] = len;

            Rational t0 = values[i] / ratio;
            bool better = false;
            if (len > best_len) {
                better = true;
            } else if (len == best_len) {
                // smallest |t|, then smallest t0, then t itself to settle signs
                if (ratio.abs() < best_t.abs())
                    better = true;
                else if (ratio.abs() == best_t.abs() &&
                         (t0 < best_t0 || (t0 == best_t0 && ratio < best_t)))
                    better = true;
            }
            if (better) {
                best_len = len;
                best_t = ratio;
                best_t0 = t0;
                bi = i;
                bj = j;
            }
        }
    }
    if (best_len < 2) throw NotEnoughPoints("no valid geometric pair in the set");

    std::vector<Rational> members{values[bi], values[bj]};
    while (static_cast<long>(members.size()) < best_len)
        members.push_back(members.back() * best_t);
    Progression law = Progression::geometric(best_t0, best_t, rules);
    law.length = static_cast<unsigned long>(best_len);
    return {law, members};
}

// Law(s) fitted exactly by an ordered list of at least three values.
enum class FitKind { None, Arithmetic, Geometric, Both };

struct ClassifyResult {
    FitKind kind = FitKind::None;
    std::optional<Progression> arithmetic;
    std::optional<Progression> geometric;
};

inline ClassifyResult classify(const std::vector<Rational>& xs,
                               const ProgressionRules& rules = {}) {
    if (xs.size() < 3) throw Error("classify needs at least three values");
    ClassifyResult out;

    Rational d = xs[1] - xs[0];
    bool arith = !d.is_zero();
    for (std::size_t i = 2; arith && i < xs.size(); ++i) arith = (xs[i] - xs[i - 1]) == d;
    if (arith) {
        Rational t0 = xs[0] - d;
        if (!(rules.strict_t0 && t0.is_zero())) {
            Progression p = Progression::arithmetic(t0, d);
            p.length = xs.size();
            out.arithmetic = p;
        } else {
            arith = false;
        }
    }

    bool geom = !xs[0].is_zero() && !xs[1].is_zero();
    Rational r = geom ? xs[1] / xs[0] : Rational(0);
    if (geom && (r.is_zero() || (!rules.allow_degenerate_geometric && r.abs() == Rational(1))))
        geom = false;
    for (std::size_t i = 2; geom && i < xs.size(); ++i)
        geom = !xs[i].is_zero() && (xs[i] / xs[i - 1]) == r;
    if (geom) {
        Progression p = Progression::geometric(xs[0] / r, r, rules);
        p.length = xs.size();
        out.geometric = p;
    }

    if (arith && geom)
        out.kind = FitKind::Both;
    else if (arith)
        out.kind = FitKind::Arithmetic;
    else if (geom)
        out.kind = FitKind::Geometric;
    return out;
}

} // namespace curveprog

#endif

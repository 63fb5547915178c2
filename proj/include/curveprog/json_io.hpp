#ifndef CURVEPROG_JSON_IO_HPP
#define CURVEPROG_JSON_IO_HPP

#include <json.hpp>

#include "curveprog/construct.hpp"
#include "curveprog/curve.hpp"
#include "curveprog/factorq.hpp"
#include "curveprog/progression.hpp"
#include "curveprog/search.hpp"

namespace curveprog {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const UniPoly& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
    return coeffs;
}

inline json to_json(const SquarefreeDecomp& d) {
    return json{{"D", d.D.get_str()}, {"c", d.c.str()}};
}

inline json to_json(const AlgebraicPoint& p) {
    json j{{"x", p.x.str()},
           {"y", "1"},
           {"minpoly_z", to_json(p.minpoly_z)},
           {"degree", p.degree}};
    j["disc"] = p.disc ? to_json(*p.disc) : json(nullptr);
    return j;
}

inline json to_json(const Progression& p) {
    json j{{"kind", to_string(p.kind)}, {"t0", p.t0.str()}, {"t", p.t.str()}};
    if (p.length)
        j["length"] = *p.length;
    else
        j["length"] = "infinite";
    if (p.nonstandard_t0) j["nonstandard_t0"] = true;
    return j;
}

inline json to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& [g, m] : f.factors)
        factors.push_back(json{{"coeffs", to_json(g)}, {"mult", m}});
    return json{{"unit", f.unit.str()}, {"factors", factors}};
}

inline json to_json(const Emitted& e) {
    json j{{"index", e.index}, {"x", e.x.str()}};
    j["point"] = e.point ? to_json(*e.point) : json(nullptr);
    if (!e.note.empty()) j["note"] = e.note;
    return j;
}

inline json to_json(const QuotientModel& q) {
    return json{{"a", q.a.str()},
                {"B", to_json(q.B)},
                {"C", to_json(q.C)},
                {"equation", q.str()}};
}

inline json to_json(const SmoothnessCertificate& c) {
    json j{{"smooth", c.smooth()}, {"method", c.method}, {"detail", c.detail}};
    if (c.witness_prime) j["witness_prime"] = *c.witness_prime;
    if (c.singular_point) {
        const auto& p = *c.singular_point;
        j["singular_point"] = json::array({p[0].str(), p[1].str(), p[2].str()});
    }
    return j;
}

inline json to_json(const VerdictLine& line) {
    return json{{"subject", line.subject},
                {"status", line.status},
                {"statement", line.statement},
                {"citation", line.citation}};
}

inline json to_json(const Verdict& v) {
    json j{{"degree", v.degree}, {"smooth", v.smooth}};
    j["genus"] = v.genus ? json(*v.genus) : json(nullptr);
    if (v.rational_progressions) j["rational_progressions"] = to_json(*v.rational_progressions);
    if (v.quadratic_progressions)
        j["quadratic_progressions"] = to_json(*v.quadratic_progressions);
    if (v.quadratic_points) j["quadratic_points"] = to_json(*v.quadratic_points);
    if (v.n_level) {
        j["n_level"] = to_json(*v.n_level);
        j["n_level"]["n"] = v.n_level_n;
    }
    if (v.quotient) j["quotient"] = to_json(*v.quotient);
    j["citations"] = v.citations;
    return j;
}

inline json to_json(const TraceLevel& lvl) {
    return json{{"s", lvl.s},
                {"model", lvl.model},
                {"quotient", lvl.quotient},
                {"genus", lvl.genus},
                {"cs_flag", lvl.cs_flag},
                {"points_over_zero", lvl.points_over_zero},
                {"points_over_infinity", lvl.points_over_infinity},
                {"ramification", lvl.ramification},
                {"genus_next_by_riemann_hurwitz", lvl.genus_rh}};
}

inline json to_json(const FinitenessTrace& t) {
    json levels = json::array();
    for (const auto& lvl : t.levels) levels.push_back(to_json(lvl));
    json j{{"levels", levels}, {"strictly_increasing", t.strictly_increasing}};
    j["cs_level"] = t.cs_level ? json(*t.cs_level) : json(nullptr);
    return j;
}

inline json to_json(const CurveProgressionResult& r) {
    json members = json::array();
    for (const auto& m : r.members) members.push_back(m.str());
    json points = json::array();
    for (const auto& ps : r.points) {
        json row = json::array();
        for (const auto& p : ps) row.push_back(to_json(p));
        points.push_back(row);
    }
    json j{{"progression", to_json(r.law)}, {"members", members}, {"points", points}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

} // namespace curveprog

#endif

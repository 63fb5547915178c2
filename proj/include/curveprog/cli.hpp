#ifndef CURVEPROG_CLI_HPP
#define CURVEPROG_CLI_HPP

#include <cxxabi.h>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "curveprog/json_io.hpp"
#include "curveprog/parse.hpp"

namespace curveprog {

// short class name of a domain error, e.g. "NeedRationalPoint"
inline std::string error_kind(const Error& e) {
    int status = 0;
    char* demangled = abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status);
    std::string name = status == 0 && demangled ? demangled : typeid(e).name();
    std::free(demangled);
    std::size_t colon = name.rfind("::");
    return colon == std::string::npos ? name : name.substr(colon + 2);
}

inline const char* tool_name() { return "curveprog"; }
inline const char* tool_version() { return "0.1.0"; }

// Everything a subcommand needs, validated before execution. Strings stay
// raw here; parsing happens in run() so errors carry positions.
struct RunConfig {
    std::string subcommand; // verdict | search | construct-hyperelliptic |
                            // construct-nlevel | tower | factor
    std::string curve_text;
    std::string hyperelliptic_f;
    std::string poly_text;
    std::string point_text; // "x,y,z"
    std::string kind;       // arith | geom
    std::string t0_text;
    std::string t_text;
    unsigned long count = 0;
    long height = 0;
    unsigned level = 0;
    std::string find = "points"; // points | longest-ap | longest-gp
    unsigned workers = 0;        // 0: CURVEPROG_WORKERS or hardware
    std::string format = "json"; // json | csv | text
    bool strict = false;
    long point_search_height = 8;
    std::string a_text;
    std::string l2_text;
    std::string l4_text;
    unsigned levels = 0;
};

namespace cli_detail {

inline std::array<Rational, 3> parse_point(const std::string& text) {
    std::array<Rational, 3> p{Rational(0), Rational(0), Rational(0)};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = text.find(',', start);
        if (i < 2 && comma == std::string::npos)
            throw ParseError(start, "point needs three comma-separated rationals");
        if (i == 2 && comma != std::string::npos)
            throw ParseError(comma, "point needs exactly three coordinates");
        std::string piece = text.substr(start, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - start);
        p[static_cast<std::size_t>(i)] = parse_rational(piece);
        start = comma + 1;
    }
    return p;
}

inline ProgressionRules rules_from(const RunConfig& cfg) {
    ProgressionRules r;
    r.strict_t0 = cfg.strict;
    return r;
}

inline Progression law_from(const RunConfig& cfg) {
    if (cfg.kind != "arith" && cfg.kind != "geom")
        throw Error("--kind must be arith or geom");
    Rational t0 = parse_rational(cfg.t0_text);
    Rational t = parse_rational(cfg.t_text);
    return cfg.kind == "arith" ? Progression::arithmetic(t0, t, rules_from(cfg))
                               : Progression::geometric(t0, t, rules_from(cfg));
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string join_coeffs(const UniPoly& f) {
    std::string out;
    for (const auto& c : f.coeffs()) {
        if (!out.empty()) out += ";";
        out += c.str();
    }
    return out;
}

inline void csv_points(std::ostream& os, const std::vector<AlgebraicPoint>& pts) {
    os << "x,y,degree,minpoly_z,disc_D,disc_c\n";
    for (const auto& p : pts) {
        os << csv_quote(p.x.str()) << ",1," << p.degree << "," << csv_quote(join_coeffs(p.minpoly_z))
           << ",";
        if (p.disc)
            os << p.disc->D.get_str() << "," << p.disc->c.str();
        else
            os << ",";
        os << "\n";
    }
}

inline void csv_emitted(std::ostream& os, const std::vector<Emitted>& es) {
    os << "index,x,degree,minpoly_z,disc_D,note\n";
    for (const auto& e : es) {
        os << e.index << "," << csv_quote(e.x.str()) << ",";
        if (e.point) {
            os << e.point->degree << "," << csv_quote(join_coeffs(e.point->minpoly_z)) << ",";
            os << (e.point->disc ? e.point->disc->D.get_str() : "") << ",";
        } else {
            os << ",,,";
        }
        os << csv_quote(e.note) << "\n";
    }
}

} // namespace cli_detail

// Dispatch a validated config, writing one report to `os`. Exit status: 0 on
// success, 1 on usage problems, 2 on domain errors.
inline int run(const RunConfig& cfg, std::ostream& os) {
    json envelope{{"tool", {{"name", tool_name()}, {"version", tool_version()}}},
                  {"command", cfg.subcommand}};
    json input = json::object();
    auto echo = [&input](const char* key, const std::string& value) {
        if (!value.empty()) input[key] = value;
    };
    echo("curve", cfg.curve_text);
    echo("hyperelliptic_f", cfg.hyperelliptic_f);
    echo("poly", cfg.poly_text);
    echo("point", cfg.point_text);
    echo("kind", cfg.kind);
    echo("t0", cfg.t0_text);
    echo("t", cfg.t_text);
    if (cfg.count) input["count"] = cfg.count;
    if (cfg.height) input["height"] = cfg.height;
    if (cfg.level) input["level"] = cfg.level;
    if (cfg.subcommand == "search") input["find"] = cfg.find;
    if (cfg.strict) input["strict_definition"] = true;
    echo("a", cfg.a_text);
    echo("L2", cfg.l2_text);
    echo("L4", cfg.l4_text);
    if (cfg.levels) input["levels"] = cfg.levels;
    envelope["input"] = input;

    try {
        json result;
        std::string text_report;
        std::ostringstream csv;

        if (cfg.subcommand == "verdict") {
            if (cfg.curve_text.empty()) return 1;
            PlaneCurve C(parse_curve(cfg.curve_text).poly);
            std::optional<HyperellipticModel> hint;
            if (!cfg.hyperelliptic_f.empty())
                hint.emplace(parse_unipoly(cfg.hyperelliptic_f, 'x'));
            std::optional<std::array<Rational, 3>> point;
            if (!cfg.point_text.empty()) point = cli_detail::parse_point(cfg.point_text);
            Verdict v = verdict(C, hint, point);
            result = to_json(v);
            if (C.is_smooth() || hint) {
                try {
                    result["smoothness"] = to_json(C.smoothness());
                } catch (const Error&) {
                }
            }
            csv << "subject,status,citation\n";
            std::ostringstream txt;
            for (const auto* line : v.lines()) {
                csv << cli_detail::csv_quote(line->subject) << "," << line->status << ","
                    << cli_detail::csv_quote(line->citation) << "\n";
                txt << line->subject << ": " << line->status << "  [" << line->citation << "]\n";
            }
            text_report = "degree " + std::to_string(v.degree) +
                          (v.genus ? ", genus " + std::to_string(*v.genus) : "") + "\n" +
                          txt.str();
        } else if (cfg.subcommand == "search") {
            if (cfg.curve_text.empty() || cfg.height < 1) return 1;
            PlaneCurve C(parse_curve(cfg.curve_text).poly);
            HeightBound b(cfg.height);
            unsigned level = cfg.level ? cfg.level : 1;
            SearchOptions opts{cfg.workers};
            if (cfg.find == "points") {
                auto pts = level_points(C, b, level, opts);
                result["count"] = pts.size();
                json arr = json::array();
                for (const auto& p : pts) arr.push_back(to_json(p));
                result["points"] = arr;
                cli_detail::csv_points(csv, pts);
                text_report = std::to_string(pts.size()) + " point(s) of degree <= " +
                              std::to_string(level) + " up to height " + std::to_string(cfg.height) +
                              "\n";
            } else if (cfg.find == "longest-ap" || cfg.find == "longest-gp") {
                auto kind = cfg.find == "longest-ap" ? ProgressionKind::Arithmetic
                                                     : ProgressionKind::Geometric;
                auto res = longest_progression_on_curve(C, b, level, kind,
                                                        cli_detail::rules_from(cfg), opts);
                result = to_json(res);
                csv << "member_x,point_count\n";
                for (std::size_t i = 0; i < res.members.size(); ++i)
                    csv << cli_detail::csv_quote(res.members[i].str()) << ","
                        << res.points[i].size() << "\n";
                std::ostringstream txt;
                txt << "longest " << to_string(res.law.kind) << " progression: length "
                    << res.members.size() << ", t0 = " << res.law.t0 << ", t = " << res.law.t
                    << "\nmembers:";
                for (const auto& m : res.members) txt << " " << m;
                text_report = txt.str() + "\n";
            } else {
                return 1;
            }
        } else if (cfg.subcommand == "construct-hyperelliptic") {
            if (cfg.hyperelliptic_f.empty() || cfg.count < 1) return 1;
            HyperellipticModel m(parse_unipoly(cfg.hyperelliptic_f, 'x'));
            Progression law = cli_detail::law_from(cfg);
            auto pts = hyperelliptic_progression(m, law, cfg.count);
            result["model"] = json{{"f", to_json(m.f)}, {"equation", "z^2 = " + m.f.str()}};
            result["law"] = to_json(law);
            json arr = json::array();
            for (const auto& e : pts) arr.push_back(to_json(e));
            result["points"] = arr;
            cli_detail::csv_emitted(csv, pts);
            text_report = "emitted " + std::to_string(pts.size()) +
                          " point(s) on z^2 = " + m.f.str() + "\n";
        } else if (cfg.subcommand == "construct-nlevel") {
            if (cfg.curve_text.empty() || cfg.count < 1) return 1;
            PlaneCurve C(parse_curve(cfg.curve_text).poly);
            std::array<Rational, 3> P{Rational(0), Rational(0), Rational(0)};
            if (!cfg.point_text.empty()) {
                P = cli_detail::parse_point(cfg.point_text);
            } else {
                auto found = rational_points(C, HeightBound(cfg.point_search_height),
                                             SearchOptions{cfg.workers});
                if (found.empty())
                    throw NeedRationalPoint(
                        "no rational point on the y = 1 patch up to height " +
                        std::to_string(cfg.point_search_height) +
                        "; supply one with --point x,y,z");
                P = {found.front().x, Rational(1), *found.front().z_value()};
                result["point_auto_discovered"] = true;
            }
            Progression law = cli_detail::law_from(cfg);
            NLevelStream stream(C, P, law);
            auto pts = stream.take(cfg.count);
            result["point_used"] = json::array({P[0].str(), P[1].str(), P[2].str()});
            result["level"] = stream.level();
            result["normalized_model"] = stream.normalized().form().str();
            result["law"] = to_json(law);
            json arr = json::array();
            for (const auto& e : pts) arr.push_back(to_json(e));
            result["points"] = arr;
            cli_detail::csv_emitted(csv, pts);
            text_report = "emitted " + std::to_string(pts.size()) + " point(s) of degree <= " +
                          std::to_string(stream.level()) + "\n";
        } else if (cfg.subcommand == "tower") {
            if (cfg.a_text.empty() || cfg.l4_text.empty() || cfg.t0_text.empty() ||
                cfg.levels < 1)
                return 1;
            Rational a = parse_rational(cfg.a_text);
            HomogPoly L2 = cfg.l2_text.empty() ? HomogPoly(2)
                                               : parse_binary_form(cfg.l2_text, 2);
            HomogPoly L4 = parse_binary_form(cfg.l4_text, 4);
            BiellipticQuartic q(a, L2, L4);
            Rational t0 = parse_rational(cfg.t0_text);
            FinitenessTrace trace = finiteness_trace(q, t0, cfg.levels);
            result = to_json(trace);
            result["quartic"] = assemble_bielliptic(q).form().str();
            result["elliptic_quotient"] = to_json(elliptic_quotient(q));
            csv << "s,genus,cs_flag,ramification,quotient\n";
            for (const auto& lvl : trace.levels)
                csv << lvl.s << "," << lvl.genus << "," << (lvl.cs_flag ? 1 : 0) << ","
                    << lvl.ramification << "," << cli_detail::csv_quote(lvl.quotient) << "\n";
            std::ostringstream txt;
            txt << "genus sequence:";
            for (const auto& lvl : trace.levels) txt << " " << lvl.genus;
            txt << (trace.strictly_increasing ? " (strictly increasing)" : " (NOT increasing)");
            if (trace.cs_level)
                txt << "\nCastelnuovo-Severi obstruction at level s = " << *trace.cs_level;
            text_report = txt.str() + "\n";
        } else if (cfg.subcommand == "factor") {
            if (cfg.poly_text.empty()) return 1;
            UniPoly f = parse_unipoly(cfg.poly_text);
            Factorization fac = factor_over_Q(f);
            result = to_json(fac);
            csv << "factor,mult\n";
            for (const auto& [g, m] : fac.factors)
                csv << cli_detail::csv_quote(g.str()) << "," << m << "\n";
            std::ostringstream txt;
            txt << f.str() << " = " << fac.unit.str();
            for (const auto& [g, m] : fac.factors) {
                txt << " * (" << g.str() << ")";
                if (m > 1) txt << "^" << m;
            }
            text_report = txt.str() + "\n";
        } else {
            return 1;
        }

        if (cfg.format == "json") {
            envelope["result"] = result;
            os << envelope.dump(2) << "\n";
        } else if (cfg.format == "csv") {
            os << csv.str();
        } else if (cfg.format == "text") {
            os << text_report;
        } else {
            return 1;
        }
        return 0;
    } catch (const Error& e) {
        envelope["error"] = json{{"type", error_kind(e)}, {"message", e.what()}};
        if (cfg.format == "json")
            os << envelope.dump(2) << "\n";
        else
            os << "error: " << error_kind(e) << ": " << e.what() << "\n";
        return 2;
    }
}

} // namespace curveprog

#endif

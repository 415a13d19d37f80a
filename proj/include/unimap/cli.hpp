#pragma once

// Command-line front end: analyze / census / classify / verify.  Every
// command renders as plain text (default) or as a JSON envelope
//   {"schema_version": "1", "command": ..., "result": ..., "warnings": [...]}
// with errors carried in a top-level "error" field and a nonzero exit code.
// Both modes report identical numbers.  Every flag is mirrored by an
// environment variable with prefix UNIMAP_; explicit flags win.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unimap/autgroup.hpp"
#include "unimap/census.hpp"
#include "unimap/classify.hpp"
#include "unimap/maps.hpp"
#include "unimap/perm.hpp"
#include "unimap/riemann.hpp"
#include "unimap/verify.hpp"

namespace unimap::cli {

using nlohmann::json;

inline json to_json(const MapProfile& p) {
    return json{{"vertices", p.vertices},
                {"edges", p.edges},
                {"faces", p.faces},
                {"genus", p.genus},
                {"map_type", json::array({p.type_n, p.type_r})},
                {"vertex_valences", p.vertex_valences},
                {"face_valences", p.face_valences},
                {"uniform", p.uniform}};
}

inline json to_json(const AutData& a) {
    json orbit = json::array();
    for (const Perm& y : a.orbit) orbit.push_back(to_cycle_string(y));
    return json{{"period", a.period},
                {"order", a.order},
                {"orbit", orbit},
                {"canonical_y", to_cycle_string(a.canonical_y)}};
}

/// Counts serialize as decimal strings: they outgrow 64-bit integers quickly
/// ((2k-1)!! already at k = 17) and JSON numbers would silently lose digits.
inline json to_json(const CensusRow& row) {
    return json{{"k", row.k},
                {"p", row.p},
                {"nu_bar", row.nu_bar.str()},
                {"nu", row.nu.str()},
                {"classes", row.classes.str()}};
}

inline json to_json(const ExtensionCase& e) {
    json out{{"case", e.case_name},
             {"sigma", e.sigma.str()},
             {"sigma_prime", e.sigma_prime.str()},
             {"index", e.index}};
    if (!e.conditions_note.empty()) out["note"] = e.conditions_note;
    return out;
}

inline json to_json(const Classification& c) {
    json out{{"k", c.k},
             {"regular", c.regular},
             {"genus", c.genus},
             {"signature", c.signature.str()},
             {"verdict", verdict_name(c.verdict)},
             {"aut_map_order", c.aut_map_order},
             {"aut_surface", json{{"name", c.aut_surface.name}, {"order", c.aut_surface.order}}},
             {"extension_chain", json::array()},
             {"notes", c.notes}};
    if (c.t) out["t"] = *c.t;
    if (c.vector) out["vector"] = c.vector->str();
    if (c.twist) out["twist"] = *c.twist;
    if (!c.aut_surface.presentation.empty())
        out["aut_surface"]["presentation"] = c.aut_surface.presentation;
    for (const ExtensionCase& e : c.extension_chain) out["extension_chain"].push_back(to_json(e));
    if (c.curve_equation) out["curve_equation"] = *c.curve_equation;
    if (c.map_profile) out["profile"] = to_json(*c.map_profile);
    return out;
}

inline json to_json(const verify::SuiteResult& s) {
    return json{{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}};
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out += std::string(width[i] - row[i].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

inline std::string chain_text(const std::vector<ExtensionCase>& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) out += "; ";
        out += chain[i].case_name + " " + chain[i].sigma.str() + " -> " +
               chain[i].sigma_prime.str() + " index " + std::to_string(chain[i].index);
    }
    return out;
}

inline std::string classification_text(const Classification& c) {
    std::string out;
    out += "k: " + std::to_string(c.k) + "\n";
    if (c.t) out += "t: " + std::to_string(*c.t) + "\n";
    out += std::string("map: ") + (c.regular ? "regular" : "strictly edge-transitive") + "\n";
    out += "genus: " + std::to_string(c.genus) + "\n";
    out += "signature: " + c.signature.str() + "\n";
    if (c.vector) out += "vector: " + c.vector->str() + "\n";
    out += "verdict: " + verdict_name(c.verdict) + "\n";
    if (c.twist) out += "twist: " + std::to_string(*c.twist) + "\n";
    out += "aut(M) order: " + std::to_string(c.aut_map_order) + "\n";
    out += "aut(X): " + c.aut_surface.name + ", order " + std::to_string(c.aut_surface.order) +
           "\n";
    if (!c.aut_surface.presentation.empty())
        out += "presentation: " + c.aut_surface.presentation + "\n";
    if (!c.extension_chain.empty()) out += "extensions: " + chain_text(c.extension_chain) + "\n";
    if (c.curve_equation) out += "curve: " + *c.curve_equation + "\n";
    for (const std::string& n : c.notes) out += "note: " + n + "\n";
    if (c.map_profile)
        out += "profile: V=" + std::to_string(c.map_profile->vertices) +
               " E=" + std::to_string(c.map_profile->edges) +
               " F=" + std::to_string(c.map_profile->faces) + "\n";
    return out;
}

inline std::string profile_text(const MapProfile& p) {
    std::string out;
    out += "vertices: " + std::to_string(p.vertices) + "\n";
    out += "edges: " + std::to_string(p.edges) + "\n";
    out += "faces: " + std::to_string(p.faces) + "\n";
    out += "genus: " + std::to_string(p.genus) + "\n";
    out += "type: (" + std::to_string(p.type_n) + ", " + std::to_string(p.type_r) + ")\n";
    out += "vertex valences: " + join_ints(p.vertex_valences) + "\n";
    out += "face valences: " + join_ints(p.face_valences) + "\n";
    out += std::string("uniform: ") + (p.uniform ? "yes" : "no") + "\n";
    return out;
}

} // namespace detail

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one CLI invocation (argv without the program name).
inline RunResult run(const std::vector<std::string>& args) {
    RunResult result;
    std::string format = "text";
    CensusCaps caps;

    CLI::App app{"one-vertex maps as permutation pairs: census, signatures, classification",
                 "unimap"};
    app.require_subcommand(1);
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("UNIMAP_FORMAT");
    app.add_option("--brute-cap", caps.brute_kmax, "largest k for brute-force oracles")
        ->envname("UNIMAP_BRUTE_CAP");
    app.add_option("--gen-cap", caps.gen_kmax, "largest k for constructive enumeration")
        ->envname("UNIMAP_GEN_CAP");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "profile and automorphisms of a map");
    analyze->fallthrough();
    long long an_k = -1, an_degree = -1;
    std::string an_y, an_x, an_map;
    analyze->add_option("--k", an_k, "edge count of a one-vertex map")->envname("UNIMAP_K");
    analyze->add_option("--y", an_y, "edge involution, cycle notation")->envname("UNIMAP_Y");
    analyze->add_option("--x", an_x, "vertex rotation, cycle notation")->envname("UNIMAP_X");
    analyze->add_option("--degree", an_degree, "dart count for a general map")
        ->envname("UNIMAP_DEGREE");
    analyze->add_option("--map", an_map, "map literal: 'k=..; y=..' or 'x=..; y=..; degree=..'")
        ->envname("UNIMAP_MAP");

    // census
    auto* census = app.add_subcommand("census", "count one-vertex maps by automorphism group");
    census->fallthrough();
    long long ce_k = -1, ce_p = -1;
    bool ce_oracle = false, ce_reps = false;
    census->add_option("--k", ce_k, "edge count")->required()->envname("UNIMAP_K");
    census->add_option("--p", ce_p, "restrict to one divisor p of 2k")->envname("UNIMAP_P");
    census->add_flag("--oracle", ce_oracle, "append brute-force counts and a match column")
        ->envname("UNIMAP_ORACLE");
    census->add_flag("--reps", ce_reps, "append canonical class representatives")
        ->envname("UNIMAP_REPS");

    // classify
    auto* classify = app.add_subcommand("classify", "classify against the classical curves");
    classify->fallthrough();
    long long cl_k = -1, cl_t = -1, cl_scan = -1;
    bool cl_regular = false;
    classify->add_option("--k", cl_k, "edge count")->envname("UNIMAP_K");
    classify->add_option("--t", cl_t, "shift parameter, 0 <= t < k")->envname("UNIMAP_T");
    classify->add_flag("--regular", cl_regular, "classify the regular map with k edges")
        ->envname("UNIMAP_REGULAR");
    classify->add_option("--scan", cl_scan, "classify everything up to this genus")
        ->envname("UNIMAP_SCAN");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suites");
    verify_cmd->fallthrough();
    long long ve_kmax = 6;
    verify_cmd->add_option("--kmax", ve_kmax, "largest k for the census suites")
        ->envname("UNIMAP_KMAX");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        result.exit_code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::vector<std::string> warnings;
    json res;
    std::string text;

    try {
        if (analyze->parsed()) {
            std::optional<MapLiteral> literal;
            if (!an_map.empty()) {
                literal = parse_map_literal(an_map);
            } else if (an_k > 0 && !an_y.empty() && an_x.empty() && an_degree < 0) {
                literal = OneVertexMap(an_k, parse_cycles(an_y, static_cast<int>(2 * an_k)));
            } else if (an_degree > 0 && !an_y.empty() && !an_x.empty() && an_k < 0) {
                literal = DartMap(parse_cycles(an_x, static_cast<int>(an_degree)),
                                  parse_cycles(an_y, static_cast<int>(an_degree)));
            } else {
                throw std::invalid_argument(
                    "analyze needs either --k and --y, or --x, --y and --degree, or --map");
            }
            if (std::holds_alternative<OneVertexMap>(*literal)) {
                const OneVertexMap& m = std::get<OneVertexMap>(*literal);
                const MapProfile p = profile(m);
                const AutData a = aut_data(m);
                res["map"] = to_literal(m);
                res["profile"] = to_json(p);
                res["aut"] = to_json(a);
                res["regular"] = a.period == 1;
                res["strictly_edge_transitive"] = a.period == 2;
                text = "map: " + to_literal(m) + "\n" + detail::profile_text(p);
                text += "aut period: " + std::to_string(a.period) + "\n";
                text += "aut order: " + std::to_string(a.order) + " (= <x^" +
                        std::to_string(a.period) + ">)\n";
                text += std::string("regular: ") + (a.period == 1 ? "yes" : "no") + "\n";
                text += std::string("strictly edge-transitive: ") +
                        (a.period == 2 ? "yes" : "no") + "\n";
                text += "canonical y: " + to_cycle_string(a.canonical_y) + "\n";
            } else {
                const DartMap& m = std::get<DartMap>(*literal);
                const MapProfile p = profile(m);
                res["map"] = to_literal(m);
                res["profile"] = to_json(p);
                text = "map: " + to_literal(m) + "\n" + detail::profile_text(p);
            }
            res["face_circuits"] = format_cycles(
                std::holds_alternative<OneVertexMap>(*literal)
                    ? face_circuits(std::get<OneVertexMap>(*literal).as_dart_map())
                    : face_circuits(std::get<DartMap>(*literal)),
                true);
            text += "face circuits: " + res["face_circuits"].get<std::string>() + "\n";
        } else if (census->parsed()) {
            if (ce_k < 1) throw std::invalid_argument("census needs --k >= 1");
            std::vector<CensusRow> rows;
            if (ce_p > 0) {
                if ((2 * ce_k) % ce_p != 0)
                    throw std::invalid_argument("p = " + std::to_string(ce_p) +
                                                " does not divide 2k = " +
                                                std::to_string(2 * ce_k));
                CensusRow row;
                row.k = ce_k;
                row.p = ce_p;
                row.nu_bar = nu_bar(ce_k, ce_p);
                row.nu = nu(ce_k, ce_p);
                row.classes = class_count(ce_k, ce_p);
                rows.push_back(std::move(row));
            } else {
                rows = census_table(ce_k);
            }
            std::map<long long, BigInt> oracle;
            if (ce_oracle) {
                if (ce_k > caps.brute_kmax)
                    throw std::invalid_argument(
                        "k = " + std::to_string(ce_k) +
                        " exceeds the brute-force oracle cap; raise --brute-cap");
                oracle = brute_census(ce_k, caps);
            }
            std::map<long long, std::vector<OneVertexMap>> reps;
            if (ce_reps) {
                if (ce_k > caps.gen_kmax)
                    throw std::invalid_argument("k = " + std::to_string(ce_k) +
                                                " exceeds the enumeration cap; raise --gen-cap");
                for (const CensusRow& row : rows)
                    reps[row.p] = class_representatives(ce_k, row.p, caps);
            }

            res["rows"] = json::array();
            std::vector<std::vector<std::string>> table{
                {"k", "p", "nu_bar", "nu", "classes"}};
            if (ce_oracle) {
                table[0].push_back("oracle");
                table[0].push_back("match");
            }
            for (const CensusRow& row : rows) {
                json jrow = to_json(row);
                std::vector<std::string> trow{std::to_string(row.k), std::to_string(row.p),
                                              row.nu_bar.str(), row.nu.str(),
                                              row.classes.str()};
                if (ce_oracle) {
                    const BigInt& b = oracle.at(row.p);
                    const bool match = b == row.nu;
                    jrow["oracle"] = b.str();
                    jrow["match"] = match;
                    trow.push_back(b.str());
                    trow.push_back(match ? "yes" : "NO");
                    if (!match)
                        warnings.push_back("oracle mismatch at (k=" + std::to_string(row.k) +
                                           ", p=" + std::to_string(row.p) + "): formula " +
                                           row.nu.str() + " vs brute " + b.str());
                }
                if (ce_reps) {
                    json jreps = json::array();
                    for (const OneVertexMap& m : reps[row.p])
                        jreps.push_back(to_cycle_string(m.y()));
                    jrow["representatives"] = jreps;
                }
                res["rows"].push_back(std::move(jrow));
                table.push_back(std::move(trow));
            }
            text = detail::render_table(table);
            if (ce_reps)
                for (const CensusRow& row : rows) {
                    text += "p=" + std::to_string(row.p) + " representatives:";
                    for (const OneVertexMap& m : reps[row.p])
                        text += " " + to_cycle_string(m.y());
                    text += "\n";
                }
        } else if (classify->parsed()) {
            const bool single = cl_k > 0 && cl_t >= 0 && !cl_regular && cl_scan < 0;
            const bool regular = cl_k > 0 && cl_regular && cl_t < 0 && cl_scan < 0;
            const bool scanning = cl_scan > 0 && cl_k < 0 && cl_t < 0 && !cl_regular;
            if (!single && !regular && !scanning)
                throw std::invalid_argument("classify needs exactly one of: --k with --t, "
                                            "--k with --regular, or --scan <g_max>");
            if (scanning) {
                const std::vector<Classification> entries = scan(cl_scan);
                res["entries"] = json::array();
                std::vector<std::vector<std::string>> table{
                    {"genus", "k", "t", "verdict", "aut(X)", "order"}};
                for (const Classification& c : entries) {
                    res["entries"].push_back(to_json(c));
                    table.push_back({std::to_string(c.genus), std::to_string(c.k),
                                     std::to_string(c.t.value()), verdict_name(c.verdict),
                                     c.aut_surface.name,
                                     std::to_string(c.aut_surface.order)});
                }
                text = detail::render_table(table);
            } else {
                const Classification c =
                    regular ? classify_regular(cl_k) : classify_edge_transitive(cl_k, cl_t);
                res = to_json(c);
                text = detail::classification_text(c);
            }
        } else if (verify_cmd->parsed()) {
            if (ve_kmax < 1) throw std::invalid_argument("verify needs --kmax >= 1");
            const std::vector<verify::SuiteResult> suites = verify::run_all(ve_kmax, caps);
            bool all = true;
            res["suites"] = json::array();
            for (const verify::SuiteResult& s : suites) {
                res["suites"].push_back(to_json(s));
                all = all && s.passed;
                text += std::string(s.passed ? "[PASS] " : "[FAIL] ") + s.name;
                if (!s.detail.empty()) text += " (" + s.detail + ")";
                text += "\n";
            }
            res["all_passed"] = all;
            text += all ? "all suites passed\n" : "SUITE FAILURES PRESENT\n";
            if (!all) result.exit_code = 1;
        }
    } catch (const std::exception& e) {
        result.exit_code = 1;
        if (format == "json") {
            const json envelope{{"schema_version", "1"},
                                {"command", command},
                                {"error", e.what()},
                                {"warnings", warnings}};
            result.out = envelope.dump(2) + "\n";
        } else {
            result.err = std::string("error: ") + e.what() + "\n";
        }
        return result;
    }

    if (format == "json") {
        const json envelope{{"schema_version", "1"},
                            {"command", command},
                            {"result", res},
                            {"warnings", warnings}};
        result.out = envelope.dump(2) + "\n";
    } else {
        result.out = text;
        for (const std::string& w : warnings) result.err += "warning: " + w + "\n";
    }
    return result;
}

inline int main_entry(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const RunResult r = run(args);
    if (!r.out.empty()) std::fputs(r.out.c_str(), stdout);
    if (!r.err.empty()) std::fputs(r.err.c_str(), stderr);
    return r.exit_code;
}

} // namespace unimap::cli

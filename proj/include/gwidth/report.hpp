#ifndef GWIDTH_REPORT_HPP
#define GWIDTH_REPORT_HPP

#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwidth/building_set.hpp"
#include "gwidth/errors.hpp"
#include "gwidth/families.hpp"
#include "gwidth/graph.hpp"
#include "gwidth/io.hpp"
#include "gwidth/nestohedron.hpp"
#include "gwidth/permutohedron.hpp"
#include "gwidth/polytope.hpp"
#include "gwidth/rational.hpp"
#include "gwidth/version.hpp"
#include "gwidth/width.hpp"

namespace gwidth {

using Json = nlohmann::ordered_json;

// Process exit codes; inconsistency gets its own code because it means a
// structural claim failed, not that the user did anything wrong.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInconsistency = 4;

enum class Command {
    Width,
    Certify,
    Polytope,
    Delzant,
    Nestohedron,
    Family,
    Monotonicity,
    Nonsqueeze,
    Permutohedron,
};

inline std::string command_name(Command c) {
    switch (c) {
        case Command::Width: return "width";
        case Command::Certify: return "certify";
        case Command::Polytope: return "polytope";
        case Command::Delzant: return "delzant";
        case Command::Nestohedron: return "nestohedron";
        case Command::Family: return "family";
        case Command::Monotonicity: return "monotonicity";
        case Command::Nonsqueeze: return "nonsqueeze";
        default: return "permutohedron";
    }
}

struct Request {
    Command command = Command::Width;
    std::optional<std::string> input_path;         // graph file
    std::optional<std::string> input_text;         // graph file content (tests)
    std::optional<std::string> building_set_path;  // building-set file
    std::optional<std::string> building_set_text;  // content form (tests)
    std::optional<std::string> family;             // "kind:N"
    std::optional<std::string> values;             // "c1,c2,..."
    long long stabilization = 0;                   // m for nonsqueeze
    bool geometry = true;
    EnumLimits limits;
    unsigned long long seed = 0;
    int support_checks = 64;
    std::string format = "json"; // json | text
    std::optional<std::string> output_path;
    bool timing = false;
};

struct RunOutcome {
    Json report;
    int exit_code = kExitOk;
};

namespace reportd {

inline Json json_rational(const Rational& r) { return to_string(r); }

inline Json json_point(const std::vector<Rational>& p) {
    Json a = Json::array();
    for (const Rational& x : p) a.push_back(json_rational(x));
    return a;
}

inline Json json_subset(Subset s) {
    Json a = Json::array();
    for (int v : elements(s)) a.push_back(v);
    return a;
}

inline Json json_graph(const Graph& g) {
    Json j;
    j["vertex_count"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back(Json::array({u, v}));
    j["edges"] = edges;
    return j;
}

inline Json json_building_set(const BuildingSet& b, bool with_members) {
    Json j;
    j["ground_size"] = b.ground_size();
    j["size"] = b.size();
    j["has_full_ground"] = b.has_full_ground();
    if (with_members) {
        Json members = Json::array();
        for (Subset m : b.members()) members.push_back(json_subset(m));
        j["members"] = members;
    }
    return j;
}

inline Json json_width(const WidthResult& r) {
    Json j;
    j["width"] = r.width;
    if (r.pivot_vertex)
        j["pivot_vertex"] = *r.pivot_vertex;
    else
        j["pivot_vertex"] = nullptr;
    j["k"] = r.k.counts;
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        Json c;
        c["vertices"] = json_subset(r.components[i]);
        c["width"] = r.component_widths[i];
        comps.push_back(std::move(c));
    }
    j["components"] = comps;
    return j;
}

inline Json json_segment(const Segment& s) {
    Json j;
    j["axis"] = s.axis;
    j["from"] = json_point(s.from);
    j["to"] = json_point(s.to);
    return j;
}

inline Json json_diamond(const DiamondCertificate& d) {
    Json j;
    j["rho"] = json_rational(d.rho);
    j["a"] = d.a ? Json(to_string(*d.a)) : Json(nullptr);
    j["center"] = json_point(d.center);
    Json segs = Json::array();
    for (const Segment& s : d.segments) segs.push_back(json_segment(s));
    j["segments"] = segs;
    j["labels_old_of_new"] = d.old_of_new;
    j["containment_checked"] = d.containment_checked;
    return j;
}

inline Json json_parallel(const ParallelFacetCertificate& c) {
    Json j;
    j["u"] = c.u;
    j["lambda"] = json_rational(c.lambda);
    j["mu"] = json_rational(c.mu);
    j["bound"] = json_rational(c.bound);
    j["edge_pairings_ok"] = c.edge_pairings_ok;
    j["verified_geometrically"] = c.verified_geometrically;
    return j;
}

inline Json json_constraint(const Constraint& c) {
    Json j;
    j["label"] = c.label ? json_subset(*c.label) : Json("total");
    j["coeffs"] = c.coeffs;
    j["sense"] = sense_text(c.sense);
    j["rhs"] = json_rational(c.rhs);
    return j;
}

inline Json json_system(const HalfspaceSystem& h) {
    Json j;
    j["dimension"] = h.dimension;
    Json rows = Json::array();
    for (const Constraint& c : h.constraints) rows.push_back(json_constraint(c));
    j["constraints"] = rows;
    return j;
}

inline Json json_validation(const BuildingSet::Violations& v) {
    Json j;
    j["valid"] = v.ok();
    j["missing_singletons"] = v.missing_singletons;
    Json unions = Json::array();
    for (auto [a, b] : v.open_unions)
        unions.push_back(Json::array({json_subset(a), json_subset(b)}));
    j["open_unions"] = unions;
    return j;
}

inline Json json_nestohedron(const NestohedronBoundReport& r) {
    Json j;
    j["formula_value"] = r.formula_value;
    j["k"] = r.k_counts;
    j["labels_old_of_new"] = r.old_of_new;
    j["best_upper"] = r.best_upper ? Json(to_string(*r.best_upper)) : Json(nullptr);
    j["best_upper_direction"] =
        r.best_upper_direction ? Json(*r.best_upper_direction) : Json(nullptr);
    j["lower_found"] = json_rational(r.lower_found);
    j["lower_method"] = r.lower_method;
    j["lower_center"] = json_point(r.lower_center);
    Json segs = Json::array();
    for (const Segment& s : r.lower_segments) segs.push_back(json_segment(s));
    j["lower_segments"] = segs;
    j["formula_tight"] = r.formula_tight;
    return j;
}

} // namespace reportd

namespace detail {

inline std::pair<FamilyKind, int> parse_family_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InputError("family spec must look like kind:size, got '" + spec + "'");
    auto kind = family_from_name(spec.substr(0, colon));
    if (!kind)
        throw InputError("unknown family '" + spec.substr(0, colon) +
                         "' (expected complete, path, cycle, or star)");
    long long size = 0;
    try {
        std::size_t used = 0;
        size = std::stoll(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw InputError("family size must be an integer, got '" + spec.substr(colon + 1) + "'");
    }
    if (size < 1 || size > kMaxGroundSize) throw InputError("family size out of range");
    return {*kind, static_cast<int>(size)};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline int exit_code_of(const std::exception& e) {
    if (dynamic_cast<const InternalInconsistencyError*>(&e)) return kExitInconsistency;
    if (dynamic_cast<const ResourceLimitError*>(&e)) return kExitResource;
    if (dynamic_cast<const InputError*>(&e)) return kExitInput;
    return kExitFailure;
}

inline const char* error_kind(int code) {
    switch (code) {
        case kExitInput: return "input";
        case kExitResource: return "resource-limit";
        case kExitInconsistency: return "internal-inconsistency";
        default: return "failure";
    }
}

// Geometry bundle used by the polytope/delzant commands.
struct GeometryChecks {
    HalfspaceSystem ambient, projected;
    Polytope polytope;
    std::vector<EdgeDescriptor> edge_list;
    bool edge_directions = false;
    bool delzant = false;
    bool lattice = false;
    bool irredundant = false;
    std::size_t nested_count = 0;
    bool nested_matches = false;
    int support_samples = 0;
    bool support_ok = false;
};

inline GeometryChecks run_geometry(const BuildingSet& b, const Request& req) {
    if (!req.geometry)
        throw InputError("this command needs --geometry on");
    GeometryChecks out;
    out.ambient = hrep(b);
    out.projected = project(out.ambient);
    out.polytope = enumerate_vertices_bruteforce(out.projected, req.limits);
    out.edge_list = edges(out.polytope);
    out.edge_directions = verify_edge_directions(out.polytope);
    out.delzant = delzant_check(out.polytope, out.projected);
    out.lattice = true;
    for (const auto& v : out.polytope.vertices)
        for (const Rational& x : v)
            if (!is_integer(x)) out.lattice = false;
    out.irredundant = facets_irredundant(out.polytope, out.projected);

    auto nested = enumerate_vertices_nested(b, req.limits);
    out.nested_count = nested.size();
    out.nested_matches = nested.size() == out.polytope.vertices.size();
    const int n = out.projected.dimension;
    for (const auto& collection : nested) {
        if (!out.nested_matches) break;
        RationalMatrix a(static_cast<std::size_t>(n), RationalVector(static_cast<std::size_t>(n)));
        RationalVector rhs(static_cast<std::size_t>(n));
        bool ok = true;
        for (int r = 0; r < n; ++r) {
            int idx = out.projected.find_by_label(collection[static_cast<std::size_t>(r)]);
            if (idx < 0) { ok = false; break; }
            const Constraint& c = out.projected.constraints[static_cast<std::size_t>(idx)];
            for (int col = 0; col < n; ++col)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                    c.coeffs[static_cast<std::size_t>(col)];
            rhs[static_cast<std::size_t>(r)] = c.rhs;
        }
        if (!ok) { out.nested_matches = false; break; }
        auto x = solve_square(std::move(a), std::move(rhs));
        if (!x || !std::binary_search(out.polytope.vertices.begin(),
                                      out.polytope.vertices.end(), *x))
            out.nested_matches = false;
    }

    // seeded cross-check of the two support-function routes
    out.support_samples = req.support_checks;
    out.support_ok = true;
    std::mt19937_64 rng(req.seed);
    const int ground = b.ground_size();
    Rational total(static_cast<long long>(b.size()));
    for (int t = 0; t < req.support_checks && out.support_ok; ++t) {
        std::vector<long long> w(static_cast<std::size_t>(ground));
        for (auto& v : w) v = static_cast<long long>(rng() % 19) - 9;
        Rational via_sum = support_minkowski(b, w);
        Rational via_vertices;
        bool first = true;
        for (const auto& vert : out.polytope.vertices) {
            auto lifted = lift_to_ambient(vert, total);
            Rational dot = 0;
            for (int i = 0; i < ground; ++i)
                if (w[static_cast<std::size_t>(i)] != 0)
                    dot += Rational(w[static_cast<std::size_t>(i)]) *
                           lifted[static_cast<std::size_t>(i)];
            if (first || dot > via_vertices) via_vertices = dot;
            first = false;
        }
        if (first || via_sum != via_vertices) out.support_ok = false;
    }
    return out;
}

inline Json json_geometry(const GeometryChecks& g, bool full_dump) {
    Json j;
    if (full_dump) {
        j["ambient"] = reportd::json_system(g.ambient);
        j["projected"] = reportd::json_system(g.projected);
        Json verts = Json::array();
        for (const auto& v : g.polytope.vertices) verts.push_back(reportd::json_point(v));
        j["vertices"] = verts;
        Json es = Json::array();
        for (const EdgeDescriptor& e : g.edge_list) {
            Json je;
            je["endpoints"] = Json::array({e.v0, e.v1});
            je["direction"] = e.primitive_direction;
            je["affine_length"] = reportd::json_rational(e.affine_length);
            es.push_back(std::move(je));
        }
        j["edges"] = es;
    }
    j["vertex_count"] = g.polytope.vertices.size();
    j["edge_count"] = g.edge_list.size();
    Json checks;
    checks["edge_directions"] = g.edge_directions;
    checks["delzant"] = g.delzant;
    checks["lattice_vertices"] = g.lattice;
    checks["irredundant"] = g.irredundant;
    checks["nested_count"] = g.nested_count;
    checks["nested_matches_bruteforce"] = g.nested_matches;
    checks["support_samples"] = g.support_samples;
    checks["support_ok"] = g.support_ok;
    j["checks"] = checks;
    return j;
}

} // namespace detail

// Renders the report as indented "key: value" text; arrays of scalars print
// inline, arrays of objects as dashed items.
inline void render_text(const Json& j, std::string& out, int indent = 0) {
    auto pad = [&](int extra) { out.append(static_cast<std::size_t>(indent + extra), ' '); };
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            pad(0);
            out += it.key();
            const Json& v = it.value();
            if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_structured())) {
                out += ":\n";
                render_text(v, out, indent + 2);
            } else if (v.is_array()) {
                out += ": " + v.dump() + "\n";
            } else if (v.is_string()) {
                out += ": " + v.get<std::string>() + "\n";
            } else {
                out += ": " + v.dump() + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const Json& v : j) {
            pad(0);
            out += "-\n";
            render_text(v, out, indent + 2);
        }
    } else {
        pad(0);
        out += j.dump() + "\n";
    }
}

inline RunOutcome run(const Request& req) {
    const auto started = std::chrono::steady_clock::now();

    int sources = 0;
    sources += req.input_path || req.input_text ? 1 : 0;
    sources += req.building_set_path || req.building_set_text ? 1 : 0;
    sources += req.family ? 1 : 0;
    sources += req.values ? 1 : 0;
    if (sources != 1) throw InputError("exactly one input source is required");
    if (req.limits.max_materialize < 1 || req.limits.max_count < 1 ||
        req.limits.max_geometry_dim < 0 || req.limits.max_candidates < 1)
        throw InputError("caps must be positive");
    if (req.format != "json" && req.format != "text")
        throw InputError("format must be json or text");

    Json report;
    report["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    report["command"] = command_name(req.command);
    Json options;
    options["geometry"] = req.geometry ? "on" : "off";
    options["max_enum"] = req.limits.max_materialize;
    options["max_count"] = req.limits.max_count;
    options["max_dim"] = req.limits.max_geometry_dim;
    options["max_candidates"] = req.limits.max_candidates;
    options["seed"] = req.seed;
    options["support_checks"] = req.support_checks;
    report["options"] = options;

    // resolve inputs
    std::vector<Graph> graphs;
    std::optional<BuildingSet> bset;
    std::vector<Rational> values;
    if (req.input_path || req.input_text) {
        std::string text = req.input_text ? *req.input_text : detail::read_file(*req.input_path);
        graphs = io::parse_graphs_text(text);
    } else if (req.building_set_path || req.building_set_text) {
        std::string text = req.building_set_text ? *req.building_set_text
                                                 : detail::read_file(*req.building_set_path);
        bset = io::parse_building_set_text(text);
    } else if (req.family) {
        auto [kind, size] = detail::parse_family_spec(*req.family);
        graphs.push_back(make_family(kind, size));
    } else if (req.values) {
        values = io::parse_values(*req.values);
    }

    const bool graph_command = req.command == Command::Width || req.command == Command::Certify ||
                               req.command == Command::Family;
    const bool geometry_command =
        req.command == Command::Polytope || req.command == Command::Delzant;
    if ((graph_command || req.command == Command::Monotonicity ||
         req.command == Command::Nonsqueeze) &&
        graphs.empty())
        throw InputError(command_name(req.command) + " needs a graph input");
    if (req.command == Command::Nestohedron && !bset)
        throw InputError("nestohedron needs a building-set input");
    if (req.command == Command::Permutohedron && values.empty())
        throw InputError("permutohedron needs --values");
    if (geometry_command && graphs.empty() && !bset)
        throw InputError(command_name(req.command) + " needs a graph or building-set input");

    Json items = Json::array();
    int worst = kExitOk;
    auto run_item = [&](const Json& echo, auto&& body) {
        Json item;
        item["input"] = echo;
        try {
            item["result"] = body();
        } catch (const std::exception& e) {
            int code = detail::exit_code_of(e);
            worst = std::max(worst, code);
            item["error"] = Json{{"kind", detail::error_kind(code)}, {"message", e.what()}};
        }
        items.push_back(std::move(item));
    };

    switch (req.command) {
        case Command::Width:
            for (const Graph& g : graphs)
                run_item(reportd::json_graph(g),
                         [&] { return reportd::json_width(gromov_width(g, req.limits)); });
            break;
        case Command::Certify:
            for (const Graph& g : graphs)
                run_item(reportd::json_graph(g), [&] {
                    Json r = reportd::json_width(gromov_width(g, req.limits));
                    r["diamond"] = reportd::json_diamond(lower_certificate(g, req.limits));
                    r["parallel_facets"] = reportd::json_parallel(
                        upper_certificate(g, req.limits, req.geometry));
                    Json checks;
                    checks["k_inequality"] = check_k_inequality(g, req.limits);
                    checks["f_monotonic"] =
                        check_f_monotonic(BuildingSet::from_graph(g, req.limits));
                    checks["parallel_facets_exist"] = true; // re-verified by the upper bound
                    r["checks"] = checks;
                    return r;
                });
            break;
        case Command::Polytope:
        case Command::Delzant: {
            const bool full_dump = req.command == Command::Polytope;
            if (bset) {
                run_item(reportd::json_building_set(*bset, false), [&] {
                    auto v = bset->validate();
                    if (!v.ok()) throw InputError("building set fails validation");
                    auto g = detail::run_geometry(*bset, req);
                    Json r = detail::json_geometry(g, full_dump);
                    r["validation"] = reportd::json_validation(v);
                    return r;
                });
            } else {
                for (const Graph& g : graphs)
                    run_item(reportd::json_graph(g), [&] {
                        BuildingSet b = BuildingSet::from_graph(g, req.limits);
                        auto geo = detail::run_geometry(b, req);
                        Json r = detail::json_geometry(geo, full_dump);
                        r["building_set"] = reportd::json_building_set(b, false);
                        return r;
                    });
            }
            break;
        }
        case Command::Nestohedron:
            run_item(reportd::json_building_set(*bset, true), [&] {
                Json r;
                auto v = bset->validate();
                r["validation"] = reportd::json_validation(v);
                if (!v.ok()) throw InputError("building set fails validation");
                if (!req.geometry) throw InputError("nestohedron needs --geometry on");
                Json bounds = reportd::json_nestohedron(nestohedron_bounds(*bset, req.limits));
                for (auto it = bounds.begin(); it != bounds.end(); ++it)
                    r[it.key()] = it.value();
                return r;
            });
            break;
        case Command::Family:
            for (const Graph& g : graphs)
                run_item(reportd::json_graph(g), [&] {
                    Json r;
                    r["graph"] = reportd::json_graph(g);
                    r["text"] = io::graph_to_text(g);
                    return r;
                });
            break;
        case Command::Monotonicity: {
            if (graphs.size() != 2)
                throw InputError("monotonicity needs exactly two graphs in the input");
            Json echo;
            echo["g"] = reportd::json_graph(graphs[0]);
            echo["h"] = reportd::json_graph(graphs[1]);
            run_item(echo, [&] {
                auto m = subgraph_monotonicity(graphs[0], graphs[1], req.limits);
                Json r;
                r["width_g"] = m.width_g;
                r["width_h"] = m.width_h;
                r["holds"] = m.holds;
                r["strict_expected"] = m.strict_expected;
                r["strict"] = m.strict;
                return r;
            });
            break;
        }
        case Command::Nonsqueeze: {
            if (graphs.size() != 2)
                throw InputError("nonsqueeze needs exactly two graphs in the input");
            Json echo;
            echo["g"] = reportd::json_graph(graphs[0]);
            echo["h"] = reportd::json_graph(graphs[1]);
            echo["m"] = req.stabilization;
            run_item(echo, [&] {
                auto r = nonsqueezing_report(graphs[0], graphs[1], req.stabilization, req.limits);
                Json j;
                j["width_g"] = r.width_g;
                j["width_h"] = r.width_h;
                j["vertex_gap"] = r.vertex_gap;
                j["m"] = r.stabilization;
                j["obstructed"] = r.obstructed;
                j["statement"] = r.statement;
                return j;
            });
            break;
        }
        case Command::Permutohedron: {
            Json echo;
            Json vals = Json::array();
            for (const Rational& v : values) vals.push_back(to_string(v));
            echo["values"] = vals;
            run_item(echo, [&] {
                auto r = permutohedron_width(values, req.limits);
                Json j;
                j["width"] = to_string(r.width);
                j["diamond"] = reportd::json_diamond(r.diamond);
                j["parallel_facets"] = reportd::json_parallel(r.facets);
                return j;
            });
            break;
        }
    }

    report["items"] = items;
    report["status"] = worst == kExitOk ? "ok" : "error";
    if (req.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return {std::move(report), worst};
}

// Text rendering of a finished report; the family command in text mode emits
// the graph file format itself so output can be fed straight back in.
inline std::string report_to_text(const Request& req, const Json& report) {
    if (req.command == Command::Family && req.format == "text") {
        std::string out;
        for (const Json& item : report["items"])
            if (item.contains("result")) out += item["result"]["text"].get<std::string>();
        return out;
    }
    std::string out;
    render_text(report, out);
    return out;
}

} // namespace gwidth

#endif // GWIDTH_REPORT_HPP

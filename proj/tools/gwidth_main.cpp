// Command-line front end: parses one subcommand into a Request, runs it, and
// writes the report to stdout or --output.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gwidth/report.hpp"

namespace {

struct CommonOptions {
    std::string input, building_set, family, values, output;
    std::string geometry = "on";
    std::string format = "json";
    long long m = 0;
    unsigned long long seed = 0;
    int support_checks = 64;
    bool timing = false;
    gwidth::EnumLimits limits;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool wants_values, bool wants_m) {
    cmd->add_option("--input", opt.input, "graph file (blocks separated by blank lines)");
    cmd->add_option("--building-set", opt.building_set, "building-set file");
    cmd->add_option("--family", opt.family, "inline family spec kind:N "
                                            "(complete, path, cycle, star)");
    if (wants_values)
        cmd->add_option("--values", opt.values, "strictly increasing rationals c1,c2,...");
    if (wants_m)
        cmd->add_option("--m", opt.m, "stabilization parameter m >= 0");
    cmd->add_option("--geometry", opt.geometry, "on|off: verify against enumerated vertices")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--max-enum", opt.limits.max_materialize,
                    "vertex cap for materializing building sets");
    cmd->add_option("--max-count", opt.limits.max_count, "vertex cap for pure counting");
    cmd->add_option("--max-dim", opt.limits.max_geometry_dim,
                    "dimension cap for vertex enumeration");
    cmd->add_option("--max-candidates", opt.limits.max_candidates,
                    "basis-subset budget for brute-force enumeration");
    cmd->add_option("--seed", opt.seed, "seed for randomized cross-checks");
    cmd->add_option("--support-checks", opt.support_checks,
                    "random directions for the support-function cross-check");
    cmd->add_option("--output", opt.output, "write the report to this file");
    cmd->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--timing", opt.timing, "include timing (breaks byte-stability)");
}

gwidth::Request to_request(gwidth::Command command, const CommonOptions& opt) {
    gwidth::Request req;
    req.command = command;
    if (!opt.input.empty()) req.input_path = opt.input;
    if (!opt.building_set.empty()) req.building_set_path = opt.building_set;
    if (!opt.family.empty()) req.family = opt.family;
    if (!opt.values.empty()) req.values = opt.values;
    req.stabilization = opt.m;
    req.geometry = opt.geometry == "on";
    req.limits = opt.limits;
    req.seed = opt.seed;
    req.support_checks = opt.support_checks;
    req.format = opt.format;
    if (!opt.output.empty()) req.output_path = opt.output;
    req.timing = opt.timing;
    return req;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gwidth: width of toric manifolds from graph associahedra, "
                 "with exact polyhedral certificates"};
    app.require_subcommand(1);

    struct Sub {
        gwidth::Command command;
        CLI::App* cli;
        CommonOptions opt;
    };
    std::vector<Sub> subs;
    auto add = [&](gwidth::Command c, const char* name, const char* help, bool values,
                   bool m) {
        subs.push_back({c, app.add_subcommand(name, help), {}});
        add_common(subs.back().cli, subs.back().opt, values, m);
    };
    add(gwidth::Command::Width, "width", "width formula and per-component values", false, false);
    add(gwidth::Command::Certify, "certify",
        "width with verified diamond and parallel-facet certificates", false, false);
    add(gwidth::Command::Polytope, "polytope",
        "H-representation, exact vertices, edges, and all geometry checks", false, false);
    add(gwidth::Command::Delzant, "delzant",
        "smoothness and edge-direction checks at every vertex", false, false);
    add(gwidth::Command::Nestohedron, "nestohedron",
        "bound report for a general building set", false, false);
    add(gwidth::Command::Family, "family", "emit a named family graph", false, false);
    add(gwidth::Command::Monotonicity, "monotonicity",
        "width comparison for a subgraph pair (two graphs in one file)", false, false);
    add(gwidth::Command::Nonsqueeze, "nonsqueeze",
        "embedding obstruction report for a proper subgraph pair", false, true);
    add(gwidth::Command::Permutohedron, "permutohedron",
        "width of a permutohedron from strictly increasing values", true, false);

    CLI11_PARSE(app, argc, argv);

    const Sub* active = nullptr;
    for (const Sub& s : subs)
        if (s.cli->parsed()) active = &s;
    if (active == nullptr) {
        std::cerr << app.help() << "\n";
        return gwidth::kExitInput;
    }

    try {
        gwidth::Request req = to_request(active->command, active->opt);
        gwidth::RunOutcome outcome = gwidth::run(req);
        std::string rendered = req.format == "json" ? outcome.report.dump(2) + "\n"
                                                    : gwidth::report_to_text(req, outcome.report);
        if (req.output_path) {
            std::ofstream out(*req.output_path);
            if (!out) {
                std::cerr << "error: cannot write '" << *req.output_path << "'\n";
                return gwidth::kExitInput;
            }
            out << rendered;
        } else {
            std::cout << rendered;
        }
        return outcome.exit_code;
    } catch (const gwidth::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (dynamic_cast<const gwidth::InternalInconsistencyError*>(&e))
            return gwidth::kExitInconsistency;
        if (dynamic_cast<const gwidth::ResourceLimitError*>(&e))
            return gwidth::kExitResource;
        return gwidth::kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gwidth::kExitFailure;
    }
}

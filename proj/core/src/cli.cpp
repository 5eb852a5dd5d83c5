#include "openbook/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace openbook {

namespace {

struct CommonOpts {
    std::string input;
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--input", opts.input, "graph file, or - for standard input")->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", opts.output, "write output to a file instead of stdout");
}

OutputFormat format_of(const CommonOpts& opts) {
    return opts.format == "json" ? OutputFormat::json : OutputFormat::text;
}

std::string slurp_input(const CommonOpts& opts, std::istream& in) {
    if (opts.input == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(opts.input);
    if (!file) throw std::runtime_error("cannot open input file '" + opts.input + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const CommonOpts& opts, std::ostream& out, const std::string& doc) {
    if (opts.output.empty()) {
        out << doc;
        return;
    }
    std::ofstream file(opts.output);
    if (!file) throw std::runtime_error("cannot open output file '" + opts.output + "'");
    file << doc;
}

ResolutionGraph parse_from(const CommonOpts& opts, std::istream& in) {
    return parse_graph(slurp_input(opts, in));
}

ResolutionGraph parse_tree_from(const CommonOpts& opts, std::istream& in) {
    ResolutionGraph g = parse_from(opts, in);
    if (!is_tree(g)) throw std::invalid_argument("input graph is not a tree");
    return g;
}

WeightMode mode_of(const std::string& mode) {
    return mode == "relaxed-last" ? WeightMode::relaxed_last : WeightMode::strict;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"planar open book factorization toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string mode = "strict";
    std::size_t max_solutions = 64;
    std::size_t node_budget = 100000000;
    std::size_t orbit_cap = 65536;

    CLI::App* validate = app.add_subcommand("validate", "tree, bad-vertex, and weight checks");
    add_common(validate, opts);
    validate->add_option("--mode", mode, "strict or relaxed-last")
        ->check(CLI::IsMember({"strict", "relaxed-last"}));

    CLI::App* arrange = app.add_subcommand("arrange", "canonical chain/satellite arrangement");
    add_common(arrange, opts);

    CLI::App* openbook_cmd = app.add_subcommand("openbook", "page and standard factorization");
    add_common(openbook_cmd, opts);

    CLI::App* mult = app.add_subcommand("multiplicities", "profile of the standard factorization");
    add_common(mult, opts);

    CLI::App* solve = app.add_subcommand("solve", "enumerate candidate factorizations");
    add_common(solve, opts);
    solve->add_option("--max-solutions", max_solutions, "solution cap");
    solve->add_option("--node-budget", node_budget, "search node cap");

    CLI::App* orbit_cmd = app.add_subcommand("lantern-orbit", "orbit of the standard factorization");
    add_common(orbit_cmd, opts);
    orbit_cmd->add_option("--orbit-cap", orbit_cap, "state cap for the closure");

    CLI::App* verify_cmd = app.add_subcommand("verify", "full verification pipeline");
    add_common(verify_cmd, opts);
    verify_cmd->add_option("--mode", mode, "strict or relaxed-last")
        ->check(CLI::IsMember({"strict", "relaxed-last"}));
    verify_cmd->add_option("--max-solutions", max_solutions, "solution cap");
    verify_cmd->add_option("--node-budget", node_budget, "search node cap");

    CLI::App* dot = app.add_subcommand("export-dot", "DOT text of the graph");
    add_common(dot, opts);

    std::vector<const char*> argv;
    argv.push_back("obfact");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << app.help();
        return 2;
    }

    try {
        OutputFormat fmt = format_of(opts);

        if (validate->parsed()) {
            ResolutionGraph g = parse_from(opts, in);
            ValidationDocument doc;
            doc.mode = mode_of(mode);
            doc.tree_ok = is_tree(g);
            if (doc.tree_ok) doc.bad_vertices = validate_no_bad_vertices(g);
            if (doc.tree_ok && doc.bad_vertices.pass)
                doc.hypotheses = validate_weight_hypotheses(g, doc.mode);
            doc.status = hypothesis_status(g);
            doc.pass = doc.tree_ok && doc.bad_vertices.pass && doc.hypotheses.pass;
            write_output(opts, out, render_validation(doc, fmt));
            return doc.pass ? 0 : 1;
        }
        if (arrange->parsed()) {
            ResolutionGraph g = parse_tree_from(opts, in);
            write_output(opts, out, render_arrangement(arrange_conveniently(g), fmt));
            return 0;
        }
        if (openbook_cmd->parsed()) {
            ResolutionGraph g = parse_tree_from(opts, in);
            PlanarPage page = build_page(g, arrange_conveniently(g));
            write_output(opts, out, render_open_book(page, standard_factorization(page), fmt));
            return 0;
        }
        if (mult->parsed()) {
            ResolutionGraph g = parse_tree_from(opts, in);
            PlanarPage page = build_page(g, arrange_conveniently(g));
            MultiplicityProfile p = profile(standard_factorization(page), page.hole_ids());
            write_output(opts, out, render_profile(p, fmt));
            return 0;
        }
        if (solve->parsed()) {
            ResolutionGraph g = parse_tree_from(opts, in);
            PlanarPage page = build_page(g, arrange_conveniently(g));
            MultiplicityProfile target = profile(standard_factorization(page), page.hole_ids());
            SolverConfig cfg{max_solutions, node_budget, true};
            SolutionSet sols = enumerate_candidates(page.hole_ids(), target, cfg);
            write_output(opts, out, render_solutions(sols, fmt));
            return sols.status == SearchStatus::complete ? 0 : 3;
        }
        if (orbit_cmd->parsed()) {
            ResolutionGraph g = parse_tree_from(opts, in);
            PlanarPage page = build_page(g, arrange_conveniently(g));
            OrbitResult orbit = lantern_orbit(standard_factorization(page), orbit_cap);
            write_output(opts, out, render_orbit(orbit, fmt));
            return orbit.complete ? 0 : 3;
        }
        if (verify_cmd->parsed()) {
            ResolutionGraph g = parse_from(opts, in);
            SolverConfig cfg{max_solutions, node_budget, true};
            VerificationReport report = verify(g, mode_of(mode), cfg);
            write_output(opts, out, render_verification(report, fmt));
            return exit_code(report);
        }
        if (dot->parsed()) {
            ResolutionGraph g = parse_from(opts, in);
            std::string doc;
            if (is_tree(g)) {
                Arrangement arr = arrange_conveniently(g);
                doc = export_dot(g, &arr);
            } else {
                doc = export_dot(g);
            }
            write_output(opts, out, doc);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace openbook

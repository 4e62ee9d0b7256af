// epgdom: enhanced power graphs of finite groups and their exact
// (total) domination numbers.

#include "epgdom/error.hpp"
#include "epgdom/harness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace epgdom;

namespace
{
    constexpr int exit_input_error = 2;
    constexpr int exit_resource_limit = 3;

    auto write_file(const std::string & path, const std::string & content) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Error(ErrorCode::Io, "cannot write '" + path + "'");
        out << content;
        if (! out)
            throw Error(ErrorCode::Io, "write to '" + path + "' failed");
    }

    auto load_group(const std::string & spec) -> FiniteGroup { return construct_group(parse_group_spec(spec)); }

    auto run_info(const std::string & spec) -> int
    {
        auto group = load_group(spec);
        std::cout << "group: " << group.provenance().label << "\n"
                  << "order: " << group.order() << "\n"
                  << "associativity: " << to_string(group.provenance().associativity) << "\n"
                  << "abelian: " << (group.is_abelian() ? "yes" : "no") << "\n"
                  << "center size: " << center(group).size() << "\n";
        try {
            auto profile = nilpotent_profile(group);
            std::cout << "nilpotent: yes\n";
            for (const auto & f : profile.factors) {
                std::cout << "  p=" << f.prime << " t=" << f.exponent << " " << to_string(f.classification)
                          << " r=" << f.r;
                if (f.k)
                    std::cout << " k=" << *f.k;
                std::cout << "\n";
            }
            std::cout << "m (non-cyclic, non-quaternion factors): " << profile.m << "\n"
                      << "cyclic part order: " << profile.n_cyclic << "\n";
        }
        catch (const NotNilpotentError & e) {
            std::cout << "nilpotent: no (" << e.prime() << "-elements not closed)\n";
        }
        return 0;
    }

    auto run_graph(const std::string & spec, const std::string & mode, const std::string & dot_path,
                   const std::string & json_path) -> int
    {
        auto group = load_group(spec);
        auto graph = build_epg(group, parse_epg_mode(mode));
        if (! dot_path.empty())
            write_file(dot_path, export_dot(graph));
        if (! json_path.empty())
            write_file(json_path, to_json(graph).dump(2) + "\n");
        if (dot_path.empty() && json_path.empty())
            std::cout << export_dot(graph);
        else
            std::cerr << graph.source() << " " << to_string(graph.mode()) << ": " << graph.graph().size()
                      << " vertices, " << graph.graph().edge_count() << " edges, "
                      << connected_components(graph.graph()).size() << " components\n";
        return 0;
    }

    auto run_dominate(const std::string & spec, const std::string & kind, const std::string & mode,
                      std::optional<std::uint64_t> budget) -> int
    {
        auto group = load_group(spec);
        auto graph = build_epg(group, parse_epg_mode(mode));
        SolverOptions options{budget ? *budget : node_budget_from_env()};
        auto cert = solve_minimum(graph.graph(), parse_domination_kind(kind), options);
        std::cout << to_json(cert, graph.graph()).dump(2) << "\n";
        return 0;
    }

    auto run_selftest(std::uint64_t seed, std::size_t trials, std::size_t max_n) -> int
    {
        auto summary = solver_selftest(seed, trials, max_n);
        for (const auto & [family, count] : summary.per_family)
            std::cout << family << ": " << count << " graphs\n";
        std::cout << summary.graphs << " graphs, " << summary.comparisons << " comparisons\n";
        if (! summary.passed()) {
            std::cout << "FAIL: " << describe(*summary.failure) << "\n";
            return 1;
        }
        std::cout << "PASS\n";
        return 0;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Enhanced power graphs of finite groups: construction, exact domination, closed-form checks"};
    app.require_subcommand(1);

    std::string spec, mode = "proper", kind = "dom", dot_path, json_path, catalog_path, out_path, format = "json";
    std::vector<std::string> specs;
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = 1;
    std::size_t trials = 500, max_n = 18;
    unsigned workers = 1;
    bool timing = false;

    auto info = app.add_subcommand("info", "Order, Sylow profile and classification of a group");
    info->add_option("spec", spec, "Group spec, e.g. E3^2xQ8")->required();

    auto graph = app.add_subcommand("graph", "Build an enhanced power graph");
    graph->add_option("spec", spec, "Group spec")->required();
    graph->add_option("--mode", mode, "full, star or proper")->check(CLI::IsMember({"full", "star", "proper"}));
    graph->add_option("--dot", dot_path, "Write DOT to this path");
    graph->add_option("--json", json_path, "Write adjacency JSON to this path");

    auto dominate = app.add_subcommand("dominate", "Exact minimum (total) dominating set");
    dominate->add_option("spec", spec, "Group spec")->required();
    dominate->add_option("--kind", kind, "dom or total")->check(CLI::IsMember({"dom", "total"}));
    dominate->add_option("--mode", mode, "full, star or proper")->check(CLI::IsMember({"full", "star", "proper"}));
    dominate->add_option("--budget", budget, "Search node budget (default: EPGDOM_BUDGET or 1e8)");

    auto verify = app.add_subcommand("verify", "Check the closed forms against the exact solver");
    verify->add_option("--catalog", catalog_path, "Catalog file: one spec per line, optional '#tags: a, b'");
    verify->add_option("--spec", specs, "Extra group spec (repeatable; '#tags:' suffix allowed)");
    verify->add_option("--out", out_path, "Report path")->required();
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--workers", workers, "Concurrent catalog rows")->check(CLI::Range(1u, 256u));
    verify->add_option("--seed", seed, "Seed for sampled associativity checks");
    verify->add_option("--budget", budget, "Search node budget per solve");
    verify->add_flag("--timing", timing, "Record wall time in the report metadata");

    auto selftest = app.add_subcommand("selftest", "Branch-and-bound versus subset enumeration on random graphs");
    selftest->add_option("--seed", seed, "Random seed");
    selftest->add_option("--trials", trials, "Number of random graphs");
    selftest->add_option("--max-n", max_n, "Maximum vertex count")->check(CLI::Range(1, 20));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        if (*info)
            return run_info(spec);
        if (*graph)
            return run_graph(spec, mode, dot_path, json_path);
        if (*dominate)
            return run_dominate(spec, kind, mode, budget);
        if (*selftest)
            return run_selftest(seed, trials, max_n);

        std::vector<CatalogEntry> catalog;
        if (! catalog_path.empty())
            catalog = load_catalog(catalog_path);
        for (const auto & s : specs)
            if (auto entry = parse_catalog_line(s))
                catalog.push_back(std::move(*entry));
        if (catalog_path.empty() && specs.empty())
            catalog = default_catalog();

        VerifyOptions options;
        options.budgets.node_budget = budget ? *budget : node_budget_from_env();
        options.seed = seed;
        options.workers = workers;
        options.include_timing = timing;
        auto report = run_verify(catalog, options);
        write_file(out_path, format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n");

        for (const auto & row : report.rows) {
            std::cout << row.spec << ": " << to_string(row.verdict);
            for (const auto & m : row.mismatches)
                std::cout << " | " << m;
            for (const auto & h : row.hard_failures)
                std::cout << " | HARD: " << h;
            if (row.unexpected)
                std::cout << " | UNEXPECTED";
            std::cout << "\n";
        }
        return exit_status(report);
    }
    catch (const ResourceLimitError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource_limit;
    }
    catch (const Error & e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_input_error;
    }
}

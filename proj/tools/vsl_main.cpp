#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "vsl/config.hpp"
#include "vsl/errors.hpp"
#include "vsl/problems.hpp"
#include "vsl/quadrature.hpp"
#include "vsl/runner.hpp"

namespace {

/// Maps domain failures onto the documented exit codes:
/// 0 ok, 2 config error, 3 solver failure.
int guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const vsl::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const vsl::SolverError& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral variational PDE benchmark runner"};
    app.require_subcommand(1);

    std::string run_config;
    CLI::App* run_cmd = app.add_subcommand(
        "run", "Execute a config; writes report.json, history.csv, solution.csv");
    run_cmd->add_option("config", run_config, "run config file")->required();

    std::string compare_config;
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "Run all enabled solvers side by side; adds compare.csv");
    compare_cmd->add_option("config", compare_config, "run config file")->required();

    int order = 0;
    CLI::App* quad_cmd = app.add_subcommand(
        "quadrature-table", "Print Gauss-Legendre nodes and weights on [0,1]");
    quad_cmd->add_option("--order", order, "number of quadrature nodes")->required();

    CLI::App* list_cmd = app.add_subcommand("list-problems", "List problem ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // command-line misuse is a config error
    }

    if (run_cmd->parsed()) return guarded([&] { vsl::runner::run(run_config); });
    if (compare_cmd->parsed())
        return guarded([&] { vsl::runner::compare(compare_config); });
    if (quad_cmd->parsed())
        return guarded([&] {
            if (order < 1) throw vsl::ConfigError("--order must be at least 1");
            const vsl::quad::Rule rule = vsl::quad::gauss_legendre(order);
            std::printf("node,weight\n");
            for (Eigen::Index q = 0; q < rule.nodes.size(); ++q)
                std::printf("%s,%s\n",
                            vsl::config::format_double(rule.nodes[q]).c_str(),
                            vsl::config::format_double(rule.weights[q]).c_str());
        });
    if (list_cmd->parsed())
        return guarded([&] {
            for (vsl::problems::Id id : vsl::problems::all_ids())
                std::printf("%s\n", vsl::problems::to_string(id).c_str());
        });
    return 0;
}

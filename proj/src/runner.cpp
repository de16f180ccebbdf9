#include "vsl/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>

#include "vsl/baselines.hpp"
#include "vsl/basis.hpp"
#include "vsl/energy.hpp"
#include "vsl/quadrature.hpp"

namespace vsl::runner {

namespace {

constexpr const char* kLibraryName = "vsl";
constexpr const char* kLibraryVersion = "0.1.0";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

problems::Problem problem_of(const config::RunConfig& cfg) {
    const bool has_nu = cfg.problem != problems::Id::Poisson1D &&
                        cfg.problem != problems::Id::Poisson2D;
    return problems::make_problem(
        cfg.problem, has_nu ? std::optional<double>(cfg.nu) : std::nullopt);
}

/// Keeps NaN sticky so diverged runs cannot hide behind a max of 0.
double acc_max(double current, double candidate) {
    if (std::isnan(current) || std::isnan(candidate))
        return std::numeric_limits<double>::quiet_NaN();
    return std::max(current, candidate);
}

Matrix test_grid(const config::RunConfig& cfg, const problems::Problem& prob) {
    const Vector axis = metrics::uniform_grid(cfg.grid_points);
    Matrix space;
    if (prob.space_dims() == 2)
        space = quad::tensor_grid({axis, axis});
    else
        space = axis;
    if (!prob.has_time()) return space;
    Matrix coords(space.rows(), space.cols() + 1);
    coords.leftCols(space.cols()) = space;
    coords.rightCols(1).setOnes(); // headline slice t = 1
    return coords;
}

std::vector<int> grid_shape_of(const config::RunConfig& cfg,
                               const problems::Problem& prob) {
    std::vector<int> shape{cfg.grid_points};
    if (prob.space_dims() == 2) shape.push_back(cfg.grid_points);
    return shape;
}

SolverResult run_spectral(const config::RunConfig& cfg, const problems::Problem& prob,
                          const Matrix& grid_coords, const Vector& u_exact) {
    SolverResult result;
    result.name = "vsl";
    result.is_vsl = true;

    const auto start = Clock::now();
    const energy::AssembledEnergy assembled =
        energy::assemble(prob, cfg.shape, cfg.objective, cfg.quad_orders);
    result.training = opt::train(assembled, cfg.objective, cfg.optimizer);
    result.wall_seconds = seconds_since(start);

    result.grid_values =
        basis::evaluate(cfg.shape, grid_coords, result.training.coefficients);
    result.error = metrics::relative_errors(result.grid_values, u_exact);
    result.error.grid_shape = grid_shape_of(cfg, prob);
    result.error.eval_time =
        prob.has_time() ? metrics::EvalTime::Final : metrics::EvalTime::None;

    if (prob.has_time()) {
        const Vector times = metrics::uniform_grid(cfg.time_samples);
        Matrix coords = grid_coords;
        double max_abs = 0.0;
        double max_exact = 0.0;
        for (Eigen::Index k = 0; k < times.size(); ++k) {
            coords.rightCols(1).setConstant(times[k]);
            const Vector u =
                basis::evaluate(cfg.shape, coords, result.training.coefficients);
            const Vector ue = problems::exact_solution(prob, coords);
            max_abs = acc_max(max_abs, (u - ue).lpNorm<Eigen::Infinity>());
            max_exact = acc_max(max_exact, ue.lpNorm<Eigen::Infinity>());
        }
        result.space_time_max_abs = max_abs;
        result.space_time_linf_rel = max_abs / max_exact;
    }
    return result;
}

SolverResult run_classical(const config::RunConfig& cfg, const problems::Problem& prob,
                           const Vector& u_exact) {
    SolverResult result;
    const auto start = Clock::now();
    baselines::NodalSolution sol;
    switch (prob.id) {
        case problems::Id::Poisson1D:
            result.name = "collocation";
            sol = baselines::poisson_collocation_1d(cfg.baseline_n);
            break;
        case problems::Id::Poisson2D:
            result.name = "collocation";
            sol = baselines::poisson_collocation_2d(cfg.baseline_n);
            break;
        case problems::Id::Heat1D:
            result.name = "crank_nicolson";
            sol = baselines::crank_nicolson_1d(cfg.baseline_n, cfg.baseline_steps, prob);
            break;
        case problems::Id::Heat2D:
            result.name = "crank_nicolson";
            sol = baselines::crank_nicolson_2d(cfg.baseline_n, cfg.baseline_steps, prob);
            break;
        case problems::Id::Burgers1D:
            result.name = "newton";
            sol = baselines::newton_burgers_1d(cfg.baseline_n, prob);
            break;
        case problems::Id::Burgers2D:
            result.name = "newton";
            sol = baselines::newton_burgers_2d(cfg.baseline_n, prob);
            break;
    }
    result.wall_seconds = seconds_since(start);
    result.iterations = sol.iterations;

    const Vector axis = metrics::uniform_grid(cfg.grid_points);
    if (prob.space_dims() == 2)
        result.grid_values = baselines::barycentric_eval_2d(sol.axes[0], sol.axes[1],
                                                            sol.values, axis, axis);
    else
        result.grid_values = baselines::barycentric_eval(sol.axes[0], sol.values, axis);
    result.error = metrics::relative_errors(result.grid_values, u_exact);
    result.error.grid_shape = grid_shape_of(cfg, prob);
    result.error.eval_time =
        prob.has_time() ? metrics::EvalTime::Final : metrics::EvalTime::None;
    return result;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return config::format_double(v);
}

std::ofstream open_output(const std::string& dir, const std::string& file) {
    std::ofstream out(std::filesystem::path(dir) / file);
    if (!out) throw ConfigError("cannot write output file: " + dir + "/" + file);
    return out;
}

const char* eval_time_name(metrics::EvalTime t) {
    switch (t) {
        case metrics::EvalTime::Final: return "final";
        case metrics::EvalTime::SpaceTimeMax: return "space_time_max";
        case metrics::EvalTime::None: break;
    }
    return "none";
}

} // namespace

RunArtifacts execute(const config::RunConfig& cfg) {
    const problems::Problem prob = problem_of(cfg);
    RunArtifacts art;
    art.cfg = cfg;
    art.grid_coords = test_grid(cfg, prob);
    art.u_exact = problems::exact_solution(prob, art.grid_coords);
    if (cfg.run_vsl)
        art.solvers.push_back(run_spectral(cfg, prob, art.grid_coords, art.u_exact));
    if (cfg.run_baseline)
        art.solvers.push_back(run_classical(cfg, prob, art.u_exact));
    return art;
}

std::string resolve_output_dir(const config::RunConfig& cfg) {
    if (const char* env = std::getenv("VSL_OUTPUT_DIR"); env != nullptr && *env != '\0')
        return env;
    return cfg.output_dir;
}

void write_report(const RunArtifacts& art, const std::string& dir) {
    std::ofstream out = open_output(dir, "report.json");
    out << "{\n";
    out << "  \"library\": {\n";
    out << "    \"name\": \"" << kLibraryName << "\",\n";
    out << "    \"version\": \"" << kLibraryVersion << "\"\n";
    out << "  },\n";

    out << "  \"config\": {\n";
    const auto pairs = config::echo_pairs(art.cfg);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out << "    \"" << json_escape(pairs[i].first) << "\": \""
            << json_escape(pairs[i].second) << "\"" << (i + 1 < pairs.size() ? "," : "")
            << "\n";
    out << "  },\n";

    out << "  \"solvers\": [\n";
    for (std::size_t i = 0; i < art.solvers.size(); ++i) {
        const SolverResult& s = art.solvers[i];
        out << "    {\n";
        out << "      \"name\": \"" << s.name << "\",\n";
        out << "      \"l2_rel\": " << json_number(s.error.l2_rel) << ",\n";
        out << "      \"linf_rel\": " << json_number(s.error.linf_rel) << ",\n";
        out << "      \"max_abs\": " << json_number(s.error.max_abs) << ",\n";
        out << "      \"grid_shape\": [";
        for (std::size_t g = 0; g < s.error.grid_shape.size(); ++g)
            out << s.error.grid_shape[g]
                << (g + 1 < s.error.grid_shape.size() ? ", " : "");
        out << "],\n";
        out << "      \"eval_time\": \"" << eval_time_name(s.error.eval_time) << "\"";
        if (s.is_vsl) {
            if (art.cfg.shape.has_time()) {
                out << ",\n      \"space_time_max_abs\": "
                    << json_number(s.space_time_max_abs);
                out << ",\n      \"space_time_linf_rel\": "
                    << json_number(s.space_time_linf_rel);
            }
            out << ",\n      \"epochs\": " << s.training.history.size();
            out << ",\n      \"stop_reason\": \"" << opt::to_string(s.training.reason)
                << "\"";
        } else {
            out << ",\n      \"iterations\": " << s.iterations;
        }
        out << "\n    }" << (i + 1 < art.solvers.size() ? "," : "") << "\n";
    }
    out << "  ],\n";

    // Timings last so determinism checks can diff everything above this block.
    out << "  \"timings\": {\n";
    for (std::size_t i = 0; i < art.solvers.size(); ++i)
        out << "    \"" << art.solvers[i].name
            << "_seconds\": " << json_number(art.solvers[i].wall_seconds)
            << (i + 1 < art.solvers.size() ? "," : "") << "\n";
    out << "  }\n";
    out << "}\n";
}

void write_history(const RunArtifacts& art, const std::string& dir) {
    const SolverResult* vsl = nullptr;
    for (const SolverResult& s : art.solvers)
        if (s.is_vsl) vsl = &s;
    if (vsl == nullptr) return;
    std::ofstream out = open_output(dir, "history.csv");
    out << "epoch,lr,objective,energy,ic_loss,diag_residual,grad_norm\n";
    for (const opt::EpochRecord& r : vsl->training.history)
        out << r.epoch << ',' << config::format_double(r.lr) << ','
            << config::format_double(r.objective) << ','
            << config::format_double(r.energy) << ','
            << config::format_double(r.ic_loss) << ','
            << config::format_double(r.diag_residual) << ','
            << config::format_double(r.grad_norm) << '\n';
}

void write_solution(const RunArtifacts& art, const std::string& dir) {
    std::ofstream out = open_output(dir, "solution.csv");
    const problems::Problem prob = problem_of(art.cfg);
    std::vector<std::string> coord_names{"x"};
    if (prob.space_dims() == 2) coord_names.push_back("y");
    if (prob.has_time()) coord_names.push_back("t");

    for (const std::string& n : coord_names) out << n << ',';
    out << "u_exact";
    for (const SolverResult& s : art.solvers)
        out << ",u_" << (s.is_vsl ? "vsl" : "baseline");
    for (const SolverResult& s : art.solvers)
        out << ",abs_err_" << (s.is_vsl ? "vsl" : "baseline");
    out << '\n';

    for (Eigen::Index row = 0; row < art.grid_coords.rows(); ++row) {
        for (Eigen::Index c = 0; c < art.grid_coords.cols(); ++c)
            out << config::format_double(art.grid_coords(row, c)) << ',';
        out << config::format_double(art.u_exact[row]);
        for (const SolverResult& s : art.solvers)
            out << ',' << config::format_double(s.grid_values[row]);
        for (const SolverResult& s : art.solvers)
            out << ','
                << config::format_double(
                       std::abs(s.grid_values[row] - art.u_exact[row]));
        out << '\n';
    }
}

void write_compare(const RunArtifacts& art, const std::string& dir) {
    std::ofstream out = open_output(dir, "compare.csv");
    out << "solver,l2_rel,linf_rel,wall_seconds\n";
    for (const SolverResult& s : art.solvers)
        out << s.name << ',' << config::format_double(s.error.l2_rel) << ','
            << config::format_double(s.error.linf_rel) << ','
            << config::format_double(s.wall_seconds) << '\n';
}

namespace {

RunArtifacts execute_to_dir(const std::string& config_path, std::string& dir) {
    const config::RunConfig cfg = config::parse_file(config_path);
    dir = resolve_output_dir(cfg);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + dir);
    RunArtifacts art = execute(cfg);
    std::ofstream resolved = open_output(dir, "resolved.cfg");
    resolved << config::echo(cfg);
    write_report(art, dir);
    write_history(art, dir);
    write_solution(art, dir);
    return art;
}

} // namespace

void run(const std::string& config_path) {
    std::string dir;
    (void)execute_to_dir(config_path, dir);
}

void compare(const std::string& config_path) {
    const config::RunConfig cfg = config::parse_file(config_path);
    if (!(cfg.run_vsl && cfg.run_baseline))
        throw ConfigError("compare needs at least two solvers: set solvers.vsl and "
                          "solvers.baseline to true");
    std::string dir;
    const RunArtifacts art = execute_to_dir(config_path, dir);
    write_compare(art, dir);
}

} // namespace vsl::runner

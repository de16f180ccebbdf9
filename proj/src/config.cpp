#include "vsl/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace vsl::config {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

using Entries = std::map<std::string, std::string>;

Entries tokenize(const std::string& text) {
    Entries entries;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": empty key or value");
        if (!entries.emplace(key, value).second)
            throw ConfigError("duplicate config key '" + key + "'");
    }
    return entries;
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const double v = std::stod(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        if (std::isnan(v)) throw std::invalid_argument("nan");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected a real number, got '" +
                          value + "'");
    }
}

int to_int(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const int v = std::stoi(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected an integer, got '" +
                          value + "'");
    }
}

unsigned long long to_seed(const std::string& key, const std::string& value) {
    try {
        std::size_t idx = 0;
        const unsigned long long v = std::stoull(value, &idx);
        if (idx != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key +
                          "': expected a non-negative integer, got '" + value + "'");
    }
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError("config key '" + key + "': expected true or false, got '" +
                      value + "'");
}

const std::vector<std::string>& all_keys() {
    static const std::vector<std::string> keys = {
        "problem",          "nu",
        "basis.nx",         "basis.ny",
        "basis.nt",         "quad.x",
        "quad.y",           "quad.t",
        "objective.form",   "objective.lambda_ic",
        "objective.lambda_reg", "objective.ic_weighting",
        "objective.ic_nodes",   "diagnostic.nodes",
        "optimizer.eta0",   "optimizer.alpha",
        "optimizer.t0",     "optimizer.t_mul",
        "optimizer.m_mul",  "optimizer.beta1",
        "optimizer.beta2",  "optimizer.epsilon",
        "optimizer.clip_norm", "optimizer.max_epochs",
        "optimizer.stop_tol",  "optimizer.seed",
        "optimizer.init",   "optimizer.init_scale",
        "solvers.vsl",      "solvers.baseline",
        "baseline.n",       "baseline.steps",
        "grid.points",      "grid.time_samples",
        "output.dir"};
    return keys;
}

bool key_applicable(const std::string& key, const problems::Problem& prob) {
    const bool two_d = prob.space_dims() == 2;
    const bool timed = prob.has_time();
    const bool has_nu = prob.id != problems::Id::Poisson1D &&
                        prob.id != problems::Id::Poisson2D;
    if (key == "nu") return has_nu;
    if (key == "basis.ny" || key == "quad.y") return two_d;
    if (key == "basis.nt" || key == "quad.t" || key == "objective.lambda_ic" ||
        key == "objective.ic_weighting" || key == "objective.ic_nodes" ||
        key == "baseline.steps" || key == "grid.time_samples")
        return timed;
    return true;
}

int default_baseline_n(problems::Id id) {
    switch (id) {
        case problems::Id::Poisson2D: return 25;
        case problems::Id::Burgers2D: return 24;
        default: return 32;
    }
}

void require_positive(const std::string& key, double v) {
    if (!(v > 0.0)) throw ConfigError("config key '" + key + "' must be positive");
}

void require_at_least(const std::string& key, int v, int bound) {
    if (v < bound)
        throw ConfigError("config key '" + key + "' must be at least " +
                          std::to_string(bound));
}

} // namespace

RunConfig parse_text(const std::string& text) {
    const Entries entries = tokenize(text);

    const auto problem_it = entries.find("problem");
    if (problem_it == entries.end())
        throw ConfigError("config key 'problem' is required");
    const auto id = problems::parse_id(problem_it->second);
    if (!id)
        throw ConfigError("config key 'problem': unknown problem '" +
                          problem_it->second + "'");

    RunConfig cfg;
    cfg.problem = *id;
    const problems::Problem traits = problems::make_problem(*id);

    for (const auto& [key, value] : entries) {
        (void)value;
        if (std::find(all_keys().begin(), all_keys().end(), key) == all_keys().end())
            throw ConfigError("unknown config key '" + key + "'");
        if (!key_applicable(key, traits))
            throw ConfigError("config key '" + key + "' is not valid for problem '" +
                              problems::to_string(traits.id) + "'");
    }

    auto lookup = [&](const char* key) -> const std::string* {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };
    auto get_double = [&](const char* key, double fallback) {
        const std::string* v = lookup(key);
        return v ? to_double(key, *v) : fallback;
    };
    auto get_int = [&](const char* key, int fallback) {
        const std::string* v = lookup(key);
        return v ? to_int(key, *v) : fallback;
    };
    auto get_bool = [&](const char* key, bool fallback) {
        const std::string* v = lookup(key);
        return v ? to_bool(key, *v) : fallback;
    };

    const bool two_d = traits.space_dims() == 2;
    const bool timed = traits.has_time();

    std::optional<double> nu;
    if (const std::string* v = lookup("nu")) nu = to_double("nu", *v);
    if (nu && !(*nu > 0.0)) throw ConfigError("config key 'nu' must be positive");
    cfg.nu = problems::make_problem(cfg.problem, nu).nu;

    cfg.run_vsl = get_bool("solvers.vsl", true);
    cfg.run_baseline = get_bool("solvers.baseline", false);
    if (!cfg.run_vsl && !cfg.run_baseline)
        throw ConfigError("config selects no solver: enable solvers.vsl and/or "
                          "solvers.baseline");

    cfg.shape.nx = get_int("basis.nx", 0);
    cfg.shape.ny = two_d ? get_int("basis.ny", 0) : 0;
    cfg.shape.nt = timed ? get_int("basis.nt", 0) : 0;
    if (cfg.run_vsl) {
        if (cfg.shape.nx <= 0)
            throw ConfigError("config key 'basis.nx' is required to run the "
                              "spectral solver");
        if (two_d && cfg.shape.ny <= 0)
            throw ConfigError("config key 'basis.ny' is required for 2D problems");
        if (timed && cfg.shape.nt <= 0)
            throw ConfigError("config key 'basis.nt' is required for "
                              "time-dependent problems");
    }
    if (lookup("basis.nx")) require_at_least("basis.nx", cfg.shape.nx, 1);
    if (lookup("basis.ny")) require_at_least("basis.ny", cfg.shape.ny, 1);
    if (lookup("basis.nt")) require_at_least("basis.nt", cfg.shape.nt, 1);

    if (cfg.shape.nx > 0) {
        cfg.quad_orders.push_back(get_int("quad.x", cfg.shape.nx + 8));
        if (two_d) cfg.quad_orders.push_back(get_int("quad.y", cfg.shape.ny + 8));
        if (timed) cfg.quad_orders.push_back(get_int("quad.t", cfg.shape.nt + 8));
        for (std::size_t i = 0; i < cfg.quad_orders.size(); ++i)
            if (cfg.quad_orders[i] < 1)
                throw ConfigError("quadrature orders must be at least 1");
    } else if (lookup("quad.x") || lookup("quad.y") || lookup("quad.t")) {
        throw ConfigError("quadrature keys require basis orders to be set");
    }

    if (const std::string* v = lookup("objective.form")) {
        if (*v == "strong")
            cfg.objective.form = energy::Form::Strong;
        else if (*v == "weak")
            cfg.objective.form = energy::Form::Weak;
        else
            throw ConfigError("config key 'objective.form': expected strong or "
                              "weak, got '" + *v + "'");
    }
    cfg.objective.lambda_ic = timed ? get_double("objective.lambda_ic", 10.0) : 0.0;
    if (cfg.objective.lambda_ic < 0.0)
        throw ConfigError("config key 'objective.lambda_ic' must be non-negative");
    cfg.objective.lambda_reg = get_double("objective.lambda_reg", 1e-8);
    if (cfg.objective.lambda_reg < 0.0)
        throw ConfigError("config key 'objective.lambda_reg' must be non-negative");
    if (const std::string* v = lookup("objective.ic_weighting")) {
        if (*v == "mean")
            cfg.objective.ic_weighting = energy::IcWeighting::MeanOverNodes;
        else if (*v == "quadrature")
            cfg.objective.ic_weighting = energy::IcWeighting::QuadratureWeights;
        else
            throw ConfigError("config key 'objective.ic_weighting': expected mean "
                              "or quadrature, got '" + *v + "'");
    }
    cfg.objective.ic_nodes_per_axis = get_int("objective.ic_nodes", 32);
    require_at_least("objective.ic_nodes", cfg.objective.ic_nodes_per_axis, 1);
    cfg.objective.diag_nodes_per_axis = get_int("diagnostic.nodes", 32);
    require_at_least("diagnostic.nodes", cfg.objective.diag_nodes_per_axis, 1);

    cfg.optimizer.schedule.eta0 = get_double("optimizer.eta0", 1e-3);
    require_positive("optimizer.eta0", cfg.optimizer.schedule.eta0);
    cfg.optimizer.schedule.alpha = get_double("optimizer.alpha", 0.01);
    if (cfg.optimizer.schedule.alpha < 0.0 || cfg.optimizer.schedule.alpha >= 1.0)
        throw ConfigError("config key 'optimizer.alpha' must lie in [0, 1)");
    cfg.optimizer.schedule.t0 = get_int("optimizer.t0", 400);
    require_at_least("optimizer.t0", cfg.optimizer.schedule.t0, 1);
    cfg.optimizer.schedule.t_mul = get_double("optimizer.t_mul", 2.0);
    require_positive("optimizer.t_mul", cfg.optimizer.schedule.t_mul);
    cfg.optimizer.schedule.m_mul = get_double("optimizer.m_mul", 1.0);
    require_positive("optimizer.m_mul", cfg.optimizer.schedule.m_mul);
    cfg.optimizer.beta1 = get_double("optimizer.beta1", 0.9);
    cfg.optimizer.beta2 = get_double("optimizer.beta2", 0.999);
    if (cfg.optimizer.beta1 <= 0.0 || cfg.optimizer.beta1 >= 1.0)
        throw ConfigError("config key 'optimizer.beta1' must lie in (0, 1)");
    if (cfg.optimizer.beta2 <= 0.0 || cfg.optimizer.beta2 >= 1.0)
        throw ConfigError("config key 'optimizer.beta2' must lie in (0, 1)");
    cfg.optimizer.epsilon = get_double("optimizer.epsilon", 1e-8);
    require_positive("optimizer.epsilon", cfg.optimizer.epsilon);
    cfg.optimizer.clip_norm = get_double("optimizer.clip_norm", 100.0);
    require_positive("optimizer.clip_norm", cfg.optimizer.clip_norm);
    cfg.optimizer.max_epochs = get_int("optimizer.max_epochs", 3000);
    require_at_least("optimizer.max_epochs", cfg.optimizer.max_epochs, 1);
    cfg.optimizer.stop_tol = get_double("optimizer.stop_tol", 1e-10);
    if (cfg.optimizer.stop_tol < 0.0)
        throw ConfigError("config key 'optimizer.stop_tol' must be non-negative");
    if (const std::string* v = lookup("optimizer.seed"))
        cfg.optimizer.seed = to_seed("optimizer.seed", *v);
    if (const std::string* v = lookup("optimizer.init")) {
        if (*v == "zero")
            cfg.optimizer.init = opt::InitKind::Zero;
        else if (*v == "uniform")
            cfg.optimizer.init = opt::InitKind::Uniform;
        else
            throw ConfigError("config key 'optimizer.init': expected zero or "
                              "uniform, got '" + *v + "'");
    }
    cfg.optimizer.init_scale = get_double("optimizer.init_scale", 0.1);
    require_positive("optimizer.init_scale", cfg.optimizer.init_scale);

    cfg.baseline_n = get_int("baseline.n", default_baseline_n(cfg.problem));
    const bool burgers = !traits.is_linear();
    require_at_least("baseline.n", cfg.baseline_n, burgers ? 8 : 4);
    if (timed) {
        cfg.baseline_steps = get_int("baseline.steps", 64);
        require_at_least("baseline.steps", cfg.baseline_steps, 1);
    }

    cfg.grid_points = get_int("grid.points", two_d ? 64 : 400);
    require_at_least("grid.points", cfg.grid_points, 2);
    if (timed) {
        cfg.time_samples = get_int("grid.time_samples", two_d ? 21 : 101);
        require_at_least("grid.time_samples", cfg.time_samples, 2);
    }

    if (const std::string* v = lookup("output.dir")) cfg.output_dir = *v;
    return cfg;
}

RunConfig parse_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw ConfigError("cannot read config file: " + path);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return parse_text(buffer.str());
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::pair<std::string, std::string>> echo_pairs(const RunConfig& cfg) {
    const problems::Problem traits = problems::make_problem(cfg.problem);
    const bool two_d = traits.space_dims() == 2;
    const bool timed = traits.has_time();
    const bool has_nu = traits.id != problems::Id::Poisson1D &&
                        traits.id != problems::Id::Poisson2D;

    std::vector<std::pair<std::string, std::string>> out;
    auto add = [&out](const std::string& k, const std::string& v) {
        out.emplace_back(k, v);
    };
    add("problem", problems::to_string(cfg.problem));
    if (has_nu) add("nu", format_double(cfg.nu));
    if (cfg.shape.nx > 0) {
        add("basis.nx", std::to_string(cfg.shape.nx));
        if (two_d) add("basis.ny", std::to_string(cfg.shape.ny));
        if (timed) add("basis.nt", std::to_string(cfg.shape.nt));
        add("quad.x", std::to_string(cfg.quad_orders.at(0)));
        if (two_d) add("quad.y", std::to_string(cfg.quad_orders.at(1)));
        if (timed) add("quad.t", std::to_string(cfg.quad_orders.back()));
    }
    add("objective.form",
        cfg.objective.form == energy::Form::Strong ? "strong" : "weak");
    if (timed) add("objective.lambda_ic", format_double(cfg.objective.lambda_ic));
    add("objective.lambda_reg", format_double(cfg.objective.lambda_reg));
    if (timed) {
        add("objective.ic_weighting",
            cfg.objective.ic_weighting == energy::IcWeighting::MeanOverNodes
                ? "mean"
                : "quadrature");
        add("objective.ic_nodes", std::to_string(cfg.objective.ic_nodes_per_axis));
    }
    add("diagnostic.nodes", std::to_string(cfg.objective.diag_nodes_per_axis));
    add("optimizer.eta0", format_double(cfg.optimizer.schedule.eta0));
    add("optimizer.alpha", format_double(cfg.optimizer.schedule.alpha));
    add("optimizer.t0", std::to_string(cfg.optimizer.schedule.t0));
    add("optimizer.t_mul", format_double(cfg.optimizer.schedule.t_mul));
    add("optimizer.m_mul", format_double(cfg.optimizer.schedule.m_mul));
    add("optimizer.beta1", format_double(cfg.optimizer.beta1));
    add("optimizer.beta2", format_double(cfg.optimizer.beta2));
    add("optimizer.epsilon", format_double(cfg.optimizer.epsilon));
    add("optimizer.clip_norm", format_double(cfg.optimizer.clip_norm));
    add("optimizer.max_epochs", std::to_string(cfg.optimizer.max_epochs));
    add("optimizer.stop_tol", format_double(cfg.optimizer.stop_tol));
    add("optimizer.seed", std::to_string(cfg.optimizer.seed));
    add("optimizer.init",
        cfg.optimizer.init == opt::InitKind::Zero ? "zero" : "uniform");
    add("optimizer.init_scale", format_double(cfg.optimizer.init_scale));
    add("solvers.vsl", cfg.run_vsl ? "true" : "false");
    add("solvers.baseline", cfg.run_baseline ? "true" : "false");
    add("baseline.n", std::to_string(cfg.baseline_n));
    if (timed) add("baseline.steps", std::to_string(cfg.baseline_steps));
    add("grid.points", std::to_string(cfg.grid_points));
    if (timed) add("grid.time_samples", std::to_string(cfg.time_samples));
    add("output.dir", cfg.output_dir);
    return out;
}

std::string echo(const RunConfig& cfg) {
    std::string out;
    for (const auto& [key, value] : echo_pairs(cfg)) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    }
    return out;
}

} // namespace vsl::config

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "burgersfem/config.hpp"
#include "burgersfem/csv.hpp"
#include "burgersfem/diagnostics.hpp"
#include "burgersfem/errors.hpp"
#include "burgersfem/reporting.hpp"

namespace fs = std::filesystem;
using namespace burgersfem;

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitSolverError = 3;

const std::set<std::string> kProblemKeys = {
    "dimension", "nu",      "w_d",           "c0",
    "c1",        "c2",      "controlled",    "initial_condition",
    "theta",     "n",       "M",             "T",
    "newton_tol", "newton_max_iter", "output_dir"};

KeyValueConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    KeyValueConfig config = KeyValueConfig::from_file(path);
    for (const std::string& item : overrides) config.apply_override(item);
    return config;
}

fs::path prepare_run_dir(const KeyValueConfig& config, const std::string& subcommand,
                         const std::string& run_name) {
    const fs::path dir = fs::path(config.get_string("output_dir", "out")) / subcommand / run_name;
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("failed to write " + path.string());
}

Operators build_ops(const ProblemSpec& problem, int n) {
    return problem.dim == Dim::One ? Operators::build(build_uniform_1d(n))
                                   : Operators::build(build_structured_2d(n));
}

int cmd_simulate(const KeyValueConfig& config, const std::string& run_name) {
    std::set<std::string> allowed = kProblemKeys;
    allowed.insert("sample_times");
    allowed.insert("dump_mesh");
    config.check_known_keys(allowed);

    const ProblemSpec problem = problem_from_config(config);
    const ThetaConfig theta = theta_from_config(config);
    const Operators ops = build_ops(problem, mesh_resolution_from_config(config));
    const fs::path dir = prepare_run_dir(config, "simulate", run_name);

    const StateTrajectory trajectory = run_simulation(problem, ops, theta);

    std::vector<double> sample_times = {0.0, theta.k * theta.steps};
    if (config.has("sample_times")) sample_times = config.get_double_list("sample_times");

    write_file(dir / "norms.csv", norms_csv(ops, trajectory));
    if (problem.controlled)
        write_file(dir / "controls.csv", controls_csv(ops, trajectory, problem.params));
    write_file(dir / "states.csv", states_csv(trajectory, sample_times));
    write_file(dir / "report.csv", report_csv(trajectory));
    if (config.get_bool("dump_mesh", false)) {
        std::ofstream mesh_out(dir / "mesh.txt", std::ios::binary);
        if (ops.dim() == Dim::One)
            write_mesh(mesh_out, ops.mesh_1d());
        else
            write_mesh(mesh_out, ops.mesh_2d());
    }

    if (!trajectory.completed()) {
        std::cerr << "solver failure at step " << trajectory.failure->step << ": "
                  << trajectory.failure->message << '\n';
        return kExitSolverError;
    }
    return 0;
}

// table -> (axis, what to emit)
struct TableRequest {
    std::string name;   // "1".."5" or "2d"
    StudyAxis axis;
};

TableRequest parse_table_token(const std::string& token) {
    if (token == "1" || token == "2") return {token, StudyAxis::Spatial};
    if (token == "3" || token == "4" || token == "5") return {token, StudyAxis::Temporal};
    if (token == "2d") return {token, StudyAxis::Spatial};
    throw ConfigError("tables: unknown table '" + token + "' (expected 1..5 or 2d)");
}

int cmd_convergence(const KeyValueConfig& config, const std::string& run_name) {
    std::set<std::string> allowed = kProblemKeys;
    allowed.insert("tables");
    allowed.insert("resolutions");
    allowed.insert("ref_factor");
    config.check_known_keys(allowed);

    std::vector<TableRequest> requests;
    for (const std::string& token : [&] {
             std::vector<std::string> tokens;
             std::stringstream stream(config.require_string("tables"));
             std::string item;
             while (std::getline(stream, item, ',')) tokens.push_back(item);
             return tokens;
         }())
        requests.push_back(parse_table_token(token));
    if (requests.empty()) throw ConfigError("tables: empty request");
    for (const TableRequest& request : requests)
        if (request.axis != requests.front().axis)
            throw ConfigError("tables: one invocation covers a single study axis");

    const StudyAxis axis = requests.front().axis;
    const StudyPlan plan = plan_from_config(config, axis);
    for (const TableRequest& request : requests) {
        const bool wants_2d = request.name == "2d";
        if (wants_2d != (plan.problem.dim == Dim::Two))
            throw ConfigError("tables: table " + request.name + " does not match dimension");
    }

    const StudyResult result =
        axis == StudyAxis::Spatial ? spatial_study(plan) : temporal_study(plan);
    const fs::path dir = prepare_run_dir(config, "convergence", run_name);

    for (const TableRequest& request : requests) {
        if (request.name == "1") {
            write_file(dir / "table1.csv", table_csv(result.state, "l2", "linf"));
        } else if (request.name == "2") {
            write_file(dir / "table2.csv", table_csv(result.control, "v0", "v1"));
        } else if (request.name == "3") {
            write_file(dir / "table3.csv", table_csv(result.state, "l2", "linf"));
        } else if (request.name == "4") {
            std::vector<ConvergenceRow> rows = result.control;
            for (ConvergenceRow& row : rows) {
                row.err_b = 0.0;
                row.oc_b = 0.0;
            }
            write_file(dir / "table4.csv", table_csv(rows, "v0", ""));
        } else if (request.name == "5") {
            std::vector<ConvergenceRow> rows = result.control;
            for (ConvergenceRow& row : rows) {
                row.err_a = row.err_b;
                row.oc_a = row.oc_b;
                row.err_b = 0.0;
                row.oc_b = 0.0;
            }
            write_file(dir / "table5.csv", table_csv(rows, "v1", ""));
        } else {  // 2d
            write_file(dir / "table2d_state.csv", table_csv(result.state, "l2", "linf"));
            std::vector<ConvergenceRow> rows = result.control;
            for (ConvergenceRow& row : rows) {
                row.err_b = 0.0;
                row.oc_b = 0.0;
            }
            write_file(dir / "table2d_control.csv", table_csv(rows, "v2", ""));
        }
    }

    if (!result.failed_rows.empty()) {
        for (const auto& [resolution, message] : result.failed_rows)
            std::cerr << "study row " << resolution << " failed: " << message << '\n';
        return kExitSolverError;
    }
    return 0;
}

int cmd_decay(const KeyValueConfig& config, const std::string& run_name) {
    std::set<std::string> allowed = kProblemKeys;
    allowed.insert("sweep");
    allowed.insert("sweep_values");
    config.check_known_keys(allowed);

    const std::string sweep = config.require_string("sweep");
    if (sweep != "gains" && sweep != "nu" && sweep != "theta")
        throw ConfigError("sweep must be one of gains, nu, theta");
    const std::vector<double> values = config.get_double_list("sweep_values");
    if (values.empty()) throw ConfigError("sweep_values: empty list");

    const ThetaConfig base_theta = theta_from_config(config);
    const int n = mesh_resolution_from_config(config);

    std::vector<std::pair<double, double>> rows;
    for (double value : values) {
        KeyValueConfig variant = config;
        if (sweep == "gains") {
            variant.apply_override("c0=" + format_full(value));
            variant.apply_override("c1=" + format_full(value));
            variant.apply_override("c2=" + format_full(value));
        } else if (sweep == "nu") {
            variant.apply_override("nu=" + format_full(value));
        } else {
            variant.apply_override("theta=" + format_full(value));
        }
        const ProblemSpec problem = problem_from_config(variant);
        ThetaConfig theta = base_theta;
        if (sweep == "theta") theta.theta = value;
        const StateTrajectory trajectory = run_simulation(problem, build_ops(problem, n), theta);
        if (!trajectory.completed()) {
            std::cerr << "sweep value " << value << " failed at step "
                      << trajectory.failure->step << '\n';
            return kExitSolverError;
        }
        rows.emplace_back(value, fit_decay_rate(trajectory).alpha_hat);
    }

    if (sweep == "gains" || sweep == "nu") {
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            if (rows[i + 1].second < 0.95 * rows[i].second)
                std::cerr << "note: alpha_hat not monotone between " << rows[i].first << " and "
                          << rows[i + 1].first << '\n';
    }

    const fs::path dir = prepare_run_dir(config, "decay", run_name);
    write_file(dir / "decay.csv", decay_csv(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-element theta-scheme solver for the viscous Burgers' equation "
                 "with nonlinear Neumann boundary feedback"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string run_name = "run";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file")->required();
        sub->add_option("--set", overrides, "override a config key (key=value), repeatable");
        sub->add_option("--name", run_name, "run directory name under the output root");
    };
    CLI::App* simulate = app.add_subcommand("simulate", "run one trajectory, write CSV artifacts");
    CLI::App* convergence =
        app.add_subcommand("convergence", "refinement study against a refined-mesh oracle");
    CLI::App* decay = app.add_subcommand("decay", "decay-rate sweep over gains, nu or theta");
    add_common(simulate);
    add_common(convergence);
    add_common(decay);

    CLI11_PARSE(app, argc, argv);

    try {
        const KeyValueConfig config = load_config(config_path, overrides);
        if (simulate->parsed()) return cmd_simulate(config, run_name);
        if (convergence->parsed()) return cmd_convergence(config, run_name);
        return cmd_decay(config, run_name);
    } catch (const ConfigError& error) {
        std::cerr << "config error: " << error.what() << '\n';
        return kExitConfigError;
    } catch (const NonPositiveNorm& error) {
        std::cerr << "decay fit error: " << error.what() << '\n';
        return kExitSolverError;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
}

#include "burgersfem/stepper.hpp"

#include <cmath>
#include <stdexcept>

#include "burgersfem/errors.hpp"

namespace burgersfem {

namespace {

void check_state(const Eigen::VectorXd& w, const Operators& ops, const char* where) {
    if (w.size() != ops.nodes()) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

// Newton on F(W_next) = 0 with a reusable symbolic factorization.
class StepSolver {
  public:
    StepSolver(const Operators& ops, const ProblemSpec& problem, const ThetaConfig& config)
        : ops_(ops), problem_(problem), config_(config) {}

    std::pair<Eigen::VectorXd, StepReport> solve(const Eigen::VectorXd& w_n, int step_index) {
        StepReport report;
        report.step = step_index;
        Eigen::VectorXd w = w_n;  // initial guess: previous time level
        for (int it = 0;; ++it) {
            auto [residual, jacobian] = assemble(w, w_n);
            const double norm = residual.lpNorm<Eigen::Infinity>();
            report.residual_history.push_back(norm);
            report.final_residual_norm = norm;
            report.newton_iterations = it;
            if (norm <= config_.newton_tol) {
                report.converged = true;
                return {w, report};
            }
            if (it == config_.newton_max_iter)
                throw NonConvergence(step_index, report.residual_history,
                                     "Newton did not reach tolerance " +
                                         std::to_string(config_.newton_tol) + " in " +
                                         std::to_string(config_.newton_max_iter) + " iterations");
            if (!analyzed_) {
                solver_.analyze(jacobian);
                analyzed_ = true;
            }
            solver_.factorize(jacobian);
            w -= solver_.solve(residual);
        }
    }

  private:
    std::pair<Eigen::VectorXd, SparseOperator> assemble(const Eigen::VectorXd& w_next,
                                                        const Eigen::VectorXd& w_n) const {
        const double theta = config_.theta;
        const Eigen::VectorXd w_theta = theta * w_next + (1.0 - theta) * w_n;
        const NonlinearTerm spatial = ops_.spatial(w_theta, problem_);
        Eigen::VectorXd residual =
            ops_.mass.apply((w_next - w_n) / config_.k) + spatial.residual;
        SparseOperator jacobian = ops_.mass;
        jacobian.scale(1.0 / config_.k);
        jacobian.add_scaled(spatial.jacobian, theta);
        return {std::move(residual), std::move(jacobian)};
    }

    const Operators& ops_;
    const ProblemSpec& problem_;
    const ThetaConfig& config_;
    DirectSolver solver_;
    bool analyzed_ = false;
};

}  // namespace

void ThetaConfig::validate() const {
    if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0, 1]");
    if (!(k > 0.0)) throw ConfigError("time step k must be positive");
    if (steps < 1) throw ConfigError("need at least one time step");
    if (!(newton_tol > 0.0)) throw ConfigError("newton_tol must be positive");
    if (newton_max_iter < 1) throw ConfigError("newton_max_iter must be at least 1");
}

Operators Operators::build(Mesh1D mesh) {
    Operators ops;
    ops.mass = assemble_mass(mesh);
    ops.stiffness = assemble_stiffness(mesh);
    ops.convection = assemble_convection(mesh);
    ops.mesh = std::move(mesh);
    return ops;
}

Operators Operators::build(Mesh2D mesh) {
    Operators ops;
    ops.mass = assemble_mass(mesh);
    ops.stiffness = assemble_stiffness(mesh);
    ops.convection = assemble_convection(mesh);
    ops.mesh = std::move(mesh);
    return ops;
}

NonlinearTerm Operators::spatial(const Eigen::VectorXd& u, const ProblemSpec& problem) const {
    const NonlinearTerm burgers =
        dim() == Dim::One ? burgers_term(mesh_1d(), u) : burgers_term(mesh_2d(), u);
    NonlinearTerm term;
    term.residual = problem.params.nu * stiffness.apply(u) +
                    problem.params.w_d * convection.apply(u) + burgers.residual;
    term.jacobian = mass.zeros_like();
    term.jacobian.add_scaled(stiffness, problem.params.nu);
    term.jacobian.add_scaled(convection, problem.params.w_d);
    term.jacobian.add_scaled(burgers.jacobian, 1.0);
    if (problem.controlled) {
        const NonlinearTerm feedback = dim() == Dim::One
                                           ? boundary_feedback_1d(u, problem.params)
                                           : boundary_feedback_2d(mesh_2d(), u, problem.params);
        term.residual += feedback.residual;
        term.jacobian.add_scaled(feedback.jacobian, 1.0);
    }
    return term;
}

Eigen::VectorXd step_residual(const Eigen::VectorXd& w_next, const Eigen::VectorXd& w_n,
                              const Operators& ops, const ProblemSpec& problem,
                              const ThetaConfig& config) {
    config.validate();
    check_state(w_next, ops, "step_residual");
    check_state(w_n, ops, "step_residual");
    const Eigen::VectorXd w_theta = config.theta * w_next + (1.0 - config.theta) * w_n;
    return ops.mass.apply((w_next - w_n) / config.k) +
           ops.spatial(w_theta, problem).residual;
}

std::pair<Eigen::VectorXd, StepReport> newton_step_solve(const Eigen::VectorXd& w_n,
                                                         const Operators& ops,
                                                         const ProblemSpec& problem,
                                                         const ThetaConfig& config,
                                                         int step_index) {
    config.validate();
    if (config.theta <= 0.0)
        throw std::invalid_argument("newton_step_solve: theta must be positive (implicit branch)");
    check_state(w_n, ops, "newton_step_solve");
    StepSolver solver(ops, problem, config);
    return solver.solve(w_n, step_index);
}

Eigen::VectorXd explicit_step(const Eigen::VectorXd& w_n, const Operators& ops,
                              const ProblemSpec& problem, const ThetaConfig& config) {
    config.validate();
    if (config.theta != 0.0) throw std::invalid_argument("explicit_step: requires theta = 0");
    check_state(w_n, ops, "explicit_step");
    DirectSolver mass_solver;
    mass_solver.factorize(ops.mass);
    return w_n - config.k * mass_solver.solve(ops.spatial(w_n, problem).residual);
}

StateTrajectory run_simulation(const ProblemSpec& problem, const Mesh1D& mesh,
                               const ThetaConfig& config) {
    return run_simulation(problem, Operators::build(mesh), config);
}

StateTrajectory run_simulation(const ProblemSpec& problem, const Mesh2D& mesh,
                               const ThetaConfig& config) {
    return run_simulation(problem, Operators::build(mesh), config);
}

StateTrajectory run_simulation(const ProblemSpec& problem, const Operators& ops,
                               const ThetaConfig& config) {
    problem.validate();
    config.validate();

    StateTrajectory trajectory;
    trajectory.states.reserve(config.steps + 1);
    trajectory.times.reserve(config.steps + 1);

    Eigen::VectorXd w = problem.dim == Dim::One ? interpolate_initial(problem, ops.mesh_1d())
                                                : interpolate_initial(problem, ops.mesh_2d());
    auto record = [&](const Eigen::VectorXd& state, int n) {
        trajectory.states.push_back(state);
        trajectory.times.push_back(n * config.k);
        trajectory.l2_history.push_back(std::sqrt(state.dot(ops.mass.apply(state))));
    };
    record(w, 0);

    if (config.theta == 0.0) {
        DirectSolver mass_solver;
        mass_solver.factorize(ops.mass);
        for (int n = 0; n < config.steps; ++n) {
            w -= config.k * mass_solver.solve(ops.spatial(w, problem).residual);
            StepReport report;
            report.step = n;
            report.newton_iterations = 0;
            report.final_residual_norm = 0.0;
            report.converged = w.allFinite();
            trajectory.reports.push_back(report);
            record(w, n + 1);
        }
        return trajectory;
    }

    StepSolver solver(ops, problem, config);
    for (int n = 0; n < config.steps; ++n) {
        try {
            auto [w_next, report] = solver.solve(w, n);
            w = std::move(w_next);
            trajectory.reports.push_back(std::move(report));
        } catch (const NonConvergence& failure) {
            trajectory.failure = SolveFailure{failure.step, failure.what(),
                                              failure.residual_history};
            return trajectory;
        } catch (const SingularJacobian& failure) {
            trajectory.failure = SolveFailure{n, failure.what(), {}};
            return trajectory;
        }
        record(w, n + 1);
    }
    return trajectory;
}

}  // namespace burgersfem

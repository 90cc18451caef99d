#pragma once

#include <Eigen/Dense>
#include <optional>
#include <variant>
#include <vector>

#include "burgersfem/assembly.hpp"
#include "burgersfem/mesh.hpp"
#include "burgersfem/models.hpp"
#include "burgersfem/sparse.hpp"

namespace burgersfem {

// Time discretization parameters. theta = 0 is forward Euler, 1/2 is
// Crank-Nicolson, 1 is backward Euler; the scheme is unconditionally stable
// only for theta in [1/2, 1].
struct ThetaConfig {
    double theta = 1.0;
    double k = 0.01;           // time step
    int steps = 100;           // M
    double newton_tol = 1e-12; // residual inf-norm
    int newton_max_iter = 25;

    void validate() const;
};

struct StepReport {
    int step = 0;
    int newton_iterations = 0;
    double final_residual_norm = 0.0;
    bool converged = false;
    std::vector<double> residual_history;  // inf-norms, starting at the initial guess
};

struct SolveFailure {
    int step = 0;
    std::string message;
    std::vector<double> residual_history;
};

// States W^0..W^M with times t_n = n k, per-step solver reports and the
// L2-norm history. On a solver failure the trajectory is truncated at the
// failing step and `failure` records it.
struct StateTrajectory {
    std::vector<Eigen::VectorXd> states;
    std::vector<double> times;
    std::vector<StepReport> reports;
    std::vector<double> l2_history;
    std::optional<SolveFailure> failure;

    bool completed() const { return !failure.has_value(); }
};

// Mass, stiffness and convection assembled once per mesh, plus the mesh
// itself for the nonlinear terms. Immutable after build; share freely.
struct Operators {
    std::variant<Mesh1D, Mesh2D> mesh;
    SparseOperator mass, stiffness, convection;

    static Operators build(Mesh1D mesh);
    static Operators build(Mesh2D mesh);

    Dim dim() const { return std::holds_alternative<Mesh1D>(mesh) ? Dim::One : Dim::Two; }
    int nodes() const { return mass.dim; }
    const Mesh1D& mesh_1d() const { return std::get<Mesh1D>(mesh); }
    const Mesh2D& mesh_2d() const { return std::get<Mesh2D>(mesh); }

    // Spatial part S(u) = nu A u + w_d C u + burgers(u) [+ feedback(u)], and
    // its exact Jacobian on the mass pattern.
    NonlinearTerm spatial(const Eigen::VectorXd& u, const ProblemSpec& problem) const;
};

// F(W_next) where F = M (W_next - W_n)/k + S(theta W_next + (1-theta) W_n).
// The scheme's step equation is F = 0.
Eigen::VectorXd step_residual(const Eigen::VectorXd& w_next, const Eigen::VectorXd& w_n,
                              const Operators& ops, const ProblemSpec& problem,
                              const ThetaConfig& config);

// One implicit step (theta > 0): Newton on F with the previous state as the
// initial guess, exact Jacobian, direct sparse solve. Throws NonConvergence
// after newton_max_iter, SingularJacobian from the factorization.
std::pair<Eigen::VectorXd, StepReport> newton_step_solve(const Eigen::VectorXd& w_n,
                                                         const Operators& ops,
                                                         const ProblemSpec& problem,
                                                         const ThetaConfig& config,
                                                         int step_index = 0);

// One forward-Euler step (theta = 0): a single mass solve, no Newton.
Eigen::VectorXd explicit_step(const Eigen::VectorXd& w_n, const Operators& ops,
                              const ProblemSpec& problem, const ThetaConfig& config);

// Full trajectory from the nodal interpolant of the initial condition.
StateTrajectory run_simulation(const ProblemSpec& problem, const Mesh1D& mesh,
                               const ThetaConfig& config);
StateTrajectory run_simulation(const ProblemSpec& problem, const Mesh2D& mesh,
                               const ThetaConfig& config);
StateTrajectory run_simulation(const ProblemSpec& problem, const Operators& ops,
                               const ThetaConfig& config);

}  // namespace burgersfem

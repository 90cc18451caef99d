#pragma once

#include <Eigen/Dense>

#include "burgersfem/assembly.hpp"
#include "burgersfem/mesh.hpp"
#include "burgersfem/stepper.hpp"

namespace burgersfem {

// All norms of one P1 state. boundary_* are filled in 2D, triple in 1D.
struct NormReport {
    double l2 = 0.0;
    double h1 = 0.0;
    double linf = 0.0;
    double boundary_l2 = 0.0;
    double boundary_l4 = 0.0;
    double triple = 0.0;
};

// True L2 norm of the P1 function: sqrt(W^T M W) with the exact mass matrix.
double norm_l2(const Mesh1D& mesh, const Eigen::VectorXd& w);
double norm_l2(const Mesh2D& mesh, const Eigen::VectorXd& w);
double norm_l2(const SparseOperator& mass, const Eigen::VectorXd& w);

// sqrt(W^T M W + W^T A W)
double norm_h1(const Mesh1D& mesh, const Eigen::VectorXd& w);
double norm_h1(const Mesh2D& mesh, const Eigen::VectorXd& w);

// max |nodal value|; exact for P1 since linear functions peak at vertices
double norm_linf(const Eigen::VectorXd& w);

// sqrt(||w||^2 + w(0)^2 + w(1)^2), the 1D norm equivalent to H1
double triple_norm(const Mesh1D& mesh, const Eigen::VectorXd& w);

// L2 / L4 norms of the boundary trace, edgewise Gauss quadrature (exact for
// the degree-4 integrand of the fourth power)
double boundary_norm_l2(const Mesh2D& mesh, const Eigen::VectorXd& w);
double boundary_norm_l4(const Mesh2D& mesh, const Eigen::VectorXd& w);

NormReport compute_norms(const Mesh1D& mesh, const Eigen::VectorXd& w);
NormReport compute_norms(const Mesh2D& mesh, const Eigen::VectorXd& w);

// Checks ||W^{n+1}|| <= ||W^n|| + tol along the recorded L2 history.
// first_violation is the step index n+1 of the first failure, -1 if none.
// Non-finite norms count as violations.
struct LyapunovVerdict {
    bool monotone = true;
    int first_violation = -1;
};
LyapunovVerdict lyapunov_monitor(const StateTrajectory& trajectory, double tol = 1e-12);

// Least-squares exponential rate: alpha_hat = -slope of ln||W^n|| vs t_n over
// [window_begin, window_end). Defaults skip the first 10% of steps.
struct DecayFit {
    double alpha_hat = 0.0;
    int window_begin = 0;
    int window_end = 0;
    double residual = 0.0;  // RMS misfit of the linear fit in log space
};
DecayFit fit_decay_rate(const StateTrajectory& trajectory, int window_begin = -1,
                        int window_end = -1);

// E1 = (c0+w_d) w(0)^2 + (c1+w_d) w(1)^2 + 1/(9c0) w(0)^4 + 1/(9c1) w(1)^4
double compute_E1(const Eigen::VectorXd& w, const BoundaryParams& params);

}  // namespace burgersfem

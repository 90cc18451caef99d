#pragma once

#include <Eigen/Dense>

#include "burgersfem/mesh.hpp"
#include "burgersfem/sparse.hpp"

namespace burgersfem {

// Physical and feedback-gain constants. c0/c1 belong to the 1D law, c2 to the
// 2D law; the unused ones may stay at zero for uncontrolled runs.
struct BoundaryParams {
    double nu = 0.1;   // viscosity, > 0
    double w_d = 0.0;  // steady-state shift, >= 0
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    void validate_common() const;  // nu > 0, w_d >= 0
    void validate_1d() const;      // + c0, c1 > 0
    void validate_2d() const;      // + c2 > 0
};

// Residual vector together with its exact Jacobian with respect to the nodal
// values it was evaluated at.
struct NonlinearTerm {
    Eigen::VectorXd residual;
    SparseOperator jacobian;
};

// M[i][j] = integral of phi_i phi_j, integrated exactly. Symmetric positive
// definite; the sum of all entries equals the domain measure.
SparseOperator assemble_mass(const Mesh1D& mesh);
SparseOperator assemble_mass(const Mesh2D& mesh);

// A[i][j] = integral of grad phi_i . grad phi_j (the caller scales by nu).
// Symmetric positive semidefinite with the constant vector in its kernel.
SparseOperator assemble_stiffness(const Mesh1D& mesh);
SparseOperator assemble_stiffness(const Mesh2D& mesh);

// C[i][j] = integral of (phi_j)' phi_i in 1D, (grad phi_j . (1,1)) phi_i in
// 2D (the caller scales by w_d). Annihilates constants.
SparseOperator assemble_convection(const Mesh1D& mesh);
SparseOperator assemble_convection(const Mesh2D& mesh);

// residual_i = integral of U (dU in direction (1,1)) phi_i. The per-element
// integrand is a polynomial of degree two, so the quadrature used here is
// exact; the Jacobian is the analytic derivative of the same quadrature.
NonlinearTerm burgers_term(const Mesh1D& mesh, const Eigen::VectorXd& u);
NonlinearTerm burgers_term(const Mesh2D& mesh, const Eigen::VectorXd& u);

// Feedback terms of the weak form: nonzero only at the two endpoints, with
// value (c_i + w_d) u + 2/(9 c_i) u^3 there.
NonlinearTerm boundary_feedback_1d(const Eigen::VectorXd& u, const BoundaryParams& params);

// Edge integrals of (2 (c2 + w_d) U + 2/(9 c2) U^3) phi_i over the boundary
// loop, with 3-point Gauss per edge (exact for the degree-4 integrand).
NonlinearTerm boundary_feedback_2d(const Mesh2D& mesh, const Eigen::VectorXd& u,
                                   const BoundaryParams& params);

}  // namespace burgersfem

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "burgersfem/assembly.hpp"
#include "burgersfem/mesh.hpp"

namespace burgersfem {

enum class Dim { One, Two };

// Named analytic initial condition in the shifted variable w = y - w_d.
// Known names: "example1" (sin(pi x) - w_d), "example2"
// (5 x1 (1-x1) x2 (1-x2) - w_d), "zero", "constant(<value>)".
struct InitialCondition {
    std::string name;
    double constant_value = 0.0;

    static InitialCondition parse(const std::string& text);
    double evaluate_1d(double x, double w_d) const;
    double evaluate_2d(double x1, double x2, double w_d) const;
};

// Everything that defines one concrete run: the equation dimension, physical
// constants, whether the feedback law is applied (controlled=false means
// homogeneous Neumann), and the initial state.
struct ProblemSpec {
    Dim dim = Dim::One;
    BoundaryParams params;
    bool controlled = true;
    InitialCondition initial_condition{"zero", 0.0};

    double w_d() const { return params.w_d; }
    void validate() const;
};

Eigen::VectorXd interpolate_initial(const ProblemSpec& problem, const Mesh1D& mesh);
Eigen::VectorXd interpolate_initial(const ProblemSpec& problem, const Mesh2D& mesh);

// Neumann data actually applied at the two endpoints:
//   v0 =  ((c0+w_d) w(0) + 2/(9 c0) w(0)^3) / nu
//   v1 = -((c1+w_d) w(1) + 2/(9 c1) w(1)^3) / nu
std::pair<double, double> control_input_1d(const Eigen::VectorXd& w, const BoundaryParams& params);

// v2 = -(2 (c2+w_d) w + 2/(9 c2) w^3) / nu evaluated at every boundary node
// (loop order), plus its L2 norm over the boundary (edgewise Gauss quadrature
// exact for the degree-6 integrand).
struct BoundaryControl2D {
    std::vector<int> nodes;      // boundary loop
    Eigen::VectorXd values;      // v2 at those nodes
    double l2_norm = 0.0;
};
BoundaryControl2D control_input_2d(const Mesh2D& mesh, const Eigen::VectorXd& w,
                                   const BoundaryParams& params);

// |v_i(discrete boundary value) - v_i(reference boundary value)|, evaluated
// with the same signed, nu-scaled convention as control_input_1d.
std::pair<double, double> control_error_pair_1d(const Eigen::VectorXd& w, double w_ref_left,
                                                double w_ref_right, const BoundaryParams& params);

// Recover the physical variable: y = w + w_d componentwise.
Eigen::VectorXd shift_to_physical(const Eigen::VectorXd& w, double w_d);

}  // namespace burgersfem

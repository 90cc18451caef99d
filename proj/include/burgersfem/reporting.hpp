#pragma once

#include <string>
#include <vector>

#include "burgersfem/convergence.hpp"
#include "burgersfem/models.hpp"
#include "burgersfem/stepper.hpp"

namespace burgersfem {

// CSV payloads for the run artifacts. Headers are fixed strings and all
// numbers are written with 17 significant digits, so a given input produces
// byte-identical output.

// t,l2,h1,linf
std::string norms_csv(const Operators& ops, const StateTrajectory& trajectory);

// 1D: t,v0,v1   2D: t,v2_l2
std::string controls_csv(const Operators& ops, const StateTrajectory& trajectory,
                         const BoundaryParams& params);

// one row per sampled state: t,w0,...,wN (nearest recorded time level)
std::string states_csv(const StateTrajectory& trajectory, const std::vector<double>& sample_times);

// step,newton_iterations,final_residual_norm,converged
std::string report_csv(const StateTrajectory& trajectory);

// resolution,<a>,oc_<a>,<b>,oc_<b>; order cells of the first row stay empty
std::string table_csv(const std::vector<ConvergenceRow>& rows, const std::string& label_a,
                      const std::string& label_b);

// param,alpha_hat
std::string decay_csv(const std::vector<std::pair<double, double>>& rows);

}  // namespace burgersfem

#pragma once

#include <string>
#include <vector>

#include "burgersfem/models.hpp"
#include "burgersfem/stepper.hpp"

namespace burgersfem {

enum class StudyAxis { Spatial, Temporal };

// One refinement study: which axis varies, the resolutions to visit (element
// counts n for spatial, step counts M for temporal), the fixed value on the
// other axis and the oracle refinement multiple. Each study resolution must
// divide ref_factor * finest so every grid nests in the oracle.
struct StudyPlan {
    StudyAxis axis = StudyAxis::Spatial;
    std::vector<int> resolutions;
    int fixed_steps = 100;     // M held fixed while h varies
    int fixed_elements = 30;   // n held fixed while k varies
    double theta = 1.0;
    double final_time = 1.0;
    int ref_factor = 8;
    ProblemSpec problem;

    void validate() const;
    int reference_resolution() const;
};

// The paper's oracle convention: a heavily refined run treated as exact,
// restricted to coarse evaluation grids without interpolation (grids nest).
struct ReferenceSolution {
    StateTrajectory trajectory;
    Dim dim = Dim::One;
    int elements = 0;  // n of the fine mesh
    int steps = 0;     // M of the fine time grid

    // Fine state at coarse time level `step` of a (coarse_elements,
    // coarse_steps) grid, restricted to the coarse nodes.
    Eigen::VectorXd state_on(int coarse_elements, int coarse_steps, int step) const;
};

ReferenceSolution build_reference(const ProblemSpec& problem, int fine_elements, int fine_steps,
                                  double theta, double final_time);

// Exact nodal restriction between nested uniform grids.
Eigen::VectorXd restrict_state_1d(const Eigen::VectorXd& fine, int ratio);
Eigen::VectorXd restrict_state_2d(const Eigen::VectorXd& fine, int fine_n, int ratio);

// err_a / err_b are the two error columns of the corresponding table:
// state rows carry (L2, Linf) at final time, 1D control rows carry the
// max-over-time (|v0|, |v1|) errors, 2D control rows carry the max-over-time
// L2(boundary) error of v2 in err_a.
struct ConvergenceRow {
    double resolution = 0.0;  // h (spatial) or k (temporal)
    double err_a = 0.0;
    double err_b = 0.0;
    double oc_a = 0.0;
    double oc_b = 0.0;
    bool has_oc = false;  // first row has no order (the tables print "--")
};

struct StudyResult {
    std::vector<ConvergenceRow> state;
    std::vector<ConvergenceRow> control;
    std::vector<std::pair<int, std::string>> failed_rows;  // (resolution, reason)
};

// log(e_coarse / e_fine) / log(ratio); ratio is the refinement factor > 1.
double observed_order(double e_coarse, double e_fine, double ratio);

StudyResult spatial_study(const StudyPlan& plan);
StudyResult temporal_study(const StudyPlan& plan);

}  // namespace burgersfem

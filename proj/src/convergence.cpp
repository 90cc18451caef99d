#include "burgersfem/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "burgersfem/diagnostics.hpp"
#include "burgersfem/errors.hpp"

namespace burgersfem {

namespace {

StateTrajectory run_or_throw(const ProblemSpec& problem, const Operators& ops,
                             const ThetaConfig& config, const char* what) {
    StateTrajectory trajectory = run_simulation(problem, ops, config);
    if (!trajectory.completed())
        throw std::runtime_error(std::string(what) + " failed at step " +
                                 std::to_string(trajectory.failure->step) + ": " +
                                 trajectory.failure->message);
    return trajectory;
}

Operators build_operators(const ProblemSpec& problem, int elements) {
    if (problem.dim == Dim::One) return Operators::build(build_uniform_1d(elements));
    return Operators::build(build_structured_2d(elements));
}

// v2 error at one time level: L2(boundary) norm of the nodal difference of
// the two control traces on the coarse boundary mesh
double control_error_2d(const Mesh2D& coarse_mesh, const Eigen::VectorXd& w_coarse,
                        const Eigen::VectorXd& w_ref_restricted, const BoundaryParams& params) {
    const BoundaryControl2D coarse = control_input_2d(coarse_mesh, w_coarse, params);
    const BoundaryControl2D ref = control_input_2d(coarse_mesh, w_ref_restricted, params);
    Eigen::VectorXd diff = Eigen::VectorXd::Zero(coarse_mesh.node_count());
    for (std::size_t i = 0; i < coarse.nodes.size(); ++i)
        diff[coarse.nodes[i]] = coarse.values[i] - ref.values[i];
    return boundary_norm_l2(coarse_mesh, diff);
}

void attach_orders(std::vector<ConvergenceRow>& rows, const std::vector<double>& resolutions) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == 0) continue;
        const double ratio = resolutions[i - 1] / resolutions[i];  // > 1 under refinement
        rows[i].oc_a = observed_order(rows[i - 1].err_a, rows[i].err_a, ratio);
        rows[i].oc_b = rows[i].err_b > 0.0 && rows[i - 1].err_b > 0.0
                           ? observed_order(rows[i - 1].err_b, rows[i].err_b, ratio)
                           : 0.0;
        rows[i].has_oc = true;
    }
}

}  // namespace

void StudyPlan::validate() const {
    problem.validate();
    if (resolutions.empty()) throw ConfigError("study needs at least one resolution");
    for (std::size_t i = 0; i + 1 < resolutions.size(); ++i)
        if (resolutions[i + 1] <= resolutions[i])
            throw ConfigError("study resolutions must be strictly refining");
    for (int r : resolutions)
        if (r < 1) throw ConfigError("study resolutions must be positive");
    if (ref_factor < 2) throw ConfigError("reference must be finer than the study");
    const int reference = reference_resolution();
    for (int r : resolutions)
        if (reference % r != 0)
            throw ConfigError("resolution " + std::to_string(r) +
                              " does not nest in the reference " + std::to_string(reference));
    if (fixed_steps < 1 || fixed_elements < 1) throw ConfigError("fixed study values must be positive");
    if (!(final_time > 0.0)) throw ConfigError("final_time must be positive");
}

int StudyPlan::reference_resolution() const {
    return ref_factor * resolutions.back();
}

Eigen::VectorXd restrict_state_1d(const Eigen::VectorXd& fine, int ratio) {
    if (ratio == 1) return fine;
    const int fine_n = static_cast<int>(fine.size()) - 1;
    if (fine_n % ratio != 0) throw std::invalid_argument("restrict_state_1d: grids do not nest");
    const int coarse_n = fine_n / ratio;
    Eigen::VectorXd coarse(coarse_n + 1);
    for (int i = 0; i <= coarse_n; ++i) coarse[i] = fine[i * ratio];
    return coarse;
}

Eigen::VectorXd restrict_state_2d(const Eigen::VectorXd& fine, int fine_n, int ratio) {
    if (ratio == 1) return fine;
    if (fine.size() != (fine_n + 1) * (fine_n + 1) || fine_n % ratio != 0)
        throw std::invalid_argument("restrict_state_2d: grids do not nest");
    const int coarse_n = fine_n / ratio;
    Eigen::VectorXd coarse((coarse_n + 1) * (coarse_n + 1));
    for (int iy = 0; iy <= coarse_n; ++iy)
        for (int ix = 0; ix <= coarse_n; ++ix)
            coarse[iy * (coarse_n + 1) + ix] = fine[(iy * ratio) * (fine_n + 1) + ix * ratio];
    return coarse;
}

ReferenceSolution build_reference(const ProblemSpec& problem, int fine_elements, int fine_steps,
                                  double theta, double final_time) {
    ThetaConfig config;
    config.theta = theta;
    config.steps = fine_steps;
    config.k = final_time / fine_steps;
    ReferenceSolution reference;
    reference.dim = problem.dim;
    reference.elements = fine_elements;
    reference.steps = fine_steps;
    reference.trajectory = run_or_throw(problem, build_operators(problem, fine_elements), config,
                                        "reference run");
    return reference;
}

Eigen::VectorXd ReferenceSolution::state_on(int coarse_elements, int coarse_steps,
                                            int step) const {
    if (steps % coarse_steps != 0)
        throw std::invalid_argument("reference: time grids do not nest");
    if (elements % coarse_elements != 0)
        throw std::invalid_argument("reference: meshes do not nest");
    const Eigen::VectorXd& fine = trajectory.states[step * (steps / coarse_steps)];
    const int ratio = elements / coarse_elements;
    if (dim == Dim::One) return restrict_state_1d(fine, ratio);
    return restrict_state_2d(fine, elements, ratio);
}

double observed_order(double e_coarse, double e_fine, double ratio) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0))
        throw NonPositiveError("observed_order: errors must be positive");
    if (!(ratio > 1.0)) throw std::invalid_argument("observed_order: ratio must exceed 1");
    return std::log(e_coarse / e_fine) / std::log(ratio);
}

StudyResult spatial_study(const StudyPlan& plan) {
    plan.validate();
    if (plan.axis != StudyAxis::Spatial)
        throw std::invalid_argument("spatial_study: plan has the wrong axis");

    const int n_ref = plan.reference_resolution();
    const ReferenceSolution reference =
        build_reference(plan.problem, n_ref, plan.fixed_steps, plan.theta, plan.final_time);

    ThetaConfig config;
    config.theta = plan.theta;
    config.steps = plan.fixed_steps;
    config.k = plan.final_time / plan.fixed_steps;

    StudyResult result;
    std::vector<double> state_res, control_res;
    for (int n : plan.resolutions) {
        Operators ops = build_operators(plan.problem, n);
        StateTrajectory trajectory = run_simulation(plan.problem, ops, config);
        if (!trajectory.completed()) {
            result.failed_rows.emplace_back(n, trajectory.failure->message);
            continue;
        }

        const double h = 1.0 / n;
        ConvergenceRow state_row;
        state_row.resolution = h;
        const Eigen::VectorXd ref_final = reference.state_on(n, plan.fixed_steps, plan.fixed_steps);
        const Eigen::VectorXd diff = trajectory.states.back() - ref_final;
        state_row.err_a = norm_l2(ops.mass, diff);
        state_row.err_b = norm_linf(diff);
        result.state.push_back(state_row);
        state_res.push_back(h);

        if (!plan.problem.controlled) continue;  // no control trace to compare

        ConvergenceRow control_row;
        control_row.resolution = h;
        if (plan.problem.dim == Dim::One) {
            double e0 = 0.0, e1 = 0.0;
            for (int level = 0; level <= plan.fixed_steps; ++level) {
                const Eigen::VectorXd ref_state = reference.state_on(n, plan.fixed_steps, level);
                const auto [d0, d1] =
                    control_error_pair_1d(trajectory.states[level], ref_state[0],
                                          ref_state[ref_state.size() - 1], plan.problem.params);
                e0 = std::max(e0, d0);
                e1 = std::max(e1, d1);
            }
            control_row.err_a = e0;
            control_row.err_b = e1;
        } else {
            double e2 = 0.0;
            for (int level = 0; level <= plan.fixed_steps; ++level) {
                const Eigen::VectorXd ref_state = reference.state_on(n, plan.fixed_steps, level);
                e2 = std::max(e2, control_error_2d(ops.mesh_2d(), trajectory.states[level],
                                                   ref_state, plan.problem.params));
            }
            control_row.err_a = e2;
            control_row.err_b = 0.0;
        }
        result.control.push_back(control_row);
        control_res.push_back(h);
    }
    attach_orders(result.state, state_res);
    attach_orders(result.control, control_res);
    return result;
}

StudyResult temporal_study(const StudyPlan& plan) {
    plan.validate();
    if (plan.axis != StudyAxis::Temporal)
        throw std::invalid_argument("temporal_study: plan has the wrong axis");

    const int m_ref = plan.reference_resolution();
    Operators ops = build_operators(plan.problem, plan.fixed_elements);
    ThetaConfig ref_config;
    ref_config.theta = plan.theta;
    ref_config.steps = m_ref;
    ref_config.k = plan.final_time / m_ref;
    const StateTrajectory reference =
        run_or_throw(plan.problem, ops, ref_config, "temporal reference run");

    StudyResult result;
    std::vector<double> state_res, control_res;
    for (int m : plan.resolutions) {
        ThetaConfig config;
        config.theta = plan.theta;
        config.steps = m;
        config.k = plan.final_time / m;
        StateTrajectory trajectory = run_simulation(plan.problem, ops, config);
        if (!trajectory.completed()) {
            result.failed_rows.emplace_back(m, trajectory.failure->message);
            continue;
        }
        const int stride = m_ref / m;

        ConvergenceRow state_row;
        state_row.resolution = config.k;
        const Eigen::VectorXd diff = trajectory.states.back() - reference.states.back();
        state_row.err_a = norm_l2(ops.mass, diff);
        state_row.err_b = norm_linf(diff);
        result.state.push_back(state_row);
        state_res.push_back(config.k);

        if (!plan.problem.controlled) continue;

        ConvergenceRow control_row;
        control_row.resolution = config.k;
        if (plan.problem.dim == Dim::One) {
            double e0 = 0.0, e1 = 0.0;
            for (int level = 0; level <= m; ++level) {
                const Eigen::VectorXd& ref_state = reference.states[level * stride];
                const auto [d0, d1] =
                    control_error_pair_1d(trajectory.states[level], ref_state[0],
                                          ref_state[ref_state.size() - 1], plan.problem.params);
                e0 = std::max(e0, d0);
                e1 = std::max(e1, d1);
            }
            control_row.err_a = e0;
            control_row.err_b = e1;
        } else {
            double e2 = 0.0;
            for (int level = 0; level <= m; ++level)
                e2 = std::max(e2, control_error_2d(ops.mesh_2d(), trajectory.states[level],
                                                   reference.states[level * stride],
                                                   plan.problem.params));
            control_row.err_a = e2;
            control_row.err_b = 0.0;
        }
        result.control.push_back(control_row);
        control_res.push_back(config.k);
    }
    attach_orders(result.state, state_res);
    attach_orders(result.control, control_res);
    return result;
}

}  // namespace burgersfem

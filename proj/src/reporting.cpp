#include "burgersfem/reporting.hpp"

#include <cmath>
#include <sstream>

#include "burgersfem/csv.hpp"
#include "burgersfem/diagnostics.hpp"

namespace burgersfem {

std::string norms_csv(const Operators& ops, const StateTrajectory& trajectory) {
    std::ostringstream out;
    out << "t,l2,h1,linf\n";
    for (std::size_t n = 0; n < trajectory.states.size(); ++n) {
        const Eigen::VectorXd& w = trajectory.states[n];
        const double l2 = trajectory.l2_history[n];
        const double h1 = std::sqrt(l2 * l2 + w.dot(ops.stiffness.apply(w)));
        out << format_full(trajectory.times[n]) << ',' << format_full(l2) << ','
            << format_full(h1) << ',' << format_full(norm_linf(w)) << '\n';
    }
    return out.str();
}

std::string controls_csv(const Operators& ops, const StateTrajectory& trajectory,
                         const BoundaryParams& params) {
    std::ostringstream out;
    if (ops.dim() == Dim::One) {
        out << "t,v0,v1\n";
        for (std::size_t n = 0; n < trajectory.states.size(); ++n) {
            const auto [v0, v1] = control_input_1d(trajectory.states[n], params);
            out << format_full(trajectory.times[n]) << ',' << format_full(v0) << ','
                << format_full(v1) << '\n';
        }
    } else {
        out << "t,v2_l2\n";
        for (std::size_t n = 0; n < trajectory.states.size(); ++n) {
            const BoundaryControl2D control =
                control_input_2d(ops.mesh_2d(), trajectory.states[n], params);
            out << format_full(trajectory.times[n]) << ',' << format_full(control.l2_norm)
                << '\n';
        }
    }
    return out.str();
}

std::string states_csv(const StateTrajectory& trajectory,
                       const std::vector<double>& sample_times) {
    std::ostringstream out;
    out << "t";
    const int nodes = trajectory.states.empty() ? 0 : static_cast<int>(trajectory.states[0].size());
    for (int i = 0; i < nodes; ++i) out << ",w" << i;
    out << '\n';
    for (double t : sample_times) {
        std::size_t best = 0;
        for (std::size_t n = 1; n < trajectory.times.size(); ++n)
            if (std::abs(trajectory.times[n] - t) < std::abs(trajectory.times[best] - t)) best = n;
        out << format_full(trajectory.times[best]);
        for (int i = 0; i < nodes; ++i) out << ',' << format_full(trajectory.states[best][i]);
        out << '\n';
    }
    return out.str();
}

std::string report_csv(const StateTrajectory& trajectory) {
    std::ostringstream out;
    out << "step,newton_iterations,final_residual_norm,converged\n";
    for (const StepReport& report : trajectory.reports)
        out << report.step << ',' << report.newton_iterations << ','
            << format_full(report.final_residual_norm) << ',' << (report.converged ? 1 : 0)
            << '\n';
    return out.str();
}

std::string table_csv(const std::vector<ConvergenceRow>& rows, const std::string& label_a,
                      const std::string& label_b) {
    std::ostringstream out;
    out << "resolution,err_" << label_a << ",oc_" << label_a;
    const bool two_columns = !label_b.empty();
    if (two_columns) out << ",err_" << label_b << ",oc_" << label_b;
    out << '\n';
    for (const ConvergenceRow& row : rows) {
        out << format_full(row.resolution) << ',' << format_full(row.err_a) << ',';
        if (row.has_oc) out << format_full(row.oc_a);
        if (two_columns) {
            out << ',' << format_full(row.err_b) << ',';
            if (row.has_oc) out << format_full(row.oc_b);
        }
        out << '\n';
    }
    return out.str();
}

std::string decay_csv(const std::vector<std::pair<double, double>>& rows) {
    std::ostringstream out;
    out << "param,alpha_hat\n";
    for (const auto& [param, alpha] : rows)
        out << format_full(param) << ',' << format_full(alpha) << '\n';
    return out.str();
}

}  // namespace burgersfem

#include "burgersfem/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "burgersfem/errors.hpp"

namespace burgersfem {

namespace {

// 3-point Gauss on [0,1] (degree 5), enough for squared and fourth-power traces
const double kGaussT[3] = {0.5 * (1.0 - std::sqrt(0.6)), 0.5, 0.5 * (1.0 + std::sqrt(0.6))};
const double kGaussW[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

double boundary_power_integral(const Mesh2D& mesh, const Eigen::VectorXd& w, int power) {
    if (w.size() != mesh.node_count())
        throw std::invalid_argument("boundary norm: dimension mismatch");
    double acc = 0.0;
    for (const auto& edge : mesh.boundary_edges) {
        const auto& pa = mesh.vertices[edge[0]];
        const auto& pb = mesh.vertices[edge[1]];
        const double len = std::hypot(pb[0] - pa[0], pb[1] - pa[1]);
        for (int q = 0; q < 3; ++q) {
            const double uq = (1.0 - kGaussT[q]) * w[edge[0]] + kGaussT[q] * w[edge[1]];
            acc += len * kGaussW[q] * std::pow(uq, power);
        }
    }
    return acc;
}

double quadratic_form(const SparseOperator& op, const Eigen::VectorXd& w) {
    return w.dot(op.apply(w));
}

}  // namespace

double norm_l2(const SparseOperator& mass, const Eigen::VectorXd& w) {
    return std::sqrt(quadratic_form(mass, w));
}

double norm_l2(const Mesh1D& mesh, const Eigen::VectorXd& w) {
    return norm_l2(assemble_mass(mesh), w);
}

double norm_l2(const Mesh2D& mesh, const Eigen::VectorXd& w) {
    return norm_l2(assemble_mass(mesh), w);
}

double norm_h1(const Mesh1D& mesh, const Eigen::VectorXd& w) {
    return std::sqrt(quadratic_form(assemble_mass(mesh), w) +
                     quadratic_form(assemble_stiffness(mesh), w));
}

double norm_h1(const Mesh2D& mesh, const Eigen::VectorXd& w) {
    return std::sqrt(quadratic_form(assemble_mass(mesh), w) +
                     quadratic_form(assemble_stiffness(mesh), w));
}

double norm_linf(const Eigen::VectorXd& w) {
    return w.size() == 0 ? 0.0 : w.lpNorm<Eigen::Infinity>();
}

double triple_norm(const Mesh1D& mesh, const Eigen::VectorXd& w) {
    if (w.size() != mesh.node_count())
        throw std::invalid_argument("triple_norm: dimension mismatch");
    const double l2 = norm_l2(mesh, w);
    const double w0 = w[0];
    const double w1 = w[w.size() - 1];
    return std::sqrt(l2 * l2 + w0 * w0 + w1 * w1);
}

double boundary_norm_l2(const Mesh2D& mesh, const Eigen::VectorXd& w) {
    return std::sqrt(boundary_power_integral(mesh, w, 2));
}

double boundary_norm_l4(const Mesh2D& mesh, const Eigen::VectorXd& w) {
    return std::pow(boundary_power_integral(mesh, w, 4), 0.25);
}

NormReport compute_norms(const Mesh1D& mesh, const Eigen::VectorXd& w) {
    NormReport report;
    report.l2 = norm_l2(mesh, w);
    report.h1 = norm_h1(mesh, w);
    report.linf = norm_linf(w);
    report.triple = triple_norm(mesh, w);
    return report;
}

NormReport compute_norms(const Mesh2D& mesh, const Eigen::VectorXd& w) {
    NormReport report;
    report.l2 = norm_l2(mesh, w);
    report.h1 = norm_h1(mesh, w);
    report.linf = norm_linf(w);
    report.boundary_l2 = boundary_norm_l2(mesh, w);
    report.boundary_l4 = boundary_norm_l4(mesh, w);
    return report;
}

LyapunovVerdict lyapunov_monitor(const StateTrajectory& trajectory, double tol) {
    const auto& l2 = trajectory.l2_history;
    for (std::size_t n = 0; n + 1 < l2.size(); ++n) {
        if (!(l2[n + 1] <= l2[n] + tol))  // NaN compares false, so it counts as a violation
            return {false, static_cast<int>(n + 1)};
    }
    return {true, -1};
}

DecayFit fit_decay_rate(const StateTrajectory& trajectory, int window_begin, int window_end) {
    const int count = static_cast<int>(trajectory.l2_history.size());
    if (window_begin < 0) window_begin = count / 10;
    if (window_end < 0) window_end = count;
    if (window_begin < 0 || window_end > count || window_end - window_begin < 2)
        throw std::invalid_argument("fit_decay_rate: window outside trajectory");

    double sum_t = 0.0, sum_y = 0.0;
    const int m = window_end - window_begin;
    std::vector<double> ys(m);
    for (int n = window_begin; n < window_end; ++n) {
        const double norm = trajectory.l2_history[n];
        if (!(norm > 0.0))
            throw NonPositiveNorm("fit_decay_rate: norm sample at step " + std::to_string(n) +
                                  " is not positive");
        ys[n - window_begin] = std::log(norm);
        sum_t += trajectory.times[n];
        sum_y += ys[n - window_begin];
    }
    const double mean_t = sum_t / m;
    const double mean_y = sum_y / m;
    double cov = 0.0, var = 0.0;
    for (int n = window_begin; n < window_end; ++n) {
        const double dt = trajectory.times[n] - mean_t;
        cov += dt * (ys[n - window_begin] - mean_y);
        var += dt * dt;
    }
    const double slope = cov / var;

    DecayFit fit;
    fit.alpha_hat = -slope;
    fit.window_begin = window_begin;
    fit.window_end = window_end;
    double misfit = 0.0;
    for (int n = window_begin; n < window_end; ++n) {
        const double predicted = mean_y + slope * (trajectory.times[n] - mean_t);
        const double r = ys[n - window_begin] - predicted;
        misfit += r * r;
    }
    fit.residual = std::sqrt(misfit / m);
    return fit;
}

double compute_E1(const Eigen::VectorXd& w, const BoundaryParams& params) {
    params.validate_1d();
    const double w0 = w[0];
    const double w1 = w[w.size() - 1];
    return (params.c0 + params.w_d) * w0 * w0 + (params.c1 + params.w_d) * w1 * w1 +
           1.0 / (9.0 * params.c0) * w0 * w0 * w0 * w0 +
           1.0 / (9.0 * params.c1) * w1 * w1 * w1 * w1;
}

}  // namespace burgersfem

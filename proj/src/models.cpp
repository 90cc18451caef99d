#include "burgersfem/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "burgersfem/errors.hpp"

namespace burgersfem {

namespace {

// 4-point Gauss on [0,1], exact to degree 7 (the v2^2 edge integrand is degree 6)
const double kG4Offset = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0)) / 2.0;
const double kG4OffsetOuter = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0)) / 2.0;
const double kG4T[4] = {0.5 - kG4OffsetOuter, 0.5 - kG4Offset, 0.5 + kG4Offset,
                        0.5 + kG4OffsetOuter};
const double kG4WInner = (18.0 + std::sqrt(30.0)) / 72.0;
const double kG4WOuter = (18.0 - std::sqrt(30.0)) / 72.0;
const double kG4W[4] = {kG4WOuter, kG4WInner, kG4WInner, kG4WOuter};

double control_law_1d(double w, double gain, double w_d, double nu) {
    return ((gain + w_d) * w + 2.0 / (9.0 * gain) * w * w * w) / nu;
}

}  // namespace

InitialCondition InitialCondition::parse(const std::string& text) {
    if (text == "example1" || text == "example2" || text == "zero") return {text, 0.0};
    const std::string prefix = "constant(";
    if (text.rfind(prefix, 0) == 0 && text.back() == ')') {
        const std::string inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(inner, &consumed);
        } catch (const std::exception&) {
            throw ConfigError("initial_condition: bad constant value '" + inner + "'");
        }
        if (consumed != inner.size())
            throw ConfigError("initial_condition: bad constant value '" + inner + "'");
        return {"constant", value};
    }
    throw ConfigError("initial_condition: unknown name '" + text + "'");
}

double InitialCondition::evaluate_1d(double x, double w_d) const {
    if (name == "example1") return std::sin(std::numbers::pi * x) - w_d;
    if (name == "zero") return 0.0;
    if (name == "constant") return constant_value;
    throw std::invalid_argument("initial condition '" + name + "' is not defined in 1D");
}

double InitialCondition::evaluate_2d(double x1, double x2, double w_d) const {
    if (name == "example2") return 5.0 * x1 * (1.0 - x1) * x2 * (1.0 - x2) - w_d;
    if (name == "zero") return 0.0;
    if (name == "constant") return constant_value;
    throw std::invalid_argument("initial condition '" + name + "' is not defined in 2D");
}

void ProblemSpec::validate() const {
    params.validate_common();
    if (controlled) {
        if (dim == Dim::One)
            params.validate_1d();
        else
            params.validate_2d();
    }
    if (dim == Dim::One && initial_condition.name == "example2")
        throw ConfigError("initial_condition example2 is a 2D profile");
    if (dim == Dim::Two && initial_condition.name == "example1")
        throw ConfigError("initial_condition example1 is a 1D profile");
}

Eigen::VectorXd interpolate_initial(const ProblemSpec& problem, const Mesh1D& mesh) {
    Eigen::VectorXd w0(mesh.node_count());
    for (int i = 0; i < mesh.node_count(); ++i)
        w0[i] = problem.initial_condition.evaluate_1d(mesh.nodes[i], problem.w_d());
    return w0;
}

Eigen::VectorXd interpolate_initial(const ProblemSpec& problem, const Mesh2D& mesh) {
    Eigen::VectorXd w0(mesh.node_count());
    for (int i = 0; i < mesh.node_count(); ++i)
        w0[i] = problem.initial_condition.evaluate_2d(mesh.vertices[i][0], mesh.vertices[i][1],
                                                      problem.w_d());
    return w0;
}

std::pair<double, double> control_input_1d(const Eigen::VectorXd& w,
                                           const BoundaryParams& params) {
    params.validate_1d();
    const double v0 = control_law_1d(w[0], params.c0, params.w_d, params.nu);
    const double v1 = -control_law_1d(w[w.size() - 1], params.c1, params.w_d, params.nu);
    return {v0, v1};
}

BoundaryControl2D control_input_2d(const Mesh2D& mesh, const Eigen::VectorXd& w,
                                   const BoundaryParams& params) {
    params.validate_2d();
    if (w.size() != mesh.node_count())
        throw std::invalid_argument("control_input_2d: dimension mismatch");
    BoundaryControl2D control;
    control.nodes = boundary_nodes(mesh);
    control.values.resize(control.nodes.size());
    auto law = [&](double value) {
        return -(2.0 * (params.c2 + params.w_d) * value +
                 2.0 / (9.0 * params.c2) * value * value * value) /
               params.nu;
    };
    for (std::size_t i = 0; i < control.nodes.size(); ++i)
        control.values[i] = law(w[control.nodes[i]]);

    double norm_sq = 0.0;
    for (const auto& edge : mesh.boundary_edges) {
        const auto& pa = mesh.vertices[edge[0]];
        const auto& pb = mesh.vertices[edge[1]];
        const double len = std::hypot(pb[0] - pa[0], pb[1] - pa[1]);
        const double wa = w[edge[0]];
        const double wb = w[edge[1]];
        for (int q = 0; q < 4; ++q) {
            const double wq = (1.0 - kG4T[q]) * wa + kG4T[q] * wb;
            const double v = law(wq);
            norm_sq += len * kG4W[q] * v * v;
        }
    }
    control.l2_norm = std::sqrt(norm_sq);
    return control;
}

std::pair<double, double> control_error_pair_1d(const Eigen::VectorXd& w, double w_ref_left,
                                                double w_ref_right, const BoundaryParams& params) {
    params.validate_1d();
    const double e0 = std::abs(control_law_1d(w[0], params.c0, params.w_d, params.nu) -
                               control_law_1d(w_ref_left, params.c0, params.w_d, params.nu));
    const double e1 =
        std::abs(control_law_1d(w[w.size() - 1], params.c1, params.w_d, params.nu) -
                 control_law_1d(w_ref_right, params.c1, params.w_d, params.nu));
    return {e0, e1};
}

Eigen::VectorXd shift_to_physical(const Eigen::VectorXd& w, double w_d) {
    return w.array() + w_d;
}

}  // namespace burgersfem

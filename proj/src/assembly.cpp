#include "burgersfem/assembly.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace burgersfem {

namespace {

void check_dim(const Eigen::VectorXd& u, int nodes, const char* where) {
    if (u.size() != nodes) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

// b_i, c_i of the P1 gradient formula grad lambda_i = (b_i, c_i) / (2A)
struct TriGeometry {
    std::array<double, 3> b, c;
    double area;
};

TriGeometry tri_geometry(const Mesh2D& mesh, int t) {
    const auto& tri = mesh.triangles[t];
    const auto& p0 = mesh.vertices[tri[0]];
    const auto& p1 = mesh.vertices[tri[1]];
    const auto& p2 = mesh.vertices[tri[2]];
    TriGeometry g;
    g.b = {p1[1] - p2[1], p2[1] - p0[1], p0[1] - p1[1]};
    g.c = {p2[0] - p1[0], p0[0] - p2[0], p1[0] - p0[0]};
    g.area = 0.5 * ((p1[0] - p0[0]) * (p2[1] - p0[1]) - (p2[0] - p0[0]) * (p1[1] - p0[1]));
    return g;
}

// barycentric coordinates of the three edge midpoints (quadrature exact to degree 2)
constexpr double kMid[3][3] = {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}};

// 3-point Gauss on [0,1], exact to degree 5
const double kGaussT[3] = {0.5 * (1.0 - std::sqrt(0.6)), 0.5, 0.5 * (1.0 + std::sqrt(0.6))};
const double kGaussW[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

}  // namespace

void BoundaryParams::validate_common() const {
    if (!(nu > 0.0)) throw std::invalid_argument("BoundaryParams: nu must be positive");
    if (!(w_d >= 0.0)) throw std::invalid_argument("BoundaryParams: w_d must be nonnegative");
}

void BoundaryParams::validate_1d() const {
    validate_common();
    if (!(c0 > 0.0) || !(c1 > 0.0))
        throw std::invalid_argument("BoundaryParams: 1D gains c0, c1 must be positive");
}

void BoundaryParams::validate_2d() const {
    validate_common();
    if (!(c2 > 0.0)) throw std::invalid_argument("BoundaryParams: 2D gain c2 must be positive");
}

SparseOperator assemble_mass(const Mesh1D& mesh) {
    SparseBuilder builder(mesh.node_count());
    for (const auto& e : mesh.elements) {
        const double h = mesh.nodes[e[1]] - mesh.nodes[e[0]];
        builder.add(e[0], e[0], h / 3.0);
        builder.add(e[0], e[1], h / 6.0);
        builder.add(e[1], e[0], h / 6.0);
        builder.add(e[1], e[1], h / 3.0);
    }
    return builder.build();
}

SparseOperator assemble_stiffness(const Mesh1D& mesh) {
    SparseBuilder builder(mesh.node_count());
    for (const auto& e : mesh.elements) {
        const double h = mesh.nodes[e[1]] - mesh.nodes[e[0]];
        builder.add(e[0], e[0], 1.0 / h);
        builder.add(e[0], e[1], -1.0 / h);
        builder.add(e[1], e[0], -1.0 / h);
        builder.add(e[1], e[1], 1.0 / h);
    }
    return builder.build();
}

SparseOperator assemble_convection(const Mesh1D& mesh) {
    SparseBuilder builder(mesh.node_count());
    for (const auto& e : mesh.elements) {
        // integral of phi_j' phi_i over the element, independent of h
        builder.add(e[0], e[0], -0.5);
        builder.add(e[0], e[1], 0.5);
        builder.add(e[1], e[0], -0.5);
        builder.add(e[1], e[1], 0.5);
    }
    return builder.build();
}

NonlinearTerm burgers_term(const Mesh1D& mesh, const Eigen::VectorXd& u) {
    check_dim(u, mesh.node_count(), "burgers_term");
    NonlinearTerm term;
    term.residual = Eigen::VectorXd::Zero(mesh.node_count());
    SparseBuilder builder(mesh.node_count());
    for (const auto& e : mesh.elements) {
        const double ul = u[e[0]];
        const double ur = u[e[1]];
        // r_l = (ur-ul)(2ul+ur)/6, r_r = (ur-ul)(ul+2ur)/6 (exact integrals)
        term.residual[e[0]] += (ur - ul) * (2.0 * ul + ur) / 6.0;
        term.residual[e[1]] += (ur - ul) * (ul + 2.0 * ur) / 6.0;
        builder.add(e[0], e[0], (-4.0 * ul + ur) / 6.0);
        builder.add(e[0], e[1], (ul + 2.0 * ur) / 6.0);
        builder.add(e[1], e[0], (-2.0 * ul - ur) / 6.0);
        builder.add(e[1], e[1], (-ul + 4.0 * ur) / 6.0);
    }
    term.jacobian = builder.build();
    return term;
}

SparseOperator assemble_mass(const Mesh2D& mesh) {
    SparseBuilder builder(mesh.node_count());
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[t];
        const double a = tri_geometry(mesh, t).area;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                builder.add(tri[i], tri[j], a / 12.0 * (i == j ? 2.0 : 1.0));
    }
    return builder.build();
}

SparseOperator assemble_stiffness(const Mesh2D& mesh) {
    SparseBuilder builder(mesh.node_count());
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[t];
        const TriGeometry g = tri_geometry(mesh, t);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                builder.add(tri[i], tri[j], (g.b[i] * g.b[j] + g.c[i] * g.c[j]) / (4.0 * g.area));
    }
    return builder.build();
}

SparseOperator assemble_convection(const Mesh2D& mesh) {
    SparseBuilder builder(mesh.node_count());
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[t];
        const TriGeometry g = tri_geometry(mesh, t);
        for (int j = 0; j < 3; ++j) {
            // (grad lambda_j . (1,1)) integral of phi_i = (b_j + c_j)/6
            const double entry = (g.b[j] + g.c[j]) / 6.0;
            for (int i = 0; i < 3; ++i) builder.add(tri[i], tri[j], entry);
        }
    }
    return builder.build();
}

NonlinearTerm burgers_term(const Mesh2D& mesh, const Eigen::VectorXd& u) {
    check_dim(u, mesh.node_count(), "burgers_term");
    NonlinearTerm term;
    term.residual = Eigen::VectorXd::Zero(mesh.node_count());
    SparseBuilder builder(mesh.node_count());
    for (int t = 0; t < mesh.triangle_count(); ++t) {
        const auto& tri = mesh.triangles[t];
        const TriGeometry g = tri_geometry(mesh, t);
        const double wq = g.area / 3.0;
        std::array<double, 3> d;  // grad lambda_j . (1,1)
        for (int j = 0; j < 3; ++j) d[j] = (g.b[j] + g.c[j]) / (2.0 * g.area);
        // sum_j d_j = 0, so nodal differences make the constant state cancel exactly
        const double grad =
            d[1] * (u[tri[1]] - u[tri[0]]) + d[2] * (u[tri[2]] - u[tri[0]]);
        for (int m = 0; m < 3; ++m) {
            const double um =
                kMid[m][0] * u[tri[0]] + kMid[m][1] * u[tri[1]] + kMid[m][2] * u[tri[2]];
            for (int i = 0; i < 3; ++i) {
                term.residual[tri[i]] += wq * grad * um * kMid[m][i];
                for (int j = 0; j < 3; ++j)
                    builder.add(tri[i], tri[j], wq * (d[j] * um + grad * kMid[m][j]) * kMid[m][i]);
            }
        }
    }
    term.jacobian = builder.build();
    return term;
}

NonlinearTerm boundary_feedback_1d(const Eigen::VectorXd& u, const BoundaryParams& params) {
    params.validate_1d();
    const int n = static_cast<int>(u.size());
    if (n < 2) throw std::invalid_argument("boundary_feedback_1d: state too small");
    NonlinearTerm term;
    term.residual = Eigen::VectorXd::Zero(n);
    SparseBuilder builder(n);
    const double u0 = u[0];
    const double u1 = u[n - 1];
    term.residual[0] = (params.c0 + params.w_d) * u0 + 2.0 / (9.0 * params.c0) * u0 * u0 * u0;
    term.residual[n - 1] = (params.c1 + params.w_d) * u1 + 2.0 / (9.0 * params.c1) * u1 * u1 * u1;
    builder.add(0, 0, (params.c0 + params.w_d) + 2.0 / (3.0 * params.c0) * u0 * u0);
    builder.add(n - 1, n - 1, (params.c1 + params.w_d) + 2.0 / (3.0 * params.c1) * u1 * u1);
    term.jacobian = builder.build();
    return term;
}

NonlinearTerm boundary_feedback_2d(const Mesh2D& mesh, const Eigen::VectorXd& u,
                                   const BoundaryParams& params) {
    params.validate_2d();
    check_dim(u, mesh.node_count(), "boundary_feedback_2d");
    const double lin = 2.0 * (params.c2 + params.w_d);
    const double cub = 2.0 / (9.0 * params.c2);
    NonlinearTerm term;
    term.residual = Eigen::VectorXd::Zero(mesh.node_count());
    SparseBuilder builder(mesh.node_count());
    for (const auto& edge : mesh.boundary_edges) {
        const auto& pa = mesh.vertices[edge[0]];
        const auto& pb = mesh.vertices[edge[1]];
        const double len = std::hypot(pb[0] - pa[0], pb[1] - pa[1]);
        const double ua = u[edge[0]];
        const double ub = u[edge[1]];
        for (int q = 0; q < 3; ++q) {
            const double t = kGaussT[q];
            const double uq = (1.0 - t) * ua + t * ub;
            const double f = lin * uq + cub * uq * uq * uq;
            const double df = lin + 3.0 * cub * uq * uq;
            const double shape[2] = {1.0 - t, t};
            for (int i = 0; i < 2; ++i) {
                term.residual[edge[i]] += len * kGaussW[q] * f * shape[i];
                for (int j = 0; j < 2; ++j)
                    builder.add(edge[i], edge[j], len * kGaussW[q] * df * shape[j] * shape[i]);
            }
        }
    }
    term.jacobian = builder.build();
    return term;
}

}  // namespace burgersfem

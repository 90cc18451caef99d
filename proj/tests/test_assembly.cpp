#include <doctest.h>

#include <Eigen/Cholesky>
#include <random>

#include "burgersfem/assembly.hpp"
#include "burgersfem/mesh.hpp"
#include "test_helpers.hpp"

using namespace burgersfem;
using test_helpers::fd_jacobian;
using test_helpers::max_relative_gap;
using test_helpers::random_state;

namespace {

BoundaryParams params_1d() {
    BoundaryParams params;
    params.nu = 0.1;
    params.w_d = 1.0;
    params.c0 = 0.1;
    params.c1 = 0.1;
    return params;
}

BoundaryParams params_2d() {
    BoundaryParams params;
    params.nu = 1.0;
    params.w_d = 2.0;
    params.c2 = 0.1;
    return params;
}

}  // namespace

TEST_CASE("1d mass matrix entries") {
    const Mesh1D mesh = build_uniform_1d(4);
    const double h = 0.25;
    const SparseOperator mass = assemble_mass(mesh);
    CHECK(mass.coeff(0, 0) == doctest::Approx(h / 3).epsilon(1e-14));
    CHECK(mass.coeff(2, 2) == doctest::Approx(2 * h / 3).epsilon(1e-14));
    CHECK(mass.coeff(2, 3) == doctest::Approx(h / 6).epsilon(1e-14));
    CHECK(mass.coeff(4, 4) == doctest::Approx(h / 3).epsilon(1e-14));

    const SparseOperator single = assemble_mass(build_uniform_1d(1));
    CHECK(single.coeff(0, 0) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(single.coeff(0, 1) == doctest::Approx(1.0 / 6).epsilon(1e-15));
    CHECK(single.coeff(1, 0) == doctest::Approx(1.0 / 6).epsilon(1e-15));
    CHECK(single.coeff(1, 1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("mass row sums integrate the basis, total equals the measure") {
    const Mesh1D mesh1 = test_helpers::handmade_nonuniform_1d();
    const SparseOperator mass1 = assemble_mass(mesh1);
    double total = 0.0;
    for (int i = 0; i < mass1.dim; ++i) {
        double row = 0.0;
        for (int p = mass1.row_ptr[i]; p < mass1.row_ptr[i + 1]; ++p) row += mass1.vals[p];
        total += row;
        // row sum = integral of phi_i = half the support length
        double support = 0.0;
        if (i > 0) support += mesh1.nodes[i] - mesh1.nodes[i - 1];
        if (i + 1 < mesh1.node_count()) support += mesh1.nodes[i + 1] - mesh1.nodes[i];
        CHECK(row == doctest::Approx(support / 2).epsilon(1e-14));
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));

    const SparseOperator mass2 = assemble_mass(build_structured_2d(5));
    double total2 = 0.0;
    for (double v : mass2.vals) total2 += v;
    CHECK(total2 == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("mass matrix is positive definite") {
    std::mt19937 rng(7);
    for (int variant = 0; variant < 2; ++variant) {
        const SparseOperator mass = variant == 0 ? assemble_mass(build_uniform_1d(9))
                                                 : assemble_mass(build_structured_2d(4));
        const Eigen::MatrixXd dense = mass.to_dense();
        Eigen::LLT<Eigen::MatrixXd> llt(dense);
        CHECK(llt.info() == Eigen::Success);
        for (int trial = 0; trial < 10; ++trial) {
            const Eigen::VectorXd x = random_state(mass.dim, rng);
            CHECK(x.dot(mass.apply(x)) > 0.0);
        }
    }
}

TEST_CASE("1d stiffness entries and constant kernel") {
    const Mesh1D mesh = build_uniform_1d(4);
    const double h = 0.25;
    const SparseOperator stiffness = assemble_stiffness(mesh);
    CHECK(stiffness.coeff(0, 0) == doctest::Approx(1 / h).epsilon(1e-14));
    CHECK(stiffness.coeff(2, 2) == doctest::Approx(2 / h).epsilon(1e-14));
    CHECK(stiffness.coeff(2, 1) == doctest::Approx(-1 / h).epsilon(1e-14));

    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(mesh.node_count());
    CHECK(stiffness.apply(ones).lpNorm<Eigen::Infinity>() <= 1e-13);
}

TEST_CASE("2d stiffness is symmetric psd and kills constants") {
    std::mt19937 rng(11);
    const Mesh2D mesh = build_structured_2d(1);
    const SparseOperator stiffness = assemble_stiffness(mesh);
    REQUIRE(stiffness.dim == 4);
    const Eigen::MatrixXd dense = stiffness.to_dense();
    CHECK((dense - dense.transpose()).lpNorm<Eigen::Infinity>() <= 1e-14);
    CHECK(stiffness.apply(Eigen::VectorXd::Ones(4)).lpNorm<Eigen::Infinity>() <= 1e-13);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::VectorXd x = random_state(4, rng);
        CHECK(x.dot(stiffness.apply(x)) >= -1e-12);
    }

    const SparseOperator larger = assemble_stiffness(build_structured_2d(6));
    CHECK(larger.apply(Eigen::VectorXd::Ones(larger.dim)).lpNorm<Eigen::Infinity>() <= 1e-13);
    const Eigen::MatrixXd larger_dense = larger.to_dense();
    CHECK((larger_dense - larger_dense.transpose()).lpNorm<Eigen::Infinity>() <= 1e-14);
}

TEST_CASE("convection matrices") {
    const SparseOperator single = assemble_convection(build_uniform_1d(1));
    CHECK(single.coeff(0, 0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(single.coeff(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(single.coeff(1, 0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(single.coeff(1, 1) == doctest::Approx(0.5).epsilon(1e-15));

    std::mt19937 rng(13);
    const Mesh1D mesh = build_uniform_1d(8);
    const SparseOperator convection = assemble_convection(mesh);
    CHECK(convection.apply(Eigen::VectorXd::Ones(mesh.node_count())).lpNorm<Eigen::Infinity>() <=
          1e-13);
    // 1^T C W telescopes to W(1) - W(0) for P1
    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::VectorXd w = random_state(mesh.node_count(), rng);
        const double total = convection.apply(w).sum();
        CHECK(total == doctest::Approx(w[mesh.node_count() - 1] - w[0]).epsilon(1e-13));
    }

    const SparseOperator convection2d = assemble_convection(build_structured_2d(4));
    CHECK(convection2d.apply(Eigen::VectorXd::Ones(convection2d.dim)).lpNorm<Eigen::Infinity>() <=
          1e-13);
}

TEST_CASE("assembly is deterministic") {
    const Mesh2D mesh = build_structured_2d(5);
    const SparseOperator a = assemble_stiffness(mesh);
    const SparseOperator b = assemble_stiffness(mesh);
    REQUIRE(a.vals.size() == b.vals.size());
    for (std::size_t p = 0; p < a.vals.size(); ++p) CHECK(a.vals[p] == b.vals[p]);
}

TEST_CASE("1d burgers term") {
    const Mesh1D mesh = build_uniform_1d(6);

    SUBCASE("constant state gives exactly zero") {
        const Eigen::VectorXd constant = Eigen::VectorXd::Constant(mesh.node_count(), 0.7);
        const NonlinearTerm term = burgers_term(mesh, constant);
        for (int i = 0; i < mesh.node_count(); ++i) CHECK(term.residual[i] == 0.0);
    }

    SUBCASE("interpolant of x on one element integrates to [1/6, 1/3]") {
        const Mesh1D single = build_uniform_1d(1);
        Eigen::VectorXd linear(2);
        linear << 0.0, 1.0;
        const NonlinearTerm term = burgers_term(single, linear);
        CHECK(term.residual[0] == doctest::Approx(1.0 / 6).epsilon(1e-14));
        CHECK(term.residual[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));
    }

    SUBCASE("jacobian matches central differences") {
        std::mt19937 rng(17);
        for (const Mesh1D& m : {build_uniform_1d(5), test_helpers::handmade_nonuniform_1d()}) {
            for (int trial = 0; trial < 20; ++trial) {
                const Eigen::VectorXd u = random_state(m.node_count(), rng);
                const NonlinearTerm term = burgers_term(m, u);
                const Eigen::MatrixXd fd = fd_jacobian(
                    [&](const Eigen::VectorXd& v) { return burgers_term(m, v).residual; }, u);
                CHECK(max_relative_gap(term.jacobian.to_dense(), fd) <= 1e-6);
            }
        }
    }
}

TEST_CASE("2d burgers term") {
    const Mesh2D mesh = build_structured_2d(3);

    SUBCASE("constant state gives exactly zero") {
        const Eigen::VectorXd constant = Eigen::VectorXd::Constant(mesh.node_count(), -1.3);
        const NonlinearTerm term = burgers_term(mesh, constant);
        for (int i = 0; i < mesh.node_count(); ++i) CHECK(term.residual[i] == 0.0);
    }

    SUBCASE("jacobian matches central differences") {
        std::mt19937 rng(19);
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::VectorXd u = random_state(mesh.node_count(), rng);
            const NonlinearTerm term = burgers_term(mesh, u);
            const Eigen::MatrixXd fd = fd_jacobian(
                [&](const Eigen::VectorXd& v) { return burgers_term(mesh, v).residual; }, u);
            CHECK(max_relative_gap(term.jacobian.to_dense(), fd) <= 1e-6);
        }
    }
}

TEST_CASE("1d boundary feedback") {
    const BoundaryParams params = params_1d();

    SUBCASE("zero boundary values give zero") {
        Eigen::VectorXd u = Eigen::VectorXd::Zero(5);
        u[2] = 0.4;  // interior values do not matter
        const NonlinearTerm term = boundary_feedback_1d(u, params);
        for (int i = 0; i < 5; ++i) CHECK(term.residual[i] == 0.0);
    }

    SUBCASE("hand value at the left endpoint") {
        Eigen::VectorXd u = Eigen::VectorXd::Zero(5);
        u[0] = 0.3;
        const NonlinearTerm term = boundary_feedback_1d(u, params);
        // 1.1 * 0.3 + (2/0.9) * 0.027 = 0.39
        CHECK(term.residual[0] == doctest::Approx(0.39).epsilon(1e-14));
        CHECK(term.residual[4] == 0.0);
    }

    SUBCASE("residual is boundary-local, jacobian diagonal") {
        std::mt19937 rng(23);
        const Eigen::VectorXd u = random_state(7, rng);
        const NonlinearTerm term = boundary_feedback_1d(u, params);
        for (int i = 1; i < 6; ++i) CHECK(term.residual[i] == 0.0);
        CHECK(term.jacobian.nnz() == 2);
    }

    SUBCASE("jacobian matches central differences") {
        std::mt19937 rng(29);
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::VectorXd u = random_state(6, rng);
            const NonlinearTerm term = boundary_feedback_1d(u, params);
            const Eigen::MatrixXd fd = fd_jacobian(
                [&](const Eigen::VectorXd& v) { return boundary_feedback_1d(v, params).residual; },
                u, 1e-5);
            CHECK(max_relative_gap(term.jacobian.to_dense(), fd) <= 1e-8);
        }
    }

    SUBCASE("rejects invalid params") {
        BoundaryParams bad = params;
        bad.c0 = 0.0;
        CHECK_THROWS_AS(boundary_feedback_1d(Eigen::VectorXd::Zero(4), bad),
                        std::invalid_argument);
    }
}

TEST_CASE("2d boundary feedback") {
    const Mesh2D mesh = build_structured_2d(3);
    const BoundaryParams params = params_2d();

    SUBCASE("zero trace gives zero") {
        const NonlinearTerm term = boundary_feedback_2d(mesh, Eigen::VectorXd::Zero(mesh.node_count()), params);
        CHECK(term.residual.lpNorm<Eigen::Infinity>() == 0.0);
    }

    SUBCASE("constant trace sums to the perimeter formula") {
        const double kappa = 0.8;
        const Eigen::VectorXd u = Eigen::VectorXd::Constant(mesh.node_count(), kappa);
        const NonlinearTerm term = boundary_feedback_2d(mesh, u, params);
        const double expected =
            4.0 * (2.0 * (params.c2 + params.w_d) * kappa +
                   2.0 / (9.0 * params.c2) * kappa * kappa * kappa);
        CHECK(term.residual.sum() == doctest::Approx(expected).epsilon(1e-13));
    }

    SUBCASE("jacobian matches central differences") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            const Eigen::VectorXd u = random_state(mesh.node_count(), rng);
            const NonlinearTerm term = boundary_feedback_2d(mesh, u, params);
            const Eigen::MatrixXd fd = fd_jacobian(
                [&](const Eigen::VectorXd& v) {
                    return boundary_feedback_2d(mesh, v, params).residual;
                },
                u);
            CHECK(max_relative_gap(term.jacobian.to_dense(), fd) <= 1e-6);
        }
    }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "burgersfem/errors.hpp"
#include "burgersfem/models.hpp"
#include "test_helpers.hpp"

using namespace burgersfem;

namespace {

BoundaryParams example1_params() {
    BoundaryParams params;
    params.nu = 0.1;
    params.w_d = 1.0;
    params.c0 = 0.1;
    params.c1 = 0.1;
    return params;
}

}  // namespace

TEST_CASE("initial condition parsing") {
    CHECK(InitialCondition::parse("example1").name == "example1");
    CHECK(InitialCondition::parse("zero").name == "zero");
    const InitialCondition constant = InitialCondition::parse("constant(0.5)");
    CHECK(constant.name == "constant");
    CHECK(constant.constant_value == 0.5);
    CHECK(InitialCondition::parse("constant(-2e-1)").constant_value == doctest::Approx(-0.2));
    CHECK_THROWS_AS(InitialCondition::parse("sinusoid"), ConfigError);
    CHECK_THROWS_AS(InitialCondition::parse("constant(abc)"), ConfigError);
}

TEST_CASE("initial condition values") {
    const InitialCondition ex1 = InitialCondition::parse("example1");
    CHECK(ex1.evaluate_1d(0.5, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ex1.evaluate_1d(0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));

    const InitialCondition ex2 = InitialCondition::parse("example2");
    CHECK(ex2.evaluate_2d(0.5, 0.5, 2.0) == doctest::Approx(5.0 / 16 - 2.0).epsilon(1e-15));
    CHECK(ex2.evaluate_2d(0.0, 0.3, 2.0) == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("1d control inputs") {
    const BoundaryParams params = example1_params();

    Eigen::VectorXd w = Eigen::VectorXd::Zero(5);
    auto [v0_zero, v1_zero] = control_input_1d(w, params);
    CHECK(v0_zero == 0.0);
    CHECK(v1_zero == 0.0);

    w[0] = 0.3;
    auto [v0, v1_unchanged] = control_input_1d(w, params);
    // (1.1*0.3 + (2/0.9)*0.027) / 0.1 = 3.9
    CHECK(v0 == doctest::Approx(3.9).epsilon(1e-13));
    CHECK(v1_unchanged == 0.0);

    w[0] = 0.0;
    w[4] = 0.3;
    auto [v0_unchanged, v1] = control_input_1d(w, params);
    CHECK(v0_unchanged == 0.0);
    CHECK(v1 == doctest::Approx(-3.9).epsilon(1e-13));
}

TEST_CASE("control law odd symmetry at w_d = 0") {
    BoundaryParams params = example1_params();
    params.w_d = 0.0;
    Eigen::VectorXd plus = Eigen::VectorXd::Zero(3);
    Eigen::VectorXd minus = Eigen::VectorXd::Zero(3);
    for (double s : {0.2, 0.9, 1.7}) {
        plus[0] = s;
        minus[0] = -s;
        CHECK(control_input_1d(plus, params).first ==
              doctest::Approx(-control_input_1d(minus, params).first).epsilon(1e-14));
    }
}

TEST_CASE("2d control input") {
    BoundaryParams params;
    params.nu = 1.0;
    params.w_d = 2.0;
    params.c2 = 0.1;
    const Mesh2D mesh = build_structured_2d(4);

    SUBCASE("zero trace") {
        const BoundaryControl2D control =
            control_input_2d(mesh, Eigen::VectorXd::Zero(mesh.node_count()), params);
        CHECK(control.l2_norm == 0.0);
        CHECK(control.values.lpNorm<Eigen::Infinity>() == 0.0);
    }

    SUBCASE("constant trace has the hand norm") {
        const double kappa = 0.6;
        const Eigen::VectorXd w = Eigen::VectorXd::Constant(mesh.node_count(), kappa);
        const BoundaryControl2D control = control_input_2d(mesh, w, params);
        const double v2 = -(2.0 * (params.c2 + params.w_d) * kappa +
                            2.0 / (9.0 * params.c2) * kappa * kappa * kappa) /
                          params.nu;
        CHECK(control.values[0] == doctest::Approx(v2).epsilon(1e-14));
        CHECK(control.l2_norm == doctest::Approx(2.0 * std::abs(v2)).epsilon(1e-13));
    }

    SUBCASE("norm agrees with brute-force composite quadrature") {
        std::mt19937 rng(37);
        const Eigen::VectorXd w = test_helpers::random_state(mesh.node_count(), rng);
        const BoundaryControl2D control = control_input_2d(mesh, w, params);
        auto law = [&](double value) {
            return -(2.0 * (params.c2 + params.w_d) * value +
                     2.0 / (9.0 * params.c2) * value * value * value) /
                   params.nu;
        };
        // composite Simpson along every boundary edge of the P1 trace
        double integral = 0.0;
        const int panels = 2000;
        for (const auto& edge : mesh.boundary_edges) {
            const double len = std::hypot(mesh.vertices[edge[1]][0] - mesh.vertices[edge[0]][0],
                                          mesh.vertices[edge[1]][1] - mesh.vertices[edge[0]][1]);
            const double dh = 1.0 / panels;
            for (int p = 0; p < panels; ++p) {
                auto sq = [&](double t) {
                    const double value = law((1.0 - t) * w[edge[0]] + t * w[edge[1]]);
                    return value * value;
                };
                integral += len * dh / 6.0 *
                            (sq(p * dh) + 4.0 * sq((p + 0.5) * dh) + sq((p + 1) * dh));
            }
        }
        CHECK(control.l2_norm == doctest::Approx(std::sqrt(integral)).epsilon(1e-10));
    }
}

TEST_CASE("control error pair") {
    const BoundaryParams params = example1_params();
    Eigen::VectorXd w(4);
    w << -0.4, 0.1, 0.2, 0.9;
    auto [same0, same1] = control_error_pair_1d(w, -0.4, 0.9, params);
    CHECK(same0 == 0.0);
    CHECK(same1 == 0.0);

    auto [e0, e1] = control_error_pair_1d(w, -0.35, 0.9, params);
    CHECK(e0 > 0.0);
    CHECK(e1 == 0.0);
}

TEST_CASE("shift to physical variable") {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(4);
    const Eigen::VectorXd y = shift_to_physical(w, 1.0);
    for (int i = 0; i < 4; ++i) CHECK(y[i] == 1.0);

    std::mt19937 rng(41);
    const Eigen::VectorXd state = test_helpers::random_state(6, rng);
    const Eigen::VectorXd round_trip = shift_to_physical(state, 2.5).array() - 2.5;
    CHECK((round_trip - state).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("problem validation") {
    ProblemSpec problem;
    problem.dim = Dim::One;
    problem.params = example1_params();
    problem.controlled = true;
    problem.initial_condition = InitialCondition::parse("example1");
    CHECK_NOTHROW(problem.validate());

    ProblemSpec wrong_dim = problem;
    wrong_dim.initial_condition = InitialCondition::parse("example2");
    CHECK_THROWS_AS(wrong_dim.validate(), ConfigError);

    ProblemSpec negative_shift = problem;
    negative_shift.params.w_d = -0.5;
    CHECK_THROWS_AS(negative_shift.validate(), std::invalid_argument);

    // uncontrolled runs do not need gains
    ProblemSpec uncontrolled = problem;
    uncontrolled.controlled = false;
    uncontrolled.params.c0 = uncontrolled.params.c1 = 0.0;
    CHECK_NOTHROW(uncontrolled.validate());
}

TEST_CASE("nodal interpolation of initial data") {
    ProblemSpec problem;
    problem.dim = Dim::One;
    problem.params = example1_params();
    problem.initial_condition = InitialCondition::parse("example1");
    const Mesh1D mesh = build_uniform_1d(4);
    const Eigen::VectorXd w0 = interpolate_initial(problem, mesh);
    CHECK(w0[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(w0[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(w0[4] == doctest::Approx(-1.0).epsilon(1e-14));
}

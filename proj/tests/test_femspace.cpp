#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "stokesmini/benchmarks.hpp"
#include "stokesmini/femspace.hpp"
#include "stokesmini/mesh.hpp"
#include "stokesmini/solver.hpp"

using namespace stokesmini;

namespace {

const Rect kUnitSquare{0.0, 0.0, 1.0, 1.0};

Mesh single_reference_triangle() {
    Mesh m;
    m.domain = kUnitSquare;
    m.vertices = {{0, 0}, {1, 0}, {0, 1}};
    m.triangles = {Triangle{{0, 1, 2}}};
    m.boundary_vertex = {1, 1, 1};
    return m;
}

// Divergence-free linear velocity with constant pressure: contained in the
// MINI space, so the discrete solution must reproduce it at the nodes.
BenchmarkProblem linear_patch_problem() {
    BenchmarkProblem p;
    p.id = 0;
    p.name = "patch";
    p.domain = kUnitSquare;
    p.polynomial = true;
    p.velocity_degree = 1;
    p.pressure_degree = 0;
    p.forcing_degree = 0;
    p.velocity = [](Point2 q) { return Vec2{1.0 + 2.0 * q.x + 3.0 * q.y, -2.0 - 2.0 * q.y + 0.5 * q.x}; };
    p.pressure = [](Point2) { return 0.0; };
    p.velocity_gradient = [](Point2) {
        Mat2 g;
        g.m[0][0] = 2.0;
        g.m[0][1] = 3.0;
        g.m[1][0] = 0.5;
        g.m[1][1] = -2.0;
        return g;
    };
    p.forcing = [](Point2) { return Vec2{0.0, 0.0}; };
    p.boundary_velocity = [&p](Point2 q) {
        return Vec2{1.0 + 2.0 * q.x + 3.0 * q.y, -2.0 - 2.0 * q.y + 0.5 * q.x};
    };
    return p;
}

}  // namespace

TEST_CASE("eval_basis: nodal values, bubble, edge behaviour") {
    const Point2 a{0, 0}, b{1, 0}, c{0, 1};
    const auto at_bary = eval_basis(a, b, c, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    CHECK(at_bary.bubble == doctest::Approx(1.0 / 27.0).epsilon(1e-14));
    CHECK(at_bary.phi[0] + at_bary.phi[1] + at_bary.phi[2] == doctest::Approx(1.0));

    // vertices: phi_j = delta_ij, bubble = 0
    for (int i = 0; i < 3; ++i) {
        std::array<double, 3> bary{};
        bary[i] = 1.0;
        const auto v = eval_basis(a, b, c, bary);
        for (int j = 0; j < 3; ++j) CHECK(v.phi[j] == doctest::Approx(i == j ? 1.0 : 0.0));
        CHECK(v.bubble == 0.0);
    }

    // any edge point: bubble vanishes
    for (double t : {0.1, 0.5, 0.9}) {
        CHECK(eval_basis(a, b, c, {t, 1.0 - t, 0.0}).bubble == 0.0);
        CHECK(eval_basis(a, b, c, {0.0, t, 1.0 - t}).bubble == 0.0);
        CHECK(eval_basis(a, b, c, {1.0 - t, 0.0, t}).bubble == 0.0);
    }

    CHECK_THROWS_AS(eval_basis(a, b, c, {0.5, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(eval_basis(a, c, b, {0.3, 0.3, 0.4}), DegenerateTriangleError);
}

TEST_CASE("dof map shape and constraints") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const DofMap dofs(mesh);
    CHECK(dofs.velocity_size() == 2 * (mesh.n_vertices() + mesh.n_triangles()));
    CHECK(dofs.pressure_size() == mesh.n_vertices());
    int boundary = 0;
    for (int v = 0; v < mesh.n_vertices(); ++v) boundary += mesh.boundary_vertex[v] ? 1 : 0;
    CHECK(dofs.n_constrained() == 2 * boundary);
    // bubbles are never constrained
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        CHECK(!dofs.constrained[dofs.bubble_dof(0, t)]);
        CHECK(!dofs.constrained[dofs.bubble_dof(1, t)]);
    }
}

TEST_CASE("P1 stiffness block on the unit right triangle") {
    const Mesh mesh = single_reference_triangle();
    const SparseMatrix K = assemble_stiffness(mesh, 1.0, rule_for_degree(4));
    const double expect[3][3] = {{1.0, -0.5, -0.5}, {-0.5, 0.5, 0.0}, {-0.5, 0.0, 0.5}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(K.coeff(i, j) == doctest::Approx(expect[i][j]).epsilon(1e-13));
        }
    }
}

TEST_CASE("P1 stiffness rows sum to zero") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const SparseMatrix K = assemble_stiffness(mesh, 1.0, rule_for_degree(4));
    for (int i = 0; i < mesh.n_vertices(); ++i) {
        double row = 0.0;
        for (int j = 0; j < mesh.n_vertices(); ++j) row += K.coeff(i, j);
        CHECK(std::fabs(row) <= 1e-12);
    }
}

TEST_CASE("nodal-bubble stiffness coupling vanishes on random triangles") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    int tested = 0;
    while (tested < 30) {
        Point2 a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)}, c{coord(rng), coord(rng)};
        if (signed_area(a, b, c) < 0.05) continue;
        Mesh m;
        m.domain = {-3, -3, 3, 3};
        m.vertices = {a, b, c};
        m.triangles = {Triangle{{0, 1, 2}}};
        m.boundary_vertex = {1, 1, 1};
        const SparseMatrix K = assemble_stiffness(m, 1.0, rule_for_degree(4));
        const double scale = std::fabs(K.coeff(3, 3));
        for (int i = 0; i < 3; ++i) {
            CHECK(std::fabs(K.coeff(i, 3)) <= 1e-12 * std::max(1.0, scale));
            CHECK(std::fabs(K.coeff(3, i)) <= 1e-12 * std::max(1.0, scale));
        }
        ++tested;
    }
}

TEST_CASE("stiffness is symmetric and positive definite on the free dofs") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const SparseMatrix K = assemble_stiffness(mesh, 1.0, rule_for_degree(4));
    const DofMap dofs(mesh);
    const int n = K.rows();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double kij = K.coeff(i, j);
            const double kji = K.coeff(j, i);
            CHECK(std::fabs(kij - kji) <= 1e-14 * std::max(1.0, std::fabs(kij)));
        }
    }
    // assemble dense restriction to free scalar dofs (interior vertices + bubbles)
    std::vector<int> free_scalar;
    for (int v = 0; v < mesh.n_vertices(); ++v) {
        if (!mesh.boundary_vertex[v]) free_scalar.push_back(v);
    }
    for (int t = 0; t < mesh.n_triangles(); ++t) free_scalar.push_back(mesh.n_vertices() + t);
    Eigen::MatrixXd A(free_scalar.size(), free_scalar.size());
    for (std::size_t i = 0; i < free_scalar.size(); ++i) {
        for (std::size_t j = 0; j < free_scalar.size(); ++j) {
            A(i, j) = K.coeff(free_scalar[i], free_scalar[j]);
        }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    CHECK(llt.info() == Eigen::Success);  // Cholesky succeeds iff positive definite
}

TEST_CASE("assembly is bitwise reproducible") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.15);
    const SparseMatrix a = assemble_stiffness(mesh, 1.0, rule_for_degree(4));
    const SparseMatrix b = assemble_stiffness(mesh, 1.0, rule_for_degree(4));
    REQUIRE(a.nnz() == b.nnz());
    for (int k = 0; k < a.nnz(); ++k) {
        CHECK(a.values()[k] == b.values()[k]);
        CHECK(a.col_idx()[k] == b.col_idx()[k]);
    }
}

TEST_CASE("divergence block: constant fields and constant pressure") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const DofMap dofs(mesh);
    const SparseMatrix B = assemble_divergence(mesh, rule_for_degree(4));

    // constant velocity (all nodal coefficients equal, bubbles zero) -> B u = 0
    std::vector<double> u(dofs.velocity_size(), 0.0);
    for (int v = 0; v < dofs.n_vertices; ++v) {
        u[dofs.nodal_dof(0, v)] = 3.25;
        u[dofs.nodal_dof(1, v)] = -1.5;
    }
    const auto bu = B.multiply(u);
    for (const double r : bu) CHECK(std::fabs(r) <= 1e-12);

    // constant pressure against B^T annihilates interior nodal and all bubble dofs
    std::vector<double> ones(dofs.pressure_size(), 1.0);
    const auto bt = B.transpose().multiply(ones);
    for (int t = 0; t < dofs.n_triangles; ++t) {
        CHECK(std::fabs(bt[dofs.bubble_dof(0, t)]) <= 1e-13);
        CHECK(std::fabs(bt[dofs.bubble_dof(1, t)]) <= 1e-13);
    }
    for (int v = 0; v < dofs.n_vertices; ++v) {
        if (mesh.boundary_vertex[v]) continue;
        CHECK(std::fabs(bt[dofs.nodal_dof(0, v)]) <= 1e-13);
        CHECK(std::fabs(bt[dofs.nodal_dof(1, v)]) <= 1e-13);
    }
}

TEST_CASE("divergence block on one triangle matches the boundary flux") {
    // b(psi, 1) = -int div(psi) = -(boundary flux of psi).  For the nodal
    // basis phi_1 on the unit right triangle, d(phi_1)/dx = -1, so
    // b((phi_1, 0), 1) = area = 1/2.
    const Mesh mesh = single_reference_triangle();
    const SparseMatrix B = assemble_divergence(mesh, rule_for_degree(4));
    const double sum_col0 = B.coeff(0, 0) + B.coeff(1, 0) + B.coeff(2, 0);
    CHECK(sum_col0 == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("load assembly oracles") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const DofMap dofs(mesh);

    // zero forcing -> zero load
    const auto zero = assemble_load(mesh, [](Point2) { return Vec2{0, 0}; }, rule_for_degree(4));
    for (const double v : zero) CHECK(v == 0.0);

    // unit x-forcing: bubble entry = area/60, nodal entry = incident area / 3
    const auto load = assemble_load(mesh, [](Point2) { return Vec2{1, 0}; }, rule_for_degree(4));
    std::vector<double> incident(mesh.n_vertices(), 0.0);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto c = mesh.corners(t);
        const double area = signed_area(c[0], c[1], c[2]);
        for (int k = 0; k < 3; ++k) incident[mesh.triangles[t].v[k]] += area;
        CHECK(load[dofs.bubble_dof(0, t)] == doctest::Approx(area / 60.0).epsilon(1e-12));
        CHECK(load[dofs.bubble_dof(1, t)] == 0.0);
    }
    for (int v = 0; v < mesh.n_vertices(); ++v) {
        CHECK(load[dofs.nodal_dof(0, v)] == doctest::Approx(incident[v] / 3.0).epsilon(1e-12));
        CHECK(load[dofs.nodal_dof(1, v)] == 0.0);
    }
}

TEST_CASE("boundary values for problems 1, 5, 7") {
    // problem 1: homogeneous
    {
        const Mesh mesh = generate_mesh(problem(1).domain, 0.2);
        const DofMap dofs(mesh);
        const auto g = boundary_velocity_values(mesh, dofs, problem(1).boundary_velocity);
        for (const double v : g) CHECK(v == 0.0);
    }
    // problem 5: top edge carries x^4 - 2x^3 + x^2
    {
        const Mesh mesh = generate_mesh(problem(5).domain, 0.2);
        const DofMap dofs(mesh);
        const auto g = boundary_velocity_values(mesh, dofs, problem(5).boundary_velocity);
        for (int v = 0; v < mesh.n_vertices(); ++v) {
            const Point2 p = mesh.vertices[v];
            if (mesh.boundary_vertex[v] && p.y == 1.0) {
                const double expect = std::pow(p.x, 4) - 2 * std::pow(p.x, 3) + p.x * p.x;
                CHECK(g[dofs.nodal_dof(0, v)] == doctest::Approx(expect).epsilon(1e-14));
                CHECK(g[dofs.nodal_dof(1, v)] == 0.0);
            } else if (mesh.boundary_vertex[v]) {
                CHECK(g[dofs.nodal_dof(0, v)] == 0.0);
            }
        }
    }
    // problem 7 at the corner (1,1)
    {
        const Mesh mesh = generate_mesh(problem(7).domain, 0.2);
        const DofMap dofs(mesh);
        const auto g = boundary_velocity_values(mesh, dofs, problem(7).boundary_velocity);
        int corner = -1;
        for (int v = 0; v < mesh.n_vertices(); ++v) {
            if (mesh.vertices[v].x == 1.0 && mesh.vertices[v].y == 1.0) corner = v;
        }
        REQUIRE(corner >= 0);
        CHECK(g[dofs.nodal_dof(0, corner)] == doctest::Approx(16.0));
        CHECK(g[dofs.nodal_dof(1, corner)] == doctest::Approx(16.0));
    }
}

TEST_CASE("augmented system shape and mean-constraint action") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const AssembledSystem sys = build_saddle_system(mesh, problem(1));
    const int expected =
        sys.reduced.n_free_velocity + sys.reduced.n_pressure + 1;
    CHECK(sys.reduced.matrix.rows() == expected);
    CHECK(sys.reduced.matrix.cols() == expected);
    CHECK(sys.reduced.n_free_velocity ==
          sys.dofs.velocity_size() - sys.dofs.n_constrained());

    // c applied to the constant pressure vector gives |Omega|
    double total = 0.0;
    for (const double cq : sys.mean_constraint) total += cq;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("without the augmentation the saddle matrix is singular") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.25);
    const AssembledSystem sys = build_saddle_system(mesh, problem(1));
    // strip the multiplier row/column: the constant-pressure null vector appears
    const int n = sys.reduced.total_unknowns() - 1;
    std::vector<Triplet> trips;
    const auto rp = sys.reduced.matrix.row_ptr();
    const auto ci = sys.reduced.matrix.col_idx();
    const auto va = sys.reduced.matrix.values();
    for (int r = 0; r < n; ++r) {
        for (int k = rp[r]; k < rp[r + 1]; ++k) {
            if (ci[k] < n) trips.push_back({r, ci[k], va[k]});
        }
    }
    const SparseMatrix unaugmented = SparseMatrix::from_triplets(n, n, trips);
    std::vector<double> rhs(n, 1.0);
    CHECK_THROWS_AS(direct_solve(unaugmented, rhs), SingularMatrixError);

    // the null space is spanned by the constant-pressure vector (0, 1_p)
    std::vector<double> null_vec(n, 0.0);
    for (int q = 0; q < sys.reduced.n_pressure; ++q) {
        null_vec[sys.reduced.n_free_velocity + q] = 1.0;
    }
    const auto image = unaugmented.multiply(null_vec);
    for (const double v : image) CHECK(std::fabs(v) <= 1e-12);
}

TEST_CASE("pressure mean vanishes after a solve") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const AssembledSystem sys = build_saddle_system(mesh, problem(1));
    const auto x = direct_solve(sys.reduced.matrix, sys.reduced.rhs);
    DiscreteSolution sol;
    sys.expand(x, sol.velocity, sol.pressure, sol.multiplier);
    double mean = 0.0;
    for (int q = 0; q < sys.dofs.pressure_size(); ++q) {
        mean += sys.mean_constraint[q] * sol.pressure[q];
    }
    CHECK(std::fabs(mean) <= 1e-10);
}

TEST_CASE("Galerkin orthogonality of the discrete residual") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.25);
    const AssembledSystem sys = build_saddle_system(mesh, problem(1));
    const auto x = direct_solve(sys.reduced.matrix, sys.reduced.rhs);
    const auto residual = sys.reduced.matrix.multiply(x);
    for (int i = 0; i < sys.reduced.total_unknowns(); ++i) {
        CHECK(std::fabs(residual[i] - sys.reduced.rhs[i]) <= 1e-9);
    }
}

TEST_CASE("patch test: linear velocity and constant pressure are reproduced") {
    const BenchmarkProblem patch = linear_patch_problem();
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const AssembledSystem sys = build_saddle_system(mesh, patch);
    const auto x = direct_solve(sys.reduced.matrix, sys.reduced.rhs);
    DiscreteSolution sol;
    sys.expand(x, sol.velocity, sol.pressure, sol.multiplier);
    for (int v = 0; v < mesh.n_vertices(); ++v) {
        const Vec2 exact = patch.velocity(mesh.vertices[v]);
        CHECK(std::fabs(sol.velocity[sys.dofs.nodal_dof(0, v)] - exact.x) <= 1e-10);
        CHECK(std::fabs(sol.velocity[sys.dofs.nodal_dof(1, v)] - exact.y) <= 1e-10);
    }
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        CHECK(std::fabs(sol.velocity[sys.dofs.bubble_dof(0, t)]) <= 1e-9);
        CHECK(std::fabs(sol.velocity[sys.dofs.bubble_dof(1, t)]) <= 1e-9);
    }
    for (const double p : sol.pressure) CHECK(std::fabs(p) <= 1e-9);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stokesmini/benchmarks.hpp"
#include "stokesmini/femspace.hpp"
#include "stokesmini/mesh.hpp"
#include "stokesmini/analysis.hpp"
#include "stokesmini/solver.hpp"

using namespace stokesmini;

namespace {

SparseMatrix identity(int n) {
    std::vector<Triplet> t;
    for (int i = 0; i < n; ++i) t.push_back({i, i, 1.0});
    return SparseMatrix::from_triplets(n, n, t);
}

double rel_residual(const SparseMatrix& A, std::span<const double> x,
                    std::span<const double> b) {
    const auto ax = A.multiply(x);
    double rn = 0.0, bn = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        rn += (b[i] - ax[i]) * (b[i] - ax[i]);
        bn += b[i] * b[i];
    }
    return std::sqrt(rn) / std::sqrt(bn);
}

SparseMatrix random_spd(int n, std::mt19937& rng) {
    // diagonally dominant random matrix: well-conditioned and nonsingular
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Triplet> t;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double v = 0.1 * u(rng);
            row += std::fabs(v);
            t.push_back({i, j, v});
        }
        t.push_back({i, i, row + 1.0 + std::fabs(u(rng))});
    }
    return SparseMatrix::from_triplets(n, n, t);
}

}  // namespace

TEST_CASE("sparse matrix basics") {
    std::vector<Triplet> t = {{0, 1, 2.0}, {0, 1, 3.0}, {1, 0, -1.0}, {0, 0, 1.0}, {1, 1, 4.0}};
    const SparseMatrix m = SparseMatrix::from_triplets(2, 2, t);
    CHECK(m.coeff(0, 1) == 5.0);  // duplicates summed
    CHECK(m.coeff(0, 0) == 1.0);
    CHECK(m.nnz() == 4);
    std::vector<double> x = {1.0, 2.0};
    const auto y = m.multiply(x);
    CHECK(y[0] == doctest::Approx(11.0));
    CHECK(y[1] == doctest::Approx(7.0));
    const SparseMatrix mt = m.transpose();
    CHECK(mt.coeff(1, 0) == 5.0);
    CHECK(mt.coeff(0, 1) == -1.0);

    // exact cancellation is not stored
    std::vector<Triplet> z = {{0, 0, 1.0}, {0, 0, -1.0}, {1, 1, 2.0}};
    CHECK(SparseMatrix::from_triplets(2, 2, z).nnz() == 1);
}

TEST_CASE("ilu: identity and diagonal matrices factor to themselves") {
    const SparseMatrix I = identity(5);
    const IluPreconditioner pi = ilu_factor(I, 0.0);
    std::vector<double> r = {1, 2, 3, 4, 5}, z(5);
    pi.apply(r, z);
    for (int i = 0; i < 5; ++i) CHECK(z[i] == doctest::Approx(r[i]));

    std::vector<Triplet> dt = {{0, 0, 2.0}, {1, 1, -4.0}, {2, 2, 0.5}};
    const SparseMatrix D = SparseMatrix::from_triplets(3, 3, dt);
    const IluPreconditioner pd = ilu_factor(D, 0.0);
    std::vector<double> rd = {2.0, -8.0, 1.0}, zd(3);
    pd.apply(rd, zd);
    CHECK(zd[0] == doctest::Approx(1.0));
    CHECK(zd[1] == doctest::Approx(2.0));
    CHECK(zd[2] == doctest::Approx(2.0));
}

TEST_CASE("ilu reports zero pivots") {
    std::vector<Triplet> t = {{0, 1, 1.0}, {1, 0, 1.0}};  // zero diagonal, no fill reaches (0,0)
    const SparseMatrix A = SparseMatrix::from_triplets(2, 2, t);
    try {
        ilu_factor(A, 0.0);
        FAIL("expected PivotFailureError");
    } catch (const PivotFailureError& e) {
        CHECK(e.row == 0);
    }
}

TEST_CASE("ilu with droptol 0 is an exact factorization") {
    std::mt19937 rng(5150);
    const SparseMatrix A = random_spd(40, rng);
    std::vector<double> b(40);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : b) v = u(rng);

    const IluPreconditioner P = ilu_factor(A, 0.0);
    SolverConfig cfg;
    cfg.tol = 1e-13;
    const auto [x, report] = gmres(A, b, &P, cfg);
    CHECK(report.converged);
    CHECK(report.iterations <= 2);
    const auto xd = direct_solve(A, b);
    for (int i = 0; i < 40; ++i) {
        CHECK(std::fabs(x[i] - xd[i]) <= 1e-9 * std::max(1.0, std::fabs(xd[i])));
    }
}

TEST_CASE("gmres on the identity converges in one iteration") {
    const SparseMatrix I = identity(7);
    std::vector<double> b = {1, -2, 3, -4, 5, -6, 7};
    SolverConfig cfg;
    const auto [x, report] = gmres(I, b, nullptr, cfg);
    CHECK(report.converged);
    CHECK(report.iterations == 1);
    for (int i = 0; i < 7; ++i) CHECK(x[i] == doctest::Approx(b[i]).epsilon(1e-13));
}

TEST_CASE("gmres handles the zero right-hand side") {
    const SparseMatrix I = identity(4);
    std::vector<double> b(4, 0.0);
    const auto [x, report] = gmres(I, b, nullptr, SolverConfig{});
    CHECK(report.converged);
    for (const double v : x) CHECK(v == 0.0);
}

TEST_CASE("gmres residual history is monotonically non-increasing (full GMRES)") {
    std::mt19937 rng(99);
    const SparseMatrix A = random_spd(60, rng);
    std::vector<double> b(60);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : b) v = u(rng);
    SolverConfig cfg;
    cfg.tol = 1e-12;
    const auto [x, report] = gmres(A, b, nullptr, cfg);
    CHECK(report.converged);
    for (std::size_t i = 1; i < report.residual_history.size(); ++i) {
        CHECK(report.residual_history[i] <= report.residual_history[i - 1] * (1.0 + 1e-12));
    }
    // converged flag implies the tolerance was really met
    CHECK(rel_residual(A, x, b) <= cfg.tol * 1.01);
}

TEST_CASE("restarted gmres reaches the same solution") {
    std::mt19937 rng(314);
    const SparseMatrix A = random_spd(80, rng);
    std::vector<double> b(80);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : b) v = u(rng);
    SolverConfig cfg;
    cfg.tol = 1e-11;
    cfg.restart = 5;
    const auto [x, report] = gmres(A, b, nullptr, cfg);
    CHECK(report.converged);
    CHECK(rel_residual(A, x, b) <= cfg.tol * 1.01);
    const auto xd = direct_solve(A, b);
    for (int i = 0; i < 80; ++i) {
        CHECK(std::fabs(x[i] - xd[i]) <= 1e-8 * std::max(1.0, std::fabs(xd[i])));
    }
}

TEST_CASE("gmres non-convergence carries the best iterate and history") {
    std::mt19937 rng(12);
    const SparseMatrix A = random_spd(50, rng);
    std::vector<double> b(50, 1.0);
    SolverConfig cfg;
    cfg.tol = 1e-15;
    cfg.max_iterations = 3;
    const auto [x, report] = gmres(A, b, nullptr, cfg);
    CHECK(!report.converged);
    CHECK(report.iterations == 3);
    CHECK(report.residual_history.size() == 3);
    CHECK(rel_residual(A, x, b) <= 1.0);  // some progress from x0 = 0
}

TEST_CASE("direct solve: diagonal system and residual quality") {
    std::vector<Triplet> t = {{0, 0, 2.0}, {1, 1, 3.0}};
    const SparseMatrix A = SparseMatrix::from_triplets(2, 2, t);
    std::vector<double> b = {2.0, 3.0};
    const auto x = direct_solve(A, b);
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(1.0));

    std::mt19937 rng(7);
    const SparseMatrix R = random_spd(50, rng);
    std::vector<double> rb(50);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (auto& v : rb) v = u(rng);
    const auto xr = direct_solve(R, rb);
    CHECK(rel_residual(R, xr, rb) <= 1e-12);
}

TEST_CASE("gmres+ilut matches the direct solver on the problem-1 system") {
    const Mesh mesh = generate_mesh(problem(1).domain, 0.2);
    const AssembledSystem sys = build_saddle_system(mesh, problem(1));
    const auto& A = sys.reduced.matrix;
    const auto& b = sys.reduced.rhs;

    const auto xd = direct_solve(A, b);
    SolverConfig cfg = default_solver_config(1);
    const auto [x, report] = solve_with_fallback(A, b, cfg);
    CHECK(report.converged);
    CHECK(report.relative_residual <= cfg.tol);
    double scale = 0.0;
    for (const double v : xd) scale = std::max(scale, std::fabs(v));
    for (std::size_t i = 0; i < xd.size(); ++i) {
        CHECK(std::fabs(x[i] - xd[i]) <= 1e-8 * std::max(scale, 1.0));
    }
}

TEST_CASE("achieved residuals: problems 1-5 reach 1e-10 on a coarse mesh") {
    for (int id : {1, 2, 3, 4, 5}) {
        CAPTURE(id);
        const Mesh mesh = generate_mesh(problem(id).domain, 0.2);
        const AssembledSystem sys = build_saddle_system(mesh, problem(id));
        const auto [x, report] =
            solve_with_fallback(sys.reduced.matrix, sys.reduced.rhs, default_solver_config(id));
        CHECK(report.converged);
        CHECK(report.relative_residual <= 1e-10);
    }
}

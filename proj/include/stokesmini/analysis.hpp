#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "stokesmini/benchmarks.hpp"
#include "stokesmini/femspace.hpp"
#include "stokesmini/mesh.hpp"
#include "stokesmini/solver.hpp"

namespace stokesmini {

// Continuous piecewise-linear fields, one value per vertex.
struct P1ScalarField {
    std::vector<double> values;
};
struct P1VectorField {
    std::vector<Vec2> values;
};

P1ScalarField nodal_interpolant(const std::function<double(Point2)>& f, const Mesh& mesh);
P1VectorField nodal_interpolant(const std::function<Vec2(Point2)>& f, const Mesh& mesh);

// The linear / bubble split of a computed velocity: u_h = u_hl + u_hb.
struct VelocitySplit {
    P1VectorField linear;            // vertex coefficients
    std::vector<Vec2> bubble;        // one bubble coefficient pair per triangle
};

VelocitySplit split_velocity(const DiscreteSolution& solution, const DofMap& dofs);

// Pointwise evaluators over one triangle of the mesh.  Each takes the
// triangle index, barycentric coordinates, and the mapped point.
using ScalarEvaluator = std::function<double(int, const std::array<double, 3>&, Point2)>;
using VectorEvaluator = std::function<Vec2(int, const std::array<double, 3>&, Point2)>;
using GradientEvaluator = std::function<Mat2(int, const std::array<double, 3>&, Point2)>;

// Ready-made evaluators.
VectorEvaluator evaluate_exact(const std::function<Vec2(Point2)>& u);
GradientEvaluator evaluate_exact_gradient(const std::function<Mat2(Point2)>& grad);
ScalarEvaluator evaluate_exact_scalar(const std::function<double(Point2)>& p);
VectorEvaluator evaluate_mini_velocity(const Mesh& mesh, const DofMap& dofs,
                                       std::span<const double> velocity);
GradientEvaluator evaluate_mini_gradient(const Mesh& mesh, const DofMap& dofs,
                                         std::span<const double> velocity);
ScalarEvaluator evaluate_mini_divergence(const Mesh& mesh, const DofMap& dofs,
                                         std::span<const double> velocity);
VectorEvaluator evaluate_p1(const Mesh& mesh, const P1VectorField& field);
GradientEvaluator evaluate_p1_gradient(const Mesh& mesh, const P1VectorField& field);
ScalarEvaluator evaluate_p1_divergence(const Mesh& mesh, const P1VectorField& field);
ScalarEvaluator evaluate_p1_scalar(const Mesh& mesh, const P1ScalarField& field);

// L2 norm of the difference of two fields: sqrt(sum_T int_T |a-b|^2).
double error_L2(const VectorEvaluator& a, const VectorEvaluator& b, const Mesh& mesh,
                const QuadratureRule& rule);
double error_L2(const ScalarEvaluator& a, const ScalarEvaluator& b, const Mesh& mesh,
                const QuadratureRule& rule);

enum class H1Mode { seminorm, norm };

// H1 distance from values and gradients; norm mode adds the L2 part.
double error_H1(const VectorEvaluator& a, const GradientEvaluator& grad_a,
                const VectorEvaluator& b, const GradientEvaluator& grad_b, const Mesh& mesh,
                const QuadratureRule& rule, H1Mode mode);

// L2 norm of a scalar field (used for the velocity divergence).
double div_L2(const ScalarEvaluator& divergence, const Mesh& mesh, const QuadratureRule& rule);

// Least-squares slope of log(error) against log(h).  Requires >= 3 pairs
// with positive entries; throws std::domain_error otherwise.
double fit_rate(std::span<const std::pair<double, double>> h_error_pairs);

// Every error quantity of one solve on one mesh.
struct ErrorReport {
    double h = 0.0;
    int vertices = 0;
    int triangles = 0;

    double err_u_L2 = 0.0;    // |u - u_h|_L2
    double err_u_H1 = 0.0;    // |u - u_h|_H1 (full norm)
    double err_ul_L2 = 0.0;   // |u - u_hl|_L2
    double err_ul_H1 = 0.0;   // |u - u_hl|_H1
    double err_ihu_L2 = 0.0;  // |i_h u - u_hl|_L2
    double err_ihu_H1 = 0.0;  // |i_h u - u_hl|_H1
    double err_p_L2 = 0.0;    // |P - P_h|_L2
    double div_uh = 0.0;      // |div u_h|_L2
    double div_uhl = 0.0;     // |div u_hl|_L2

    // seminorm companions of the H1 quantities above
    double err_u_H1_semi = 0.0;
    double err_ul_H1_semi = 0.0;
    double err_ihu_H1_semi = 0.0;

    int solver_iterations = 0;
    double solver_residual = 0.0;
    bool solver_converged = false;
    std::string solver_method;
};

struct ErrorRatios {
    double h1 = 0.0;   // err_u_H1 / err_ul_H1
    double l2 = 0.0;   // err_u_L2 / err_ul_L2
    double div = 0.0;  // div_uh / div_uhl
};

// Throws Error when a denominator vanishes.
ErrorRatios error_ratios(const ErrorReport& report);

// Fitted log-log rates, one per Table-style error column plus the two
// divergence norms.
struct RateSet {
    double u_L2 = 0.0;
    double u_H1 = 0.0;
    double p_L2 = 0.0;
    double ihu_L2 = 0.0;
    double ihu_H1 = 0.0;
    double ul_L2 = 0.0;
    double ul_H1 = 0.0;
    double div_uh = 0.0;
    double div_uhl = 0.0;
};

struct ConvergenceStudy {
    int problem_id = 0;
    std::vector<double> h0_levels;
    std::vector<ErrorReport> levels;  // one per mesh level, h strictly decreasing
    RateSet rates;
};

// Solves one problem on one generated mesh and assembles the error report.
ErrorReport run_level(const BenchmarkProblem& problem, const Mesh& mesh,
                      const SolverConfig& config);

// Errors for an externally computed solution (mesh + solution reuse).
ErrorReport compute_errors(const BenchmarkProblem& problem, const Mesh& mesh,
                           const DofMap& dofs, const DiscreteSolution& solution);

// Generates the mesh sequence, runs every level, and fits all rates.
ConvergenceStudy run_study(const BenchmarkProblem& problem, std::span<const double> h0_levels,
                           const SolverConfig& config, unsigned seed = 0);

RateSet fit_rates(std::span<const ErrorReport> levels);

// Per-problem solver tolerance: tighter for the enclosed/no-through-flow
// problems (1-5), looser for the inflow/outflow ones (6-7).
SolverConfig default_solver_config(int problem_id);

}  // namespace stokesmini

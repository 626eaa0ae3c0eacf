#pragma once

#include <functional>
#include <string>

#include "stokesmini/geometry.hpp"
#include "stokesmini/quadrature.hpp"

namespace stokesmini {

// One manufactured Stokes test case: exact fields, forcing rho*f (with
// mu = rho = 1), Dirichlet boundary data, and polynomial metadata.
// The exact velocity is divergence-free, the pressure has zero mean over the
// domain, and -mu*lap(u) + grad(P) = rho*f holds identically.
struct BenchmarkProblem {
    int id = 0;
    std::string name;
    Rect domain;

    bool polynomial = false;
    int velocity_degree = 0;  // max total degree per field when polynomial
    int pressure_degree = 0;
    int forcing_degree = 0;

    std::function<Vec2(Point2)> velocity;
    std::function<double(Point2)> pressure;
    std::function<Mat2(Point2)> velocity_gradient;  // m[i][j] = du_i/dx_j
    std::function<Vec2(Point2)> forcing;            // rho*f as printed
    std::function<Vec2(Point2)> boundary_velocity;  // per-edge Dirichlet data

    IntegrandMeta velocity_meta() const { return {polynomial, velocity_degree}; }
    IntegrandMeta pressure_meta() const { return {polynomial, pressure_degree}; }
    IntegrandMeta forcing_meta() const { return {polynomial, forcing_degree}; }
};

// The seven benchmark problems; throws std::invalid_argument for other ids.
const BenchmarkProblem& problem(int id);

// Residuals of the manufactured solution measured by oracles that do not
// reuse the hand-coded derivatives: divergence and momentum residuals use
// Richardson-extrapolated central differences in extended precision at
// quasi-random interior points, the pressure integral uses the degree-20
// quadrature, and the boundary data is compared against the exact trace.
struct ManufacturedReport {
    int samples = 0;
    double max_divergence = 0.0;
    double max_momentum_residual = 0.0;
    double pressure_integral = 0.0;
    double max_boundary_mismatch = 0.0;

    bool within_tolerances(double div_tol = 1e-10, double momentum_tol = 1e-8,
                           double pressure_tol = 1e-8, double boundary_tol = 1e-10) const {
        return max_divergence <= div_tol && max_momentum_residual <= momentum_tol &&
               std::fabs(pressure_integral) <= pressure_tol &&
               max_boundary_mismatch <= boundary_tol;
    }
};

ManufacturedReport verify_manufactured(const BenchmarkProblem& problem, int n_samples);

}  // namespace stokesmini

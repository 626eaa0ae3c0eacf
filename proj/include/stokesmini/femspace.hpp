#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "stokesmini/benchmarks.hpp"
#include "stokesmini/mesh.hpp"
#include "stokesmini/quadrature.hpp"
#include "stokesmini/sparse.hpp"

namespace stokesmini {

// MINI velocity basis on one triangle: three linear nodal functions (equal to
// the barycentric coordinates) plus the cubic bubble phi1*phi2*phi3, which
// vanishes on all edges.
struct MiniBasisValues {
    std::array<double, 3> phi{};
    std::array<Vec2, 3> grad_phi{};  // constant over the triangle
    double bubble = 0.0;
    Vec2 grad_bubble{};
};

// Throws DegenerateTriangleError for non-positive area and
// std::invalid_argument when the barycentric coordinates do not sum to 1.
MiniBasisValues eval_basis(Point2 a, Point2 b, Point2 c, const std::array<double, 3>& bary);

// Velocity unknowns: one scalar space of size (#vertices + #triangles) per
// component, nodal coefficients first, bubbles after; the x block precedes
// the y block.  Pressure unknowns: one per vertex.  Dirichlet constraints
// pin both velocity components at boundary vertices; bubbles are never
// constrained.
struct DofMap {
    int n_vertices = 0;
    int n_triangles = 0;
    std::vector<std::uint8_t> constrained;  // per velocity dof

    DofMap() = default;
    explicit DofMap(const Mesh& mesh);

    int scalar_size() const { return n_vertices + n_triangles; }
    int velocity_size() const { return 2 * scalar_size(); }
    int pressure_size() const { return n_vertices; }
    int nodal_dof(int component, int vertex) const {
        return component * scalar_size() + vertex;
    }
    int bubble_dof(int component, int triangle) const {
        return component * scalar_size() + n_vertices + triangle;
    }
    int n_constrained() const;
};

// Scalar stiffness block K[i][j] = mu * int grad(psi_i) . grad(psi_j); both
// velocity components share it.  Size (nv+nt) x (nv+nt).
SparseMatrix assemble_stiffness(const Mesh& mesh, double mu, const QuadratureRule& rule);

// Divergence coupling B[q][v] = -int q_h div(psi_v): pressure basis against
// every velocity basis field of both components.  Size nv x 2(nv+nt).
SparseMatrix assemble_divergence(const Mesh& mesh, const QuadratureRule& rule);

// Load F[v] = int f . psi_v over all velocity dofs.
std::vector<double> assemble_load(const Mesh& mesh, const std::function<Vec2(Point2)>& forcing,
                                  const QuadratureRule& rule);

// Zero-mean pressure constraint coefficients c_q = int q_h (= sum of
// one third of each incident triangle area).
std::vector<double> pressure_mean_vector(const Mesh& mesh);

// Boundary data interpolated at boundary vertices, full velocity indexing
// (zero on free dofs).
std::vector<double> boundary_velocity_values(const Mesh& mesh, const DofMap& dofs,
                                             const std::function<Vec2(Point2)>& g);

// Square augmented system on the free unknowns:
//   [ A_ff  B_f^T  0 ] [u_f]   [F_f - A_fc g_c]
//   [ B_f   0      c ] [p  ] = [-B_c g_c      ]
//   [ 0     c^T    0 ] [lam]   [0             ]
// The multiplier row enforces the zero pressure mean.
struct ReducedSaddleSystem {
    SparseMatrix matrix;
    std::vector<double> rhs;
    std::vector<int> free_dofs;       // reduced index -> full velocity dof
    std::vector<int> reduced_index;   // full velocity dof -> reduced (-1 if constrained)
    int n_free_velocity = 0;
    int n_pressure = 0;

    int total_unknowns() const { return n_free_velocity + n_pressure + 1; }
};

ReducedSaddleSystem apply_dirichlet(const DofMap& dofs, const SparseMatrix& stiffness_scalar,
                                    const SparseMatrix& divergence,
                                    const std::vector<double>& mean_constraint,
                                    const std::vector<double>& load,
                                    const std::vector<double>& boundary_values);

// Everything assembled for one (mesh, problem) pair.
struct AssembledSystem {
    DofMap dofs;
    double mu = 1.0;
    SparseMatrix stiffness_scalar;        // shared velocity-velocity block
    SparseMatrix divergence;              // B
    std::vector<double> mean_constraint;  // c
    std::vector<double> load;             // F
    std::vector<double> boundary_values;  // g (full velocity indexing)
    ReducedSaddleSystem reduced;

    // Expands a reduced solution vector into full velocity/pressure fields.
    void expand(std::span<const double> x, std::vector<double>& velocity,
                std::vector<double>& pressure, double& multiplier) const;
};

AssembledSystem build_saddle_system(const Mesh& mesh, const BenchmarkProblem& problem,
                                    double mu = 1.0);

// Velocity coefficients (nodal + bubble, both components), nodal pressure,
// and the multiplier from one solve.
struct DiscreteSolution {
    std::vector<double> velocity;
    std::vector<double> pressure;
    double multiplier = 0.0;
};

}  // namespace stokesmini

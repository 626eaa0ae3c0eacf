#include "stokesmini/femspace.hpp"

#include <cmath>
#include <stdexcept>

namespace stokesmini {

MiniBasisValues eval_basis(Point2 a, Point2 b, Point2 c, const std::array<double, 3>& bary) {
    const double area2 = 2.0 * signed_area(a, b, c);
    if (!(area2 > 0.0)) {
        throw DegenerateTriangleError("eval_basis: non-positive triangle area");
    }
    if (std::fabs(bary[0] + bary[1] + bary[2] - 1.0) > 1e-12) {
        throw std::invalid_argument("eval_basis: barycentric coordinates must sum to 1");
    }
    MiniBasisValues v;
    v.phi = bary;
    v.grad_phi[0] = {(b.y - c.y) / area2, (c.x - b.x) / area2};
    v.grad_phi[1] = {(c.y - a.y) / area2, (a.x - c.x) / area2};
    v.grad_phi[2] = {(a.y - b.y) / area2, (b.x - a.x) / area2};
    v.bubble = bary[0] * bary[1] * bary[2];
    v.grad_bubble = v.grad_phi[0] * (bary[1] * bary[2]) + v.grad_phi[1] * (bary[0] * bary[2]) +
                    v.grad_phi[2] * (bary[0] * bary[1]);
    return v;
}

DofMap::DofMap(const Mesh& mesh)
    : n_vertices(mesh.n_vertices()), n_triangles(mesh.n_triangles()) {
    constrained.assign(velocity_size(), 0);
    for (int v = 0; v < n_vertices; ++v) {
        if (mesh.boundary_vertex[v]) {
            constrained[nodal_dof(0, v)] = 1;
            constrained[nodal_dof(1, v)] = 1;
        }
    }
}

int DofMap::n_constrained() const {
    int n = 0;
    for (const auto f : constrained) n += f;
    return n;
}

SparseMatrix assemble_stiffness(const Mesh& mesh, double mu, const QuadratureRule& rule) {
    if (!(mu > 0.0)) throw std::invalid_argument("assemble_stiffness: mu must be positive");
    const int nv = mesh.n_vertices();
    const int size = nv + mesh.n_triangles();
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(mesh.n_triangles()) * 16);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto c = mesh.corners(t);
        const double area = signed_area(c[0], c[1], c[2]);
        double elem[4][4] = {};
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto basis = eval_basis(c[0], c[1], c[2], rule.points[q]);
            const std::array<Vec2, 4> grads = {basis.grad_phi[0], basis.grad_phi[1],
                                               basis.grad_phi[2], basis.grad_bubble};
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j) {
                    elem[i][j] += rule.weights[q] * grads[i].dot(grads[j]);
                }
            }
        }
        const std::array<int, 4> dof = {mesh.triangles[t].v[0], mesh.triangles[t].v[1],
                                        mesh.triangles[t].v[2], nv + t};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                trips.push_back({dof[i], dof[j], mu * area * elem[i][j]});
            }
        }
    }
    return SparseMatrix::from_triplets(size, size, trips);
}

SparseMatrix assemble_divergence(const Mesh& mesh, const QuadratureRule& rule) {
    const int nv = mesh.n_vertices();
    const int scalar = nv + mesh.n_triangles();
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(mesh.n_triangles()) * 24);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto c = mesh.corners(t);
        const double area = signed_area(c[0], c[1], c[2]);
        // elem[q][s][comp] = -int phi_q d(psi_s)/dx_comp, psi_3 = bubble
        double elem[3][4][2] = {};
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto basis = eval_basis(c[0], c[1], c[2], rule.points[q]);
            const std::array<Vec2, 4> grads = {basis.grad_phi[0], basis.grad_phi[1],
                                               basis.grad_phi[2], basis.grad_bubble};
            for (int i = 0; i < 3; ++i) {
                const double w = rule.weights[q] * basis.phi[i];
                for (int s = 0; s < 4; ++s) {
                    elem[i][s][0] -= w * grads[s].x;
                    elem[i][s][1] -= w * grads[s].y;
                }
            }
        }
        const std::array<int, 4> vdof = {mesh.triangles[t].v[0], mesh.triangles[t].v[1],
                                         mesh.triangles[t].v[2], nv + t};
        for (int i = 0; i < 3; ++i) {
            for (int s = 0; s < 4; ++s) {
                for (int comp = 0; comp < 2; ++comp) {
                    trips.push_back({mesh.triangles[t].v[i], comp * scalar + vdof[s],
                                     area * elem[i][s][comp]});
                }
            }
        }
    }
    return SparseMatrix::from_triplets(nv, 2 * scalar, trips);
}

std::vector<double> assemble_load(const Mesh& mesh, const std::function<Vec2(Point2)>& forcing,
                                  const QuadratureRule& rule) {
    const int nv = mesh.n_vertices();
    const int scalar = nv + mesh.n_triangles();
    std::vector<double> load(2 * scalar, 0.0);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto c = mesh.corners(t);
        const double area = signed_area(c[0], c[1], c[2]);
        double elem[4][2] = {};
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto basis = eval_basis(c[0], c[1], c[2], rule.points[q]);
            const Point2 x = barycentric_to_cartesian(c[0], c[1], c[2], rule.points[q]);
            const Vec2 f = forcing(x);
            for (int s = 0; s < 3; ++s) {
                elem[s][0] += rule.weights[q] * basis.phi[s] * f.x;
                elem[s][1] += rule.weights[q] * basis.phi[s] * f.y;
            }
            elem[3][0] += rule.weights[q] * basis.bubble * f.x;
            elem[3][1] += rule.weights[q] * basis.bubble * f.y;
        }
        const std::array<int, 4> vdof = {mesh.triangles[t].v[0], mesh.triangles[t].v[1],
                                         mesh.triangles[t].v[2], nv + t};
        for (int s = 0; s < 4; ++s) {
            load[vdof[s]] += area * elem[s][0];
            load[scalar + vdof[s]] += area * elem[s][1];
        }
    }
    return load;
}

std::vector<double> pressure_mean_vector(const Mesh& mesh) {
    std::vector<double> c(mesh.n_vertices(), 0.0);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto p = mesh.corners(t);
        const double third = signed_area(p[0], p[1], p[2]) / 3.0;
        for (int k = 0; k < 3; ++k) c[mesh.triangles[t].v[k]] += third;
    }
    return c;
}

std::vector<double> boundary_velocity_values(const Mesh& mesh, const DofMap& dofs,
                                             const std::function<Vec2(Point2)>& g) {
    std::vector<double> values(dofs.velocity_size(), 0.0);
    for (int v = 0; v < mesh.n_vertices(); ++v) {
        if (!mesh.boundary_vertex[v]) continue;
        const Vec2 gv = g(mesh.vertices[v]);
        values[dofs.nodal_dof(0, v)] = gv.x;
        values[dofs.nodal_dof(1, v)] = gv.y;
    }
    return values;
}

ReducedSaddleSystem apply_dirichlet(const DofMap& dofs, const SparseMatrix& stiffness_scalar,
                                    const SparseMatrix& divergence,
                                    const std::vector<double>& mean_constraint,
                                    const std::vector<double>& load,
                                    const std::vector<double>& boundary_values) {
    ReducedSaddleSystem sys;
    sys.n_pressure = static_cast<int>(mean_constraint.size());
    sys.reduced_index.assign(dofs.velocity_size(), -1);
    for (int d = 0; d < dofs.velocity_size(); ++d) {
        if (!dofs.constrained[d]) {
            sys.reduced_index[d] = static_cast<int>(sys.free_dofs.size());
            sys.free_dofs.push_back(d);
        }
    }
    sys.n_free_velocity = static_cast<int>(sys.free_dofs.size());
    const int nf = sys.n_free_velocity;
    const int np = sys.n_pressure;
    const int total = nf + np + 1;
    const int scalar = dofs.scalar_size();

    std::vector<double> lifting_momentum(dofs.velocity_size(), 0.0);
    std::vector<double> lifting_continuity(np, 0.0);
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(stiffness_scalar.nnz()) * 2 +
                  static_cast<std::size_t>(divergence.nnz()) * 2 + 2 * np);

    const auto srow = stiffness_scalar.row_ptr();
    const auto scol = stiffness_scalar.col_idx();
    const auto sval = stiffness_scalar.values();
    for (int i = 0; i < stiffness_scalar.rows(); ++i) {
        for (int k = srow[i]; k < srow[i + 1]; ++k) {
            const int j = scol[k];
            const double v = sval[k];
            for (int comp = 0; comp < 2; ++comp) {
                const int row = comp * scalar + i;
                const int col = comp * scalar + j;
                if (dofs.constrained[row]) continue;
                if (dofs.constrained[col]) {
                    lifting_momentum[row] += v * boundary_values[col];
                } else {
                    trips.push_back({sys.reduced_index[row], sys.reduced_index[col], v});
                }
            }
        }
    }

    const auto brow = divergence.row_ptr();
    const auto bcol = divergence.col_idx();
    const auto bval = divergence.values();
    for (int q = 0; q < divergence.rows(); ++q) {
        for (int k = brow[q]; k < brow[q + 1]; ++k) {
            const int col = bcol[k];
            const double v = bval[k];
            if (dofs.constrained[col]) {
                lifting_continuity[q] += v * boundary_values[col];
            } else {
                trips.push_back({nf + q, sys.reduced_index[col], v});
                trips.push_back({sys.reduced_index[col], nf + q, v});
            }
        }
    }

    for (int q = 0; q < np; ++q) {
        trips.push_back({total - 1, nf + q, mean_constraint[q]});
        trips.push_back({nf + q, total - 1, mean_constraint[q]});
    }

    sys.matrix = SparseMatrix::from_triplets(total, total, trips);
    sys.rhs.assign(total, 0.0);
    for (int r = 0; r < nf; ++r) {
        const int full = sys.free_dofs[r];
        sys.rhs[r] = load[full] - lifting_momentum[full];
    }
    for (int q = 0; q < np; ++q) sys.rhs[nf + q] = -lifting_continuity[q];
    return sys;
}

void AssembledSystem::expand(std::span<const double> x, std::vector<double>& velocity,
                             std::vector<double>& pressure, double& multiplier) const {
    velocity = boundary_values;  // constrained dofs carry the data exactly
    for (int r = 0; r < reduced.n_free_velocity; ++r) {
        velocity[reduced.free_dofs[r]] = x[r];
    }
    pressure.assign(x.begin() + reduced.n_free_velocity,
                    x.begin() + reduced.n_free_velocity + reduced.n_pressure);
    multiplier = x[reduced.total_unknowns() - 1];
}

AssembledSystem build_saddle_system(const Mesh& mesh, const BenchmarkProblem& problem,
                                    double mu) {
    AssembledSystem sys;
    sys.dofs = DofMap(mesh);
    sys.mu = mu;
    const auto& rule4 = rule_for_degree(4);
    sys.stiffness_scalar = assemble_stiffness(mesh, mu, rule4);
    sys.divergence = assemble_divergence(mesh, rule4);
    sys.mean_constraint = pressure_mean_vector(mesh);

    IntegrandMeta load_meta = problem.forcing_meta();
    if (load_meta.polynomial) load_meta.degree += 3;  // bubble factor
    sys.load = assemble_load(mesh, problem.forcing, rule_for_degree(select_degree(load_meta)));

    sys.boundary_values = boundary_velocity_values(mesh, sys.dofs, problem.boundary_velocity);
    sys.reduced = apply_dirichlet(sys.dofs, sys.stiffness_scalar, sys.divergence,
                                  sys.mean_constraint, sys.load, sys.boundary_values);
    return sys;
}

}  // namespace stokesmini

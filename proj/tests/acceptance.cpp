// Acceptance suite: runs the default four-level study on all seven benchmark
// problems and checks every gate at its stated tolerance, printing one
// pass/fail line per criterion.  Exit status = number of failed criteria.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "stokesmini/analysis.hpp"
#include "stokesmini/cli.hpp"
#include "stokesmini/mesh.hpp"
#include "stokesmini/solver.hpp"

using namespace stokesmini;

namespace {

struct LevelData {
    ErrorReport report;
    double min_quality = 0.0;
    bool conforming = false;
    int corner_triangles = 0;
    int total_unknowns = 0;
    bool oracle_checked = false;   // GMRES-vs-direct comparison ran (<= 5000 unknowns)
    double oracle_mismatch = 0.0;  // max relative component difference
};

struct ProblemData {
    int id = 0;
    std::vector<LevelData> levels;
    RateSet rates;
};

int count_corner_triangles(const Mesh& mesh) {
    // edge -> incidence count; a corner triangle carries two 1-incidence edges
    std::vector<int> per_tri(mesh.n_triangles(), 0);
    std::map<std::pair<int, int>, std::vector<int>> edges;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto& v = mesh.triangles[t].v;
        for (int k = 0; k < 3; ++k) {
            int a = v[k], b = v[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            edges[{a, b}].push_back(t);
        }
    }
    for (const auto& [e, tris] : edges) {
        if (tris.size() == 1) ++per_tri[tris[0]];
    }
    int corners = 0;
    for (const int n : per_tri) corners += (n >= 2) ? 1 : 0;
    return corners;
}

struct Gate {
    int id;
    std::string title;
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

}  // namespace

int main() {
    const std::vector<double> h0_levels = {0.2, 0.1, 0.05, 0.025};

    // Reference convergence rates, one row per problem:
    // u_L2, u_H1, p_L2, ihu_L2, ihu_H1, ul_L2, ul_H1.
    const double reference[7][7] = {
        {2.11, 1.06, 1.48, 2.17, 1.53, 2.09, 1.03},
        {2.13, 1.07, 1.51, 2.18, 1.55, 2.12, 1.04},
        {2.09, 1.05, 1.53, 2.22, 1.66, 2.08, 1.02},
        {2.13, 1.07, 1.50, 2.17, 1.51, 2.12, 1.04},
        {2.10, 1.06, 1.41, 2.07, 1.45, 2.09, 1.04},
        {2.09, 1.05, 1.59, 2.09, 1.67, 2.09, 1.03},
        {1.96, 1.02, 1.41, 1.95, 1.32, 1.95, 1.00},
    };

    std::printf("running the default 4-level study on problems 1..7\n");
    std::vector<ProblemData> data;
    for (int id = 1; id <= 7; ++id) {
        const BenchmarkProblem& prob = problem(id);
        const SolverConfig solver = default_solver_config(id);
        ProblemData pd;
        pd.id = id;
        for (const double h0 : h0_levels) {
            const Mesh mesh = generate_mesh(prob.domain, h0);
            LevelData level;
            const MeshQualityReport q = mesh_quality(mesh);
            level.min_quality = std::min(q.min_q1, q.min_q2);
            level.conforming = validate_conformity(mesh).valid();
            level.corner_triangles = count_corner_triangles(mesh);

            const AssembledSystem sys = build_saddle_system(mesh, prob);
            level.total_unknowns = sys.reduced.total_unknowns();
            auto [x, solve_report] =
                solve_with_fallback(sys.reduced.matrix, sys.reduced.rhs, solver);

            if (level.total_unknowns <= 5000) {
                // route equivalence: iterate the Krylov solver to its floor
                // and compare against the factorization oracle
                SolverConfig tight = solver;
                tight.tol = 1e-12;
                const auto [xt, tight_report] =
                    solve_with_fallback(sys.reduced.matrix, sys.reduced.rhs, tight);
                const auto xd = direct_solve(sys.reduced.matrix, sys.reduced.rhs);
                double scale = 0.0;
                for (const double v : xd) scale = std::max(scale, std::fabs(v));
                double mismatch = 0.0;
                for (std::size_t i = 0; i < xd.size(); ++i) {
                    mismatch = std::max(mismatch, std::fabs(xt[i] - xd[i]));
                }
                level.oracle_checked = true;
                level.oracle_mismatch = mismatch / std::max(scale, 1e-30);
            }

            DiscreteSolution sol;
            sys.expand(x, sol.velocity, sol.pressure, sol.multiplier);
            level.report = compute_errors(prob, mesh, sys.dofs, sol);
            level.report.solver_iterations = solve_report.iterations;
            level.report.solver_residual = solve_report.relative_residual;
            level.report.solver_converged = solve_report.converged;
            level.report.solver_method = solve_report.method;
            pd.levels.push_back(std::move(level));
            std::printf("  problem %d h0=%.3f: n=%d iters=%d rres=%.2e method=%s\n", id, h0,
                        pd.levels.back().total_unknowns,
                        pd.levels.back().report.solver_iterations,
                        pd.levels.back().report.solver_residual,
                        pd.levels.back().report.solver_method.c_str());
        }
        std::vector<ErrorReport> reports;
        for (const auto& level : pd.levels) reports.push_back(level.report);
        pd.rates = fit_rates(reports);
        data.push_back(std::move(pd));
    }

    std::vector<Gate> gates;

    // 1. Rate-table reproduction: every fitted rate within +-0.20 of the reference.
    {
        Gate g{1, "reference rate table reproduced within +-0.20"};
        for (const auto& pd : data) {
            const double got[7] = {pd.rates.u_L2,  pd.rates.u_H1,  pd.rates.p_L2,
                                   pd.rates.ihu_L2, pd.rates.ihu_H1, pd.rates.ul_L2,
                                   pd.rates.ul_H1};
            static const char* names[7] = {"u_L2", "u_H1", "p_L2", "ihu_L2",
                                           "ihu_H1", "ul_L2", "ul_H1"};
            for (int c = 0; c < 7; ++c) {
                const double want = reference[pd.id - 1][c];
                if (std::fabs(got[c] - want) > 0.20) {
                    g.fail("problem " + std::to_string(pd.id) + " " + names[c] + "=" +
                           fmt(got[c]) + " vs " + fmt(want));
                }
            }
        }
        gates.push_back(g);
    }

    // 2. Superconvergence: p_L2 >= 1.30, ihu_H1 >= 1.25, both >= u_H1 + 0.25.
    {
        Gate g{2, "superconvergence of pressure and of the linear part vs interpolant"};
        for (const auto& pd : data) {
            if (pd.rates.p_L2 < 1.30) {
                g.fail("problem " + std::to_string(pd.id) + " p_L2 rate " + fmt(pd.rates.p_L2));
            }
            if (pd.rates.ihu_H1 < 1.25) {
                g.fail("problem " + std::to_string(pd.id) + " ihu_H1 rate " +
                       fmt(pd.rates.ihu_H1));
            }
            if (pd.rates.p_L2 < pd.rates.u_H1 + 0.25 || pd.rates.ihu_H1 < pd.rates.u_H1 + 0.25) {
                g.fail("problem " + std::to_string(pd.id) + " gap above u_H1 rate " +
                       fmt(pd.rates.u_H1));
            }
        }
        gates.push_back(g);
    }

    // 3. Baseline rates.
    {
        Gate g{3, "baseline velocity rates (L2 in [1.8,2.3], H1 in [0.9,1.2])"};
        for (const auto& pd : data) {
            if (pd.rates.u_L2 < 1.8 || pd.rates.u_L2 > 2.3) {
                g.fail("problem " + std::to_string(pd.id) + " u_L2 " + fmt(pd.rates.u_L2));
            }
            if (pd.rates.u_H1 < 0.9 || pd.rates.u_H1 > 1.2) {
                g.fail("problem " + std::to_string(pd.id) + " u_H1 " + fmt(pd.rates.u_H1));
            }
        }
        gates.push_back(g);
    }

    // 4. Error orderings per level.
    {
        Gate g{4, "error orderings (L2 all, H1 for problems 1-5, divergence all)"};
        for (const auto& pd : data) {
            for (std::size_t l = 0; l < pd.levels.size(); ++l) {
                const auto& r = pd.levels[l].report;
                const std::string where =
                    "problem " + std::to_string(pd.id) + " level " + std::to_string(l);
                if (!(r.err_u_L2 < r.err_ul_L2)) g.fail(where + ": u_L2 ordering");
                if (pd.id <= 5 && !(r.err_u_H1 < r.err_ul_H1)) g.fail(where + ": u_H1 ordering");
                if (!(r.div_uh > r.div_uhl)) g.fail(where + ": divergence ordering");
            }
        }
        gates.push_back(g);
    }

    // 5. Divergence decay rates.
    {
        Gate g{5, "divergence norms decay at first order (rates in [0.8,1.2])"};
        for (const auto& pd : data) {
            if (pd.rates.div_uh < 0.8 || pd.rates.div_uh > 1.2) {
                g.fail("problem " + std::to_string(pd.id) + " div_uh " + fmt(pd.rates.div_uh));
            }
            if (pd.rates.div_uhl < 0.8 || pd.rates.div_uhl > 1.2) {
                g.fail("problem " + std::to_string(pd.id) + " div_uhl " + fmt(pd.rates.div_uhl));
            }
        }
        gates.push_back(g);
    }

    // 6. Manufactured-solution verification at 10^4 samples.
    {
        Gate g{6, "manufactured solutions verified by the differentiation oracle"};
        for (int id = 1; id <= 7; ++id) {
            const ManufacturedReport rep = verify_manufactured(problem(id), 10000);
            if (rep.max_divergence > 1e-10) {
                g.fail("problem " + std::to_string(id) + " div " + fmt(rep.max_divergence));
            }
            if (rep.max_momentum_residual > 1e-8) {
                g.fail("problem " + std::to_string(id) + " momentum " +
                       fmt(rep.max_momentum_residual));
            }
            if (std::fabs(rep.pressure_integral) > 1e-8) {
                g.fail("problem " + std::to_string(id) + " pressure integral " +
                       fmt(rep.pressure_integral));
            }
            if (rep.max_boundary_mismatch > 1e-10) {
                g.fail("problem " + std::to_string(id) + " boundary " +
                       fmt(rep.max_boundary_mismatch));
            }
        }
        gates.push_back(g);
    }

    // 7. Quadrature certification.
    {
        Gate g{7, "quadrature rules integrate all monomials exactly (degrees 1-20)"};
        for (int d = 1; d <= 20; ++d) {
            const auto& rule = rule_for_degree(d);
            for (int a = 0; a <= d; ++a) {
                for (int b = 0; a + b <= d; ++b) {
                    double exact = 1.0;
                    for (int k = 1; k <= a; ++k) exact *= k;
                    for (int k = 1; k <= b; ++k) exact *= k;
                    for (int k = 1; k <= a + b + 2; ++k) exact /= k;
                    double acc = 0.0;
                    for (std::size_t i = 0; i < rule.size(); ++i) {
                        acc += rule.weights[i] * std::pow(rule.points[i][1], a) *
                               std::pow(rule.points[i][2], b);
                    }
                    acc *= 0.5;
                    if (std::fabs(acc - exact) > 1e-12 * std::fabs(exact)) {
                        g.fail("degree " + std::to_string(d) + " monomial x^" +
                               std::to_string(a) + "y^" + std::to_string(b));
                    }
                }
            }
        }
        gates.push_back(g);
    }

    // 8. Assembly oracles.
    {
        Gate g{8, "assembly oracles (P1 stiffness, decoupling, bubble load, B^T 1)"};
        Mesh ref;
        ref.domain = {0, 0, 1, 1};
        ref.vertices = {{0, 0}, {1, 0}, {0, 1}};
        ref.triangles = {Triangle{{0, 1, 2}}};
        ref.boundary_vertex = {1, 1, 1};
        const SparseMatrix K = assemble_stiffness(ref, 1.0, rule_for_degree(4));
        const double expect[3][3] = {{1.0, -0.5, -0.5}, {-0.5, 0.5, 0.0}, {-0.5, 0.0, 0.5}};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (std::fabs(K.coeff(i, j) - expect[i][j]) > 1e-12) {
                    g.fail("P1 stiffness closed form");
                }
            }
        }
        for (int i = 0; i < 3; ++i) {
            if (std::fabs(K.coeff(i, 3)) > 1e-12 || std::fabs(K.coeff(3, i)) > 1e-12) {
                g.fail("nodal-bubble coupling not annihilated");
            }
        }
        const Mesh mesh = generate_mesh({0, 0, 1, 1}, 0.1);
        const DofMap dofs(mesh);
        const auto load =
            assemble_load(mesh, [](Point2) { return Vec2{1.0, 0.0}; }, rule_for_degree(4));
        for (int t = 0; t < mesh.n_triangles(); ++t) {
            const auto c = mesh.corners(t);
            const double area = signed_area(c[0], c[1], c[2]);
            if (std::fabs(load[dofs.bubble_dof(0, t)] - area / 60.0) > 1e-12) {
                g.fail("bubble load entry != area/60");
                break;
            }
        }
        const SparseMatrix B = assemble_divergence(mesh, rule_for_degree(4));
        std::vector<double> ones(dofs.pressure_size(), 1.0);
        const auto bt = B.transpose().multiply(ones);
        for (int t = 0; t < dofs.n_triangles; ++t) {
            if (std::fabs(bt[dofs.bubble_dof(0, t)]) > 1e-12 ||
                std::fabs(bt[dofs.bubble_dof(1, t)]) > 1e-12) {
                g.fail("B^T 1 does not annihilate bubbles");
                break;
            }
        }
        for (int v = 0; v < dofs.n_vertices; ++v) {
            if (mesh.boundary_vertex[v]) continue;
            if (std::fabs(bt[dofs.nodal_dof(0, v)]) > 1e-12 ||
                std::fabs(bt[dofs.nodal_dof(1, v)]) > 1e-12) {
                g.fail("B^T 1 does not annihilate interior nodes");
                break;
            }
        }
        gates.push_back(g);
    }

    // 9. Solver oracle equivalence and achieved residuals.
    {
        Gate g{9, "GMRES+ILU vs direct solver and achieved residuals"};
        for (const auto& pd : data) {
            bool any_checked = false;
            for (std::size_t l = 0; l < pd.levels.size(); ++l) {
                const auto& level = pd.levels[l];
                if (level.oracle_checked) {
                    any_checked = true;
                    if (level.oracle_mismatch > 1e-8) {
                        g.fail("problem " + std::to_string(pd.id) + " level " +
                               std::to_string(l) + " mismatch " + fmt(level.oracle_mismatch));
                    }
                }
                const double residual_gate = (pd.id <= 5) ? 1e-10 : 1e-5;
                if (!(level.report.solver_residual <= residual_gate)) {
                    g.fail("problem " + std::to_string(pd.id) + " level " + std::to_string(l) +
                           " residual " + fmt(level.report.solver_residual));
                }
            }
            if (!any_checked) {
                g.fail("problem " + std::to_string(pd.id) +
                       " had no system small enough for the oracle comparison");
            }
        }
        gates.push_back(g);
    }

    // 10. Mesh quality at the study levels.
    {
        Gate g{10, "study meshes: min(q1,q2) >= 0.7, conformal, no corner triangles"};
        for (const auto& pd : data) {
            for (std::size_t l = 0; l < pd.levels.size(); ++l) {
                const auto& level = pd.levels[l];
                const std::string where =
                    "problem " + std::to_string(pd.id) + " level " + std::to_string(l);
                if (level.min_quality < 0.7) g.fail(where + " quality " + fmt(level.min_quality));
                if (!level.conforming) g.fail(where + " not conforming");
                if (level.corner_triangles != 0) g.fail(where + " corner triangles");
            }
        }
        gates.push_back(g);
    }

    std::printf("\n");
    int failures = 0;
    for (const auto& g : gates) {
        if (g.pass) {
            std::printf("PASS criterion %2d: %s\n", g.id, g.title.c_str());
        } else {
            ++failures;
            std::printf("FAIL criterion %2d: %s [%s]\n", g.id, g.title.c_str(),
                        g.detail.c_str());
        }
    }

    std::printf("\nrates (problem: u_L2 u_H1 p_L2 ihu_L2 ihu_H1 ul_L2 ul_H1 div_uh div_uhl)\n");
    for (const auto& pd : data) {
        std::printf("  %d: %.2f %.2f %.2f %.2f %.2f %.2f %.2f %.2f %.2f\n", pd.id,
                    pd.rates.u_L2, pd.rates.u_H1, pd.rates.p_L2, pd.rates.ihu_L2,
                    pd.rates.ihu_H1, pd.rates.ul_L2, pd.rates.ul_H1, pd.rates.div_uh,
                    pd.rates.div_uhl);
    }
    return failures;
}

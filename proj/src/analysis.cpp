#include "stokesmini/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace stokesmini {

P1ScalarField nodal_interpolant(const std::function<double(Point2)>& f, const Mesh& mesh) {
    P1ScalarField field;
    field.values.reserve(mesh.vertices.size());
    for (const auto& p : mesh.vertices) field.values.push_back(f(p));
    return field;
}

P1VectorField nodal_interpolant(const std::function<Vec2(Point2)>& f, const Mesh& mesh) {
    P1VectorField field;
    field.values.reserve(mesh.vertices.size());
    for (const auto& p : mesh.vertices) field.values.push_back(f(p));
    return field;
}

VelocitySplit split_velocity(const DiscreteSolution& solution, const DofMap& dofs) {
    VelocitySplit split;
    split.linear.values.resize(dofs.n_vertices);
    split.bubble.resize(dofs.n_triangles);
    for (int v = 0; v < dofs.n_vertices; ++v) {
        split.linear.values[v] = {solution.velocity[dofs.nodal_dof(0, v)],
                                  solution.velocity[dofs.nodal_dof(1, v)]};
    }
    for (int t = 0; t < dofs.n_triangles; ++t) {
        split.bubble[t] = {solution.velocity[dofs.bubble_dof(0, t)],
                           solution.velocity[dofs.bubble_dof(1, t)]};
    }
    return split;
}

VectorEvaluator evaluate_exact(const std::function<Vec2(Point2)>& u) {
    return [u](int, const std::array<double, 3>&, Point2 x) { return u(x); };
}

GradientEvaluator evaluate_exact_gradient(const std::function<Mat2(Point2)>& grad) {
    return [grad](int, const std::array<double, 3>&, Point2 x) { return grad(x); };
}

ScalarEvaluator evaluate_exact_scalar(const std::function<double(Point2)>& p) {
    return [p](int, const std::array<double, 3>&, Point2 x) { return p(x); };
}

VectorEvaluator evaluate_mini_velocity(const Mesh& mesh, const DofMap& dofs,
                                       std::span<const double> velocity) {
    return [&mesh, dofs, velocity](int t, const std::array<double, 3>& bary, Point2) {
        const auto c = mesh.corners(t);
        const auto basis = eval_basis(c[0], c[1], c[2], bary);
        Vec2 u{};
        for (int k = 0; k < 3; ++k) {
            const int v = mesh.triangles[t].v[k];
            u.x += velocity[dofs.nodal_dof(0, v)] * basis.phi[k];
            u.y += velocity[dofs.nodal_dof(1, v)] * basis.phi[k];
        }
        u.x += velocity[dofs.bubble_dof(0, t)] * basis.bubble;
        u.y += velocity[dofs.bubble_dof(1, t)] * basis.bubble;
        return u;
    };
}

GradientEvaluator evaluate_mini_gradient(const Mesh& mesh, const DofMap& dofs,
                                         std::span<const double> velocity) {
    return [&mesh, dofs, velocity](int t, const std::array<double, 3>& bary, Point2) {
        const auto c = mesh.corners(t);
        const auto basis = eval_basis(c[0], c[1], c[2], bary);
        Mat2 g;
        for (int k = 0; k < 3; ++k) {
            const int v = mesh.triangles[t].v[k];
            const double ux = velocity[dofs.nodal_dof(0, v)];
            const double uy = velocity[dofs.nodal_dof(1, v)];
            g.m[0][0] += ux * basis.grad_phi[k].x;
            g.m[0][1] += ux * basis.grad_phi[k].y;
            g.m[1][0] += uy * basis.grad_phi[k].x;
            g.m[1][1] += uy * basis.grad_phi[k].y;
        }
        const double bx = velocity[dofs.bubble_dof(0, t)];
        const double by = velocity[dofs.bubble_dof(1, t)];
        g.m[0][0] += bx * basis.grad_bubble.x;
        g.m[0][1] += bx * basis.grad_bubble.y;
        g.m[1][0] += by * basis.grad_bubble.x;
        g.m[1][1] += by * basis.grad_bubble.y;
        return g;
    };
}

ScalarEvaluator evaluate_mini_divergence(const Mesh& mesh, const DofMap& dofs,
                                         std::span<const double> velocity) {
    const GradientEvaluator grad = evaluate_mini_gradient(mesh, dofs, velocity);
    return [grad](int t, const std::array<double, 3>& bary, Point2 x) {
        const Mat2 g = grad(t, bary, x);
        return g.m[0][0] + g.m[1][1];
    };
}

VectorEvaluator evaluate_p1(const Mesh& mesh, const P1VectorField& field) {
    return [&mesh, &field](int t, const std::array<double, 3>& bary, Point2) {
        Vec2 u{};
        for (int k = 0; k < 3; ++k) {
            u += field.values[mesh.triangles[t].v[k]] * bary[k];
        }
        return u;
    };
}

GradientEvaluator evaluate_p1_gradient(const Mesh& mesh, const P1VectorField& field) {
    return [&mesh, &field](int t, const std::array<double, 3>& bary, Point2) {
        const auto c = mesh.corners(t);
        const auto basis = eval_basis(c[0], c[1], c[2], bary);
        Mat2 g;
        for (int k = 0; k < 3; ++k) {
            const Vec2 u = field.values[mesh.triangles[t].v[k]];
            g.m[0][0] += u.x * basis.grad_phi[k].x;
            g.m[0][1] += u.x * basis.grad_phi[k].y;
            g.m[1][0] += u.y * basis.grad_phi[k].x;
            g.m[1][1] += u.y * basis.grad_phi[k].y;
        }
        return g;
    };
}

ScalarEvaluator evaluate_p1_divergence(const Mesh& mesh, const P1VectorField& field) {
    const GradientEvaluator grad = evaluate_p1_gradient(mesh, field);
    return [grad](int t, const std::array<double, 3>& bary, Point2 x) {
        const Mat2 g = grad(t, bary, x);
        return g.m[0][0] + g.m[1][1];
    };
}

ScalarEvaluator evaluate_p1_scalar(const Mesh& mesh, const P1ScalarField& field) {
    return [&mesh, &field](int t, const std::array<double, 3>& bary, Point2) {
        double p = 0.0;
        for (int k = 0; k < 3; ++k) p += field.values[mesh.triangles[t].v[k]] * bary[k];
        return p;
    };
}

namespace {

template <class Sampler>
double sum_over_mesh(const Mesh& mesh, const QuadratureRule& rule, Sampler&& integrand) {
    double total = 0.0;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto c = mesh.corners(t);
        const double area = signed_area(c[0], c[1], c[2]);
        double acc = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const Point2 x = barycentric_to_cartesian(c[0], c[1], c[2], rule.points[q]);
            acc += rule.weights[q] * integrand(t, rule.points[q], x);
        }
        total += area * acc;
    }
    return total;
}

}  // namespace

double error_L2(const VectorEvaluator& a, const VectorEvaluator& b, const Mesh& mesh,
                const QuadratureRule& rule) {
    return std::sqrt(sum_over_mesh(mesh, rule, [&](int t, const std::array<double, 3>& l,
                                                   Point2 x) {
        const Vec2 d = a(t, l, x) - b(t, l, x);
        return d.norm2();
    }));
}

double error_L2(const ScalarEvaluator& a, const ScalarEvaluator& b, const Mesh& mesh,
                const QuadratureRule& rule) {
    return std::sqrt(sum_over_mesh(mesh, rule, [&](int t, const std::array<double, 3>& l,
                                                   Point2 x) {
        const double d = a(t, l, x) - b(t, l, x);
        return d * d;
    }));
}

double error_H1(const VectorEvaluator& a, const GradientEvaluator& grad_a,
                const VectorEvaluator& b, const GradientEvaluator& grad_b, const Mesh& mesh,
                const QuadratureRule& rule, H1Mode mode) {
    const double semi2 = sum_over_mesh(mesh, rule, [&](int t, const std::array<double, 3>& l,
                                                       Point2 x) {
        const Mat2 ga = grad_a(t, l, x);
        const Mat2 gb = grad_b(t, l, x);
        Mat2 d;
        d.m[0][0] = ga.m[0][0] - gb.m[0][0];
        d.m[0][1] = ga.m[0][1] - gb.m[0][1];
        d.m[1][0] = ga.m[1][0] - gb.m[1][0];
        d.m[1][1] = ga.m[1][1] - gb.m[1][1];
        return d.frobenius2();
    });
    if (mode == H1Mode::seminorm) return std::sqrt(semi2);
    const double l2 = error_L2(a, b, mesh, rule);
    return std::sqrt(semi2 + l2 * l2);
}

double div_L2(const ScalarEvaluator& divergence, const Mesh& mesh, const QuadratureRule& rule) {
    return std::sqrt(sum_over_mesh(mesh, rule, [&](int t, const std::array<double, 3>& l,
                                                   Point2 x) {
        const double d = divergence(t, l, x);
        return d * d;
    }));
}

double fit_rate(std::span<const std::pair<double, double>> pairs) {
    if (pairs.size() < 3) {
        throw std::domain_error("fit_rate: need at least 3 (h, error) pairs");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [h, e] : pairs) {
        if (!(h > 0.0) || !(e > 0.0)) {
            throw std::domain_error("fit_rate: h and error must be positive");
        }
        const double lx = std::log(h);
        const double ly = std::log(e);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(pairs.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ErrorRatios error_ratios(const ErrorReport& r) {
    if (r.err_ul_H1 == 0.0 || r.err_ul_L2 == 0.0 || r.div_uhl == 0.0) {
        throw Error("error_ratios: degenerate report (zero denominator)");
    }
    return {r.err_u_H1 / r.err_ul_H1, r.err_u_L2 / r.err_ul_L2, r.div_uh / r.div_uhl};
}

SolverConfig default_solver_config(int problem_id) {
    SolverConfig config;
    config.tol = (problem_id <= 5) ? 1e-12 : 1e-8;
    return config;
}

ErrorReport compute_errors(const BenchmarkProblem& problem, const Mesh& mesh,
                           const DofMap& dofs, const DiscreteSolution& solution) {
    ErrorReport rep;
    rep.h = mesh_parameter_h(mesh);
    rep.vertices = mesh.n_vertices();
    rep.triangles = mesh.n_triangles();

    // Quadrature degrees: exact for polynomial problems (the discrete fields
    // are at most cubic, gradients quadratic), degree 20 otherwise; the
    // P1-vs-P1 interpolant difference is exact at degree 2, divergences at 4.
    const auto degree_for = [&](int exact_degree) {
        return problem.polynomial ? select_degree({true, std::max(2 * exact_degree, 6)})
                                  : select_degree({false, 0});
    };
    const auto& rule_u = rule_for_degree(degree_for(problem.velocity_degree));
    const auto& rule_p = rule_for_degree(degree_for(problem.pressure_degree));
    const auto& rule_ihu = rule_for_degree(2);
    const auto& rule_div = rule_for_degree(4);

    const VelocitySplit split = split_velocity(solution, dofs);
    const P1VectorField ihu = nodal_interpolant(problem.velocity, mesh);
    const P1ScalarField ph{solution.pressure};

    const auto exact_u = evaluate_exact(problem.velocity);
    const auto exact_grad = evaluate_exact_gradient(problem.velocity_gradient);
    const auto exact_p = evaluate_exact_scalar(problem.pressure);
    const auto uh = evaluate_mini_velocity(mesh, dofs, solution.velocity);
    const auto uh_grad = evaluate_mini_gradient(mesh, dofs, solution.velocity);
    const auto uhl = evaluate_p1(mesh, split.linear);
    const auto uhl_grad = evaluate_p1_gradient(mesh, split.linear);
    const auto ihu_eval = evaluate_p1(mesh, ihu);
    const auto ihu_grad = evaluate_p1_gradient(mesh, ihu);

    rep.err_u_L2 = error_L2(exact_u, uh, mesh, rule_u);
    rep.err_u_H1 = error_H1(exact_u, exact_grad, uh, uh_grad, mesh, rule_u, H1Mode::norm);
    rep.err_u_H1_semi =
        error_H1(exact_u, exact_grad, uh, uh_grad, mesh, rule_u, H1Mode::seminorm);
    rep.err_ul_L2 = error_L2(exact_u, uhl, mesh, rule_u);
    rep.err_ul_H1 = error_H1(exact_u, exact_grad, uhl, uhl_grad, mesh, rule_u, H1Mode::norm);
    rep.err_ul_H1_semi =
        error_H1(exact_u, exact_grad, uhl, uhl_grad, mesh, rule_u, H1Mode::seminorm);
    rep.err_ihu_L2 = error_L2(ihu_eval, uhl, mesh, rule_ihu);
    rep.err_ihu_H1 =
        error_H1(ihu_eval, ihu_grad, uhl, uhl_grad, mesh, rule_ihu, H1Mode::norm);
    rep.err_ihu_H1_semi =
        error_H1(ihu_eval, ihu_grad, uhl, uhl_grad, mesh, rule_ihu, H1Mode::seminorm);
    rep.err_p_L2 = error_L2(exact_p, evaluate_p1_scalar(mesh, ph), mesh, rule_p);
    rep.div_uh = div_L2(evaluate_mini_divergence(mesh, dofs, solution.velocity), mesh, rule_div);
    rep.div_uhl = div_L2(evaluate_p1_divergence(mesh, split.linear), mesh, rule_div);
    return rep;
}

ErrorReport run_level(const BenchmarkProblem& problem, const Mesh& mesh,
                      const SolverConfig& config) {
    const AssembledSystem system = build_saddle_system(mesh, problem);
    auto [x, solve_report] = solve_with_fallback(system.reduced.matrix, system.reduced.rhs,
                                                 config);
    DiscreteSolution solution;
    system.expand(x, solution.velocity, solution.pressure, solution.multiplier);

    ErrorReport rep = compute_errors(problem, mesh, system.dofs, solution);
    rep.solver_iterations = solve_report.iterations;
    rep.solver_residual = solve_report.relative_residual;
    rep.solver_converged = solve_report.converged;
    rep.solver_method = solve_report.method;
    return rep;
}

RateSet fit_rates(std::span<const ErrorReport> levels) {
    const auto fit = [&](auto member) {
        std::vector<std::pair<double, double>> pairs;
        pairs.reserve(levels.size());
        for (const auto& rep : levels) pairs.emplace_back(rep.h, rep.*member);
        return fit_rate(pairs);
    };
    RateSet rates;
    rates.u_L2 = fit(&ErrorReport::err_u_L2);
    rates.u_H1 = fit(&ErrorReport::err_u_H1);
    rates.p_L2 = fit(&ErrorReport::err_p_L2);
    rates.ihu_L2 = fit(&ErrorReport::err_ihu_L2);
    rates.ihu_H1 = fit(&ErrorReport::err_ihu_H1);
    rates.ul_L2 = fit(&ErrorReport::err_ul_L2);
    rates.ul_H1 = fit(&ErrorReport::err_ul_H1);
    rates.div_uh = fit(&ErrorReport::div_uh);
    rates.div_uhl = fit(&ErrorReport::div_uhl);
    return rates;
}

ConvergenceStudy run_study(const BenchmarkProblem& problem, std::span<const double> h0_levels,
                           const SolverConfig& config, unsigned seed) {
    ConvergenceStudy study;
    study.problem_id = problem.id;
    study.h0_levels.assign(h0_levels.begin(), h0_levels.end());
    for (const double h0 : h0_levels) {
        const Mesh mesh = generate_mesh(problem.domain, h0, seed);
        study.levels.push_back(run_level(problem, mesh, config));
    }
    study.rates = fit_rates(study.levels);
    return study;
}

}  // namespace stokesmini

#include "stokesmini/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "stokesmini/mesh_io.hpp"

namespace stokesmini::cli {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + path);
    out << contents;
    if (!out) throw Error("write failed for " + path);
}

}  // namespace

void StudyConfig::validate() const {
    if (problems.empty()) throw std::invalid_argument("study: problem list must not be empty");
    for (const int id : problems) {
        if (id < 1 || id > 7) {
            throw std::invalid_argument("study: unknown problem id " + std::to_string(id));
        }
    }
    if (h0_levels.size() < 3) {
        throw std::invalid_argument("study: at least 3 mesh levels are required for rate fits");
    }
    for (std::size_t i = 0; i < h0_levels.size(); ++i) {
        if (!(h0_levels[i] > 0.0)) {
            throw std::invalid_argument("study: h0 values must be positive");
        }
        if (i > 0 && !(h0_levels[i] < h0_levels[i - 1])) {
            throw std::invalid_argument("study: h0 values must be strictly decreasing");
        }
    }
}

SolverConfig StudyConfig::solver_for(int problem_id) const {
    SolverConfig config = default_solver_config(problem_id);
    if (tol) config.tol = *tol;
    if (droptol) config.droptol = *droptol;
    if (max_iterations) config.max_iterations = *max_iterations;
    return config;
}

std::string results_csv_header() {
    return "problem,h,vertices,triangles,err_u_L2,err_u_H1,err_ul_L2,err_ul_H1,err_ihu_L2,"
           "err_ihu_H1,err_p_L2,div_uh,div_uhl,iterations,residual,status";
}

std::string results_csv_row(int problem_id, const ErrorReport& r) {
    std::ostringstream os;
    os << problem_id << ',' << fmt17(r.h) << ',' << r.vertices << ',' << r.triangles << ','
       << fmt17(r.err_u_L2) << ',' << fmt17(r.err_u_H1) << ',' << fmt17(r.err_ul_L2) << ','
       << fmt17(r.err_ul_H1) << ',' << fmt17(r.err_ihu_L2) << ',' << fmt17(r.err_ihu_H1) << ','
       << fmt17(r.err_p_L2) << ',' << fmt17(r.div_uh) << ',' << fmt17(r.div_uhl) << ','
       << r.solver_iterations << ',' << fmt17(r.solver_residual) << ','
       << (r.solver_converged ? "ok" : "not-converged");
    return os.str();
}

std::string rates_csv_header() {
    return "problem,rate_u_L2,rate_u_H1,rate_p_L2,rate_ihu_L2,rate_ihu_H1,rate_ul_L2,"
           "rate_ul_H1,rate_div_uh,rate_div_uhl";
}

std::string rates_csv_row(int problem_id, const RateSet& rates) {
    std::ostringstream os;
    os << problem_id << ',' << fmt17(rates.u_L2) << ',' << fmt17(rates.u_H1) << ','
       << fmt17(rates.p_L2) << ',' << fmt17(rates.ihu_L2) << ',' << fmt17(rates.ihu_H1) << ','
       << fmt17(rates.ul_L2) << ',' << fmt17(rates.ul_H1) << ',' << fmt17(rates.div_uh) << ','
       << fmt17(rates.div_uhl);
    return os.str();
}

int cmd_mesh(const Rect& domain, double h0, unsigned seed, const std::string& out_path) {
    const Mesh mesh = generate_mesh(domain, h0, seed);
    write_mesh_file(mesh, out_path);
    const MeshQualityReport q = mesh_quality(mesh);
    std::cout << "vertices " << mesh.n_vertices() << "\n"
              << "triangles " << mesh.n_triangles() << "\n"
              << "h " << fmt17(mesh_parameter_h(mesh)) << "\n"
              << "min_q1 " << fmt17(q.min_q1) << "\nmean_q1 " << fmt17(q.mean_q1) << "\n"
              << "min_q2 " << fmt17(q.min_q2) << "\nmean_q2 " << fmt17(q.mean_q2) << "\n";
    auto histogram = [](const std::array<int, 10>& bins) {
        std::ostringstream os;
        for (std::size_t b = 0; b < bins.size(); ++b) os << (b ? " " : "") << bins[b];
        return os.str();
    };
    std::cout << "hist_q1 " << histogram(q.histogram_q1) << "\n"
              << "hist_q2 " << histogram(q.histogram_q2) << "\n";
    return kOk;
}

int cmd_solve(int problem_id, std::optional<double> h0, const std::string& mesh_file,
              const StudyConfig& config, const std::string& out_path) {
    const BenchmarkProblem& p = problem(problem_id);
    Mesh mesh;
    if (!mesh_file.empty()) {
        mesh = read_mesh_file(mesh_file);
    } else if (h0) {
        mesh = generate_mesh(p.domain, *h0, config.seed);
    } else {
        throw std::invalid_argument("solve: either --h0 or --mesh-file is required");
    }

    const ErrorReport r = run_level(p, mesh, config.solver_for(problem_id));
    std::cout << "problem " << problem_id << "\n"
              << "h " << fmt17(r.h) << "\n"
              << "vertices " << r.vertices << "\n"
              << "triangles " << r.triangles << "\n"
              << "err_u_L2 " << fmt17(r.err_u_L2) << "\n"
              << "err_u_H1 " << fmt17(r.err_u_H1) << "\n"
              << "err_ul_L2 " << fmt17(r.err_ul_L2) << "\n"
              << "err_ul_H1 " << fmt17(r.err_ul_H1) << "\n"
              << "err_ihu_L2 " << fmt17(r.err_ihu_L2) << "\n"
              << "err_ihu_H1 " << fmt17(r.err_ihu_H1) << "\n"
              << "err_p_L2 " << fmt17(r.err_p_L2) << "\n"
              << "div_uh " << fmt17(r.div_uh) << "\n"
              << "div_uhl " << fmt17(r.div_uhl) << "\n"
              << "iterations " << r.solver_iterations << "\n"
              << "residual " << fmt17(r.solver_residual) << "\n"
              << "method " << r.solver_method << "\n"
              << "converged " << (r.solver_converged ? 1 : 0) << "\n";
    if (!out_path.empty()) {
        write_file(out_path,
                   results_csv_header() + "\n" + results_csv_row(problem_id, r) + "\n");
    }
    return r.solver_converged ? kOk : kNumericalFailure;
}

int cmd_study(const StudyConfig& config) {
    config.validate();
    std::ostringstream results;
    std::ostringstream rates;
    results << results_csv_header() << "\n";
    rates << rates_csv_header() << "\n";

    bool any_failure = false;
    for (const int id : config.problems) {
        const BenchmarkProblem& p = problem(id);
        const SolverConfig solver = config.solver_for(id);
        std::vector<ErrorReport> levels;
        bool all_levels_ok = true;
        for (const double h0 : config.h0_levels) {
            try {
                const Mesh mesh = generate_mesh(p.domain, h0, config.seed);
                ErrorReport r = run_level(p, mesh, solver);
                if (!r.solver_converged) {
                    any_failure = true;
                    all_levels_ok = false;
                }
                results << results_csv_row(id, r) << "\n";
                levels.push_back(std::move(r));
            } catch (const std::exception& e) {
                any_failure = true;
                all_levels_ok = false;
                ErrorReport r;
                r.h = h0;
                results << id << ',' << fmt17(h0)
                        << ",0,0,0,0,0,0,0,0,0,0,0,0,0,failed:" << e.what() << "\n";
            }
        }
        if (all_levels_ok) {
            rates << rates_csv_row(id, fit_rates(levels)) << "\n";
        }
    }

    write_file(config.out_prefix + "_results.csv", results.str());
    write_file(config.out_prefix + "_rates.csv", rates.str());

    nlohmann::json meta;
    meta["tool"] = "stokesmini";
    meta["format_version"] = 1;
    meta["problems"] = config.problems;
    meta["h0_levels"] = config.h0_levels;
    meta["seed"] = config.seed;
    if (config.tol) meta["tol"] = *config.tol;
    if (config.droptol) meta["droptol"] = *config.droptol;
    if (config.max_iterations) meta["maxit"] = *config.max_iterations;
    write_file(config.out_prefix + ".meta.json", meta.dump(2) + "\n");

    return any_failure ? kNumericalFailure : kOk;
}

int cmd_verify(int problem_id, int n_samples) {
    const ManufacturedReport rep = verify_manufactured(problem(problem_id), n_samples);
    std::cout << "problem " << problem_id << "\n"
              << "samples " << rep.samples << "\n"
              << "max_momentum_residual " << fmt17(rep.max_momentum_residual) << "\n"
              << "max_divergence " << fmt17(rep.max_divergence) << "\n"
              << "pressure_integral " << fmt17(rep.pressure_integral) << "\n"
              << "max_boundary_mismatch " << fmt17(rep.max_boundary_mismatch) << "\n";
    return rep.within_tolerances() ? kOk : kNumericalFailure;
}

}  // namespace stokesmini::cli

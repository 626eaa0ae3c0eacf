// stokesmini: 2D Stokes benchmark solver on the MINI mixed element.
//
// Subcommands:
//   mesh    generate a triangulation and write the plain-text mesh format
//   solve   run one problem on one mesh and print its error report
//   study   convergence study over a mesh sequence; writes CSV tables
//   table1  study over all problems with the default sequence
//   verify  manufactured-solution residual check (no solver involved)

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "stokesmini/cli.hpp"

namespace {

stokesmini::Rect parse_domain(const std::string& spec) {
    stokesmini::Rect r;
    char c1, c2, c3;
    std::istringstream is(spec);
    if (!(is >> r.ax >> c1 >> r.ay >> c2 >> r.bx >> c3 >> r.by) || c1 != ',' || c2 != ',' ||
        c3 != ',' || !(r.ax < r.bx) || !(r.ay < r.by)) {
        throw CLI::ValidationError("--domain expects ax,ay,bx,by with ax<bx and ay<by");
    }
    return r;
}

std::vector<double> parse_h0_list(const std::string& spec) {
    std::vector<double> values;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ',')) {
        values.push_back(std::stod(item));
    }
    if (values.empty()) throw CLI::ValidationError("--h0 expects a comma-separated list");
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace stokesmini;

    CLI::App app{"2D Stokes flow benchmarks with the MINI mixed finite element"};
    app.require_subcommand(1);

    // mesh
    auto* mesh_cmd = app.add_subcommand("mesh", "generate a mesh and write it to a file");
    std::string mesh_h0;
    std::string mesh_out = "mesh.txt";
    std::string mesh_domain = "0,0,1,1";
    unsigned mesh_seed = 0;
    mesh_cmd->add_option("--h0", mesh_h0, "target spacing")->required();
    mesh_cmd->add_option("--out", mesh_out, "output path");
    mesh_cmd->add_option("--domain", mesh_domain, "rectangle ax,ay,bx,by");
    mesh_cmd->add_option("--seed", mesh_seed, "initial-lattice jitter seed (0 = none)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve one problem and print the report");
    int solve_problem = 1;
    std::string solve_h0;
    std::string solve_mesh_file;
    std::string solve_out;
    cli::StudyConfig solve_cfg;
    double solve_tol = 0.0, solve_droptol = 0.0;
    int solve_maxit = 0;
    solve_cmd->add_option("--problem", solve_problem, "problem id (1..7)")->required();
    solve_cmd->add_option("--h0", solve_h0, "target spacing");
    solve_cmd->add_option("--mesh-file", solve_mesh_file, "mesh file to load instead");
    solve_cmd->add_option("--tol", solve_tol, "solver relative residual tolerance");
    solve_cmd->add_option("--droptol", solve_droptol, "ILU drop tolerance");
    solve_cmd->add_option("--maxit", solve_maxit, "GMRES iteration cap");
    solve_cmd->add_option("--seed", solve_cfg.seed, "mesh jitter seed");
    solve_cmd->add_option("--out", solve_out, "also write a one-row CSV");

    // study / table1
    auto* study_cmd = app.add_subcommand("study", "convergence study; writes CSV tables");
    cli::StudyConfig study_cfg;
    std::string study_problems;
    std::string study_h0;
    double study_tol = 0.0, study_droptol = 0.0;
    int study_maxit = 0;
    study_cmd->add_option("--problem", study_problems, "comma list of problem ids");
    study_cmd->add_option("--h0", study_h0, "comma list of spacings, strictly decreasing");
    study_cmd->add_option("--tol", study_tol, "solver tolerance override");
    study_cmd->add_option("--droptol", study_droptol, "ILU drop tolerance override");
    study_cmd->add_option("--maxit", study_maxit, "GMRES iteration cap override");
    study_cmd->add_option("--seed", study_cfg.seed, "mesh jitter seed");
    study_cmd->add_option("--out", study_cfg.out_prefix, "output prefix");

    auto* table1_cmd =
        app.add_subcommand("table1", "study over all problems with the default sequence");
    std::string table1_out = "table1";
    table1_cmd->add_option("--out", table1_out, "output prefix");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "manufactured-solution residual check");
    int verify_problem = 1;
    int verify_samples = 10000;
    verify_cmd->add_option("--problem", verify_problem, "problem id (1..7)")->required();
    verify_cmd->add_option("--samples", verify_samples, "number of interior samples");

    try {
        app.parse(argc, argv);

        if (mesh_cmd->parsed()) {
            return cli::cmd_mesh(parse_domain(mesh_domain), std::stod(mesh_h0), mesh_seed,
                                 mesh_out);
        }
        if (solve_cmd->parsed()) {
            if (solve_tol > 0.0) solve_cfg.tol = solve_tol;
            if (solve_droptol > 0.0) solve_cfg.droptol = solve_droptol;
            if (solve_maxit > 0) solve_cfg.max_iterations = solve_maxit;
            std::optional<double> h0;
            if (!solve_h0.empty()) h0 = std::stod(solve_h0);
            return cli::cmd_solve(solve_problem, h0, solve_mesh_file, solve_cfg, solve_out);
        }
        if (study_cmd->parsed()) {
            if (!study_problems.empty()) {
                study_cfg.problems.clear();
                std::istringstream is(study_problems);
                std::string item;
                while (std::getline(is, item, ',')) study_cfg.problems.push_back(std::stoi(item));
            }
            if (!study_h0.empty()) study_cfg.h0_levels = parse_h0_list(study_h0);
            if (study_tol > 0.0) study_cfg.tol = study_tol;
            if (study_droptol > 0.0) study_cfg.droptol = study_droptol;
            if (study_maxit > 0) study_cfg.max_iterations = study_maxit;
            return cli::cmd_study(study_cfg);
        }
        if (table1_cmd->parsed()) {
            cli::StudyConfig cfg;
            cfg.out_prefix = table1_out;
            return cli::cmd_study(cfg);
        }
        if (verify_cmd->parsed()) {
            return cli::cmd_verify(verify_problem, verify_samples);
        }
        std::cerr << app.help();
        return cli::kUsageError;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return cli::kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return cli::kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kNumericalFailure;
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "stokesmini/cli.hpp"
#include "stokesmini/mesh_io.hpp"

using namespace stokesmini;

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

// Runs the CLI binary (path from the STOKESMINI_CLI environment variable).
RunResult run_cli(const std::string& args) {
    const char* exe = std::getenv("STOKESMINI_CLI");
    REQUIRE(exe != nullptr);
    const std::string cmd = std::string(exe) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int rc = pclose(pipe);
    r.status = WEXITSTATUS(rc);
    return r;
}

bool have_cli() { return std::getenv("STOKESMINI_CLI") != nullptr; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("StudyConfig validation") {
    cli::StudyConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    cfg.problems = {};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.problems = {1, 9};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.problems = {1};
    cfg.h0_levels = {0.1, 0.2, 0.05};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.h0_levels = {0.2, 0.1, -0.05};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.h0_levels = {0.2, 0.1};  // fewer than 3 levels cannot support a rate fit
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.h0_levels = {0.2, 0.1, 0.05};
    CHECK_NOTHROW(cfg.validate());

    // solver defaults: tight for 1-5, relaxed for 6-7, overridable
    CHECK(cfg.solver_for(1).tol == 1e-12);
    CHECK(cfg.solver_for(7).tol == 1e-8);
    cfg.tol = 1e-6;
    CHECK(cfg.solver_for(1).tol == 1e-6);
}

TEST_CASE("CSV rows are 17-digit stable") {
    ErrorReport r;
    r.h = 1.0 / 3.0;
    r.vertices = 10;
    r.triangles = 12;
    r.err_u_L2 = 0.1234567890123456789;
    r.solver_converged = true;
    const std::string row = cli::results_csv_row(3, r);
    CHECK(row.substr(0, 2) == "3,");
    CHECK(row.find("0.33333333333333331") != std::string::npos);
    CHECK(row.find("0.12345678901234568") != std::string::npos);
    CHECK(row.find(",ok") != std::string::npos);

    const std::string header = cli::results_csv_header();
    CHECK(header.find("err_ihu_H1") != std::string::npos);
    CHECK(cli::rates_csv_header().find("rate_div_uhl") != std::string::npos);
}

TEST_CASE("cli binary: mesh generation round trip and quality summary") {
    if (!have_cli()) return;
    const auto r = run_cli("mesh --h0 0.15 --out /tmp/stokesmini_test_mesh.txt");
    CHECK(r.status == 0);
    CHECK(r.output.find("min_q1") != std::string::npos);

    // the written file equals the library serialization of the same mesh
    const Mesh mesh = generate_mesh({0, 0, 1, 1}, 0.15);
    std::ostringstream expect;
    write_mesh(mesh, expect);
    CHECK(slurp("/tmp/stokesmini_test_mesh.txt") == expect.str());

    const Mesh back = read_mesh_file("/tmp/stokesmini_test_mesh.txt");
    CHECK(back.n_vertices() == mesh.n_vertices());
    CHECK(back.n_triangles() == mesh.n_triangles());
}

TEST_CASE("cli binary: usage errors exit with status 2") {
    if (!have_cli()) return;
    CHECK(run_cli("mesh --h0 -1 --out /tmp/sm_bad.txt").status == 2);
    CHECK(run_cli("solve --problem 9 --h0 0.2").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("solve --problem 1").status == 2);  // neither --h0 nor --mesh-file
    CHECK(run_cli("study --problem 1 --h0 0.1,0.2,0.3 --out /tmp/sm_bad").status == 2);
}

TEST_CASE("cli binary: solve emits a converged report") {
    if (!have_cli()) return;
    const auto r = run_cli("solve --problem 1 --h0 0.2 --out /tmp/sm_solve.csv");
    CHECK(r.status == 0);
    CHECK(r.output.find("err_u_L2 ") != std::string::npos);
    CHECK(r.output.find("converged 1") != std::string::npos);

    // residual line parses and meets the tight tolerance for problem 1
    std::istringstream is(r.output);
    std::string key;
    double residual = 1.0;
    while (is >> key) {
        if (key == "residual") {
            is >> residual;
            break;
        }
        std::string rest;
        std::getline(is, rest);
    }
    CHECK(residual <= 1e-10);

    const std::string csv = slurp("/tmp/sm_solve.csv");
    CHECK(csv.find(cli::results_csv_header()) == 0);
}

TEST_CASE("cli binary: solve from a mesh file") {
    if (!have_cli()) return;
    REQUIRE(run_cli("mesh --h0 0.2 --out /tmp/sm_mesh2.txt").status == 0);
    const auto r = run_cli("solve --problem 2 --mesh-file /tmp/sm_mesh2.txt");
    CHECK(r.status == 0);
    CHECK(r.output.find("converged 1") != std::string::npos);
}

TEST_CASE("cli binary: verify subcommand") {
    if (!have_cli()) return;
    const auto r = run_cli("verify --problem 5 --samples 500");
    CHECK(r.status == 0);
    CHECK(r.output.find("max_momentum_residual") != std::string::npos);
    CHECK(run_cli("verify --problem 0").status == 2);
}

TEST_CASE("cli binary: study writes stable CSV tables") {
    if (!have_cli()) return;
    const std::string cmd = "study --problem 2 --h0 0.3,0.2,0.14 --out /tmp/sm_study";
    REQUIRE(run_cli(cmd).status == 0);
    const std::string results1 = slurp("/tmp/sm_study_results.csv");
    const std::string rates1 = slurp("/tmp/sm_study_rates.csv");
    CHECK(results1.find(cli::results_csv_header()) == 0);
    CHECK(rates1.find(cli::rates_csv_header()) == 0);
    // 3 levels -> header + 3 rows; one problem -> header + 1 row
    CHECK(std::count(results1.begin(), results1.end(), '\n') == 4);
    CHECK(std::count(rates1.begin(), rates1.end(), '\n') == 2);

    // bitwise stability across reruns
    REQUIRE(run_cli(cmd).status == 0);
    CHECK(slurp("/tmp/sm_study_results.csv") == results1);
    CHECK(slurp("/tmp/sm_study_rates.csv") == rates1);

    // sidecar metadata parses as JSON-ish and carries the config
    const std::string meta = slurp("/tmp/sm_study.meta.json");
    CHECK(meta.find("\"h0_levels\"") != std::string::npos);
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stokesmini/analysis.hpp"

namespace stokesmini::cli {

// Exit statuses shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kNumericalFailure = 1;
inline constexpr int kUsageError = 2;

struct StudyConfig {
    std::vector<int> problems = {1, 2, 3, 4, 5, 6, 7};
    std::vector<double> h0_levels = {0.2, 0.1, 0.05, 0.025};
    std::optional<double> tol;      // per-problem default when unset
    std::optional<double> droptol;
    std::optional<int> max_iterations;
    unsigned seed = 0;
    std::string out_prefix = "study";

    // Throws std::invalid_argument when the problem list is empty or the
    // h0 sequence is not positive and strictly decreasing.
    void validate() const;

    SolverConfig solver_for(int problem_id) const;
};

// Writes the mesh file and prints a quality summary.  Returns an exit status.
int cmd_mesh(const Rect& domain, double h0, unsigned seed, const std::string& out_path);

// Generates (or loads) a mesh, solves one problem, prints the error report
// as key-value text, and optionally writes a one-row CSV.
int cmd_solve(int problem_id, std::optional<double> h0, const std::string& mesh_file,
              const StudyConfig& config, const std::string& out_path);

// Runs the convergence study and writes <prefix>_results.csv,
// <prefix>_rates.csv and a <prefix>.meta.json sidecar.
int cmd_study(const StudyConfig& config);

// Prints the manufactured-solution residual report.
int cmd_verify(int problem_id, int n_samples);

// CSV serialization (17 significant digits, deterministic).
std::string results_csv_header();
std::string results_csv_row(int problem_id, const ErrorReport& report);
std::string rates_csv_header();
std::string rates_csv_row(int problem_id, const RateSet& rates);

}  // namespace stokesmini::cli

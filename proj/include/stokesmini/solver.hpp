#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stokesmini/sparse.hpp"

namespace stokesmini {

struct SolverConfig {
    double tol = 1e-12;        // relative residual target
    int max_iterations = 2000;
    int restart = 0;           // 0 = full GMRES (no restart)
    double droptol = 1e-3;     // ILU threshold, relative to the row norm
};

struct SolveReport {
    int iterations = 0;
    double relative_residual = 0.0;  // true residual, re-verified after the solve
    bool converged = false;
    int preconditioner_nnz = 0;
    double fill_ratio = 0.0;  // (nnz(L)+nnz(U)) / nnz(A)
    std::string method;
    std::vector<double> residual_history;  // per-iteration estimates, relative
};

// Threshold incomplete LU (no pivoting): entries below droptol times the
// 2-norm of their row are dropped.  droptol = 0 yields the exact LU.
// Throws PivotFailureError when a pivot vanishes.
class IluPreconditioner {
public:
    void apply(std::span<const double> r, std::span<double> z) const;  // z = (LU)^{-1} r
    int nnz() const {
        return static_cast<int>(lower_values_.size() + upper_values_.size());
    }

private:
    friend IluPreconditioner ilu_factor(const SparseMatrix& A, double droptol);
    int n_ = 0;
    // L strictly lower with implicit unit diagonal; U upper including diagonal
    std::vector<int> lower_ptr_, lower_idx_;
    std::vector<double> lower_values_;
    std::vector<int> upper_ptr_, upper_idx_;
    std::vector<double> upper_values_;
};

IluPreconditioner ilu_factor(const SparseMatrix& A, double droptol);

// Right-preconditioned GMRES from a zero initial guess.  Residual estimates
// are non-increasing within a cycle; with restart = 0 the whole solve is one
// cycle.  On convergence the returned report carries the re-computed true
// relative residual.  Hitting max_iterations returns the best iterate with
// converged = false.
std::pair<std::vector<double>, SolveReport> gmres(const SparseMatrix& A,
                                                  std::span<const double> b,
                                                  const IluPreconditioner* preconditioner,
                                                  const SolverConfig& config);

// Sparse LU oracle.  Throws SingularMatrixError when the factorization fails.
std::vector<double> direct_solve(const SparseMatrix& A, std::span<const double> b);

// GMRES+ILUT with the configured droptol, retried at 1e-4, then the direct
// solver as a final fallback.
std::pair<std::vector<double>, SolveReport> solve_with_fallback(const SparseMatrix& A,
                                                                std::span<const double> b,
                                                                const SolverConfig& config);

}  // namespace stokesmini

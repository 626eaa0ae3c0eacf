#include "stokesmini/solver.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

namespace stokesmini {

namespace {

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (const double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

IluPreconditioner ilu_factor(const SparseMatrix& A, double droptol) {
    if (A.rows() != A.cols()) throw Error("ilu_factor: matrix must be square");
    if (droptol < 0.0) throw std::invalid_argument("ilu_factor: droptol must be >= 0");
    const int n = A.rows();
    const auto arow = A.row_ptr();
    const auto acol = A.col_idx();
    const auto aval = A.values();

    IluPreconditioner P;
    P.n_ = n;
    P.lower_ptr_.assign(n + 1, 0);
    P.upper_ptr_.assign(n + 1, 0);
    std::vector<double> diag(n, 0.0);

    std::vector<double> w(n, 0.0);       // dense accumulator for the current row
    std::vector<char> active(n, 0);
    std::vector<int> touched;
    touched.reserve(256);

    for (int i = 0; i < n; ++i) {
        touched.clear();
        double row_norm2 = 0.0;
        // min-heap of pending columns < i, fed by fill-in during elimination
        std::priority_queue<int, std::vector<int>, std::greater<int>> pending;
        for (int k = arow[i]; k < arow[i + 1]; ++k) {
            const int j = acol[k];
            w[j] = aval[k];
            active[j] = 1;
            touched.push_back(j);
            row_norm2 += aval[k] * aval[k];
            if (j < i) pending.push(j);
        }
        const double tau = droptol * std::sqrt(row_norm2);

        while (!pending.empty()) {
            const int k = pending.top();
            pending.pop();
            if (!active[k] || w[k] == 0.0) continue;
            const double factor = w[k] / diag[k];
            if (std::fabs(factor) < tau) {
                w[k] = 0.0;
                continue;
            }
            w[k] = factor;
            for (int p = P.upper_ptr_[k]; p < P.upper_ptr_[k + 1]; ++p) {
                const int j = P.upper_idx_[p];
                if (j == k) continue;
                if (!active[j]) {
                    active[j] = 1;
                    w[j] = 0.0;
                    touched.push_back(j);
                    if (j < i) pending.push(j);
                }
                w[j] -= factor * P.upper_values_[p];
            }
        }

        std::sort(touched.begin(), touched.end());
        double pivot = 0.0;
        for (const int j : touched) {
            const double v = w[j];
            if (j < i) {
                if (v != 0.0) {
                    P.lower_idx_.push_back(j);
                    P.lower_values_.push_back(v);
                }
            } else if (j == i) {
                pivot = v;
            } else if (std::fabs(v) >= tau && v != 0.0) {
                P.upper_idx_.push_back(j);
                P.upper_values_.push_back(v);
            }
            w[j] = 0.0;
            active[j] = 0;
        }
        if (!(std::fabs(pivot) > 1e-13 * std::sqrt(row_norm2)) || pivot == 0.0) {
            throw PivotFailureError("ilu_factor: zero pivot at row " + std::to_string(i), i);
        }
        // diagonal entry leads its U row
        P.upper_idx_.insert(P.upper_idx_.begin() + P.upper_ptr_[i], i);
        P.upper_values_.insert(P.upper_values_.begin() + P.upper_ptr_[i], pivot);
        diag[i] = pivot;
        P.lower_ptr_[i + 1] = static_cast<int>(P.lower_values_.size());
        P.upper_ptr_[i + 1] = static_cast<int>(P.upper_values_.size());
    }
    return P;
}

void IluPreconditioner::apply(std::span<const double> r, std::span<double> z) const {
    // forward solve L y = r (unit diagonal), in place into z
    for (int i = 0; i < n_; ++i) {
        double acc = r[i];
        for (int k = lower_ptr_[i]; k < lower_ptr_[i + 1]; ++k) {
            acc -= lower_values_[k] * z[lower_idx_[k]];
        }
        z[i] = acc;
    }
    // backward solve U z = y
    for (int i = n_ - 1; i >= 0; --i) {
        double acc = z[i];
        double d = 1.0;
        for (int k = upper_ptr_[i]; k < upper_ptr_[i + 1]; ++k) {
            const int j = upper_idx_[k];
            if (j == i) {
                d = upper_values_[k];
            } else {
                acc -= upper_values_[k] * z[j];
            }
        }
        z[i] = acc / d;
    }
}

std::pair<std::vector<double>, SolveReport> gmres(const SparseMatrix& A,
                                                  std::span<const double> b,
                                                  const IluPreconditioner* preconditioner,
                                                  const SolverConfig& config) {
    if (A.rows() != A.cols() || A.rows() != static_cast<int>(b.size())) {
        throw Error("gmres: dimension mismatch");
    }
    const int n = A.rows();
    SolveReport report;
    report.method = preconditioner ? "gmres+ilut" : "gmres";
    if (preconditioner) {
        report.preconditioner_nnz = preconditioner->nnz();
        report.fill_ratio = A.nnz() > 0
                                ? static_cast<double>(preconditioner->nnz()) / A.nnz()
                                : 0.0;
    }

    std::vector<double> x(n, 0.0);
    const double bnorm = norm2(b);
    if (bnorm == 0.0) {
        report.converged = true;
        return {x, report};
    }

    std::vector<double> r(b.begin(), b.end());
    std::vector<double> z(n), w(n);
    int total_iterations = 0;

    while (true) {
        // residual of the current iterate (x = 0 on the first cycle)
        if (total_iterations > 0) {
            A.multiply(x, w);
            for (int i = 0; i < n; ++i) r[i] = b[i] - w[i];
        }
        const double beta = norm2(r);
        report.relative_residual = beta / bnorm;
        if (report.relative_residual <= config.tol) {
            report.converged = true;
            return {x, report};
        }
        if (total_iterations >= config.max_iterations) {
            report.converged = false;
            return {x, report};
        }

        const int cycle_limit = config.restart > 0
                                    ? std::min(config.restart,
                                               config.max_iterations - total_iterations)
                                    : config.max_iterations - total_iterations;
        std::vector<std::vector<double>> V;
        V.reserve(std::min(cycle_limit + 1, 256));
        std::vector<std::vector<double>> H;  // H[j] is column j (j+2 entries)
        std::vector<double> cs, sn, g;
        V.emplace_back(n);
        for (int i = 0; i < n; ++i) V[0][i] = r[i] / beta;
        g.push_back(beta);

        int j = 0;
        bool breakdown = false;
        for (; j < cycle_limit; ++j) {
            const std::vector<double>& vj = V[j];
            if (preconditioner) {
                preconditioner->apply(vj, z);
                A.multiply(z, w);
            } else {
                A.multiply(vj, w);
            }
            // modified Gram-Schmidt with one re-orthogonalization pass
            std::vector<double> h(j + 2, 0.0);
            for (int i = 0; i <= j; ++i) {
                double dot = 0.0;
                for (int p = 0; p < n; ++p) dot += V[i][p] * w[p];
                for (int p = 0; p < n; ++p) w[p] -= dot * V[i][p];
                h[i] = dot;
            }
            for (int i = 0; i <= j; ++i) {
                double dot = 0.0;
                for (int p = 0; p < n; ++p) dot += V[i][p] * w[p];
                for (int p = 0; p < n; ++p) w[p] -= dot * V[i][p];
                h[i] += dot;
            }
            const double hnext = norm2(w);
            h[j + 1] = hnext;

            // apply accumulated Givens rotations, then a new one
            for (int i = 0; i < j; ++i) {
                const double t = cs[i] * h[i] + sn[i] * h[i + 1];
                h[i + 1] = -sn[i] * h[i] + cs[i] * h[i + 1];
                h[i] = t;
            }
            const double denom = std::hypot(h[j], h[j + 1]);
            const double c = denom > 0.0 ? h[j] / denom : 1.0;
            const double s = denom > 0.0 ? h[j + 1] / denom : 0.0;
            cs.push_back(c);
            sn.push_back(s);
            h[j] = denom;
            h[j + 1] = 0.0;
            g.push_back(-s * g[j]);
            g[j] *= c;
            H.push_back(std::move(h));

            ++total_iterations;
            const double est = std::fabs(g[j + 1]) / bnorm;
            report.residual_history.push_back(est);

            if (hnext == 0.0) {  // happy breakdown: solution is exact in span(V)
                breakdown = true;
                ++j;
                break;
            }
            V.emplace_back(n);
            for (int p = 0; p < n; ++p) V[j + 1][p] = w[p] / hnext;

            if (est <= config.tol || total_iterations >= config.max_iterations) {
                ++j;
                break;
            }
        }

        // back-substitute H y = g and update x
        if (j > 0) {
            std::vector<double> y(j, 0.0);
            for (int i = j - 1; i >= 0; --i) {
                double acc = g[i];
                for (int k = i + 1; k < j; ++k) acc -= H[k][i] * y[k];
                y[i] = acc / H[i][i];
            }
            std::vector<double> update(n, 0.0);
            for (int k = 0; k < j; ++k) {
                for (int p = 0; p < n; ++p) update[p] += y[k] * V[k][p];
            }
            if (preconditioner) {
                preconditioner->apply(update, z);
                for (int p = 0; p < n; ++p) x[p] += z[p];
            } else {
                for (int p = 0; p < n; ++p) x[p] += update[p];
            }
        }
        report.iterations = total_iterations;

        A.multiply(x, w);
        double rn = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = b[i] - w[i];
            rn += d * d;
        }
        report.relative_residual = std::sqrt(rn) / bnorm;
        if (report.relative_residual <= config.tol) {
            report.converged = true;
            return {x, report};
        }
        if (breakdown || total_iterations >= config.max_iterations) {
            report.converged = report.relative_residual <= config.tol;
            return {x, report};
        }
        // otherwise: restart cycle (or continue after roundoff stalled the
        // estimated residual below the true one)
    }
}

std::vector<double> direct_solve(const SparseMatrix& A, std::span<const double> b) {
    if (A.rows() != A.cols() || A.rows() != static_cast<int>(b.size())) {
        throw Error("direct_solve: dimension mismatch");
    }
    const int n = A.rows();
    Eigen::SparseMatrix<double> M(n, n);
    {
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(A.nnz());
        const auto rp = A.row_ptr();
        const auto ci = A.col_idx();
        const auto va = A.values();
        for (int r = 0; r < n; ++r) {
            for (int k = rp[r]; k < rp[r + 1]; ++k) trips.emplace_back(r, ci[k], va[k]);
        }
        M.setFromTriplets(trips.begin(), trips.end());
    }
    M.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(M);
    lu.factorize(M);
    if (lu.info() != Eigen::Success) {
        throw SingularMatrixError("direct_solve: factorization failed (singular to working "
                                  "precision)");
    }
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = b[i];
    const Eigen::VectorXd sol = lu.solve(rhs);
    if (lu.info() != Eigen::Success || !sol.allFinite()) {
        throw SingularMatrixError("direct_solve: solve failed (singular to working precision)");
    }
    const double bnorm = rhs.norm();
    if (bnorm > 0.0 && (rhs - M * sol).norm() > 1e-6 * bnorm) {
        throw SingularMatrixError("direct_solve: residual check failed (singular to working "
                                  "precision)");
    }
    return {sol.data(), sol.data() + n};
}

std::pair<std::vector<double>, SolveReport> solve_with_fallback(const SparseMatrix& A,
                                                                std::span<const double> b,
                                                                const SolverConfig& config) {
    std::vector<double> droptols = {config.droptol};
    if (config.droptol != 1e-4) droptols.push_back(1e-4);
    for (const double dt : droptols) {
        try {
            const IluPreconditioner P = ilu_factor(A, dt);
            auto [x, report] = gmres(A, b, &P, config);
            report.method = "gmres+ilut(" + std::to_string(dt) + ")";
            if (report.converged) return {std::move(x), std::move(report)};
        } catch (const PivotFailureError&) {
            // retry with the next droptol, then fall through to the direct solver
        }
    }
    std::vector<double> x = direct_solve(A, b);
    SolveReport report;
    report.method = "direct";
    const double bnorm = norm2(b);
    if (bnorm > 0.0) {
        std::vector<double> w(A.rows());
        A.multiply(x, w);
        double rn = 0.0;
        for (int i = 0; i < A.rows(); ++i) {
            const double d = b[i] - w[i];
            rn += d * d;
        }
        report.relative_residual = std::sqrt(rn) / bnorm;
    }
    report.converged = true;
    return {std::move(x), std::move(report)};
}

}  // namespace stokesmini

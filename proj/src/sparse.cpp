#include "stokesmini/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace stokesmini {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         const std::vector<Triplet>& triplets) {
    SparseMatrix m(rows, cols);
    std::vector<std::size_t> order(triplets.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // stable sort keeps duplicates in insertion order, so their summation
    // order (and the resulting bits) is fixed by the assembly traversal
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (triplets[a].row != triplets[b].row) return triplets[a].row < triplets[b].row;
        return triplets[a].col < triplets[b].col;
    });

    std::vector<int> cols_merged;
    std::vector<double> vals_merged;
    std::vector<int> rows_merged;
    cols_merged.reserve(triplets.size());
    vals_merged.reserve(triplets.size());
    rows_merged.reserve(triplets.size());
    int pr = -1, pc = -1;
    for (const std::size_t k : order) {
        const Triplet& t = triplets[k];
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols) {
            throw Error("SparseMatrix::from_triplets: index out of range (" +
                        std::to_string(t.row) + "," + std::to_string(t.col) + ")");
        }
        if (t.row == pr && t.col == pc) {
            vals_merged.back() += t.value;
            continue;
        }
        rows_merged.push_back(t.row);
        cols_merged.push_back(t.col);
        vals_merged.push_back(t.value);
        pr = t.row;
        pc = t.col;
    }

    m.row_ptr_.assign(rows + 1, 0);
    for (std::size_t k = 0; k < vals_merged.size(); ++k) {
        if (vals_merged[k] == 0.0) continue;  // cancelled entries are not stored
        m.col_idx_.push_back(cols_merged[k]);
        m.values_.push_back(vals_merged[k]);
        ++m.row_ptr_[rows_merged[k] + 1];
    }
    for (int r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
    return m;
}

double SparseMatrix::coeff(int row, int col) const {
    for (int k = row_ptr_[row]; k < row_ptr_[row + 1]; ++k) {
        if (col_idx_[k] == col) return values_[k];
    }
    return 0.0;
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
    for (int r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            acc += values_[k] * x[col_idx_[k]];
        }
        y[r] = acc;
    }
}

std::vector<double> SparseMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(rows_);
    multiply(x, y);
    return y;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for (int r = 0; r < rows_; ++r) {
        for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            t.push_back({col_idx_[k], r, values_[k]});
        }
    }
    return from_triplets(cols_, rows_, t);
}

}  // namespace stokesmini

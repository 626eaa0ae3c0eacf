#pragma once

#include <span>
#include <vector>

#include "stokesmini/errors.hpp"

namespace stokesmini {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

// Compressed-row sparse matrix.  Column indices are strictly increasing
// within each row; exact zeros produced by cancellation during assembly are
// dropped at finalization.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

    // Duplicate (row, col) entries are summed in insertion order, so assembly
    // with a fixed element traversal is bitwise reproducible.
    static SparseMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& triplets);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nnz() const { return static_cast<int>(values_.size()); }

    double coeff(int row, int col) const;  // 0.0 when the entry is not stored

    void multiply(std::span<const double> x, std::span<double> y) const;
    std::vector<double> multiply(std::span<const double> x) const;

    SparseMatrix transpose() const;

    std::span<const int> row_ptr() const { return row_ptr_; }
    std::span<const int> col_idx() const { return col_idx_; }
    std::span<const double> values() const { return values_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_ptr_;
    std::vector<int> col_idx_;
    std::vector<double> values_;
};

}  // namespace stokesmini

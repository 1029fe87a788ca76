#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

namespace kgemb {

// Compressed sparse row matrix with an optional row-label index. Immutable
// after construction; column indices are strictly increasing within each
// row and all values are finite.
class SparseMatrix {
public:
    struct Triplet {
        int row;
        int col;
        double value;
    };

    SparseMatrix() = default;

    // Duplicate (row, col) entries are rejected. When `symmetric` is set,
    // construction verifies that (i,j) is stored iff (j,i) is, with equal
    // value. Throws NonFiniteInput / DimensionMismatch / Error.
    static SparseMatrix from_triplets(int n_rows, int n_cols,
                                      std::vector<Triplet> triplets,
                                      bool symmetric = false,
                                      std::vector<std::string> row_labels = {});

    int rows() const { return n_rows_; }
    int cols() const { return n_cols_; }
    std::size_t nnz() const { return values_.size(); }
    bool symmetric() const { return symmetric_; }

    const std::vector<std::size_t>& row_offsets() const { return row_offsets_; }
    const std::vector<int>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::string>& row_labels() const { return row_labels_; }

    double value_at(int row, int col) const;  // 0 when the cell is absent

    // out = A * x, out = A^T * x (block versions used by the SVD)
    void multiply(const Eigen::MatrixXd& x, Eigen::MatrixXd& out) const;
    void multiply_transpose(const Eigen::MatrixXd& x, Eigen::MatrixXd& out) const;

    Eigen::MatrixXd to_dense() const;

private:
    int n_rows_ = 0;
    int n_cols_ = 0;
    bool symmetric_ = false;
    std::vector<std::size_t> row_offsets_;  // size n_rows + 1
    std::vector<int> col_indices_;
    std::vector<double> values_;
    std::vector<std::string> row_labels_;  // empty or size n_rows
};

}  // namespace kgemb

#include "kgemb/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "kgemb/errors.hpp"

namespace kgemb {

SparseMatrix SparseMatrix::from_triplets(int n_rows, int n_cols,
                                         std::vector<Triplet> triplets,
                                         bool symmetric,
                                         std::vector<std::string> row_labels) {
    if (n_rows < 0 || n_cols < 0) {
        throw DimensionMismatch("negative matrix dimensions");
    }
    if (!row_labels.empty() && static_cast<int>(row_labels.size()) != n_rows) {
        throw DimensionMismatch("row label count does not match row count");
    }
    for (const Triplet& t : triplets) {
        if (t.row < 0 || t.row >= n_rows || t.col < 0 || t.col >= n_cols) {
            throw DimensionMismatch("triplet index out of range");
        }
        if (!std::isfinite(t.value)) {
            throw NonFiniteInput("sparse matrix entries must be finite");
        }
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 1; i < triplets.size(); ++i) {
        if (triplets[i].row == triplets[i - 1].row &&
            triplets[i].col == triplets[i - 1].col) {
            throw Error("duplicate (row, col) entry in sparse matrix construction");
        }
    }

    SparseMatrix m;
    m.n_rows_ = n_rows;
    m.n_cols_ = n_cols;
    m.symmetric_ = symmetric;
    m.row_labels_ = std::move(row_labels);
    m.row_offsets_.assign(static_cast<std::size_t>(n_rows) + 1, 0);
    m.col_indices_.reserve(triplets.size());
    m.values_.reserve(triplets.size());
    for (const Triplet& t : triplets) {
        ++m.row_offsets_[static_cast<std::size_t>(t.row) + 1];
        m.col_indices_.push_back(t.col);
        m.values_.push_back(t.value);
    }
    for (std::size_t r = 0; r < static_cast<std::size_t>(n_rows); ++r) {
        m.row_offsets_[r + 1] += m.row_offsets_[r];
    }

    if (symmetric) {
        if (n_rows != n_cols) {
            throw DimensionMismatch("symmetric matrix must be square");
        }
        for (int i = 0; i < n_rows; ++i) {
            for (std::size_t p = m.row_offsets_[i]; p < m.row_offsets_[i + 1]; ++p) {
                int j = m.col_indices_[p];
                if (m.value_at(j, i) != m.values_[p]) {
                    throw Error("matrix flagged symmetric is not symmetric");
                }
            }
        }
    }
    return m;
}

double SparseMatrix::value_at(int row, int col) const {
    if (row < 0 || row >= n_rows_ || col < 0 || col >= n_cols_) {
        throw DimensionMismatch("index out of range");
    }
    auto begin = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row]);
    auto end = col_indices_.begin() + static_cast<std::ptrdiff_t>(row_offsets_[row + 1]);
    auto it = std::lower_bound(begin, end, col);
    if (it == end || *it != col) {
        return 0.0;
    }
    return values_[static_cast<std::size_t>(it - col_indices_.begin())];
}

void SparseMatrix::multiply(const Eigen::MatrixXd& x, Eigen::MatrixXd& out) const {
    if (x.rows() != n_cols_) {
        throw DimensionMismatch("sparse multiply: inner dimensions differ");
    }
    out.setZero(n_rows_, x.cols());
    for (int i = 0; i < n_rows_; ++i) {
        for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
            out.row(i) += values_[p] * x.row(col_indices_[p]);
        }
    }
}

void SparseMatrix::multiply_transpose(const Eigen::MatrixXd& x,
                                      Eigen::MatrixXd& out) const {
    if (x.rows() != n_rows_) {
        throw DimensionMismatch("sparse transpose-multiply: inner dimensions differ");
    }
    out.setZero(n_cols_, x.cols());
    for (int i = 0; i < n_rows_; ++i) {
        for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
            out.row(col_indices_[p]) += values_[p] * x.row(i);
        }
    }
}

Eigen::MatrixXd SparseMatrix::to_dense() const {
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n_rows_, n_cols_);
    for (int i = 0; i < n_rows_; ++i) {
        for (std::size_t p = row_offsets_[i]; p < row_offsets_[i + 1]; ++p) {
            dense(i, col_indices_[p]) = values_[p];
        }
    }
    return dense;
}

}  // namespace kgemb

#pragma once

#include <Eigen/Dense>
#include <string>
#include <unordered_map>
#include <vector>

namespace kgemb {

// Dense row-labeled matrix of d-dimensional vectors with a vocabulary
// index. Immutable after construction.
class EmbeddingMatrix {
public:
    EmbeddingMatrix() = default;

    // Throws on duplicate labels, non-finite entries, or a vocab/row count
    // mismatch. `unit_normalized` asserts that every nonzero row has
    // Euclidean norm 1 within 1e-6.
    EmbeddingMatrix(std::vector<std::string> vocab, Eigen::MatrixXd data,
                    bool unit_normalized = false);

    int size() const { return static_cast<int>(vocab_.size()); }
    int dim() const { return static_cast<int>(data_.cols()); }
    bool unit_normalized() const { return unit_normalized_; }

    const std::vector<std::string>& vocab() const { return vocab_; }
    int index_of(const std::string& label) const;
    bool contains(const std::string& label) const { return index_of(label) >= 0; }

    const Eigen::MatrixXd& data() const { return data_; }
    Eigen::VectorXd row(int i) const { return data_.row(i); }

private:
    std::vector<std::string> vocab_;
    std::unordered_map<std::string, int> index_;
    Eigen::MatrixXd data_;
    bool unit_normalized_ = false;
};

// a.b / (|a||b|); 0 when either vector has zero norm. Throws
// DimensionMismatch.
double cosine(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Subtracts the column mean from every row, then rescales each nonzero row
// to unit norm (zero rows stay zero).
EmbeddingMatrix center_and_unit_normalize(const EmbeddingMatrix& m);

// Rescales each nonzero row to unit norm.
EmbeddingMatrix unit_normalize_rows(const EmbeddingMatrix& m);
Eigen::MatrixXd unit_normalize_rows(Eigen::MatrixXd data);

}  // namespace kgemb

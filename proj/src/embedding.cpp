#include "kgemb/embedding.hpp"

#include <cmath>

#include "kgemb/errors.hpp"

namespace kgemb {

EmbeddingMatrix::EmbeddingMatrix(std::vector<std::string> vocab, Eigen::MatrixXd data,
                                 bool unit_normalized)
    : vocab_(std::move(vocab)), data_(std::move(data)),
      unit_normalized_(unit_normalized) {
    if (static_cast<int>(vocab_.size()) != data_.rows()) {
        throw DimensionMismatch("vocabulary size does not match row count");
    }
    if (!data_.allFinite()) {
        throw NonFiniteInput("embedding matrix has non-finite entries");
    }
    index_.reserve(vocab_.size());
    for (std::size_t i = 0; i < vocab_.size(); ++i) {
        auto [it, inserted] = index_.emplace(vocab_[i], static_cast<int>(i));
        if (!inserted) {
            throw Error("duplicate vocabulary label: '" + vocab_[i] + "'");
        }
    }
    if (unit_normalized_) {
        for (int i = 0; i < data_.rows(); ++i) {
            double n = data_.row(i).norm();
            if (n != 0.0 && std::abs(n - 1.0) > 1e-6) {
                throw Error("row flagged unit-normalized has norm " + std::to_string(n));
            }
        }
    }
}

int EmbeddingMatrix::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

double cosine(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("cosine of vectors with different dimensions");
    }
    double na = a.norm();
    double nb = b.norm();
    if (na == 0.0 || nb == 0.0) {
        return 0.0;
    }
    return a.dot(b) / (na * nb);
}

Eigen::MatrixXd unit_normalize_rows(Eigen::MatrixXd data) {
    for (int i = 0; i < data.rows(); ++i) {
        double n = data.row(i).norm();
        if (n > 0.0) {
            data.row(i) /= n;
        }
    }
    return data;
}

EmbeddingMatrix unit_normalize_rows(const EmbeddingMatrix& m) {
    return EmbeddingMatrix(m.vocab(), unit_normalize_rows(m.data()), true);
}

EmbeddingMatrix center_and_unit_normalize(const EmbeddingMatrix& m) {
    Eigen::MatrixXd data = m.data();
    if (data.rows() > 0) {
        Eigen::RowVectorXd mean = data.colwise().mean();
        data.rowwise() -= mean;
    }
    return EmbeddingMatrix(m.vocab(), unit_normalize_rows(std::move(data)), true);
}

}  // namespace kgemb

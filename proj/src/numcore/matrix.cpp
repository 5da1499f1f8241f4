#include "trajlab/numcore/matrix.hpp"

#include <cmath>
#include <string>

namespace trajlab::numcore {

namespace {

void check_finite(std::span<const double> values, const char* context) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw NonFiniteInput(std::string(context) + " entry " + std::to_string(i) +
                                 " is not finite");
        }
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("Matrix data length " + std::to_string(data_.size()) +
                                " != rows*cols " + std::to_string(rows_ * cols_));
    }
    check_finite(data_, "Matrix");
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<double> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw DimensionMismatch("ragged initializer rows");
        }
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
}

std::vector<double> Matrix::column_means() const {
    std::vector<double> means(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* r = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) {
            means[j] += r[j];
        }
    }
    if (rows_ > 0) {
        for (auto& m : means) m /= static_cast<double>(rows_);
    }
    return means;
}

void Matrix::validate_finite(const char* context) const {
    check_finite(data_, context);
}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
    : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, 0.0) {}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, std::vector<double> data)
    : d0_(d0), d1_(d1), d2_(d2), data_(std::move(data)) {
    if (data_.size() != d0_ * d1_ * d2_) {
        throw DimensionMismatch("Tensor3 data length " + std::to_string(data_.size()) +
                                " != product of dims " + std::to_string(d0_ * d1_ * d2_));
    }
    check_finite(data_, "Tensor3");
}

Matrix Tensor3::slice_middle(std::size_t j) const {
    Matrix out(d0_, d2_);
    for (std::size_t i = 0; i < d0_; ++i) {
        const double* src = data_.data() + (i * d1_ + j) * d2_;
        double* dst = out.row(i).data();
        for (std::size_t k = 0; k < d2_; ++k) dst[k] = src[k];
    }
    return out;
}

void Tensor3::validate_finite(const char* context) const {
    check_finite(data_, context);
}

}  // namespace trajlab::numcore

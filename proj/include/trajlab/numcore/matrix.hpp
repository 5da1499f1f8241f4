#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "trajlab/errors.hpp"

namespace trajlab::numcore {

/// Dense row-major matrix of doubles. Constructors reject NaN/Inf entries;
/// code that fills a matrix element-by-element is expected to produce finite
/// values and can re-assert with validate_finite() at API boundaries.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }
    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(data_).subspan(i * cols_, cols_);
    }
    std::span<double> row(std::size_t i) {
        return std::span<double>(data_).subspan(i * cols_, cols_);
    }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    /// Column means, fixed left-to-right row order so results do not depend
    /// on caller parallelism.
    std::vector<double> column_means() const;

    /// Throws NonFiniteInput if any entry is NaN or infinite.
    void validate_finite(const char* context = "Matrix") const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Dense row-major rank-3 tensor (outermost axis first).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2);
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, std::vector<double> data);

    std::size_t dim0() const { return d0_; }
    std::size_t dim1() const { return d1_; }
    std::size_t dim2() const { return d2_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * d1_ + j) * d2_ + k];
    }
    double operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * d1_ + j) * d2_ + k];
    }

    std::span<double> values() { return data_; }
    std::span<const double> values() const { return data_; }

    /// Copy of the d0 x d2 slice at fixed middle index j.
    Matrix slice_middle(std::size_t j) const;

    /// Copy of the innermost vector at (i, j).
    std::span<const double> inner(std::size_t i, std::size_t j) const {
        return std::span<const double>(data_).subspan((i * d1_ + j) * d2_, d2_);
    }

    void validate_finite(const char* context = "Tensor3") const;

    bool operator==(const Tensor3& other) const = default;

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<double> data_;
};

}  // namespace trajlab::numcore

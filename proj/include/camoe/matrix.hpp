#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace camoe {

/// Dense row-major matrix of 64-bit reals. The universal carrier for
/// features, weights and gradients.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // rows * cols, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }

    bool same_shape(const Matrix& other) const { return rows == other.rows && cols == other.cols; }
};

/// a (r x n) * b (n x c) -> (r x c)
Matrix matmul(const Matrix& a, const Matrix& b);

/// a (r x n) * b^T, b is (c x n) -> (r x c). The forward-pass product
/// act * W^T for weight matrices stored out_dim x in_dim.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

/// a^T * b, a is (n x r), b is (n x c) -> (r x c). Weight-gradient product.
Matrix matmul_tn(const Matrix& a, const Matrix& b);

/// Throws InvalidDimensionError unless every entry is finite.
void require_finite(const Matrix& m, const char* what);

/// Index of the first maximum entry (ties -> lowest index).
std::size_t argmax(std::span<const double> v);

}  // namespace camoe

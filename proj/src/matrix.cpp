#include "camoe/matrix.hpp"

#include <cmath>
#include <string>

#include "camoe/errors.hpp"

namespace camoe {

namespace {

void require_inner(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw InvalidDimensionError(std::string(op) + ": inner dimensions disagree (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    require_inner(a.cols, b.rows, "matmul");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* brow = b.data.data() + k * b.cols;
            double* orow = out.data.data() + i * out.cols;
            for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    require_inner(a.cols, b.cols, "matmul_nt");
    Matrix out(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* arow = a.data.data() + i * a.cols;
        for (std::size_t j = 0; j < b.rows; ++j) {
            const double* brow = b.data.data() + j * b.cols;
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols; ++k) acc += arow[k] * brow[k];
            out(i, j) = acc;
        }
    }
    return out;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    require_inner(a.rows, b.rows, "matmul_tn");
    Matrix out(a.cols, b.cols);
    for (std::size_t n = 0; n < a.rows; ++n) {
        const double* arow = a.data.data() + n * a.cols;
        const double* brow = b.data.data() + n * b.cols;
        for (std::size_t i = 0; i < a.cols; ++i) {
            const double ani = arow[i];
            if (ani == 0.0) continue;
            double* orow = out.data.data() + i * out.cols;
            for (std::size_t j = 0; j < b.cols; ++j) orow[j] += ani * brow[j];
        }
    }
    return out;
}

void require_finite(const Matrix& m, const char* what) {
    for (double v : m.data) {
        if (!std::isfinite(v)) {
            throw InvalidDimensionError(std::string(what) + ": non-finite entry");
        }
    }
}

std::size_t argmax(std::span<const double> v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[best]) best = i;
    }
    return best;
}

}  // namespace camoe

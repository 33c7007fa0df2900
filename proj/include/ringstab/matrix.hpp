#pragma once

#include <cstddef>
#include <vector>

namespace ringstab {

/// Dense row-major matrix of doubles. Just enough linear algebra for the
/// spectra and oracles in this project; not a general-purpose type.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t k) { return data[i * cols + k]; }
    double operator()(std::size_t i, std::size_t k) const { return data[i * cols + k]; }

    static Matrix identity(std::size_t n);
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

double max_abs(const Matrix& m);
double frobenius_norm(const Matrix& m);

/// Largest |a(i,k) - b(i,k)|; matrices must have equal shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace ringstab

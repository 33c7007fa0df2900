#include "ringstab/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ringstab {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t k = 0; k < m.cols; ++k) out(k, i) = m(i, k);
    return out;
}

double max_abs(const Matrix& m) {
    double mx = 0.0;
    for (double v : m.data) mx = std::max(mx, std::abs(v));
    return mx;
}

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (double v : m.data) s += v * v;
    return std::sqrt(s);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double mx = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        mx = std::max(mx, std::abs(a.data[i] - b.data[i]));
    return mx;
}

}  // namespace ringstab

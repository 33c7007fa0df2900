#include "ringstab/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ringstab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double row_one_norm(const std::vector<double>& row) {
    double s = 0.0;
    for (double v : row) s += std::abs(v);
    return s;
}

void require_same_order(const BlockCirculantSpec& spec) {
    if (spec.a.order() == 0 || spec.a.order() != spec.b.order() ||
        spec.a.order() != spec.c.order())
        throw std::invalid_argument("block_eigenvalues: blocks must share a positive order");
}

}  // namespace

bool CirculantSpec::is_symmetric(double tol) const {
    const std::size_t j = order();
    const double scale = std::max(1.0, row_one_norm(first_row));
    for (std::size_t k = 1; k < j; ++k)
        if (std::abs(first_row[k] - first_row[j - k]) > tol * scale) return false;
    return true;
}

std::vector<Cplx> circulant_eigenvalues(const CirculantSpec& spec) {
    const std::size_t j = spec.order();
    if (j == 0) throw std::invalid_argument("circulant_eigenvalues: empty first row");
    std::vector<Cplx> out(j);
    for (std::size_t l = 0; l < j; ++l) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < j; ++k) {
            // Index product reduced mod j keeps the trig arguments in
            // [0, 2*pi) at any order.
            const std::size_t m = (l * k) % j;
            const double angle = kTwoPi * static_cast<double>(m) / static_cast<double>(j);
            re += spec.first_row[k] * std::cos(angle);
            im -= spec.first_row[k] * std::sin(angle);
        }
        out[l] = Cplx{re, im};
    }
    return out;
}

std::vector<double> symmetric_circulant_eigenvalues(const CirculantSpec& spec) {
    const std::vector<Cplx> eig = circulant_eigenvalues(spec);
    const double bound = 1e-9 * std::max(1e-300, row_one_norm(spec.first_row));
    std::vector<double> out(eig.size());
    for (std::size_t l = 0; l < eig.size(); ++l) {
        if (std::abs(eig[l].im) > bound)
            throw std::runtime_error(
                "symmetric_circulant_eigenvalues: imaginary residue exceeds the symmetric "
                "threshold; the spec is not a symmetric circulant");
        out[l] = eig[l].re;
    }
    return out;
}

BlockSpectrum block_eigenvalues(const BlockCirculantSpec& spec) {
    require_same_order(spec);
    if (!spec.a.is_symmetric() || !spec.b.is_symmetric())
        throw std::invalid_argument(
            "block_eigenvalues: diagonal blocks must be symmetric circulant");

    const std::size_t j = spec.order();
    BlockSpectrum out;
    out.alpha = symmetric_circulant_eigenvalues(spec.a);
    out.beta = symmetric_circulant_eigenvalues(spec.b);
    const std::vector<Cplx> gamma = circulant_eigenvalues(spec.c);

    out.gamma_sq.resize(j);
    out.lambda_pairs.resize(j);
    for (std::size_t l = 0; l < j; ++l) {
        const double gsq = gamma[l].re * gamma[l].re + gamma[l].im * gamma[l].im;
        out.gamma_sq[l] = gsq;
        const double sum = out.alpha[l] + out.beta[l];
        const double diff = out.alpha[l] - out.beta[l];
        // Discriminant in the form (alpha-beta)^2 + 4|gamma|^2: nonnegative
        // by construction, so the roots are always real.
        const double disc = diff * diff + 4.0 * gsq;
        const double root = std::sqrt(disc);
        out.lambda_pairs[l] = {0.5 * (sum - root), 0.5 * (sum + root)};
    }
    return out;
}

std::vector<double> BlockSpectrum::eigenvalues() const {
    std::vector<double> all;
    all.reserve(2 * lambda_pairs.size());
    for (const auto& pair : lambda_pairs) {
        all.push_back(pair[0]);
        all.push_back(pair[1]);
    }
    std::sort(all.begin(), all.end());
    return all;
}

Matrix materialize_dense(const CirculantSpec& spec) {
    const std::size_t j = spec.order();
    Matrix m(j, j);
    for (std::size_t i = 0; i < j; ++i)
        for (std::size_t k = 0; k < j; ++k) m(i, k) = spec.first_row[(k + j - i) % j];
    return m;
}

Matrix materialize_dense(const BlockCirculantSpec& spec) {
    require_same_order(spec);
    const std::size_t j = spec.order();
    const Matrix a = materialize_dense(spec.a);
    const Matrix b = materialize_dense(spec.b);
    const Matrix c = materialize_dense(spec.c);
    Matrix s(2 * j, 2 * j);
    for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t k = 0; k < j; ++k) {
            s(i, k) = a(i, k);
            s(i, j + k) = c(i, k);
            s(j + i, k) = c(k, i);
            s(j + i, j + k) = b(i, k);
        }
    }
    return s;
}

}  // namespace ringstab

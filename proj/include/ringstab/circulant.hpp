#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ringstab/matrix.hpp"

namespace ringstab {

/// Complex value as an explicit (re, im) pair. The DFT sums below are the
/// only consumers, so no library complex type is pulled in.
struct Cplx {
    double re = 0.0;
    double im = 0.0;
};

/// Circulant matrix identified by its first row: the full matrix repeats the
/// row under simultaneous cyclic shifts, A(i,k) = row[(k - i) mod j].
struct CirculantSpec {
    std::vector<double> first_row;

    std::size_t order() const { return first_row.size(); }

    /// First row palindromic after the leading entry, i.e. the full matrix
    /// is symmetric.
    bool is_symmetric(double tol = 1e-12) const;
};

/// 2x2 block layout [[A, C], [C^T, B]] with circulant blocks of one shared
/// order. A and B must be symmetric circulant so the assembled matrix is
/// symmetric; C may be any circulant.
struct BlockCirculantSpec {
    CirculantSpec a;
    CirculantSpec b;
    CirculantSpec c;

    std::size_t order() const { return a.order(); }
};

/// Mode-by-mode reduction of a symmetric block circulant matrix. The two
/// eigenvalues of mode l solve
///   lambda^2 - (alpha_l + beta_l) lambda + (alpha_l beta_l - gamma_sq_l) = 0,
/// and modes l and j+2-l carry identical coefficients.
struct BlockSpectrum {
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> gamma_sq;  // |gamma_l|^2 >= 0
    std::vector<std::array<double, 2>> lambda_pairs;

    /// All 2j eigenvalues, sorted ascending.
    std::vector<double> eigenvalues() const;
};

/// DFT sums over the first row: entry with 1-based index l is
/// sum_k row[k] e^{-2 pi i (l-1)(k-1) / j}, k ascending.
std::vector<Cplx> circulant_eigenvalues(const CirculantSpec& spec);

/// Eigenvalues of a spec declared symmetric, as reals. An imaginary residue
/// above 1e-9 * |row|_1 is an internal consistency error, not a silent drop.
std::vector<double> symmetric_circulant_eigenvalues(const CirculantSpec& spec);

/// Reduce a symmetric block circulant matrix to its j quadratic modes.
BlockSpectrum block_eigenvalues(const BlockCirculantSpec& spec);

Matrix materialize_dense(const CirculantSpec& spec);
Matrix materialize_dense(const BlockCirculantSpec& spec);

}  // namespace ringstab

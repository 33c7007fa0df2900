#pragma once

#include <functional>
#include <vector>

#include "ringstab/matrix.hpp"

namespace ringstab::oracle {

/// Brute-force verifiers. Nothing here shares code with the analytic spectra
/// or gradients it is used to check.

/// Cyclic Jacobi diagonalization of a symmetric matrix: plane rotations until
/// the off-diagonal Frobenius norm drops below sweep_tol * ||m||_F, at most
/// 50 sweeps. Returns the eigenvalues sorted ascending. Throws on
/// non-symmetric input (checked against 1e-12 * max|entry|).
std::vector<double> jacobi_eigenvalues(const Matrix& m, double sweep_tol = 1e-13);

using ScalarFn = std::function<double(const std::vector<double>&)>;

/// Central differences (fn(x + h e_i) - fn(x - h e_i)) / (2h).
std::vector<double> numeric_gradient(const ScalarFn& fn, const std::vector<double>& point,
                                     double h);

/// Second-order central stencil, symmetrized as (H + H^T)/2. The default h
/// balances truncation against roundoff for O(1)-scaled inputs.
Matrix numeric_hessian(const ScalarFn& fn, const std::vector<double>& point, double h = 1e-4);

/// Bisection of a bracketed root down to interval width <= tol. Throws when
/// fn(lo) and fn(hi) do not straddle zero.
double bisect_root(const std::function<double(double)>& fn, double lo, double hi, double tol);

}  // namespace ringstab::oracle

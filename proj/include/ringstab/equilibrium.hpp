#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ringstab/matrix.hpp"

namespace ringstab {

/// Angular positions (radians, pairwise distinct mod 2*pi) and positive mass
/// weights of the ring bodies.
struct RingConfiguration {
    std::vector<double> angles;
    std::vector<double> masses;

    std::size_t size() const { return angles.size(); }

    /// Regular n-gon, theta_i = 2(i-1)*pi/n, unit masses.
    static RingConfiguration regular(std::size_t n);

    /// Regular n-gon (n even) with masses mu1, mu2 alternating around the
    /// polygon, mu1 on the even 0-based vertices.
    static RingConfiguration alternating(std::size_t n, double mu1, double mu2);
};

enum class RingParity { odd, even };

/// Shape of the admissible mass family for the regular n-gon.
struct MassFamily {
    RingParity parity;
    int parameter_count;
    std::string pattern;
};

/// Antisymmetric matrix of pairwise force-kernel values whose null space
/// carries the admissible mass vectors: entry (i,k) is
/// force_kernel(theta_k - theta_i) for k != i and 0 on the diagonal. For the
/// regular n-gon the matrix is circulant.
Matrix equilibrium_matrix(const RingConfiguration& config);

/// Real mode coefficient of the regular-ring equilibrium matrix: the matrix
/// eigenvalues are the purely imaginary pairs +/- i times these values.
/// Mode 1 is identically zero, as is mode n/2+1 when n is even.
double equilibrium_mode(int n, int l);

/// Inverse-cube contribution to equilibrium_mode; the remaining smooth part
/// has the closed form -n/2 at l = 2 and 0 for the other interior modes.
double equilibrium_mode_gravity_part(int n, int l);

/// Number of modes with |equilibrium_mode| above zero_tol. Throws when any
/// mode magnitude lands in the ambiguous band (zero_tol/10, 10*zero_tol),
/// forcing the caller to re-examine instead of silently classifying.
int equilibrium_matrix_rank(int n, double zero_tol);

/// Rank with the default tolerance 1e-8 * n.
int equilibrium_matrix_rank(int n);

/// Dimension and arrangement of the admissible mass family, derived from the
/// null-space structure of the equilibrium matrix.
MassFamily mass_family(int n);

/// Component i = sum_{k != i} mu_k * force_kernel(theta_k - theta_i). All
/// components vanish exactly at a relative equilibrium; this equals
/// -(1/mu_i) d(hall_potential)/d(theta_i).
std::vector<double> equilibrium_residual(const RingConfiguration& config);

/// Lower-bound helpers reproducing the positivity argument for the l = 2
/// mode. first: trapezoidal lower bound for equilibrium_mode(n, 2) under the
/// substitution x = pi/(2n). second: the bracketing function controlling the
/// bound's sign; it increases as x decreases and changes sign between
/// x = pi/41 and x = pi/42. Domain (0, pi/2).
std::pair<double, double> equilibrium_mode_bounds(double x);

}  // namespace ringstab

#pragma once

#include <optional>
#include <vector>

#include "ringstab/circulant.hpp"
#include "ringstab/equilibrium.hpp"
#include "ringstab/matrix.hpp"

namespace ringstab {

/// Effective potential on the ring angles,
///   V = sum_{i<k} mu_i mu_k (1/r_{k,i} + r_{k,i}^2 / 2),
/// with chord r_{k,i} = 2 sin(|theta_k - theta_i| / 2). Its critical points
/// are the relative equilibria; local minima are the linearly stable ones.
double hall_potential(const RingConfiguration& config);

/// Analytic gradient dV/dtheta_i; vanishes at every relative equilibrium and
/// always sums to zero across i (rotation invariance).
std::vector<double> hall_gradient(const RingConfiguration& config);

/// Hessian of hall_potential. Off-diagonal (i,k) is
/// -mu_i mu_k * stiffness_kernel(theta_k - theta_i); the diagonal is minus
/// the row's off-diagonal sum, so every row sums to zero.
struct HessianAtRing {
    Matrix dense;
    /// Populated when the configuration is the regular even ring with
    /// alternating masses: the odd/even vertex split yields circulant blocks
    /// A (one parity class), B (the other), C (cross coupling).
    std::optional<BlockCirculantSpec> block;
};

HessianAtRing ring_hessian(const RingConfiguration& config);

/// Stiffness of mode l within one parity class of the alternating 2j-ring:
/// sum_{k=1}^{j-1} f(2k*pi/j) (1 - cos(2(l-1)k*pi/j)). Zero at l = 1. Also
/// the full Hessian eigenvalue of the equal-mass ring when called with j = n.
double subring_mode_stiffness(int j, int l);

/// Total stiffness one body receives from the opposite parity class:
/// sum_{k=1}^{j} f((2k-1)*pi/j). Positive for every j >= 2.
double cross_ring_stiffness(int j);

/// Mode-l Fourier coefficient of the cross coupling:
/// sum_{k=1}^{j} f((2k-1)*pi/j) cos((l-1)(2k-1)*pi/j). Stored signed; only
/// its square enters the stability conditions.
double cross_ring_mode_coupling(int j, int l);

/// Reduced coefficients of mode l for masses (mu1, mu2):
///   alpha = mu1^2 g1 + mu1 mu2 g2,  beta = mu2^2 g1 + mu1 mu2 g2,
///   gamma_sq = (mu1 mu2 g3)^2,
/// with g1/g2/g3 the three sums above at (j, l).
struct ModeBlock {
    double alpha;
    double beta;
    double gamma_sq;
};

ModeBlock mode_block(int j, int l, double mu1, double mu2);

/// Determinant condition of mode l scaled by 1/(mu1 mu2):
///   mu1 mu2 (g1^2 + g2^2 - g3^2) + (mu1^2 + mu2^2) g1 g2.
/// Nonnegative modes require this (and the trace) to be nonnegative.
double mode_determinant(int j, int l, double mu1, double mu2);

/// Hessian spectrum of the equal-mass regular n-gon: value l is
/// subring_mode_stiffness(n, l); value 1 is the rotational zero.
std::vector<double> equal_mass_spectrum(int n);

enum class Verdict { stable, unstable, degenerate };

const char* to_string(Verdict v);

/// Classification evidence: the full spectrum, the zero-mode count, and the
/// 1-based mode indices where a nonnegativity condition fails.
struct StabilityReport {
    int n = 0;
    double ratio = 1.0;
    Verdict verdict = Verdict::unstable;
    std::vector<double> eigenvalues;  // ascending
    int zero_mode_count = 0;
    std::vector<int> failed_conditions;
};

/// Decide linear stability of the regular n-gon with mass ratio mu1/mu2.
/// Odd n admits only ratio 1 (one-parameter mass family); other ratios are
/// rejected. zero_tol is relative to the spectral radius: an eigenvalue
/// counts as zero when |lambda| <= zero_tol * max|lambda|. Stable means
/// exactly one zero mode and the rest positive; degenerate means extra zero
/// modes but nothing negative.
StabilityReport classify_ring(int n, double ratio, double zero_tol = 1e-9);

enum class IntervalKind { empty, finite, all_ratios };

/// Open interval of mass ratios mu1/mu2 for which the alternating 2j-ring is
/// linearly stable, with the quadratic's ingredients kept for inspection.
/// The finite endpoints satisfy lo * hi = 1: the determinant condition is a
/// quadratic in the ratio with equal leading and constant coefficients.
struct RatioInterval {
    int j = 0;
    IntervalKind kind = IntervalKind::empty;
    double lo = 0.0;
    double hi = 0.0;
    double discriminant = 0.0;  // of the mode-2 determinant quadratic
    double linear_coeff = 0.0;  // g1^2 + g2^2 - g3^2 at (j, 2)
    double stiffness = 0.0;     // subring_mode_stiffness(j, 2)
    double cross = 0.0;         // cross_ring_stiffness(j)
    double coupling = 0.0;      // cross_ring_mode_coupling(j, 2)
};

/// Finite interval for j in {4,5,6}; every ratio for j >= 7; empty for
/// j in {2,3}.
RatioInterval stability_interval(int j);

/// Monotone bounding functions reproducing the stiffness positivity proofs.
/// subring_stiffness_lower_bound: lower bound for subring_mode_stiffness(j,2)
/// under x = pi/(2j); domain (0, pi/2).
double subring_stiffness_lower_bound(double x);

/// Decreasing function controlling the sign of the bound above; domain
/// (0, pi/2).
double stiffness_sign_function(double x);

/// Decreasing function bounding cross_ring_stiffness - cross_ring_mode_coupling
/// from below under x = pi/(2j); domain (0, pi).
double coupling_sign_function(double x);

}  // namespace ringstab

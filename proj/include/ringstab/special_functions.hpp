#pragma once

namespace ringstab {

/// Tolerance on |sin(phi/2)| below which the kernels are treated as singular
/// and a domain error is raised. Legitimate call sites use angles 2k*pi/n or
/// (2k-1)*pi/j with n well below 1e4, far from this cutoff.
inline constexpr double kSingularSinTol = 1e-9;

/// Tangential force kernel between two co-orbital bodies on the unit circle
/// separated by the angle phi: the inverse-square attraction along the circle
/// net of the co-rotating restoring term. Odd in phi, 2*pi-periodic, singular
/// at multiples of 2*pi.
double force_kernel(double phi);

/// Derivative of force_kernel. Even in phi, 2*pi-periodic, bounded below by
/// -7/8 (attained at phi = pi). This is the off-diagonal stiffness factor of
/// the ring potential's Hessian.
double stiffness_kernel(double phi);

/// Central second difference of stiffness_kernel with stencil half-width
/// `step`. Test helper for the kernel's convexity on (0, 2*pi); not a
/// production derivative. Requires phi at least 2*step away from 0 and 2*pi.
double stiffness_kernel_second_diff(double phi, double step);

}  // namespace ringstab

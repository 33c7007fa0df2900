#include "ringstab/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace ringstab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Canonical representative of the angle class mod 2*pi. IEEE remainder is
// exact, so arguments that differ by a floating-point multiple of 2*pi map to
// the same double and the periodicity of the kernels holds bitwise.
double reduce_angle(double phi) { return std::remainder(phi, kTwoPi); }

double half_sine_checked(double phi, const char* who) {
    const double s = std::sin(0.5 * phi);
    if (std::abs(s) < kSingularSinTol)
        throw std::domain_error(std::string(who) + ": angle is a multiple of 2*pi (singular)");
    return s;
}

}  // namespace

double force_kernel(double phi) {
    phi = reduce_angle(phi);
    const double s = half_sine_checked(phi, "force_kernel");
    // |s|^3 as |s| * s^2: bit-identical to the cubed absolute value.
    const double abs_s_cubed = std::abs(s) * s * s;
    return std::sin(phi) * (1.0 - 1.0 / (8.0 * abs_s_cubed));
}

double stiffness_kernel(double phi) {
    phi = reduce_angle(phi);
    const double s = half_sine_checked(phi, "stiffness_kernel");
    return (1.0 / (8.0 * std::abs(s))) * (2.0 / (s * s) - 1.0) + std::cos(phi);
}

double stiffness_kernel_second_diff(double phi, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("stiffness_kernel_second_diff: step must be positive");
    if (!(phi - 2.0 * step > 0.0) || !(phi + 2.0 * step < kTwoPi))
        throw std::domain_error("stiffness_kernel_second_diff: stencil touches a singularity");
    const double lo = stiffness_kernel(phi - step);
    const double mid = stiffness_kernel(phi);
    const double hi = stiffness_kernel(phi + step);
    return (lo - 2.0 * mid + hi) / (step * step);
}

}  // namespace ringstab

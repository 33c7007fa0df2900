#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ringstab/special_functions.hpp"

using namespace ringstab;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

// Grid points quantized to multiples of 2^-47 so that adding the double 2*pi
// (itself a multiple of 2^-47) is exact and periodicity is tested at
// mathematically identical angles.
std::vector<double> grid(double lo, double hi, int points) {
    const double q = std::ldexp(1.0, -47);
    std::vector<double> out(points);
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
        out[i] = std::round(x / q) * q;
    }
    return out;
}

}  // namespace

TEST_CASE("force kernel at anchor angles") {
    CHECK(std::abs(force_kernel(kPi)) < 1e-15);
    const double quarter = 1.0 - std::sqrt(2.0) / 4.0;
    CHECK(force_kernel(kPi / 2.0) == doctest::Approx(quarter).epsilon(1e-15));
    CHECK(force_kernel(-kPi / 2.0) == -force_kernel(kPi / 2.0));
}

TEST_CASE("stiffness kernel at anchor angles") {
    CHECK(stiffness_kernel(kPi) == -7.0 / 8.0);  // exact in IEEE double
    const double expected = 3.0 * std::sqrt(2.0) / 8.0;
    CHECK(stiffness_kernel(kPi / 2.0) == doctest::Approx(expected).epsilon(1e-15));
    CHECK(stiffness_kernel(-kPi / 2.0) == stiffness_kernel(kPi / 2.0));
}

TEST_CASE("kernels reject angles at the singularity") {
    CHECK_THROWS_AS(force_kernel(0.0), std::domain_error);
    CHECK_THROWS_AS(force_kernel(kTwoPi), std::domain_error);
    CHECK_THROWS_AS(force_kernel(-6.0 * kPi), std::domain_error);
    CHECK_THROWS_AS(stiffness_kernel(0.0), std::domain_error);
    CHECK_THROWS_AS(stiffness_kernel(4.0 * kPi), std::domain_error);
    // Just inside the cutoff on |sin(phi/2)|.
    CHECK_THROWS_AS(force_kernel(1.9999e-9), std::domain_error);
    CHECK_NOTHROW(force_kernel(3e-9));
}

TEST_CASE("force kernel is odd and 2*pi-periodic on the grid") {
    double worst_odd = 0.0;
    double worst_periodic = 0.0;
    for (double phi : grid(0.05, kTwoPi - 0.05, 1000)) {
        worst_odd = std::max(worst_odd, std::abs(force_kernel(-phi) + force_kernel(phi)));
        worst_periodic =
            std::max(worst_periodic, std::abs(force_kernel(phi + kTwoPi) - force_kernel(phi)));
    }
    CHECK(worst_odd <= 1e-12);
    CHECK(worst_periodic <= 1e-12);
}

TEST_CASE("stiffness kernel symmetries and lower bound on the grid") {
    double worst_even = 0.0;
    double worst_reflect = 0.0;
    double lowest = 1e300;
    for (double phi : grid(0.05, kTwoPi - 0.05, 1000)) {
        worst_even = std::max(worst_even, std::abs(stiffness_kernel(-phi) - stiffness_kernel(phi)));
        worst_reflect = std::max(
            worst_reflect, std::abs(stiffness_kernel(kPi - phi) - stiffness_kernel(phi - kPi)));
        lowest = std::min(lowest, stiffness_kernel(phi));
    }
    CHECK(worst_even <= 1e-12);
    CHECK(worst_reflect <= 1e-12);
    CHECK(lowest >= -7.0 / 8.0 - 1e-12);
}

TEST_CASE("stiffness kernel is the force kernel's derivative") {
    const double h = 1e-6;
    double worst = 0.0;
    for (double phi : grid(0.05, kTwoPi - 0.05, 1000)) {
        const double central = (force_kernel(phi + h) - force_kernel(phi - h)) / (2.0 * h);
        const double exact = stiffness_kernel(phi);
        worst = std::max(worst, std::abs(central - exact) / std::abs(exact));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("second difference of the stiffness kernel is positive") {
    CHECK(stiffness_kernel_second_diff(kPi, 1e-4) > 0.0);
    CHECK(stiffness_kernel_second_diff(kPi / 2.0, 1e-4) > 0.0);
    const double left = stiffness_kernel_second_diff(kPi / 2.0, 1e-4);
    const double right = stiffness_kernel_second_diff(3.0 * kPi / 2.0, 1e-4);
    CHECK(std::abs(left - right) <= 1e-6 * std::abs(left));  // evenness about pi
    double lowest = 1e300;
    for (double phi : grid(0.05, kTwoPi - 0.05, 500))
        lowest = std::min(lowest, stiffness_kernel_second_diff(phi, 1e-4));
    CHECK(lowest > 0.0);
}

TEST_CASE("second difference stencil guards") {
    CHECK_THROWS_AS(stiffness_kernel_second_diff(kPi, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(stiffness_kernel_second_diff(kPi, -1e-4), std::invalid_argument);
    CHECK_THROWS_AS(stiffness_kernel_second_diff(1e-5, 1e-4), std::domain_error);
    CHECK_THROWS_AS(stiffness_kernel_second_diff(kTwoPi - 1e-5, 1e-4), std::domain_error);
}

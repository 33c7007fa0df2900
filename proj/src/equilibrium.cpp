#include "ringstab/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

#include "ringstab/special_functions.hpp"

namespace ringstab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

void validate(const RingConfiguration& config) {
    const std::size_t n = config.size();
    if (n < 2) throw std::invalid_argument("ring configuration: at least two bodies required");
    if (config.masses.size() != n)
        throw std::invalid_argument("ring configuration: one mass per angle required");
    for (double mu : config.masses)
        if (!(mu > 0.0)) throw std::invalid_argument("ring configuration: masses must be positive");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            if (std::abs(std::sin(0.5 * (config.angles[k] - config.angles[i]))) < kSingularSinTol)
                throw std::domain_error("ring configuration: coincident angles (mod 2*pi)");
}

// cos(2*pi*m/n) and sin(2*pi*m/n) with the index reduced mod n and folded
// onto the half period, so symmetric index pairs evaluate from identical
// arguments and their cancellations are exact.
double cos_frac(long long m, int n) {
    long long r = ((m % n) + n) % n;
    if (2 * r > n) r = n - r;
    if (4 * r == n) return 0.0;  // quarter period is an exact zero
    return std::cos(kTwoPi * static_cast<double>(r) / static_cast<double>(n));
}

double sin_frac(long long m, int n) {
    long long r = ((m % n) + n) % n;
    double sign = 1.0;
    if (2 * r > n) {
        r = n - r;
        sign = -1.0;
    }
    if (2 * r == n || r == 0) return 0.0;  // half and full period are exact zeros
    return sign * std::sin(kTwoPi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

RingConfiguration RingConfiguration::regular(std::size_t n) {
    if (n < 2) throw std::invalid_argument("regular ring: n >= 2 required");
    RingConfiguration config;
    config.angles.resize(n);
    config.masses.assign(n, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        config.angles[i] = 2.0 * static_cast<double>(i) * kPi / static_cast<double>(n);
    return config;
}

RingConfiguration RingConfiguration::alternating(std::size_t n, double mu1, double mu2) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("alternating ring: even n required");
    if (!(mu1 > 0.0) || !(mu2 > 0.0))
        throw std::invalid_argument("alternating ring: masses must be positive");
    RingConfiguration config = regular(n);
    for (std::size_t i = 0; i < n; ++i) config.masses[i] = (i % 2 == 0) ? mu1 : mu2;
    return config;
}

Matrix equilibrium_matrix(const RingConfiguration& config) {
    validate(config);
    const std::size_t n = config.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) m(i, k) = force_kernel(config.angles[k] - config.angles[i]);
    return m;
}

double equilibrium_mode_gravity_part(int n, int l) {
    if (n < 3) throw std::invalid_argument("equilibrium_mode: n >= 3 required");
    if (l < 1 || l > n) throw std::invalid_argument("equilibrium_mode: 1 <= l <= n required");
    double sum = 0.0;
    for (int k = 1; k < n; ++k) {
        const double half = kPi * static_cast<double>(k) / static_cast<double>(n);
        const double s = std::sin(half);
        sum += std::cos(half) / (s * s) * sin_frac(static_cast<long long>(l - 1) * k, n);
    }
    return 0.25 * sum;
}

double equilibrium_mode(int n, int l) {
    if (n < 3) throw std::invalid_argument("equilibrium_mode: n >= 3 required");
    if (l < 1 || l > n) throw std::invalid_argument("equilibrium_mode: 1 <= l <= n required");
    double smooth = 0.0;
    for (int k = 1; k < n; ++k)
        smooth += cos_frac(static_cast<long long>(l) * k, n) -
                  cos_frac(static_cast<long long>(l - 2) * k, n);
    return 0.5 * smooth + equilibrium_mode_gravity_part(n, l);
}

int equilibrium_matrix_rank(int n, double zero_tol) {
    if (n < 3) throw std::invalid_argument("equilibrium_matrix_rank: n >= 3 required");
    if (!(zero_tol > 0.0))
        throw std::invalid_argument("equilibrium_matrix_rank: zero_tol must be positive");
    int rank = 0;
    for (int l = 1; l <= n; ++l) {
        const double v = std::abs(equilibrium_mode(n, l));
        if (v > zero_tol / 10.0 && v < zero_tol * 10.0)
            throw std::runtime_error(
                "equilibrium_matrix_rank: mode magnitude inside the ambiguous band around "
                "zero_tol; re-examine the tolerance");
        if (v > zero_tol) ++rank;
    }
    return rank;
}

int equilibrium_matrix_rank(int n) {
    return equilibrium_matrix_rank(n, 1e-8 * static_cast<double>(n));
}

MassFamily mass_family(int n) {
    if (n < 3) throw std::invalid_argument("mass_family: n >= 3 required");
    // Null-space dimension of the equilibrium matrix: the all-ones vector is
    // always present; even n adds the alternating +/- vector.
    const int parameters = n - equilibrium_matrix_rank(n);
    MassFamily family;
    family.parity = (n % 2 == 0) ? RingParity::even : RingParity::odd;
    family.parameter_count = parameters;
    family.pattern = (n % 2 == 0)
                         ? "two masses alternating around the polygon"
                         : "all vertices share one mass";
    return family;
}

std::vector<double> equilibrium_residual(const RingConfiguration& config) {
    validate(config);
    const std::size_t n = config.size();
    std::vector<double> residual(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) sum += config.masses[k] * force_kernel(config.angles[k] - config.angles[i]);
        residual[i] = sum;
    }
    return residual;
}

std::pair<double, double> equilibrium_mode_bounds(double x) {
    if (!(x > 0.0) || !(x < 0.5 * kPi))
        throw std::domain_error("equilibrium_mode_bounds: x in (0, pi/2) required");
    const double log_cot = std::log(std::cos(x) / std::sin(x));
    const double trapezoid =
        -kPi / (4.0 * x) + log_cot / (2.0 * x) - std::cos(x) / (2.0 * std::sin(x));
    const double bracket = log_cot - x / std::sin(x) - 0.5 * kPi;
    return {trapezoid, bracket};
}

}  // namespace ringstab

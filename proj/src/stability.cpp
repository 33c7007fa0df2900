#include "ringstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
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

double chord(double delta) { return 2.0 * std::abs(std::sin(0.5 * delta)); }

// cos(2*pi*m/period) with the integer reduced mod the period and folded onto
// the half period, so mirrored mode indices evaluate from identical
// arguments.
double cos_frac(long long m, long long period) {
    long long r = ((m % period) + period) % period;
    if (2 * r > period) r = period - r;
    if (4 * r == period) return 0.0;  // quarter period is an exact zero
    return std::cos(kTwoPi * static_cast<double>(r) / static_cast<double>(period));
}

bool is_regular_alternating(const RingConfiguration& config) {
    const std::size_t n = config.size();
    if (n < 4 || n % 2 != 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const double expected = 2.0 * static_cast<double>(i) * kPi / static_cast<double>(n);
        if (std::abs(config.angles[i] - expected) > 1e-12) return false;
        if (config.masses[i] != config.masses[i % 2]) return false;
    }
    return true;
}

void require_mode_range(int j, int l, const char* who) {
    if (j < 2) throw std::invalid_argument(std::string(who) + ": j >= 2 required");
    if (l < 1 || l > j) throw std::invalid_argument(std::string(who) + ": 1 <= l <= j required");
}

}  // namespace

double hall_potential(const RingConfiguration& config) {
    validate(config);
    const std::size_t n = config.size();
    double v = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const double r = chord(config.angles[k] - config.angles[i]);
            v += config.masses[i] * config.masses[k] * (1.0 / r + 0.5 * r * r);
        }
    }
    return v;
}

std::vector<double> hall_gradient(const RingConfiguration& config) {
    validate(config);
    const std::size_t n = config.size();
    std::vector<double> grad(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) sum += config.masses[k] * force_kernel(config.angles[k] - config.angles[i]);
        grad[i] = -config.masses[i] * sum;
    }
    return grad;
}

HessianAtRing ring_hessian(const RingConfiguration& config) {
    validate(config);
    const std::size_t n = config.size();
    HessianAtRing result;
    result.dense = Matrix(n, n);
    Matrix& h = result.dense;
    for (std::size_t i = 0; i < n; ++i) {
        double diag = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            const double entry = -config.masses[i] * config.masses[k] *
                                 stiffness_kernel(config.angles[k] - config.angles[i]);
            h(i, k) = entry;
            diag -= entry;
        }
        h(i, i) = diag;
    }

    if (is_regular_alternating(config)) {
        const std::size_t j = n / 2;
        BlockCirculantSpec block;
        block.a.first_row.resize(j);
        block.b.first_row.resize(j);
        block.c.first_row.resize(j);
        for (std::size_t k = 0; k < j; ++k) {
            block.a.first_row[k] = h(0, 2 * k);
            block.b.first_row[k] = h(1, 2 * k + 1);
            block.c.first_row[k] = h(0, 2 * k + 1);
        }
        result.block = block;
    }
    return result;
}

double subring_mode_stiffness(int j, int l) {
    require_mode_range(j, l, "subring_mode_stiffness");
    double sum = 0.0;
    for (int k = 1; k < j; ++k) {
        const double f = stiffness_kernel(kTwoPi * static_cast<double>(k) / static_cast<double>(j));
        sum += f * (1.0 - cos_frac(static_cast<long long>(l - 1) * k, j));
    }
    return sum;
}

double cross_ring_stiffness(int j) {
    if (j < 1) throw std::invalid_argument("cross_ring_stiffness: j >= 1 required");
    double sum = 0.0;
    for (int k = 1; k <= j; ++k)
        sum += stiffness_kernel(static_cast<double>(2 * k - 1) * kPi / static_cast<double>(j));
    return sum;
}

double cross_ring_mode_coupling(int j, int l) {
    require_mode_range(j, l, "cross_ring_mode_coupling");
    double sum = 0.0;
    for (int k = 1; k <= j; ++k) {
        const double f =
            stiffness_kernel(static_cast<double>(2 * k - 1) * kPi / static_cast<double>(j));
        sum += f * cos_frac(static_cast<long long>(l - 1) * (2 * k - 1), 2LL * j);
    }
    return sum;
}

ModeBlock mode_block(int j, int l, double mu1, double mu2) {
    require_mode_range(j, l, "mode_block");
    if (!(mu1 > 0.0) || !(mu2 > 0.0))
        throw std::invalid_argument("mode_block: masses must be positive");
    const double g1 = subring_mode_stiffness(j, l);
    const double g2 = cross_ring_stiffness(j);
    const double g3 = cross_ring_mode_coupling(j, l);
    ModeBlock mb;
    mb.alpha = mu1 * mu1 * g1 + mu1 * mu2 * g2;
    mb.beta = mu2 * mu2 * g1 + mu1 * mu2 * g2;
    const double coupling = mu1 * mu2 * g3;
    mb.gamma_sq = coupling * coupling;
    return mb;
}

double mode_determinant(int j, int l, double mu1, double mu2) {
    require_mode_range(j, l, "mode_determinant");
    if (!(mu1 > 0.0) || !(mu2 > 0.0))
        throw std::invalid_argument("mode_determinant: masses must be positive");
    const double g1 = subring_mode_stiffness(j, l);
    const double g2 = cross_ring_stiffness(j);
    const double g3 = cross_ring_mode_coupling(j, l);
    return mu1 * mu2 * (g1 * g1 + g2 * g2 - g3 * g3) + (mu1 * mu1 + mu2 * mu2) * g1 * g2;
}

std::vector<double> equal_mass_spectrum(int n) {
    if (n < 3) throw std::invalid_argument("equal_mass_spectrum: n >= 3 required");
    std::vector<double> spectrum(n);
    for (int l = 1; l <= n; ++l) spectrum[l - 1] = subring_mode_stiffness(n, l);
    return spectrum;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::unstable: return "unstable";
        case Verdict::degenerate: return "degenerate";
    }
    return "unknown";
}

StabilityReport classify_ring(int n, double ratio, double zero_tol) {
    if (n < 3) throw std::invalid_argument("classify_ring: n >= 3 required");
    if (!(ratio > 0.0)) throw std::invalid_argument("classify_ring: ratio must be positive");
    if (!(zero_tol > 0.0)) throw std::invalid_argument("classify_ring: zero_tol must be positive");

    StabilityReport report;
    report.n = n;
    report.ratio = ratio;

    std::vector<double> eigenvalues;
    std::vector<int> failed;

    if (n % 2 == 1) {
        if (ratio != 1.0)
            throw std::invalid_argument(
                "classify_ring: an odd ring admits a one-parameter mass family only; "
                "ratio must be 1");
        eigenvalues = equal_mass_spectrum(n);
        const double radius = *std::max_element(eigenvalues.begin(), eigenvalues.end(),
                                                [](double a, double b) {
                                                    return std::abs(a) < std::abs(b);
                                                });
        const double tol = zero_tol * std::max(1e-300, std::abs(radius));
        for (int l = 1; l <= n; ++l)
            if (eigenvalues[l - 1] < -tol) failed.push_back(l);
    } else {
        const int j = n / 2;
        // Masses normalized to (sqrt(ratio), 1/sqrt(ratio)): the spectrum then
        // depends on the ratio alone, and ratio -> 1/ratio is exactly the
        // mass swap, so reciprocal ratios share one spectrum.
        const double mu1 = std::sqrt(ratio);
        const double mu2 = 1.0 / mu1;
        double scale = 1.0;
        std::vector<double> sums(j), products(j);
        for (int l = 1; l <= j; ++l) {
            const ModeBlock mb = mode_block(j, l, mu1, mu2);
            const double sum = mb.alpha + mb.beta;
            const double diff = mb.alpha - mb.beta;
            const double root = std::sqrt(diff * diff + 4.0 * mb.gamma_sq);
            eigenvalues.push_back(0.5 * (sum - root));
            eigenvalues.push_back(0.5 * (sum + root));
            sums[l - 1] = sum;
            products[l - 1] = mb.alpha * mb.beta - mb.gamma_sq;
            scale = std::max({scale, std::abs(mb.alpha), std::abs(mb.beta)});
        }
        for (int l = 1; l <= j; ++l)
            if (sums[l - 1] < -1e-12 * scale || products[l - 1] < -1e-12 * scale * scale)
                failed.push_back(l);
    }

    std::sort(eigenvalues.begin(), eigenvalues.end());
    double radius = 0.0;
    for (double v : eigenvalues) radius = std::max(radius, std::abs(v));
    const double tol_abs = zero_tol * (radius > 0.0 ? radius : 1.0);

    int zeros = 0;
    int negatives = 0;
    for (double v : eigenvalues) {
        if (std::abs(v) <= tol_abs)
            ++zeros;
        else if (v < 0.0)
            ++negatives;
    }
    if (zeros == 0)
        throw std::runtime_error("classify_ring: rotational zero mode not detected");

    report.eigenvalues = std::move(eigenvalues);
    report.zero_mode_count = zeros;
    report.failed_conditions = std::move(failed);
    report.verdict = negatives > 0 ? Verdict::unstable
                                   : (zeros == 1 ? Verdict::stable : Verdict::degenerate);
    return report;
}

RatioInterval stability_interval(int j) {
    if (j < 2) throw std::invalid_argument("stability_interval: j >= 2 required");
    RatioInterval interval;
    interval.j = j;
    interval.stiffness = subring_mode_stiffness(j, 2);
    interval.cross = cross_ring_stiffness(j);
    interval.coupling = cross_ring_mode_coupling(j, 2);
    const double g1 = interval.stiffness;
    const double g2 = interval.cross;
    const double g3 = interval.coupling;
    interval.linear_coeff = g1 * g1 + g2 * g2 - g3 * g3;
    const double edge = g1 * g2;
    interval.discriminant = interval.linear_coeff * interval.linear_coeff - 4.0 * edge * edge;

    if (j >= 7) {
        // Every mode determinant is positive for every positive ratio.
        interval.kind = IntervalKind::all_ratios;
        interval.lo = 0.0;
        interval.hi = std::numeric_limits<double>::infinity();
        return interval;
    }
    if (j <= 3) {
        // No stable ratio exists: for j = 3 the determinant quadratic has no
        // real root, and for j = 2 the mode-2 trace (g1 (rho^2+1) + 2 rho g2
        // with g1 + g2 < 0) is negative for every rho.
        interval.kind = IntervalKind::empty;
        return interval;
    }
    if (!(interval.discriminant > 0.0) || !(edge < 0.0)) {
        interval.kind = IntervalKind::empty;
        return interval;
    }
    const double root = std::sqrt(interval.discriminant);
    interval.lo = (-interval.linear_coeff + root) / (2.0 * edge);
    interval.hi = (-interval.linear_coeff - root) / (2.0 * edge);
    interval.kind = IntervalKind::finite;
    return interval;
}

double subring_stiffness_lower_bound(double x) {
    if (!(x > 0.0) || !(x < 0.5 * kPi))
        throw std::domain_error("subring_stiffness_lower_bound: x in (0, pi/2) required");
    const double sx = std::sin(x);
    const double cx = std::cos(x);
    return (std::log(cx / sx) - x * cx / (2.0 * sx) - 0.5 * kPi) / (2.0 * x);
}

double stiffness_sign_function(double x) {
    if (!(x > 0.0) || !(x < 0.5 * kPi))
        throw std::domain_error("stiffness_sign_function: x in (0, pi/2) required");
    return std::log(std::cos(x) / std::sin(x)) - x / (2.0 * std::sin(x)) - 0.5 * kPi;
}

double coupling_sign_function(double x) {
    if (!(x > 0.0) || !(x < kPi))
        throw std::domain_error("coupling_sign_function: x in (0, pi) required");
    const double half = 0.5 * x;
    return (std::log(std::cos(half) / std::sin(half)) - x / (2.0 * std::sin(x)) - 0.5 * kPi) /
           (2.0 * x);
}

}  // namespace ringstab

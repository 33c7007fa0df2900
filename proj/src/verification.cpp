#include "ringstab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "ringstab/circulant.hpp"
#include "ringstab/equilibrium.hpp"
#include "ringstab/matrix.hpp"
#include "ringstab/oracle.hpp"
#include "ringstab/special_functions.hpp"
#include "ringstab/stability.hpp"

namespace ringstab::selfcheck {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Property grid over (lo, hi), quantized to multiples of 2^-47 so that adding
// the double 2*pi (itself a multiple of 2^-47) is exact and the periodicity
// checks compare the kernels at mathematically identical angles.
std::vector<double> angle_grid(double lo, double hi, int points) {
    const double q = std::ldexp(1.0, -47);
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
        grid[i] = std::round(x / q) * q;
    }
    return grid;
}

CirculantSpec random_symmetric_circulant(std::mt19937& rng, std::size_t j) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CirculantSpec spec;
    spec.first_row.resize(j);
    for (std::size_t k = 0; k <= j / 2; ++k) spec.first_row[k] = dist(rng);
    for (std::size_t k = j / 2 + 1; k < j; ++k) spec.first_row[k] = spec.first_row[j - k];
    return spec;
}

CirculantSpec random_circulant(std::mt19937& rng, std::size_t j) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CirculantSpec spec;
    spec.first_row.resize(j);
    for (std::size_t k = 0; k < j; ++k) spec.first_row[k] = dist(rng);
    return spec;
}

RingConfiguration random_perturbed_ring(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> jitter(-0.2, 0.2);
    std::uniform_real_distribution<double> mass(0.5, 2.0);
    RingConfiguration config = RingConfiguration::regular(n);
    for (std::size_t i = 0; i < n; ++i) {
        config.angles[i] += jitter(rng);
        config.masses[i] = mass(rng);
    }
    return config;
}

double multiset_deviation(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

using CheckFn = std::function<bool(std::string&)>;

}  // namespace

std::vector<CheckResult> run_all() {
    std::vector<std::pair<std::string, CheckFn>> checks;

    checks.emplace_back("kernel_symmetry_periodicity", [](std::string& detail) {
        double worst = 0.0;
        for (double phi : angle_grid(0.05, kTwoPi - 0.05, 1000)) {
            worst = std::max(worst, std::abs(force_kernel(-phi) + force_kernel(phi)));
            worst = std::max(worst, std::abs(force_kernel(phi + kTwoPi) - force_kernel(phi)));
            worst = std::max(worst, std::abs(stiffness_kernel(-phi) - stiffness_kernel(phi)));
            worst = std::max(worst,
                             std::abs(stiffness_kernel(kPi - phi) - stiffness_kernel(phi - kPi)));
        }
        detail = "max deviation " + fmt(worst);
        return worst <= 1e-12;
    });

    checks.emplace_back("kernel_lower_bound", [](std::string& detail) {
        double lowest = 1e300;
        for (double phi : angle_grid(0.05, kTwoPi - 0.05, 1000))
            lowest = std::min(lowest, stiffness_kernel(phi));
        detail = "min value " + fmt(lowest) + " vs -7/8";
        return lowest >= -7.0 / 8.0 - 1e-12;
    });

    checks.emplace_back("kernel_derivative_match", [](std::string& detail) {
        const double h = 1e-6;
        double worst = 0.0;
        for (double phi : angle_grid(0.05, kTwoPi - 0.05, 1000)) {
            const double central = (force_kernel(phi + h) - force_kernel(phi - h)) / (2.0 * h);
            const double exact = stiffness_kernel(phi);
            worst = std::max(worst, std::abs(central - exact) / std::abs(exact));
        }
        detail = "max relative deviation " + fmt(worst);
        return worst <= 1e-6;
    });

    checks.emplace_back("kernel_convexity", [](std::string& detail) {
        double lowest = 1e300;
        for (double phi : angle_grid(0.05, kTwoPi - 0.05, 1000))
            lowest = std::min(lowest, stiffness_kernel_second_diff(phi, 1e-4));
        detail = "min second difference " + fmt(lowest);
        return lowest > 0.0;
    });

    checks.emplace_back("circulant_commute_and_sum_spectrum", [](std::string& detail) {
        std::mt19937 rng(20240901);
        double worst_comm = 0.0;
        double worst_sum = 0.0;
        for (std::size_t j = 2; j <= 16; ++j) {
            const CirculantSpec a = random_symmetric_circulant(rng, j);
            const CirculantSpec b = random_symmetric_circulant(rng, j);
            const Matrix da = materialize_dense(a);
            const Matrix db = materialize_dense(b);
            worst_comm = std::max(worst_comm, max_abs_diff(da * db, db * da));

            CirculantSpec sum;
            sum.first_row.resize(j);
            for (std::size_t k = 0; k < j; ++k)
                sum.first_row[k] = a.first_row[k] + b.first_row[k];
            const std::vector<double> ea = symmetric_circulant_eigenvalues(a);
            const std::vector<double> eb = symmetric_circulant_eigenvalues(b);
            std::vector<double> expected(j);
            for (std::size_t l = 0; l < j; ++l) expected[l] = ea[l] + eb[l];
            const std::vector<double> actual = oracle::jacobi_eigenvalues(materialize_dense(sum));
            worst_sum = std::max(worst_sum, multiset_deviation(expected, actual));
        }
        detail = "commutator " + fmt(worst_comm) + ", sum-spectrum " + fmt(worst_sum);
        return worst_comm <= 1e-10 && worst_sum <= 1e-10;
    });

    checks.emplace_back("block_reduction_vs_jacobi", [](std::string& detail) {
        std::mt19937 rng(777);
        double worst = 0.0;
        for (std::size_t j = 2; j <= 12; ++j) {
            BlockCirculantSpec spec;
            spec.a = random_symmetric_circulant(rng, j);
            spec.b = random_symmetric_circulant(rng, j);
            spec.c = random_circulant(rng, j);
            const std::vector<double> reduced = block_eigenvalues(spec).eigenvalues();
            const std::vector<double> dense = oracle::jacobi_eigenvalues(materialize_dense(spec));
            worst = std::max(worst, multiset_deviation(reduced, dense));
        }
        detail = "max spectrum deviation " + fmt(worst);
        return worst <= 1e-9;
    });

    checks.emplace_back("circulant_index_symmetry", [](std::string& detail) {
        std::mt19937 rng(4242);
        double worst = 0.0;
        for (std::size_t j = 2; j <= 14; ++j) {
            BlockCirculantSpec spec;
            spec.a = random_symmetric_circulant(rng, j);
            spec.b = random_symmetric_circulant(rng, j);
            spec.c = random_circulant(rng, j);
            const BlockSpectrum modes = block_eigenvalues(spec);
            for (std::size_t l = 2; l <= j; ++l) {
                const std::size_t mirror = j + 2 - l;  // 1-based partner index
                worst = std::max(worst, std::abs(modes.alpha[l - 1] - modes.alpha[mirror - 1]));
                worst = std::max(worst, std::abs(modes.beta[l - 1] - modes.beta[mirror - 1]));
                worst =
                    std::max(worst, std::abs(modes.gamma_sq[l - 1] - modes.gamma_sq[mirror - 1]));
            }
        }
        detail = "max pair deviation " + fmt(worst);
        return worst <= 1e-12;
    });

    checks.emplace_back("equilibrium_mode_antisymmetry", [](std::string& detail) {
        double worst = 0.0;
        for (int n = 3; n <= 60; ++n)
            for (int l = 2; l <= n; ++l)
                worst = std::max(worst,
                                 std::abs(equilibrium_mode(n, l) + equilibrium_mode(n, n + 2 - l)));
        detail = "max |mode(l) + mode(n+2-l)| " + fmt(worst);
        return worst <= 1e-10;
    });

    checks.emplace_back("equilibrium_mode_margins", [](std::string& detail) {
        double smallest = 1e300;
        for (int n = 3; n <= 41; ++n) {
            const double band = 10.0 * 1e-8 * n;
            for (int l = 2; l <= (n + 1) / 2; ++l) {
                if (n % 2 == 0 && l == n / 2 + 1) continue;
                const double v = std::abs(equilibrium_mode(n, l));
                smallest = std::min(smallest, v);
                if (v <= band) {
                    detail = "mode magnitude " + fmt(v) + " inside margin at n=" +
                             std::to_string(n) + " l=" + std::to_string(l);
                    return false;
                }
            }
        }
        detail = "min interior |mode| " + fmt(smallest);
        return true;
    });

    checks.emplace_back("equilibrium_mode_tail_positive", [](std::string& detail) {
        double least = 1e300;
        for (int n = 42; n <= 200; ++n) least = std::min(least, equilibrium_mode(n, 2));
        double least_half = 1e300;
        for (int n = 5; n <= 200; ++n)
            least_half = std::min(least_half, equilibrium_mode(n, (n + 1) / 2));
        detail = "min mode(n,2) for n>=42: " + fmt(least) +
                 ", min mode(n,floor((n+1)/2)): " + fmt(least_half);
        return least > 0.0 && least_half > 0.0;
    });

    checks.emplace_back("equilibrium_matrix_circulant_spectrum", [](std::string& detail) {
        double worst = 0.0;
        for (int n : {3, 4, 5, 8, 12, 17, 24}) {
            const Matrix m = equilibrium_matrix(RingConfiguration::regular(n));
            CirculantSpec spec;
            spec.first_row.resize(n);
            for (int k = 0; k < n; ++k) spec.first_row[k] = m(0, k);
            const std::vector<Cplx> eig = circulant_eigenvalues(spec);
            std::vector<double> imag_mag(n), mode_mag(n);
            for (int l = 1; l <= n; ++l) {
                worst = std::max(worst, std::abs(eig[l - 1].re));
                imag_mag[l - 1] = std::abs(eig[l - 1].im);
                mode_mag[l - 1] = std::abs(equilibrium_mode(n, l));
            }
            worst = std::max(worst, multiset_deviation(imag_mag, mode_mag));
        }
        detail = "max deviation " + fmt(worst);
        return worst <= 1e-10;
    });

    checks.emplace_back("rank_law", [](std::string& detail) {
        for (int n = 3; n <= 41; ++n) {
            const int expected = (n % 2 == 1) ? n - 1 : n - 2;
            if (equilibrium_matrix_rank(n) != expected) {
                detail = "rank mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        detail = "rank = n-1 (odd) / n-2 (even) for 3..41";
        return true;
    });

    checks.emplace_back("mass_family_and_residual", [](std::string& detail) {
        const MassFamily odd = mass_family(7);
        const MassFamily even = mass_family(8);
        if (odd.parameter_count != 1 || even.parameter_count != 2) {
            detail = "unexpected family parameter counts";
            return false;
        }
        double worst = 0.0;
        for (int n : {5, 9, 13}) {
            for (double r : equilibrium_residual(RingConfiguration::regular(n)))
                worst = std::max(worst, std::abs(r) / n);
        }
        for (int n : {6, 8, 14}) {
            const RingConfiguration config = RingConfiguration::alternating(n, 2.0, 0.5);
            for (double r : equilibrium_residual(config)) worst = std::max(worst, std::abs(r) / n);
        }
        detail = "max |residual|/n at equilibria " + fmt(worst);
        return worst <= 1e-12;
    });

    checks.emplace_back("closed_form_sums", [](std::string& detail) {
        double worst = 0.0;
        bool bound_holds = true;
        for (int n = 3; n <= 200; ++n) {
            double sine_sum = 0.0;
            double inv_sine_sum = 0.0;
            for (int k = 1; k < n; ++k) {
                const double s = std::sin(kPi * k / n);
                sine_sum += s;
                inv_sine_sum += 1.0 / s;
            }
            const double half = 0.5 * kPi / n;
            const double cot_half = std::cos(half) / std::sin(half);
            worst = std::max(worst, std::abs(sine_sum - cot_half) / n);
            if (inv_sine_sum * kPi / n < 2.0 * std::log(cot_half)) bound_holds = false;
        }
        detail = "sine-sum deviation/n " + fmt(worst) + ", trapezoid bound " +
                 (bound_holds ? "holds" : "violated");
        return worst <= 1e-12 && bound_holds;
    });

    checks.emplace_back("gravity_part_concavity", [](std::string& detail) {
        double largest = -1e300;
        for (int n = 7; n <= 100; ++n) {
            for (int l = 2; l < (n - 3) / 2; ++l) {
                const double second = equilibrium_mode_gravity_part(n, l) +
                                      equilibrium_mode_gravity_part(n, l + 2) -
                                      2.0 * equilibrium_mode_gravity_part(n, l + 1);
                largest = std::max(largest, second);
            }
        }
        detail = "max second difference " + fmt(largest);
        return largest < 0.0;
    });

    checks.emplace_back("hessian_row_sums", [](std::string& detail) {
        std::mt19937 rng(99);
        double worst = 0.0;
        for (std::size_t n : {4u, 7u, 10u, 13u}) {
            const Matrix h = ring_hessian(random_perturbed_ring(rng, n)).dense;
            const double scale = max_abs(h);
            for (std::size_t i = 0; i < n; ++i) {
                double row = 0.0;
                for (std::size_t k = 0; k < n; ++k) row += h(i, k);
                worst = std::max(worst, std::abs(row) / scale);
            }
        }
        detail = "max |row sum| / max|entry| " + fmt(worst);
        return worst <= 1e-11;
    });

    checks.emplace_back("analytic_vs_dense_spectra", [](std::string& detail) {
        double worst = 0.0;
        for (int n = 4; n <= 40; n += 2) {
            for (double ratio : {0.1, 0.5, 1.0, 2.0, 10.0}) {
                const StabilityReport report = classify_ring(n, ratio);
                const RingConfiguration config =
                    RingConfiguration::alternating(n, std::sqrt(ratio), 1.0 / std::sqrt(ratio));
                const std::vector<double> dense =
                    oracle::jacobi_eigenvalues(ring_hessian(config).dense);
                worst = std::max(worst, multiset_deviation(report.eigenvalues, dense));
            }
        }
        detail = "max spectrum deviation " + fmt(worst);
        return worst <= 1e-9;
    });

    checks.emplace_back("rotational_zero_mode", [](std::string& detail) {
        double worst = 0.0;
        for (int n = 4; n <= 40; n += 2) {
            for (double ratio : {0.1, 1.0, 10.0}) {
                const Matrix h = ring_hessian(RingConfiguration::alternating(
                                                  n, std::sqrt(ratio), 1.0 / std::sqrt(ratio)))
                                     .dense;
                double norm_sq = 0.0;
                for (std::size_t i = 0; i < h.rows; ++i) {
                    double row = 0.0;
                    for (std::size_t k = 0; k < h.cols; ++k) row += h(i, k);
                    norm_sq += row * row;
                }
                worst = std::max(worst, std::sqrt(norm_sq) / frobenius_norm(h));
            }
        }
        detail = "max |H*ones| / |H|_F " + fmt(worst);
        return worst <= 1e-10;
    });

    checks.emplace_back("determinant_monotone_in_mode", [](std::string& detail) {
        double worst = 0.0;
        for (int j = 3; j <= 40; ++j) {
            for (auto [mu1, mu2] : {std::pair{1.0, 1.0}, {2.0, 1.0}, {5.0, 1.0}, {1.0, 3.0}}) {
                double prev = mode_determinant(j, 2, mu1, mu2);
                for (int l = 3; l <= (j + 1) / 2; ++l) {
                    const double cur = mode_determinant(j, l, mu1, mu2);
                    worst = std::max(worst, prev - cur);
                    prev = cur;
                }
            }
        }
        detail = "max decrease " + fmt(worst);
        return worst <= 1e-9;
    });

    checks.emplace_back("ratio_symmetry", [](std::string& detail) {
        double worst = 0.0;
        for (int n : {8, 10, 12, 14, 20}) {
            for (double ratio : {0.2, 0.7, 3.0, 25.0}) {
                const StabilityReport a = classify_ring(n, ratio);
                const StabilityReport b = classify_ring(n, 1.0 / ratio);
                if (a.verdict != b.verdict) {
                    detail = "verdict mismatch at n=" + std::to_string(n);
                    return false;
                }
                worst = std::max(worst, multiset_deviation(a.eigenvalues, b.eigenvalues));
            }
        }
        detail = "max spectrum deviation " + fmt(worst);
        return worst <= 1e-10;
    });

    checks.emplace_back("interval_reciprocity", [](std::string& detail) {
        double worst = 0.0;
        for (int j : {4, 5, 6}) {
            const RatioInterval interval = stability_interval(j);
            worst = std::max(worst, std::abs(interval.lo * interval.hi - 1.0));
        }
        detail = "max |lo*hi - 1| " + fmt(worst);
        return worst <= 1e-10;
    });

    checks.emplace_back("interval_bisection_crosscheck", [](std::string& detail) {
        double worst = 0.0;
        for (int j : {4, 5, 6}) {
            const RatioInterval interval = stability_interval(j);
            const auto det2 = [j](double rho) { return mode_determinant(j, 2, rho, 1.0); };
            const double lo = oracle::bisect_root(det2, 1e-3, 1.0, 1e-13);
            const double hi = oracle::bisect_root(det2, 1.0, 1.0 / 1e-3, 1e-12);
            worst = std::max({worst, std::abs(lo - interval.lo), std::abs(hi - interval.hi)});
        }
        detail = "max |closed form - bisection| " + fmt(worst);
        return worst <= 1e-10;
    });

    checks.emplace_back("boundary_degeneracy", [](std::string& detail) {
        for (int j : {4, 5, 6}) {
            const RatioInterval interval = stability_interval(j);
            const StabilityReport report = classify_ring(2 * j, interval.lo, 1e-7);
            if (report.verdict != Verdict::degenerate) {
                detail = std::string("expected degenerate at the lower endpoint, got ") +
                         to_string(report.verdict) + " for j=" + std::to_string(j);
                return false;
            }
        }
        detail = "lower endpoints classify as degenerate (zero_tol 1e-7)";
        return true;
    });

    checks.emplace_back("gradient_vs_finite_differences", [](std::string& detail) {
        std::mt19937 rng(2025);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t n = 4 + static_cast<std::size_t>(trial % 9);
            const RingConfiguration config = random_perturbed_ring(rng, n);
            const std::vector<double> analytic = hall_gradient(config);
            const auto potential_at = [&config](const std::vector<double>& angles) {
                RingConfiguration moved = config;
                moved.angles = angles;
                return hall_potential(moved);
            };
            const std::vector<double> numeric =
                oracle::numeric_gradient(potential_at, config.angles, 1e-6);
            double scale = 0.0;
            double diff = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                scale = std::max(scale, std::abs(analytic[i]));
                diff = std::max(diff, std::abs(analytic[i] - numeric[i]));
            }
            worst = std::max(worst, diff / scale);
        }
        detail = "max relative deviation " + fmt(worst);
        return worst <= 1e-6;
    });

    checks.emplace_back("hessian_vs_finite_differences", [](std::string& detail) {
        std::mt19937 rng(31337);
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const std::size_t n = 5 + static_cast<std::size_t>(trial);
            const RingConfiguration config = random_perturbed_ring(rng, n);
            const Matrix analytic = ring_hessian(config).dense;
            const auto potential_at = [&config](const std::vector<double>& angles) {
                RingConfiguration moved = config;
                moved.angles = angles;
                return hall_potential(moved);
            };
            const Matrix numeric = oracle::numeric_hessian(potential_at, config.angles, 1e-4);
            const double floor = 0.01 * max_abs(analytic);
            for (std::size_t i = 0; i < analytic.data.size(); ++i) {
                const double denom = std::max(std::abs(analytic.data[i]), floor);
                worst = std::max(worst, std::abs(analytic.data[i] - numeric.data[i]) / denom);
            }
        }
        detail = "max entrywise relative deviation " + fmt(worst);
        return worst <= 1e-5;
    });

    checks.emplace_back("jacobi_trace_and_frobenius", [](std::string& detail) {
        std::mt19937 rng(555);
        std::uniform_real_distribution<double> dist(-2.0, 2.0);
        std::uniform_int_distribution<int> size(2, 20);
        double worst_trace = 0.0;
        double worst_frob = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t m = static_cast<std::size_t>(size(rng));
            Matrix a(m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = i; k < m; ++k) a(i, k) = a(k, i) = dist(rng);
            const std::vector<double> eig = oracle::jacobi_eigenvalues(a);
            double trace = 0.0;
            for (std::size_t i = 0; i < m; ++i) trace += a(i, i);
            double sum = 0.0;
            double sum_sq = 0.0;
            for (double v : eig) {
                sum += v;
                sum_sq += v * v;
            }
            const double norm = frobenius_norm(a);
            worst_trace = std::max(worst_trace, std::abs(sum - trace) / norm);
            worst_frob = std::max(worst_frob, std::abs(sum_sq - norm * norm) / (norm * norm));
        }
        detail = "trace " + fmt(worst_trace) + ", frobenius " + fmt(worst_frob);
        return worst_trace <= 1e-10 && worst_frob <= 1e-9;
    });

    checks.emplace_back("bisection_brackets", [](std::string& detail) {
        const double root = oracle::bisect_root([](double x) { return x * x - 2.0; }, 1.0, 2.0,
                                                1e-12);
        if (std::abs(root - std::sqrt(2.0)) > 1e-11) {
            detail = "sqrt(2) bisection off by " + fmt(std::abs(root - std::sqrt(2.0)));
            return false;
        }
        const double at41 = equilibrium_mode_bounds(kPi / 41.0).second;
        const double at42 = equilibrium_mode_bounds(kPi / 42.0).second;
        detail = "bracket values " + fmt(at41) + " / " + fmt(at42);
        return at41 < 0.0 && at42 > 0.0;
    });

    checks.emplace_back("bound_function_monotonicity", [](std::string& detail) {
        bool ok = true;
        double prev = -1e300;
        for (int i = 200; i >= 1; --i) {  // decreasing x
            const double x = 0.0123 + 0.0071 * i;
            if (x >= 0.5 * kPi) continue;
            const double value = equilibrium_mode_bounds(x).second;
            if (value < prev) ok = false;
            prev = value;
        }
        double prev_h2 = 1e300;
        for (int i = 1; i <= 200; ++i) {
            const double x = 0.01 + (0.5 * kPi - 0.02) * i / 200.0;
            const double value = stiffness_sign_function(x);
            if (value > prev_h2) ok = false;
            prev_h2 = value;
            if (subring_stiffness_lower_bound(x) <= value / (2.0 * x)) ok = false;
        }
        // The coupling bound dips near x = 0.772; it is decreasing on the
        // grid below that and strictly increasing along the used sequence
        // x = pi/(2j), j >= 2.
        double prev_h3 = 1e300;
        for (int i = 1; i <= 200; ++i) {
            const double x = 0.01 + (0.75 - 0.01) * i / 200.0;
            const double value = coupling_sign_function(x);
            if (value > prev_h3) ok = false;
            prev_h3 = value;
        }
        double prev_bound = coupling_sign_function(0.5 * kPi / 2.0);
        for (int j = 3; j <= 200; ++j) {
            const double bound = coupling_sign_function(0.5 * kPi / j);
            if (!(bound > prev_bound)) ok = false;
            prev_bound = bound;
        }
        detail = ok ? "bracketing function rises as x falls; majorants decrease"
                    : "monotonicity violated";
        return ok;
    });

    checks.emplace_back("stiffness_anchors", [](std::string& detail) {
        if (!(subring_mode_stiffness(6, 2) < 0.0 && subring_mode_stiffness(7, 2) > 0.0)) {
            detail = "mode-2 stiffness sign pattern at j=6/7 broken";
            return false;
        }
        for (int j = 2; j <= 200; ++j) {
            const double cross = cross_ring_stiffness(j);
            if (!(cross > 0.0)) {
                detail = "cross stiffness not positive at j=" + std::to_string(j);
                return false;
            }
            const double coupling = cross_ring_mode_coupling(j, 2);
            if (!(cross + coupling > 0.0) || !(cross - coupling > 0.0)) {
                detail = "cross +/- coupling not positive at j=" + std::to_string(j);
                return false;
            }
        }
        for (int j : {2, 5, 9, 16}) {
            if (subring_mode_stiffness(j, 1) != 0.0) {
                detail = "mode-1 stiffness not exactly zero at j=" + std::to_string(j);
                return false;
            }
            if (cross_ring_mode_coupling(j, 1) != cross_ring_stiffness(j)) {
                detail = "mode-1 coupling differs from cross stiffness at j=" + std::to_string(j);
                return false;
            }
        }
        detail = "sign anchors and mode-1 identities hold";
        return true;
    });

    checks.emplace_back("equal_mass_threshold", [](std::string& detail) {
        for (int n = 3; n <= 60; ++n) {
            const StabilityReport report = classify_ring(n, 1.0);
            const bool expect_stable = n >= 7;
            if ((report.verdict == Verdict::stable) != expect_stable) {
                detail = "equal-mass verdict wrong at n=" + std::to_string(n);
                return false;
            }
        }
        detail = "stable exactly for n >= 7 over 3..60";
        return true;
    });

    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (auto& [name, fn] : checks) {
        CheckResult result;
        result.name = name;
        try {
            result.pass = fn(result.detail);
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace ringstab::selfcheck

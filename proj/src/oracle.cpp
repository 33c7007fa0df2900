#include "ringstab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ringstab::oracle {

namespace {

double offdiag_frobenius(const Matrix& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < a.rows; ++p)
        for (std::size_t q = p + 1; q < a.cols; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(const Matrix& m, double sweep_tol) {
    if (m.rows != m.cols || m.rows == 0)
        throw std::invalid_argument("jacobi_eigenvalues: square nonempty matrix required");
    if (!(sweep_tol > 0.0))
        throw std::invalid_argument("jacobi_eigenvalues: sweep_tol must be positive");

    const std::size_t n = m.rows;
    const double scale = max_abs(m);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (std::abs(m(p, q) - m(q, p)) > 1e-12 * std::max(1.0, scale))
                throw std::invalid_argument("jacobi_eigenvalues: symmetric input required");

    Matrix a = m;  // private working copy
    const double norm = frobenius_norm(a);
    std::vector<double> eig(n);
    if (norm == 0.0) return eig;

    bool converged = false;
    for (int sweep = 0; sweep < 50 && !converged; ++sweep) {
        if (offdiag_frobenius(a) <= sweep_tol * norm) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = arp - s * (arq + tau * arp);
                    a(p, r) = a(r, p);
                    a(r, q) = arq + s * (arp - tau * arq);
                    a(q, r) = a(r, q);
                }
            }
        }
    }
    if (!converged && offdiag_frobenius(a) > sweep_tol * norm)
        throw std::runtime_error("jacobi_eigenvalues: no convergence within 50 sweeps");

    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> numeric_gradient(const ScalarFn& fn, const std::vector<double>& point,
                                     double h) {
    if (!(h > 0.0)) throw std::invalid_argument("numeric_gradient: h must be positive");
    std::vector<double> grad(point.size());
    std::vector<double> x = point;
    for (std::size_t i = 0; i < point.size(); ++i) {
        x[i] = point[i] + h;
        const double hi = fn(x);
        x[i] = point[i] - h;
        const double lo = fn(x);
        x[i] = point[i];
        grad[i] = (hi - lo) / (2.0 * h);
    }
    return grad;
}

Matrix numeric_hessian(const ScalarFn& fn, const std::vector<double>& point, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("numeric_hessian: h must be positive");
    const std::size_t n = point.size();
    Matrix hess(n, n);
    std::vector<double> x = point;
    const double f0 = fn(point);

    for (std::size_t i = 0; i < n; ++i) {
        x[i] = point[i] + h;
        const double fp = fn(x);
        x[i] = point[i] - h;
        const double fm = fn(x);
        x[i] = point[i];
        hess(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) {
            x[i] = point[i] + h;
            x[k] = point[k] + h;
            const double fpp = fn(x);
            x[k] = point[k] - h;
            const double fpm = fn(x);
            x[i] = point[i] - h;
            const double fmm = fn(x);
            x[k] = point[k] + h;
            const double fmp = fn(x);
            x[i] = point[i];
            x[k] = point[k];
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
            hess(i, k) = v;
            hess(k, i) = v;
        }
    }
    return hess;
}

double bisect_root(const std::function<double(double)>& fn, double lo, double hi, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("bisect_root: tol must be positive");
    if (!(lo < hi)) throw std::invalid_argument("bisect_root: lo < hi required");
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("bisect_root: no sign change over the bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // bracket at ulp resolution
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace ringstab::oracle

#pragma once

// Test-only reference computations. Everything here is written from the
// defining formulas with plain loops and must not call into the library's
// estimator code paths.

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

/// Determinant by Laplace expansion along the first row. O(d!) - small d only.
inline double laplace_det(const Eigen::MatrixXd& m) {
    const Eigen::Index d = m.rows();
    if (d == 1) return m(0, 0);
    if (d == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    double det = 0.0;
    for (Eigen::Index c = 0; c < d; ++c) {
        Eigen::MatrixXd minor(d - 1, d - 1);
        for (Eigen::Index r = 1; r < d; ++r)
            for (Eigen::Index cc = 0, k = 0; cc < d; ++cc)
                if (cc != c) minor(r - 1, k++) = m(r, cc);
        det += ((c % 2 == 0) ? 1.0 : -1.0) * m(0, c) * laplace_det(minor);
    }
    return det;
}

/// Cofactor Delta_ij = (-1)^(i+j) det(minor_ij).
inline double cofactor(const Eigen::MatrixXd& m, Eigen::Index i, Eigen::Index j) {
    const Eigen::Index d = m.rows();
    if (d == 1) return 1.0;
    Eigen::MatrixXd minor(d - 1, d - 1);
    for (Eigen::Index r = 0, rr = 0; r < d; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < d; ++c) {
            if (c == j) continue;
            minor(rr, cc++) = m(r, c);
        }
        ++rr;
    }
    return (((i + j) % 2 == 0) ? 1.0 : -1.0) * laplace_det(minor);
}

/// a_{target, l} = (1/det C) sum_j Delta_lj C_{j,d target}, by explicit cofactors.
inline Eigen::VectorXd cofactor_coefficients(const Eigen::MatrixXd& C, const Eigen::MatrixXd& cross,
                                             Eigen::Index target) {
    const Eigen::Index d = C.rows();
    const double det = laplace_det(C);
    Eigen::VectorXd a(d);
    for (Eigen::Index l = 0; l < d; ++l) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < d; ++j) s += cofactor(C, l, j) * cross(j, target);
        a(l) = s / det;
    }
    return a;
}

/// Sample covariance with divisor n, by loops in extended precision.
/// x and y must have equal length.
inline long double covariance_ld(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    long double mx = 0.0L, my = 0.0L;
    for (std::size_t t = 0; t < n; ++t) {
        mx += x[t];
        my += y[t];
    }
    mx /= static_cast<long double>(n);
    my /= static_cast<long double>(n);
    long double s = 0.0L;
    for (std::size_t t = 0; t < n; ++t) s += (x[t] - mx) * (y[t] - my);
    return s / static_cast<long double>(n);
}

inline double covariance(const std::vector<double>& x, const std::vector<double>& y) {
    return static_cast<double>(covariance_ld(x, y));
}

/// Bivariate information-flow estimator from X2 to X1 written directly in
/// sample covariances:
///   (C11 C12 C2,d1 - C12^2 C1,d1) / (C11^2 C22 - C11 C12^2)
/// Series are given as plain vectors; `dt` and stride `k` define the
/// forward difference of x1. Evaluated in long double so that the
/// cancellation in numerator and denominator does not dominate comparisons.
inline double bivariate_flow_2_to_1(const std::vector<double>& x1, const std::vector<double>& x2, double dt, int k) {
    const std::size_t n = x1.size() - static_cast<std::size_t>(k);
    std::vector<double> a(x1.begin(), x1.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<double> b(x2.begin(), x2.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<double> dx1(n);
    for (std::size_t t = 0; t < n; ++t) dx1[t] = (x1[t + static_cast<std::size_t>(k)] - x1[t]) / (k * dt);
    const long double c11 = covariance_ld(a, a);
    const long double c12 = covariance_ld(a, b);
    const long double c22 = covariance_ld(b, b);
    const long double c1d1 = covariance_ld(a, dx1);
    const long double c2d1 = covariance_ld(b, dx1);
    return static_cast<double>((c11 * c12 * c2d1 - c12 * c12 * c1d1) / (c11 * c11 * c22 - c11 * c12 * c12));
}

/// Central finite-difference Hessian of f at x with per-coordinate steps.
inline Eigen::MatrixXd fd_hessian(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& step) {
    const Eigen::Index n = x.size();
    Eigen::MatrixXd h(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            auto at = [&](double si, double sj) {
                Eigen::VectorXd p = x;
                p(i) += si * step(i);
                p(j) += sj * step(j);
                return f(p);
            };
            double v;
            if (i == j) {
                // Fourth-order five-point stencil.
                auto at1 = [&](double s) {
                    Eigen::VectorXd p = x;
                    p(i) += s * step(i);
                    return f(p);
                };
                v = (-at1(2) + 16 * at1(1) - 30 * f(x) + 16 * at1(-1) - at1(-2)) / (12 * step(i) * step(i));
            } else {
                v = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * step(i) * step(j));
            }
            h(i, j) = h(j, i) = v;
        }
    }
    return h;
}

/// Stationary covariance of X(n+1) = A X(n) + B e by fixed-point iteration
/// of Sigma = A Sigma A^T + B B^T.
inline Eigen::MatrixXd var_stationary_cov(const Eigen::MatrixXd& A, const Eigen::VectorXd& b_diag) {
    const Eigen::MatrixXd Q = b_diag.array().square().matrix().asDiagonal();
    Eigen::MatrixXd sigma = Q;
    for (int it = 0; it < 5000; ++it) {
        Eigen::MatrixXd next = A * sigma * A.transpose() + Q;
        if ((next - sigma).norm() < 1e-14 * next.norm()) return next;
        sigma = next;
    }
    return sigma;
}

}  // namespace oracle

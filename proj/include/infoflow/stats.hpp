#pragma once

#include "infoflow/panel.hpp"

#include <Eigen/Dense>

namespace infoflow {

/// Forward-difference derivative estimates, entry (i, n) equal to
/// (X[i, n + k] - X[i, n]) / (k * dt). Holds N - k columns.
struct DerivedSeries {
    Eigen::MatrixXd data;
    int stride = 1;
    double dt = 1.0;

    Eigen::Index samples() const noexcept { return data.cols(); }
};

/// Throws InvalidArgument unless 1 <= k <= N - 1.
DerivedSeries derive_series(const TimeSeriesPanel& panel, int k);

/// Sample moments over the N - k aligned samples (the first N - k columns of
/// the panel paired with the derived series). Covariances use divisor N - k.
struct StatisticsBundle {
    Eigen::VectorXd means;      // mean of X_i
    Eigen::VectorXd dot_means;  // mean of the derived series of X_i
    Eigen::MatrixXd cov;        // C(i, j)
    Eigen::MatrixXd cross;      // (j, i) holds C_{j,di}: cov of X_j with derived X_i
    double det = 0.0;
    /// Condition number of the correlation matrix built from `cov`.
    double condition = 0.0;
    Eigen::Index samples = 0;
    int stride = 1;

    Eigen::Index variables() const noexcept { return cov.rows(); }
};

/// Throws DegenerateInput naming the first variable with zero variance.
StatisticsBundle compute_statistics(const TimeSeriesPanel& panel, const DerivedSeries& derived);

struct FitOptions {
    /// Added to the diagonal of C before solving. Zero disables regularization.
    double ridge = 0.0;
    /// Correlation-matrix condition number above which C counts as singular.
    double max_condition = 1e12;
};

/// True when `stats.condition` exceeds the limit (or is not finite).
bool is_singular(const StatisticsBundle& stats, const FitOptions& options = {});

/// Maximum-likelihood fit of dX_i/dt = f_i + sum_j a_ij X_j + noise.
struct RowMLE {
    Eigen::Index target = 0;
    double f_hat = 0.0;
    Eigen::VectorXd a_hat;
    double g_hat = 0.0;       // noise variance per unit time
    double residual_ss = 0.0; // sum of squared residuals Q
};

/// Solves the normal equations for row `target`. Throws SingularCovariance
/// when C is near-singular and no ridge is configured.
RowMLE fit_row(const StatisticsBundle& stats, const TimeSeriesPanel& panel, const DerivedSeries& derived,
               Eigen::Index target, const FitOptions& options = {});

/// Residuals dX_i,n - f_hat - sum_j a_hat_j X_j,n over the aligned samples.
Eigen::VectorXd residuals(const RowMLE& row, const TimeSeriesPanel& panel, const DerivedSeries& derived);

}  // namespace infoflow

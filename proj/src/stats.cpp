#include "infoflow/stats.hpp"

#include "infoflow/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace infoflow {

DerivedSeries derive_series(const TimeSeriesPanel& panel, int k) {
    const Eigen::Index n_total = panel.length();
    if (k < 1 || k > n_total - 1)
        throw InvalidArgument("differencing stride k=" + std::to_string(k) + " outside [1, " +
                              std::to_string(n_total - 1) + "]");
    const Eigen::Index n = n_total - k;
    const auto& x = panel.data();
    DerivedSeries out;
    out.stride = k;
    out.dt = panel.dt();
    out.data = (x.rightCols(n) - x.leftCols(n)) / (static_cast<double>(k) * panel.dt());
    return out;
}

namespace {

double correlation_condition(const Eigen::MatrixXd& cov) {
    const Eigen::VectorXd scale = cov.diagonal().cwiseSqrt().cwiseInverse();
    const Eigen::MatrixXd corr = scale.asDiagonal() * cov * scale.asDiagonal();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(corr, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

std::string most_collinear_pair(const StatisticsBundle& stats, const TimeSeriesPanel& panel) {
    Eigen::Index best_i = 0, best_j = 1;
    double best = -1.0;
    for (Eigen::Index i = 0; i < stats.cov.rows(); ++i)
        for (Eigen::Index j = i + 1; j < stats.cov.cols(); ++j) {
            const double r = std::fabs(stats.cov(i, j)) / std::sqrt(stats.cov(i, i) * stats.cov(j, j));
            if (r > best) {
                best = r;
                best_i = i;
                best_j = j;
            }
        }
    if (best < 0.0) return "n/a";
    return panel.labels()[static_cast<std::size_t>(best_i)] + " and " +
           panel.labels()[static_cast<std::size_t>(best_j)];
}

}  // namespace

StatisticsBundle compute_statistics(const TimeSeriesPanel& panel, const DerivedSeries& derived) {
    const Eigen::Index n = derived.samples();
    if (derived.data.rows() != panel.variables() || n != panel.length() - derived.stride)
        throw InvalidArgument("derived series does not match the panel");

    const auto x = panel.data().leftCols(n);
    StatisticsBundle s;
    s.samples = n;
    s.stride = derived.stride;
    s.means = x.rowwise().mean();
    s.dot_means = derived.data.rowwise().mean();

    const Eigen::MatrixXd xc = x.colwise() - s.means;
    const Eigen::MatrixXd dc = derived.data.colwise() - s.dot_means;
    const double inv_n = 1.0 / static_cast<double>(n);
    s.cov = (xc * xc.transpose()) * inv_n;
    s.cov = 0.5 * (s.cov + s.cov.transpose()).eval();
    s.cross = (xc * dc.transpose()) * inv_n;

    for (Eigen::Index i = 0; i < s.cov.rows(); ++i)
        if (!(s.cov(i, i) > 0.0))
            throw DegenerateInput("series '" + panel.labels()[static_cast<std::size_t>(i)] + "' has zero variance");

    s.det = s.cov.determinant();
    s.condition = correlation_condition(s.cov);
    return s;
}

bool is_singular(const StatisticsBundle& stats, const FitOptions& options) {
    return !(stats.condition <= options.max_condition);
}

RowMLE fit_row(const StatisticsBundle& stats, const TimeSeriesPanel& panel, const DerivedSeries& derived,
               Eigen::Index target, const FitOptions& options) {
    const Eigen::Index d = stats.variables();
    if (target < 0 || target >= d) throw InvalidArgument("target index " + std::to_string(target) + " out of range");
    if (options.ridge < 0.0) throw InvalidArgument("ridge must be non-negative");
    if (stats.samples < d + 2)
        throw DegenerateInput("only " + std::to_string(stats.samples) + " samples for " + std::to_string(d) +
                              " regressors");
    if (options.ridge == 0.0 && is_singular(stats, options))
        throw SingularCovariance("covariance matrix is singular (condition number " +
                                 std::to_string(stats.condition) + "); most collinear pair: " +
                                 most_collinear_pair(stats, panel));

    Eigen::MatrixXd lhs = stats.cov;
    lhs.diagonal().array() += options.ridge;
    const Eigen::LDLT<Eigen::MatrixXd> solver(lhs);
    if (solver.info() != Eigen::Success) throw SingularCovariance("factorization of the covariance matrix failed");

    RowMLE row;
    row.target = target;
    row.a_hat = solver.solve(stats.cross.col(target));
    row.f_hat = stats.dot_means(target) - row.a_hat.dot(stats.means);

    const Eigen::VectorXd r = residuals(row, panel, derived);
    row.residual_ss = r.squaredNorm();
    row.g_hat = row.residual_ss * panel.dt() / static_cast<double>(stats.samples);
    return row;
}

Eigen::VectorXd residuals(const RowMLE& row, const TimeSeriesPanel& panel, const DerivedSeries& derived) {
    const Eigen::Index n = derived.samples();
    const auto x = panel.data().leftCols(n);
    Eigen::VectorXd r = derived.data.row(row.target).transpose();
    r.array() -= row.f_hat;
    r.noalias() -= x.transpose() * row.a_hat;
    return r;
}

}  // namespace infoflow

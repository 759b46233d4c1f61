#include "infoflow/estimator.hpp"

#include "infoflow/error.hpp"
#include "infoflow/quantile.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <string>

namespace infoflow {

double FisherBlock::coefficient_stderr(Eigen::Index j) const {
    return std::sqrt(std::max(0.0, param_cov(1 + j, 1 + j)));
}

double info_flow(const RowMLE& row, const StatisticsBundle& stats, Eigen::Index source, Eigen::Index target) {
    if (source == target) throw InvalidArgument("information flow needs distinct source and target; use self_influence");
    if (row.target != target) throw InvalidArgument("row was fitted for a different target");
    return row.a_hat(source) * stats.cov(target, source) / stats.cov(target, target);
}

double self_influence(const RowMLE& row, Eigen::Index target) {
    if (row.target != target) throw InvalidArgument("row was fitted for a different target");
    return row.a_hat(target);
}

double noise_rate(const RowMLE& row, const StatisticsBundle& stats, Eigen::Index target) {
    if (row.target != target) throw InvalidArgument("row was fitted for a different target");
    return 0.5 * row.g_hat / stats.cov(target, target);
}

Eigen::VectorXd fitted_theta(const RowMLE& row) {
    const Eigen::Index d = row.a_hat.size();
    Eigen::VectorXd theta(d + 2);
    theta(0) = row.f_hat;
    theta.segment(1, d) = row.a_hat;
    theta(d + 1) = std::sqrt(row.g_hat);
    return theta;
}

double row_log_likelihood(const TimeSeriesPanel& panel, const DerivedSeries& derived, Eigen::Index target,
                          const Eigen::VectorXd& theta) {
    const Eigen::Index d = panel.variables();
    const Eigen::Index n = derived.samples();
    if (theta.size() != d + 2) throw InvalidArgument("parameter vector must have d + 2 entries");
    const double h = panel.dt();
    const double b = theta(d + 1);
    const auto x = panel.data().leftCols(n);
    Eigen::VectorXd r = derived.data.row(target).transpose();
    r.array() -= theta(0);
    r.noalias() -= x.transpose() * theta.segment(1, d);
    const double nd = static_cast<double>(n);
    return -0.5 * nd * std::log(2.0 * std::numbers::pi * h) - nd * std::log(std::fabs(b)) -
           0.5 * h * r.squaredNorm() / (b * b);
}

FisherBlock fisher_block(const TimeSeriesPanel& panel, const DerivedSeries& derived, const RowMLE& row) {
    const Eigen::Index d = panel.variables();
    const Eigen::Index n = derived.samples();
    const double h = panel.dt();
    const double b2 = row.g_hat;
    if (!(b2 > 0.0)) throw SingularInformation("noise variance is zero; Fisher information is unbounded");
    const double b = std::sqrt(b2);
    const double nd = static_cast<double>(n);

    // Design rows z_n = (1, X_1n, ..., X_dn).
    Eigen::MatrixXd z(d + 1, n);
    z.row(0).setOnes();
    z.bottomRows(d) = panel.data().leftCols(n);
    const Eigen::VectorXd r = residuals(row, panel, derived);

    // Negated second derivatives of the summed log-density.
    Eigen::MatrixXd total(d + 2, d + 2);
    total.topLeftCorner(d + 1, d + 1) = (h / b2) * (z * z.transpose());
    const Eigen::VectorXd cross_b = (2.0 * h / (b2 * b)) * (z * r);
    total.block(0, d + 1, d + 1, 1) = cross_b;
    total.block(d + 1, 0, 1, d + 1) = cross_b.transpose();
    total(d + 1, d + 1) = 3.0 * h * r.squaredNorm() / (b2 * b2) - nd / b2;

    FisherBlock out;
    out.target = row.target;
    out.matrix = total / nd;

    const Eigen::FullPivLU<Eigen::MatrixXd> lu(total);
    if (!lu.isInvertible())
        throw SingularInformation("Fisher information for target " + std::to_string(row.target) +
                                  " is not invertible");
    out.param_cov = lu.inverse();
    out.param_cov = 0.5 * (out.param_cov + out.param_cov.transpose()).eval();
    return out;
}

FlowEstimate make_flow_estimate(Eigen::Index source, Eigen::Index target, double T, double std_error,
                                double confidence) {
    if (!(std_error >= 0.0)) throw InvalidArgument("standard error must be non-negative");
    const double z = two_sided_critical(confidence);
    FlowEstimate e;
    e.source = source;
    e.target = target;
    e.T = T;
    e.std_error = std_error;
    e.ci_low = T - z * std_error;
    e.ci_high = T + z * std_error;
    e.significant = e.ci_low > 0.0 || e.ci_high < 0.0;
    if (std_error > 0.0)
        e.p_value = two_sided_p_value(T / std_error);
    else
        e.p_value = (T == 0.0) ? 1.0 : 0.0;
    return e;
}

FlowEstimate flow_with_significance(const RowMLE& row, const StatisticsBundle& stats, const FisherBlock& fisher,
                                    Eigen::Index source, Eigen::Index target, double confidence) {
    const double T = info_flow(row, stats, source, target);
    const double ratio = stats.cov(target, source) / stats.cov(target, target);
    return make_flow_estimate(source, target, T, std::fabs(ratio) * fisher.coefficient_stderr(source), confidence);
}

NodeDiagnostics node_diagnostics(const RowMLE& row, const StatisticsBundle& stats, const FisherBlock& fisher,
                                 double confidence) {
    const Eigen::Index i = row.target;
    const auto self = make_flow_estimate(i, i, self_influence(row, i), fisher.coefficient_stderr(i), confidence);
    NodeDiagnostics diag;
    diag.node = i;
    diag.self_influence = self.T;
    diag.self_std_error = self.std_error;
    diag.self_p_value = self.p_value;
    diag.is_self_loop = self.significant;
    diag.noise_rate = noise_rate(row, stats, i);
    return diag;
}

FlowMatrix::FlowMatrix(std::vector<FlowEstimate> cells, std::vector<NodeDiagnostics> nodes,
                       std::vector<RowMLE> rows, StatisticsBundle stats, double confidence)
    : cells_(std::move(cells)), nodes_(std::move(nodes)), rows_(std::move(rows)), stats_(std::move(stats)),
      confidence_(confidence) {
    const std::size_t d = nodes_.size();
    if (cells_.size() != d * d || rows_.size() != d) throw InvalidArgument("flow matrix parts have inconsistent sizes");
}

const FlowEstimate& FlowMatrix::flow(Eigen::Index source, Eigen::Index target) const {
    if (source == target) throw InvalidArgument("no flow stored on the diagonal");
    const auto d = static_cast<std::size_t>(size());
    return cells_.at(static_cast<std::size_t>(source) * d + static_cast<std::size_t>(target));
}

std::vector<FlowEstimate> FlowMatrix::inflows(Eigen::Index target) const {
    std::vector<FlowEstimate> out;
    for (Eigen::Index j = 0; j < size(); ++j)
        if (j != target) out.push_back(flow(j, target));
    return out;
}

namespace {

struct RowResult {
    RowMLE row;
    FisherBlock fisher;
};

RowResult analyze_row(const TimeSeriesPanel& panel, const DerivedSeries& derived, const StatisticsBundle& stats,
                      Eigen::Index i, const FitOptions& fit) {
    RowResult out{fit_row(stats, panel, derived, i, fit), {}};
    out.fisher = fisher_block(panel, derived, out.row);
    return out;
}

}  // namespace

FlowMatrix compute_flow_matrix(const TimeSeriesPanel& panel, const AnalysisOptions& options) {
    panel.require_estimable();
    const DerivedSeries derived = derive_series(panel, options.stride);
    StatisticsBundle stats = compute_statistics(panel, derived);
    const Eigen::Index d = panel.variables();

    std::vector<RowResult> results;
    results.reserve(static_cast<std::size_t>(d));
    if (options.parallel) {
        std::vector<std::future<RowResult>> jobs;
        for (Eigen::Index i = 0; i < d; ++i)
            jobs.push_back(std::async(std::launch::async, analyze_row, std::cref(panel), std::cref(derived),
                                      std::cref(stats), i, options.fit));
        for (auto& job : jobs) results.push_back(job.get());
    } else {
        for (Eigen::Index i = 0; i < d; ++i) results.push_back(analyze_row(panel, derived, stats, i, options.fit));
    }

    const auto du = static_cast<std::size_t>(d);
    std::vector<FlowEstimate> cells(du * du);
    std::vector<NodeDiagnostics> nodes;
    std::vector<RowMLE> rows;
    for (Eigen::Index i = 0; i < d; ++i) {
        const auto& [row, fisher] = results[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < d; ++j) {
            auto& cell = cells[static_cast<std::size_t>(j) * du + static_cast<std::size_t>(i)];
            if (j == i) {
                cell.source = cell.target = i;
                continue;
            }
            cell = flow_with_significance(row, stats, fisher, j, i, options.confidence);
        }
        nodes.push_back(node_diagnostics(row, stats, fisher, options.confidence));
        rows.push_back(row);
    }
    return FlowMatrix(std::move(cells), std::move(nodes), std::move(rows), std::move(stats), options.confidence);
}

}  // namespace infoflow

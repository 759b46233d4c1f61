#pragma once

#include "infoflow/stats.hpp"

#include <Eigen/Dense>

#include <vector>

namespace infoflow {

/// Estimated information flow from `source` to `target`, in nats per unit time.
struct FlowEstimate {
    Eigen::Index source = 0;
    Eigen::Index target = 0;
    double T = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double p_value = 1.0;
    bool significant = false;

    friend bool operator==(const FlowEstimate&, const FlowEstimate&) = default;
};

/// Per-node terms of the marginal entropy budget.
struct NodeDiagnostics {
    Eigen::Index node = 0;
    double self_influence = 0.0;  // dH*_i/dt, equal to a_ii
    double self_std_error = 0.0;
    double self_p_value = 1.0;
    double noise_rate = 0.0;      // g_ii / (2 C_ii)
    bool is_self_loop = false;

    friend bool operator==(const NodeDiagnostics&, const NodeDiagnostics&) = default;
};

/// Observed Fisher information for theta = (f_i, a_i1, ..., a_id, b_i),
/// with g_ii = b_i^2.
struct FisherBlock {
    Eigen::Index target = 0;
    Eigen::MatrixXd matrix;     // I, averaged over samples
    Eigen::MatrixXd param_cov;  // (N I)^-1

    /// Standard error of a_{target, j}.
    double coefficient_stderr(Eigen::Index j) const;
};

/// a_ij * C_ij / C_ii. Throws InvalidArgument when source == target.
double info_flow(const RowMLE& row, const StatisticsBundle& stats, Eigen::Index source, Eigen::Index target);

double self_influence(const RowMLE& row, Eigen::Index target);

double noise_rate(const RowMLE& row, const StatisticsBundle& stats, Eigen::Index target);

/// Log-likelihood of row `target` under the Euler transition density,
/// theta laid out as in FisherBlock. Constant terms are included.
double row_log_likelihood(const TimeSeriesPanel& panel, const DerivedSeries& derived, Eigen::Index target,
                          const Eigen::VectorXd& theta);

/// Parameter vector (f, a..., b) at the fitted row.
Eigen::VectorXd fitted_theta(const RowMLE& row);

/// Closed-form observed information at the fitted row. Throws
/// SingularInformation if it cannot be inverted.
FisherBlock fisher_block(const TimeSeriesPanel& panel, const DerivedSeries& derived, const RowMLE& row);

/// Wraps a point estimate and its standard error into a two-sided interval
/// at the given confidence level.
FlowEstimate make_flow_estimate(Eigen::Index source, Eigen::Index target, double T, double std_error,
                                double confidence);

FlowEstimate flow_with_significance(const RowMLE& row, const StatisticsBundle& stats, const FisherBlock& fisher,
                                    Eigen::Index source, Eigen::Index target, double confidence = 0.90);

/// Self-influence and noise terms; the self-loop verdict uses the same
/// interval test as the flows.
NodeDiagnostics node_diagnostics(const RowMLE& row, const StatisticsBundle& stats, const FisherBlock& fisher,
                                 double confidence = 0.90);

struct AnalysisOptions {
    int stride = 1;
    double confidence = 0.90;
    FitOptions fit;
    /// Fit target rows on separate threads.
    bool parallel = false;
};

/// All d x d flows of a panel. `flow(j, i)` is the flow from j to i; the
/// diagonal is left default-constructed.
class FlowMatrix {
public:
    FlowMatrix(std::vector<FlowEstimate> cells, std::vector<NodeDiagnostics> nodes, std::vector<RowMLE> rows,
               StatisticsBundle stats, double confidence);

    Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(nodes_.size()); }
    const FlowEstimate& flow(Eigen::Index source, Eigen::Index target) const;
    const NodeDiagnostics& node(Eigen::Index i) const { return nodes_.at(static_cast<std::size_t>(i)); }
    const RowMLE& row(Eigen::Index i) const { return rows_.at(static_cast<std::size_t>(i)); }
    const StatisticsBundle& statistics() const noexcept { return stats_; }
    double confidence() const noexcept { return confidence_; }

    /// Flows into `target` from every other node, ordered by source.
    std::vector<FlowEstimate> inflows(Eigen::Index target) const;

private:
    std::vector<FlowEstimate> cells_;
    std::vector<NodeDiagnostics> nodes_;
    std::vector<RowMLE> rows_;
    StatisticsBundle stats_;
    double confidence_;
};

FlowMatrix compute_flow_matrix(const TimeSeriesPanel& panel, const AnalysisOptions& options = {});

}  // namespace infoflow

#pragma once

#include "infoflow/estimator.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace infoflow {

/// Relative importance of each cause of one target node.
///
/// Z = |dH*/dt| + sum_j |T_{j->i}| + dH^noise/dt, and tau_{j->i} = T_{j->i} / Z.
/// `tau` is indexed by source and holds 0 at the target's own position.
struct NormalizedFlows {
    Eigen::Index target = 0;
    double Z = 0.0;
    Eigen::VectorXd tau;
    double self_share = 0.0;
    double noise_share = 0.0;
};

/// Core normalization on raw terms. `flows` are T_{j->i} for j != i in source
/// order; the returned tau has the same length. Throws DegenerateNormalizer if
/// every term is zero.
NormalizedFlows normalize_terms(double self_influence, std::span<const double> flows, double noise_rate);

/// Normalizes the inflows of `diag.node`. `flows` must all target that node.
NormalizedFlows normalize_flows(std::span<const FlowEstimate> flows, const NodeDiagnostics& diag);

/// One NormalizedFlows per target, tau expanded to length d.
std::vector<NormalizedFlows> normalize_matrix(const FlowMatrix& matrix);

}  // namespace infoflow

#include "infoflow/normalize.hpp"

#include "infoflow/error.hpp"

#include <cmath>
#include <string>

namespace infoflow {

NormalizedFlows normalize_terms(double self_influence, std::span<const double> flows, double noise_rate) {
    double z = std::fabs(self_influence) + std::fabs(noise_rate);
    for (double t : flows) z += std::fabs(t);
    if (!(z > 0.0)) throw DegenerateNormalizer("normalizer is zero: no self-influence, inflow or noise");

    NormalizedFlows out;
    out.Z = z;
    out.tau.resize(static_cast<Eigen::Index>(flows.size()));
    for (std::size_t j = 0; j < flows.size(); ++j) out.tau(static_cast<Eigen::Index>(j)) = flows[j] / z;
    out.self_share = std::fabs(self_influence) / z;
    out.noise_share = std::fabs(noise_rate) / z;
    return out;
}

NormalizedFlows normalize_flows(std::span<const FlowEstimate> flows, const NodeDiagnostics& diag) {
    Eigen::Index d = static_cast<Eigen::Index>(flows.size()) + 1;
    std::vector<double> values(static_cast<std::size_t>(d), 0.0);
    for (const auto& f : flows) {
        if (f.target != diag.node)
            throw InvalidArgument("flow " + std::to_string(f.source) + "->" + std::to_string(f.target) +
                                  " does not target node " + std::to_string(diag.node));
        if (f.source == f.target) throw InvalidArgument("self flow passed to normalize_flows");
        if (f.source < 0 || f.source >= d) throw InvalidArgument("flow source out of range");
        values[static_cast<std::size_t>(f.source)] = f.T;
    }
    NormalizedFlows out = normalize_terms(diag.self_influence, values, diag.noise_rate);
    out.target = diag.node;
    return out;
}

std::vector<NormalizedFlows> normalize_matrix(const FlowMatrix& matrix) {
    std::vector<NormalizedFlows> out;
    for (Eigen::Index i = 0; i < matrix.size(); ++i) {
        const auto inflows = matrix.inflows(i);
        out.push_back(normalize_flows(inflows, matrix.node(i)));
    }
    return out;
}

}  // namespace infoflow

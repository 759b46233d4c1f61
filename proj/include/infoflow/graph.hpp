#pragma once

#include "infoflow/estimator.hpp"
#include "infoflow/panel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace infoflow {

inline constexpr int kGraphSchemaVersion = 1;

struct GraphMeta {
    Eigen::Index d = 0;
    Eigen::Index N = 0;
    double dt = 1.0;
    int k = 1;
    double alpha = 0.90;  // confidence level of every interval in the graph
    int schema_version = kGraphSchemaVersion;

    friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

struct GraphNode {
    std::string label;
    double self_influence = 0.0;
    double self_std_error = 0.0;
    bool is_self_loop = false;
    double noise_rate = 0.0;

    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
    Eigen::Index source = 0;
    Eigen::Index target = 0;
    double T = 0.0;
    double std_error = 0.0;
    double p_value = 1.0;
    double tau = 0.0;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// One off-diagonal entry of the full flow matrix, significant or not.
struct FlowCell {
    double T = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double p_value = 1.0;
    double tau = 0.0;
    bool significant = false;

    friend bool operator==(const FlowCell&, const FlowCell&) = default;
};

/// Directed graph of significant information flows. Self-influence lives on
/// the nodes; `flow_matrix[j][i]` is the flow from j to i (empty on the
/// diagonal). Edges are ordered by (source, target).
struct CausalGraph {
    GraphMeta meta;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<std::optional<FlowCell>>> flow_matrix;

    bool has_edge(Eigen::Index source, Eigen::Index target) const;

    friend bool operator==(const CausalGraph&, const CausalGraph&) = default;
};

/// Assembles a graph from an already computed flow matrix.
CausalGraph build_graph(const TimeSeriesPanel& panel, const FlowMatrix& matrix, int stride);

/// Runs the full pipeline: every ordered pair is estimated and tested at
/// confidence `alpha`; significant pairs become edges.
CausalGraph reconstruct(const TimeSeriesPanel& panel, double alpha = 0.90, int k = 1, const FitOptions& fit = {},
                        bool parallel = false);

/// Graphviz digraph with significant edges only. Edge labels carry T with
/// three decimals and tau in percent.
std::string to_dot(const CausalGraph& graph);

/// Versioned JSON document; `graph_from_json` inverts it exactly.
std::string to_json(const CausalGraph& graph);

/// Throws ParseError on malformed or incompatible input.
CausalGraph graph_from_json(const std::string& text);

/// Human-readable report: flow matrix with significance stars, node
/// self-influence and noise terms, and the normalized flow matrix.
std::string summary_table(const CausalGraph& graph);

}  // namespace infoflow

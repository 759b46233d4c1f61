#include "infoflow/error.hpp"
#include "infoflow/graph.hpp"
#include "infoflow/random.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace infoflow;

namespace {

CausalGraph two_node_graph() {
    CausalGraph g;
    g.meta.d = 2;
    g.meta.N = 100;
    g.nodes = {{"A", -0.9, 0.02, true, 0.5}, {"B", -0.01, 0.02, false, 0.4}};
    g.flow_matrix.assign(2, std::vector<std::optional<FlowCell>>(2));
    g.flow_matrix[0][1] = FlowCell{0.19, 0.01, 0.1736, 0.2064, 1e-80, 0.132, true};
    g.flow_matrix[1][0] = FlowCell{0.001, 0.01, -0.0154, 0.0174, 0.92, 0.0007, false};
    g.edges = {{0, 1, 0.19, 0.01, 1e-80, 0.132}};
    return g;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

}  // namespace

TEST(Dot, IsolatedNodes) {
    CausalGraph g;
    g.meta.d = 2;
    g.nodes = {{"A", 0, 0, false, 0}, {"B", 0, 0, false, 0}};
    EXPECT_EQ(to_dot(g), "digraph causal {\n  A [label=\"A\"];\n  B [label=\"B\"];\n}\n");
}

TEST(Dot, EdgeLabelAndSelfLoopStyle) {
    const std::string dot = to_dot(two_node_graph());
    EXPECT_NE(dot.find("A -> B [label=\"0.190 (13.2%)\"];"), std::string::npos) << dot;
    EXPECT_NE(dot.find("A [label=\"A\", style=filled, fillcolor=lightblue];"), std::string::npos);
    EXPECT_NE(dot.find("B [label=\"B\"];"), std::string::npos);
    EXPECT_EQ(count_lines_with(dot, "->"), 1u);
}

TEST(Dot, QuotesAwkwardLabels) {
    CausalGraph g = two_node_graph();
    g.nodes[0].label = "x 1";
    g.nodes[1].label = "2b";
    const std::string dot = to_dot(g);
    EXPECT_NE(dot.find("\"x 1\" -> \"2b\""), std::string::npos) << dot;
}

TEST(Json, RoundTripIsExact) {
    const auto g = reconstruct(testing_support::random_var_panel(4, 600, 3), 0.9, 1);
    const std::string text = to_json(g);
    const auto back = graph_from_json(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_json(back), text);
    EXPECT_EQ(back.meta.alpha, 0.9);
    EXPECT_EQ(back.meta.schema_version, kGraphSchemaVersion);
}

TEST(Json, RecordsAlphaAndEdgeCount) {
    const auto g = two_node_graph();
    const auto back = graph_from_json(to_json(g));
    EXPECT_EQ(back.edges.size(), 1u);
    EXPECT_EQ(back.meta.alpha, 0.90);
    EXPECT_FALSE(back.flow_matrix[0][0].has_value());
}

TEST(Json, MalformedInputIsParseError) {
    EXPECT_THROW(graph_from_json("{"), ParseError);
    EXPECT_THROW(graph_from_json("{\"meta\": {}}"), ParseError);
    std::string text = to_json(two_node_graph());
    text.replace(text.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
    EXPECT_THROW(graph_from_json(text), ParseError);
}

TEST(Reconstruct, DeterministicOutput) {
    const auto p = testing_support::random_var_panel(5, 2000, 4);
    const auto a = reconstruct(p, 0.9, 1, {}, true);
    const auto b = reconstruct(p, 0.9, 1, {}, false);
    EXPECT_EQ(to_json(a), to_json(b));
    EXPECT_EQ(to_dot(a), to_dot(b));
}

TEST(Reconstruct, EdgesAreExactlySignificantCells) {
    const auto g = reconstruct(testing_support::random_var_panel(5, 800, 6), 0.9, 1);
    std::size_t significant = 0;
    for (Eigen::Index j = 0; j < 5; ++j)
        for (Eigen::Index i = 0; i < 5; ++i) {
            const auto& cell = g.flow_matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (i == j) {
                EXPECT_FALSE(cell.has_value());
                EXPECT_FALSE(g.has_edge(j, i));
                continue;
            }
            ASSERT_TRUE(cell.has_value());
            EXPECT_EQ(cell->significant, g.has_edge(j, i));
            if (cell->significant) ++significant;
        }
    EXPECT_EQ(g.edges.size(), significant);
    EXPECT_TRUE(std::is_sorted(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
        return std::pair(a.source, a.target) < std::pair(b.source, b.target);
    }));
}

TEST(Reconstruct, RelabelingInvariance) {
    const auto p = testing_support::random_var_panel(4, 1500, 12);
    const std::vector<Eigen::Index> perm{3, 1, 0, 2};
    const auto g = reconstruct(p, 0.9, 1);
    const auto h = reconstruct(p.select(perm), 0.9, 1);
    for (Eigen::Index a = 0; a < 4; ++a) {
        EXPECT_EQ(h.nodes[static_cast<std::size_t>(a)].label, g.nodes[static_cast<std::size_t>(perm[a])].label);
        EXPECT_EQ(h.nodes[static_cast<std::size_t>(a)].is_self_loop,
                  g.nodes[static_cast<std::size_t>(perm[a])].is_self_loop);
        for (Eigen::Index b = 0; b < 4; ++b) {
            if (a == b) continue;
            EXPECT_EQ(h.has_edge(a, b), g.has_edge(perm[a], perm[b]));
            const auto& hc = *h.flow_matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            const auto& gc = *g.flow_matrix[static_cast<std::size_t>(perm[a])][static_cast<std::size_t>(perm[b])];
            EXPECT_NEAR(hc.T, gc.T, 1e-10);
        }
    }
}

TEST(Reconstruct, MasterSlaveGivesSingleEdge) {
    Rng rng(21);
    Eigen::MatrixXd x(2, 5000);
    double a = 0.0, b = 0.0;
    for (Eigen::Index t = 0; t < 5100; ++t) {
        const double na = 0.5 * a + rng.normal();
        b = 0.3 * b + 0.8 * a + rng.normal();
        a = na;
        if (t >= 100) x.col(t - 100) << a, b;
    }
    const auto g = reconstruct(TimeSeriesPanel(x, 1.0, {"X", "Y"}), 0.9, 1);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.edges[0].source, 0);
    EXPECT_EQ(g.edges[0].target, 1);
}

TEST(Reconstruct, WhiteNoiseEdgeRate) {
    // At 90% confidence each of the d(d-1) null pairs is flagged 10% of the time.
    const int d = 4, runs = 200;
    double edges = 0.0;
    for (int s = 0; s < runs; ++s)
        edges += static_cast<double>(
            reconstruct(TimeSeriesPanel(testing_support::white_noise(d, 500, 500 + s), 1.0)).edges.size());
    const double expected = 0.1 * d * (d - 1);
    const double mean = edges / runs;
    // Pairs within a run are correlated, so allow a generous band.
    EXPECT_NEAR(mean, expected, 0.3) << mean;
}

TEST(Summary, ListsStarsAndSections) {
    const std::string s = summary_table(two_node_graph());
    EXPECT_NE(s.find("0.1900*"), std::string::npos) << s;
    EXPECT_NE(s.find("Nodes"), std::string::npos);
    EXPECT_NE(s.find("13.2*"), std::string::npos);
    EXPECT_NE(s.find("1 significant edges"), std::string::npos);
}

#include "infoflow/graph.hpp"

#include "infoflow/error.hpp"
#include "infoflow/normalize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace infoflow {

using ordered_json = nlohmann::ordered_json;

bool CausalGraph::has_edge(Eigen::Index source, Eigen::Index target) const {
    return std::any_of(edges.begin(), edges.end(),
                       [&](const GraphEdge& e) { return e.source == source && e.target == target; });
}

CausalGraph build_graph(const TimeSeriesPanel& panel, const FlowMatrix& matrix, int stride) {
    const Eigen::Index d = matrix.size();
    const auto normalized = normalize_matrix(matrix);

    CausalGraph g;
    g.meta.d = d;
    g.meta.N = panel.length();
    g.meta.dt = panel.dt();
    g.meta.k = stride;
    g.meta.alpha = matrix.confidence();

    for (Eigen::Index i = 0; i < d; ++i) {
        const auto& diag = matrix.node(i);
        g.nodes.push_back({panel.labels()[static_cast<std::size_t>(i)], diag.self_influence, diag.self_std_error,
                           diag.is_self_loop, diag.noise_rate});
    }

    g.flow_matrix.assign(static_cast<std::size_t>(d), std::vector<std::optional<FlowCell>>(static_cast<std::size_t>(d)));
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            if (i == j) continue;
            const auto& f = matrix.flow(j, i);
            const double tau = normalized[static_cast<std::size_t>(i)].tau(j);
            g.flow_matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                FlowCell{f.T, f.std_error, f.ci_low, f.ci_high, f.p_value, tau, f.significant};
            if (f.significant) g.edges.push_back({j, i, f.T, f.std_error, f.p_value, tau});
        }
    }
    return g;
}

CausalGraph reconstruct(const TimeSeriesPanel& panel, double alpha, int k, const FitOptions& fit, bool parallel) {
    AnalysisOptions options;
    options.stride = k;
    options.confidence = alpha;
    options.fit = fit;
    options.parallel = parallel;
    return build_graph(panel, compute_flow_matrix(panel, options), k);
}

namespace {

std::string dot_id(const std::string& label) {
    const bool plain = !label.empty() && !std::isdigit(static_cast<unsigned char>(label.front())) &&
                       std::all_of(label.begin(), label.end(), [](char c) {
                           return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (plain) return label;
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

}  // namespace

std::string to_dot(const CausalGraph& graph) {
    std::ostringstream out;
    out << "digraph causal {\n";
    for (const auto& node : graph.nodes) {
        std::string quoted = dot_id(node.label);
        if (quoted.front() != '"') quoted = "\"" + quoted + "\"";
        out << "  " << dot_id(node.label) << " [label=" << quoted;
        if (node.is_self_loop) out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (const auto& e : graph.edges) {
        out << "  " << dot_id(graph.nodes[static_cast<std::size_t>(e.source)].label) << " -> "
            << dot_id(graph.nodes[static_cast<std::size_t>(e.target)].label) << " [label=\"" << fixed(e.T, 3) << " ("
            << fixed(100.0 * e.tau, 1) << "%)\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_json(const CausalGraph& graph) {
    ordered_json doc;
    doc["meta"] = {{"d", graph.meta.d},   {"N", graph.meta.N},         {"dt", graph.meta.dt},
                   {"k", graph.meta.k},   {"alpha", graph.meta.alpha}, {"schema_version", graph.meta.schema_version}};

    auto nodes = ordered_json::array();
    for (const auto& n : graph.nodes)
        nodes.push_back({{"label", n.label},
                         {"self_influence", n.self_influence},
                         {"self_stderr", n.self_std_error},
                         {"is_self_loop", n.is_self_loop},
                         {"noise_rate", n.noise_rate}});
    doc["nodes"] = std::move(nodes);

    auto matrix = ordered_json::array();
    for (const auto& row : graph.flow_matrix) {
        auto out_row = ordered_json::array();
        for (const auto& cell : row) {
            if (!cell) {
                out_row.push_back(nullptr);
                continue;
            }
            out_row.push_back({{"T", cell->T},
                               {"stderr", cell->std_error},
                               {"ci_low", cell->ci_low},
                               {"ci_high", cell->ci_high},
                               {"p", cell->p_value},
                               {"tau", cell->tau},
                               {"significant", cell->significant}});
        }
        matrix.push_back(std::move(out_row));
    }
    doc["flow_matrix"] = std::move(matrix);

    auto edges = ordered_json::array();
    for (const auto& e : graph.edges)
        edges.push_back({{"source", e.source}, {"target", e.target}, {"T", e.T},
                         {"stderr", e.std_error}, {"p", e.p_value},  {"tau", e.tau}});
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

CausalGraph graph_from_json(const std::string& text) {
    try {
        const auto doc = ordered_json::parse(text);
        CausalGraph g;
        const auto& meta = doc.at("meta");
        g.meta.schema_version = meta.at("schema_version").get<int>();
        if (g.meta.schema_version != kGraphSchemaVersion)
            throw ParseError("unsupported schema_version " + std::to_string(g.meta.schema_version));
        g.meta.d = meta.at("d").get<Eigen::Index>();
        g.meta.N = meta.at("N").get<Eigen::Index>();
        g.meta.dt = meta.at("dt").get<double>();
        g.meta.k = meta.at("k").get<int>();
        g.meta.alpha = meta.at("alpha").get<double>();

        for (const auto& n : doc.at("nodes"))
            g.nodes.push_back({n.at("label").get<std::string>(), n.at("self_influence").get<double>(),
                               n.at("self_stderr").get<double>(), n.at("is_self_loop").get<bool>(),
                               n.at("noise_rate").get<double>()});

        for (const auto& row : doc.at("flow_matrix")) {
            std::vector<std::optional<FlowCell>> out_row;
            for (const auto& c : row) {
                if (c.is_null()) {
                    out_row.emplace_back();
                    continue;
                }
                out_row.emplace_back(FlowCell{c.at("T").get<double>(), c.at("stderr").get<double>(),
                                              c.at("ci_low").get<double>(), c.at("ci_high").get<double>(),
                                              c.at("p").get<double>(), c.at("tau").get<double>(),
                                              c.at("significant").get<bool>()});
            }
            g.flow_matrix.push_back(std::move(out_row));
        }

        for (const auto& e : doc.at("edges"))
            g.edges.push_back({e.at("source").get<Eigen::Index>(), e.at("target").get<Eigen::Index>(),
                               e.at("T").get<double>(), e.at("stderr").get<double>(), e.at("p").get<double>(),
                               e.at("tau").get<double>()});

        const auto d = static_cast<std::size_t>(g.meta.d);
        if (g.nodes.size() != d || g.flow_matrix.size() != d)
            throw ParseError("node or matrix count does not match meta.d");
        for (const auto& e : g.edges)
            if (e.source < 0 || e.target < 0 || e.source >= g.meta.d || e.target >= g.meta.d || e.source == e.target)
                throw ParseError("edge endpoints out of range");
        return g;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("invalid graph JSON: ") + ex.what());
    }
}

std::string summary_table(const CausalGraph& graph) {
    const auto d = graph.nodes.size();
    std::ostringstream out;
    char buf[160];
    auto header = [&](const char* title) {
        out << title << "\n";
        std::snprintf(buf, sizeof buf, "%-10s", "from\\to");
        out << buf;
        for (const auto& n : graph.nodes) {
            std::snprintf(buf, sizeof buf, "%12.10s", n.label.c_str());
            out << buf;
        }
        out << "\n";
    };

    header("Information flow T (nats per unit time), * = significant");
    for (std::size_t j = 0; j < d; ++j) {
        std::snprintf(buf, sizeof buf, "%-10.10s", graph.nodes[j].label.c_str());
        out << buf;
        for (const auto& cell : graph.flow_matrix[j]) {
            if (!cell)
                std::snprintf(buf, sizeof buf, "%12s", "-");
            else
                std::snprintf(buf, sizeof buf, "%11.4f%c", cell->T, cell->significant ? '*' : ' ');
            out << buf;
        }
        out << "\n";
    }

    out << "\nNodes\n";
    std::snprintf(buf, sizeof buf, "%-10s%14s%12s%12s%11s\n", "node", "dH*/dt", "stderr", "noise", "self-loop");
    out << buf;
    for (const auto& n : graph.nodes) {
        std::snprintf(buf, sizeof buf, "%-10.10s%14.4f%12.4f%12.4f%11s\n", n.label.c_str(), n.self_influence,
                      n.self_std_error, n.noise_rate, n.is_self_loop ? "yes" : "no");
        out << buf;
    }

    out << "\n";
    header("Normalized flow tau (percent)");
    for (std::size_t j = 0; j < d; ++j) {
        std::snprintf(buf, sizeof buf, "%-10.10s", graph.nodes[j].label.c_str());
        out << buf;
        for (const auto& cell : graph.flow_matrix[j]) {
            if (!cell)
                std::snprintf(buf, sizeof buf, "%12s", "-");
            else
                std::snprintf(buf, sizeof buf, "%11.1f%c", 100.0 * cell->tau, cell->significant ? '*' : ' ');
            out << buf;
        }
        out << "\n";
    }

    std::snprintf(buf, sizeof buf, "\n%zu significant edges at confidence %.2f (N=%lld, dt=%g, k=%d)\n",
                  graph.edges.size(), graph.meta.alpha, static_cast<long long>(graph.meta.N), graph.meta.dt,
                  graph.meta.k);
    out << buf;
    return out.str();
}

}  // namespace infoflow

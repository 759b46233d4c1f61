#include "infoflow/csv.hpp"

#include "infoflow/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace infoflow {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

double parse_cell(std::string_view cell, std::size_t row, std::size_t column) {
    if (cell.empty()) throw ParseError("empty cell", row, column);
    if (cell.front() == '+') cell.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        throw ParseError("non-numeric cell '" + std::string(cell) + "'", row, column);
    if (!std::isfinite(value)) throw ParseError("non-finite value '" + std::string(cell) + "'", row, column);
    return value;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

TimeSeriesPanel read_panel_csv(std::istream& in, double dt) {
    std::string line;
    std::size_t row = 0;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
        ++row;
        if (!trim(line).empty()) break;
    }
    if (trim(line).empty()) throw ParseError("CSV input is empty");
    const auto header = split(line);
    if (header.size() < 2) throw ParseError("header needs a time column and at least one series", row);
    for (std::size_t c = 1; c < header.size(); ++c) labels.emplace_back(header[c]);

    const std::size_t d = labels.size();
    std::vector<std::vector<double>> columns;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        const auto cells = split(line);
        if (cells.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " cells, found " +
                                 std::to_string(cells.size()),
                             row);
        std::vector<double> values(d);
        for (std::size_t c = 1; c < cells.size(); ++c) values[c - 1] = parse_cell(cells[c], row, c + 1);
        columns.push_back(std::move(values));
    }
    if (columns.size() < 2) throw ParseError("CSV needs at least two data rows");

    Eigen::MatrixXd data(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(columns.size()));
    for (std::size_t n = 0; n < columns.size(); ++n)
        for (std::size_t i = 0; i < d; ++i)
            data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n)) = columns[n][i];
    return TimeSeriesPanel(std::move(data), dt, std::move(labels));
}

TimeSeriesPanel read_panel_csv(const std::filesystem::path& path, double dt) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return read_panel_csv(in, dt);
}

void write_panel_csv(std::ostream& out, const TimeSeriesPanel& panel) {
    out << "index";
    for (const auto& label : panel.labels()) out << ',' << label;
    out << '\n';
    const auto& x = panel.data();
    for (Eigen::Index n = 0; n < x.cols(); ++n) {
        out << n;
        for (Eigen::Index i = 0; i < x.rows(); ++i) out << ',' << format_value(x(i, n));
        out << '\n';
    }
}

void write_flow_matrix_csv(std::ostream& out, const CausalGraph& graph) {
    out << "source";
    for (const auto& node : graph.nodes) out << ',' << node.label;
    out << '\n';
    for (std::size_t j = 0; j < graph.nodes.size(); ++j) {
        out << graph.nodes[j].label;
        for (const auto& cell : graph.flow_matrix[j]) {
            out << ',';
            if (cell) out << format_value(cell->T);
        }
        out << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    static constexpr const char* keys[] = {"X_Y", "Y_X", "X_Z", "Z_X", "Y_Z", "Z_Y"};
    out << "epsilon";
    for (const char* k : keys) out << ",abs_T_" << k;
    for (const char* k : keys) out << ",sig_" << k;
    out << ",corr_Y_Z\n";
    for (const auto& row : rows) {
        out << format_value(row.epsilon);
        for (const auto& f : row.flows) out << ',' << format_value(std::fabs(f.T));
        for (const auto& f : row.flows) out << ',' << (f.significant ? 1 : 0);
        out << ',' << format_value(row.sync_correlation) << '\n';
    }
}

}  // namespace infoflow

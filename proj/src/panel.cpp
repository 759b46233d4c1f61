#include "infoflow/panel.hpp"

#include "infoflow/error.hpp"

#include <cmath>

namespace infoflow {

std::vector<std::string> default_labels(Eigen::Index d) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) labels.push_back("X" + std::to_string(i + 1));
    return labels;
}

TimeSeriesPanel::TimeSeriesPanel(Eigen::MatrixXd data, double dt, std::vector<std::string> labels)
    : data_(std::move(data)), dt_(dt), labels_(std::move(labels)) {
    if (data_.rows() < 1) throw InvalidArgument("panel needs at least one series");
    if (data_.cols() < 2) throw InvalidArgument("panel needs at least two time steps");
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) throw InvalidArgument("time step dt must be positive and finite");
    if (labels_.empty()) labels_ = default_labels(data_.rows());
    if (static_cast<Eigen::Index>(labels_.size()) != data_.rows())
        throw InvalidArgument("label count " + std::to_string(labels_.size()) + " does not match " +
                              std::to_string(data_.rows()) + " series");
    for (Eigen::Index i = 0; i < data_.rows(); ++i)
        for (Eigen::Index n = 0; n < data_.cols(); ++n)
            if (!std::isfinite(data_(i, n)))
                throw InvalidArgument("non-finite value in series '" + labels_[static_cast<std::size_t>(i)] +
                                      "' at step " + std::to_string(n));
}

TimeSeriesPanel TimeSeriesPanel::select(const std::vector<Eigen::Index>& rows) const {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), data_.cols());
    std::vector<std::string> names;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] < 0 || rows[r] >= data_.rows())
            throw InvalidArgument("row index " + std::to_string(rows[r]) + " out of range");
        out.row(static_cast<Eigen::Index>(r)) = data_.row(rows[r]);
        names.push_back(labels_[static_cast<std::size_t>(rows[r])]);
    }
    return TimeSeriesPanel(std::move(out), dt_, std::move(names));
}

void TimeSeriesPanel::require_estimable() const {
    if (variables() < 2)
        throw DegenerateInput("causal analysis needs at least 2 series, got " + std::to_string(variables()));
    if (length() < variables() + 3)
        throw DegenerateInput("series length " + std::to_string(length()) + " too short for " +
                              std::to_string(variables()) + " variables (need at least d + 3)");
}

}  // namespace infoflow

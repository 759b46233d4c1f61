#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace infoflow {

/// d equi-spaced series of length N sampled every `dt` time units.
/// Rows are variables, columns are time steps.
///
/// Construction checks shape, finiteness and dt > 0. The stronger
/// requirements of the estimators (d >= 2, N >= d + 3) are checked where
/// they are needed, so single-series panels remain usable for differencing.
class TimeSeriesPanel {
public:
    TimeSeriesPanel(Eigen::MatrixXd data, double dt, std::vector<std::string> labels = {});

    const Eigen::MatrixXd& data() const noexcept { return data_; }
    double dt() const noexcept { return dt_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    Eigen::Index variables() const noexcept { return data_.rows(); }
    Eigen::Index length() const noexcept { return data_.cols(); }

    /// Panel made of the given rows, in the given order.
    TimeSeriesPanel select(const std::vector<Eigen::Index>& rows) const;

    /// Throws DegenerateInput unless d >= 2 and N >= d + 3.
    void require_estimable() const;

    friend bool operator==(const TimeSeriesPanel& a, const TimeSeriesPanel& b) {
        return a.dt_ == b.dt_ && a.labels_ == b.labels_ && a.data_ == b.data_;
    }

private:
    Eigen::MatrixXd data_;
    double dt_;
    std::vector<std::string> labels_;
};

/// Default labels X1..Xd.
std::vector<std::string> default_labels(Eigen::Index d);

}  // namespace infoflow

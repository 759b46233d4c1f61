#pragma once

#include "infoflow/estimator.hpp"
#include "infoflow/panel.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace infoflow {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// X(n+1) = intercept + A X(n) + diag(noise) e(n+1), e ~ N(0, I).
struct VarSpec {
    Eigen::MatrixXd A;
    Eigen::VectorXd intercept;
    Eigen::VectorXd noise;
    Eigen::Index steps = 10000;
    Eigen::Index burn_in = 1000;
    std::uint64_t seed = kDefaultSeed;
};

double spectral_radius(const Eigen::MatrixXd& A);

/// The six-node network with two cycles and a common driver X6.
VarSpec var6_spec(double noise, Eigen::Index steps, std::uint64_t seed = kDefaultSeed);

/// State starts uniform in [0, 1)^d, burn-in steps are discarded and the
/// returned panel has dt = 1. Writes a warning to std::clog when the spectral
/// radius of A is not below 1; throws Divergence if the run blows up.
TimeSeriesPanel simulate_var(const VarSpec& spec);

/// Master oscillator X driving slaves Y and Z through their first component.
struct RosslerSpec {
    std::array<double, 3> omega{1.015, 0.985, 0.95};
    double epsilon = 0.0;
    double dt = 0.001;
    Eigen::Index total_steps = 50000;
    Eigen::Index burn_in = 10000;
    std::uint64_t seed = kDefaultSeed;
};

/// Heun (trapezoidal predictor-corrector) integration from a state drawn
/// uniformly in [0, 1)^9. Returns rows x1 x2 x3 y1 y2 y3 z1 z2 z3 holding the
/// states after steps burn_in + 1 .. total_steps. Throws Divergence when any
/// component exceeds 1e6 in magnitude.
TimeSeriesPanel simulate_rossler(const RosslerSpec& spec);

/// Row indices of x1, y1, z1 in a Rossler panel.
inline constexpr std::array<Eigen::Index, 3> kOscillatorRows{0, 3, 6};

/// The x1, y1, z1 rows of a Rossler panel.
TimeSeriesPanel oscillator_rows(const TimeSeriesPanel& rossler);

double pearson_correlation(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b);

/// Pairwise flows among the three oscillators, in the order
/// X->Y, Y->X, X->Z, Z->X, Y->Z, Z->Y.
inline constexpr std::array<std::pair<int, int>, 6> kOscillatorPairs{
    {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}};
inline constexpr std::array<const char*, 6> kOscillatorPairNames{"X->Y", "Y->X", "X->Z", "Z->X", "Y->Z", "Z->Y"};

struct SweepRow {
    double epsilon = 0.0;
    std::array<FlowEstimate, 6> flows;
    double sync_correlation = 0.0;  // Pearson correlation of y1 and z1
};

struct SweepOptions {
    int stride = 2;
    double confidence = 0.90;
    /// Estimate on all nine state variables and report the x1/y1/z1 flows.
    /// When false only the x1, y1, z1 series enter the regression.
    bool full_state = true;
    bool parallel = false;
};

/// Flows among the three oscillators for a Rossler run.
SweepRow oscillator_flows(const TimeSeriesPanel& rossler, double epsilon, const SweepOptions& options = {});

/// Simulates `base` at each coupling strength (same seed throughout).
std::vector<SweepRow> sweep_epsilon(const RosslerSpec& base, const std::vector<double>& grid,
                                    const SweepOptions& options = {});

/// Evenly spaced grid of `steps` points from `from` to `to` inclusive.
std::vector<double> linear_grid(double from, double to, int steps);

/// Named benchmark configuration.
struct Preset {
    std::string name;
    std::variant<VarSpec, RosslerSpec> spec;
    int stride = 1;  // differencing stride the benchmark is analysed with
};

/// var6-b1, var6-b100, var6-b100-short, rossler.
const std::vector<std::string>& preset_names();

/// Throws InvalidArgument for unknown names. `epsilon` only affects rossler.
Preset find_preset(const std::string& name, std::uint64_t seed = kDefaultSeed, double epsilon = 0.1);

TimeSeriesPanel generate(const Preset& preset);

}  // namespace infoflow

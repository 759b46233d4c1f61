#include "infoflow/simgen.hpp"

#include "infoflow/error.hpp"
#include "infoflow/random.hpp"

#include <cmath>
#include <future>
#include <iostream>

namespace infoflow {

double spectral_radius(const Eigen::MatrixXd& A) {
    const Eigen::EigenSolver<Eigen::MatrixXd> eig(A, false);
    return eig.eigenvalues().cwiseAbs().maxCoeff();
}

VarSpec var6_spec(double noise, Eigen::Index steps, std::uint64_t seed) {
    VarSpec spec;
    spec.A.resize(6, 6);
    // clang-format off
    spec.A <<  0.0, 0.0, -0.6, 0.0, 0.0,  0.0,
              -0.5, 0.0,  0.0, 0.0, 0.0,  0.8,
               0.0, 0.7,  0.0, 0.0, 0.0,  0.0,
               0.0, 0.0,  0.0, 0.7, 0.4,  0.0,
               0.0, 0.0,  0.0, 0.2, 0.0,  0.7,
               0.0, 0.0,  0.0, 0.0, 0.0, -0.5;
    // clang-format on
    spec.intercept.resize(6);
    spec.intercept << 0.1, 0.7, 0.5, 0.2, 0.8, 0.3;
    spec.noise = Eigen::VectorXd::Constant(6, noise);
    spec.steps = steps;
    spec.seed = seed;
    return spec;
}

TimeSeriesPanel simulate_var(const VarSpec& spec) {
    const Eigen::Index d = spec.A.rows();
    if (spec.A.cols() != d || spec.intercept.size() != d || spec.noise.size() != d)
        throw InvalidArgument("VAR spec dimensions disagree");
    if (spec.steps < 2 || spec.burn_in < 0) throw InvalidArgument("VAR spec needs steps >= 2 and burn_in >= 0");

    const double rho = spectral_radius(spec.A);
    if (!(rho < 1.0)) std::clog << "warning: VAR spectral radius " << rho << " >= 1, process is not stationary\n";

    Rng rng(spec.seed);
    Eigen::VectorXd x(d);
    for (Eigen::Index i = 0; i < d; ++i) x(i) = rng.uniform();

    Eigen::MatrixXd out(d, spec.steps);
    Eigen::VectorXd e(d);
    const Eigen::Index total = spec.burn_in + spec.steps;
    for (Eigen::Index n = 0; n < total; ++n) {
        for (Eigen::Index i = 0; i < d; ++i) e(i) = rng.normal();
        x = spec.intercept + spec.A * x + spec.noise.cwiseProduct(e);
        if (!x.allFinite() || x.cwiseAbs().maxCoeff() > 1e150)
            throw Divergence("VAR process diverged at step " + std::to_string(n));
        if (n >= spec.burn_in) out.col(n - spec.burn_in) = x;
    }
    return TimeSeriesPanel(std::move(out), 1.0);
}

namespace {

using State = Eigen::Matrix<double, 9, 1>;

State rossler_rhs(const State& s, const std::array<double, 3>& omega, double epsilon) {
    State out;
    for (int o = 0; o < 3; ++o) {
        const int b = 3 * o;
        out(b) = -omega[o] * s(b + 1) - s(b + 2);
        out(b + 1) = omega[o] * s(b) + 0.15 * s(b + 1);
        out(b + 2) = 0.2 + s(b + 2) * (s(b) - 10.0);
    }
    out(3) += epsilon * (s(0) - s(3));
    out(6) += epsilon * (s(0) - s(6));
    return out;
}

}  // namespace

TimeSeriesPanel simulate_rossler(const RosslerSpec& spec) {
    if (!(spec.dt > 0.0)) throw InvalidArgument("Rossler time step must be positive");
    if (spec.burn_in < 0 || spec.burn_in >= spec.total_steps)
        throw InvalidArgument("Rossler spec needs 0 <= burn_in < total_steps");

    Rng rng(spec.seed);
    State s;
    for (int i = 0; i < 9; ++i) s(i) = rng.uniform();

    Eigen::MatrixXd out(9, spec.total_steps - spec.burn_in);
    const double h = spec.dt;
    for (Eigen::Index n = 1; n <= spec.total_steps; ++n) {
        const State k1 = rossler_rhs(s, spec.omega, spec.epsilon);
        const State k2 = rossler_rhs(s + h * k1, spec.omega, spec.epsilon);
        s += 0.5 * h * (k1 + k2);
        if (!s.allFinite() || s.cwiseAbs().maxCoeff() > 1e6)
            throw Divergence("Rossler trajectory diverged at step " + std::to_string(n));
        if (n > spec.burn_in) out.col(n - spec.burn_in - 1) = s;
    }
    return TimeSeriesPanel(std::move(out), spec.dt, {"x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"});
}

TimeSeriesPanel oscillator_rows(const TimeSeriesPanel& rossler) {
    if (rossler.variables() != 9) throw InvalidArgument("expected a 9-variable Rossler panel");
    return rossler.select({kOscillatorRows.begin(), kOscillatorRows.end()});
}

double pearson_correlation(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b) {
    if (a.size() != b.size() || a.size() < 2) throw InvalidArgument("correlation needs two equal-length series");
    const Eigen::VectorXd ac = a.array() - a.mean();
    const Eigen::VectorXd bc = b.array() - b.mean();
    return ac.dot(bc) / std::sqrt(ac.squaredNorm() * bc.squaredNorm());
}

SweepRow oscillator_flows(const TimeSeriesPanel& rossler, double epsilon, const SweepOptions& options) {
    AnalysisOptions analysis;
    analysis.stride = options.stride;
    analysis.confidence = options.confidence;

    if (options.full_state && rossler.variables() != 9)
        throw InvalidArgument("full-state analysis needs the 9-variable Rossler panel");
    const TimeSeriesPanel observed =
        options.full_state || rossler.variables() != 9 ? rossler : oscillator_rows(rossler);
    if (observed.variables() != 9 && observed.variables() != 3)
        throw InvalidArgument("expected a Rossler panel with 9 or 3 rows");
    const std::array<Eigen::Index, 3> index =
        observed.variables() == 9 ? kOscillatorRows : std::array<Eigen::Index, 3>{0, 1, 2};

    const FlowMatrix matrix = compute_flow_matrix(observed, analysis);
    SweepRow row;
    row.epsilon = epsilon;
    for (std::size_t p = 0; p < kOscillatorPairs.size(); ++p) {
        const auto [from, to] = kOscillatorPairs[p];
        row.flows[p] = matrix.flow(index[static_cast<std::size_t>(from)], index[static_cast<std::size_t>(to)]);
    }
    row.sync_correlation =
        pearson_correlation(observed.data().row(index[1]).transpose(), observed.data().row(index[2]).transpose());
    return row;
}

std::vector<SweepRow> sweep_epsilon(const RosslerSpec& base, const std::vector<double>& grid,
                                    const SweepOptions& options) {
    auto run = [&base, &options](double eps) {
        RosslerSpec spec = base;
        spec.epsilon = eps;
        return oscillator_flows(simulate_rossler(spec), eps, options);
    };
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    if (options.parallel) {
        std::vector<std::future<SweepRow>> jobs;
        for (double eps : grid) jobs.push_back(std::async(std::launch::async, run, eps));
        for (auto& job : jobs) rows.push_back(job.get());
    } else {
        for (double eps : grid) rows.push_back(run(eps));
    }
    return rows;
}

std::vector<double> linear_grid(double from, double to, int steps) {
    if (steps < 1) throw InvalidArgument("grid needs at least one point");
    if (steps == 1) return {from};
    std::vector<double> grid;
    for (int s = 0; s < steps; ++s) grid.push_back(from + (to - from) * s / (steps - 1));
    return grid;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"var6-b1", "var6-b100", "var6-b100-short", "rossler"};
    return names;
}

Preset find_preset(const std::string& name, std::uint64_t seed, double epsilon) {
    if (name == "var6-b1") return {name, var6_spec(1.0, 10000, seed), 1};
    if (name == "var6-b100") return {name, var6_spec(100.0, 10000, seed), 1};
    if (name == "var6-b100-short") return {name, var6_spec(100.0, 500, seed), 1};
    if (name == "rossler") {
        RosslerSpec spec;
        spec.epsilon = epsilon;
        spec.seed = seed;
        return {name, spec, 2};
    }
    std::string known;
    for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw InvalidArgument("unknown preset '" + name + "' (known: " + known + ")");
}

TimeSeriesPanel generate(const Preset& preset) {
    return std::visit(
        [](const auto& spec) {
            if constexpr (std::is_same_v<std::decay_t<decltype(spec)>, VarSpec>)
                return simulate_var(spec);
            else
                return simulate_rossler(spec);
        },
        preset.spec);
}

}  // namespace infoflow

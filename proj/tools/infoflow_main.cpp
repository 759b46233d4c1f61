// infoflow: information-flow causal graph reconstruction from time series.
//
//   infoflow analyze  (--csv PATH | --preset NAME) [--dt F] [--k 1|2] [--alpha F]
//                     [--format json|dot|csv-matrix] [--out PATH] [--seed U64]
//                     [--ridge F] [--epsilon F]
//   infoflow generate NAME [--seed U64] [--epsilon F] [--out PATH]
//   infoflow sweep    [--from F] [--to F] [--steps N] [--out PATH] [--seed U64]
//
// Exit status: 0 success, 2 parse error, 3 singular covariance or Fisher
// information, 4 divergence, 5 degenerate input, 6 I/O error, 7 invalid
// argument, 64 usage error, 1 anything else.

#include "infoflow/csv.hpp"
#include "infoflow/error.hpp"
#include "infoflow/graph.hpp"
#include "infoflow/simgen.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace infoflow;

enum ExitCode : int {
    kOk = 0,
    kOther = 1,
    kParse = 2,
    kSingular = 3,
    kDivergence = 4,
    kDegenerate = 5,
    kIo = 6,
    kInvalid = 7,
    kUsage = 64,
};

struct AnalyzeConfig {
    std::string csv;
    std::string preset;
    double dt = 1.0;
    std::optional<int> k;
    bool any_k = false;
    double alpha = 0.90;
    std::string format = "json";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    double ridge = 0.0;
    double epsilon = 0.1;
    bool quiet = false;
};

struct GenerateConfig {
    std::string preset;
    std::uint64_t seed = kDefaultSeed;
    double epsilon = 0.1;
    std::string out;
};

struct SweepConfig {
    double from = 0.0;
    double to = 0.3;
    int steps = 13;
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    int k = 2;
    double alpha = 0.90;
    bool observed_only = false;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << text;
    if (!file) throw IoError("failed writing '" + path + "'");
}

int run_analyze(const AnalyzeConfig& cfg) {
    std::optional<TimeSeriesPanel> panel;
    int k = cfg.k.value_or(1);
    if (!cfg.preset.empty()) {
        const Preset preset = find_preset(cfg.preset, cfg.seed, cfg.epsilon);
        panel = generate(preset);
        k = cfg.k.value_or(preset.stride);
    } else {
        panel = read_panel_csv(std::filesystem::path(cfg.csv), cfg.dt);
    }
    if (!cfg.any_k && k != 1 && k != 2) throw InvalidArgument("--k must be 1 or 2 (pass --any-k to override)");

    FitOptions fit;
    fit.ridge = cfg.ridge;
    const CausalGraph graph = reconstruct(*panel, cfg.alpha, k, fit, /*parallel=*/true);

    std::string artifact;
    if (cfg.format == "json") {
        artifact = to_json(graph);
    } else if (cfg.format == "dot") {
        artifact = to_dot(graph);
    } else {
        std::ostringstream os;
        write_flow_matrix_csv(os, graph);
        artifact = os.str();
    }

    const bool to_stdout = cfg.out.empty() || cfg.out == "-";
    if (!cfg.quiet) (to_stdout ? std::cerr : std::cout) << summary_table(graph);
    emit(cfg.out, artifact);
    return kOk;
}

int run_generate(const GenerateConfig& cfg) {
    const TimeSeriesPanel panel = generate(find_preset(cfg.preset, cfg.seed, cfg.epsilon));
    std::ostringstream os;
    write_panel_csv(os, panel);
    emit(cfg.out, os.str());
    return kOk;
}

int run_sweep(const SweepConfig& cfg) {
    RosslerSpec base;
    base.seed = cfg.seed;
    SweepOptions options;
    options.stride = cfg.k;
    options.confidence = cfg.alpha;
    options.full_state = !cfg.observed_only;
    options.parallel = true;
    const auto rows = sweep_epsilon(base, linear_grid(cfg.from, cfg.to, cfg.steps), options);
    std::ostringstream os;
    write_sweep_csv(os, rows);
    emit(cfg.out, os.str());
    return kOk;
}

template <class F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const SingularCovariance& e) {
        std::cerr << "singular covariance: " << e.what() << '\n';
        return kSingular;
    } catch (const SingularInformation& e) {
        std::cerr << "singular Fisher information: " << e.what() << '\n';
        return kSingular;
    } catch (const Divergence& e) {
        std::cerr << "divergence: " << e.what() << '\n';
        return kDivergence;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << '\n';
        return kDegenerate;
    } catch (const DegenerateNormalizer& e) {
        std::cerr << "degenerate input: " << e.what() << '\n';
        return kDegenerate;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOther;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information-flow causal graph reconstruction from multivariate time series"};
    app.require_subcommand(1);

    AnalyzeConfig analyze;
    auto* cmd_analyze = app.add_subcommand("analyze", "Estimate flows and reconstruct the causal graph");
    auto* opt_csv = cmd_analyze->add_option("--csv", analyze.csv, "Input CSV (header row, first column time index)");
    auto* opt_preset = cmd_analyze->add_option("--preset", analyze.preset, "Benchmark preset to generate and analyse");
    opt_csv->excludes(opt_preset);
    opt_preset->excludes(opt_csv);
    cmd_analyze->add_option("--dt", analyze.dt, "Sampling interval of CSV input")->check(CLI::PositiveNumber);
    cmd_analyze->add_option("--k", analyze.k, "Differencing stride (default 1; preset value for presets)");
    cmd_analyze->add_flag("--any-k", analyze.any_k, "Allow strides other than 1 and 2");
    cmd_analyze->add_option("--alpha", analyze.alpha, "Confidence level")->check(CLI::Range(0.0, 1.0));
    cmd_analyze->add_option("--format", analyze.format, "Artifact format")
        ->check(CLI::IsMember({"json", "dot", "csv-matrix"}));
    cmd_analyze->add_option("--out", analyze.out, "Artifact path (default stdout)");
    cmd_analyze->add_option("--seed", analyze.seed, "Seed for preset generation");
    cmd_analyze->add_option("--ridge", analyze.ridge, "Ridge added to the covariance diagonal")
        ->check(CLI::NonNegativeNumber);
    cmd_analyze->add_option("--epsilon", analyze.epsilon, "Coupling strength (rossler preset only)");
    cmd_analyze->add_flag("--quiet", analyze.quiet, "Do not print the summary table");

    GenerateConfig gen;
    auto* cmd_generate = app.add_subcommand("generate", "Write a benchmark panel as CSV");
    cmd_generate->add_option("preset", gen.preset, "Preset name")->required();
    cmd_generate->add_option("--seed", gen.seed, "Random seed");
    cmd_generate->add_option("--epsilon", gen.epsilon, "Coupling strength (rossler only)");
    cmd_generate->add_option("--out", gen.out, "Output CSV path (default stdout)");

    SweepConfig sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "Rossler coupling sweep table");
    cmd_sweep->add_option("--from", sweep.from, "First coupling strength");
    cmd_sweep->add_option("--to", sweep.to, "Last coupling strength");
    cmd_sweep->add_option("--steps", sweep.steps, "Number of grid points")->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--out", sweep.out, "Output CSV path (default stdout)");
    cmd_sweep->add_option("--seed", sweep.seed, "Seed for initial conditions");
    cmd_sweep->add_option("--k", sweep.k, "Differencing stride");
    cmd_sweep->add_option("--alpha", sweep.alpha, "Confidence level")->check(CLI::Range(0.0, 1.0));
    cmd_sweep->add_flag("--observed-only", sweep.observed_only,
                        "Regress on x1, y1, z1 only instead of the full 9-variable state");

    try {
        app.parse(argc, argv);
        if (cmd_analyze->parsed() && analyze.csv.empty() && analyze.preset.empty())
            throw CLI::RequiredError("one of --csv or --preset");
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (cmd_analyze->parsed()) return guarded([&] { return run_analyze(analyze); });
    if (cmd_generate->parsed()) return guarded([&] { return run_generate(gen); });
    return guarded([&] { return run_sweep(sweep); });
}

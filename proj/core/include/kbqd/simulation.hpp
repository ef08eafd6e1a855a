#pragma once

#include "kbqd/resampling.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace kbqd {

/// One simulation setting: k groups of dimension d, a null generator, an
/// alternative generator swept over `grid` for the last group, and the
/// statistics/resampling configuration. See the README for the generator
/// keys and the config-file syntax.
struct ScenarioConfig {
    std::string name = "scenario";
    int k = 2;
    int d = 1;
    std::vector<int> sizes;
    std::string null_gen = "normal";
    std::string alt_gen = "none";
    std::string alt_param_name = "delta";
    std::vector<double> grid = {0.0};
    std::vector<double> h_values = {1.0};
    bool h_auto = false;
    ResamplingPlan plan;
    int N = 100;
    std::vector<std::string> statistics = {"tn"};
    bool timing = false; // when off, runtime columns are written as 0

    void validate() const;
};

struct ScenarioRow {
    std::string scenario;
    std::string statistic;
    std::string method;
    int d = 0;
    int n = 0; // pooled size
    int k = 0;
    double h = 0.0;
    double alt_param = 0.0;
    double rejection_rate = 0.0;
    double mean_runtime_seconds = 0.0;
    int N = 0;
    int B = 0;
    std::uint64_t seed = 0;

    bool operator==(const ScenarioRow&) const = default;
};

using ScenarioResult = std::vector<ScenarioRow>;

/// Runs the scenario: per grid point and repetition, k-1 samples from the
/// null generator and the last from the alternative, all requested tests,
/// rejection rates aggregated over the N repetitions.
ScenarioResult run_scenario(const ScenarioConfig& config);

/// Wall-clock benchmark of the full test over (d, n-per-group, B, method)
/// grids on two-sample standard-normal data; one warm-up run per setting is
/// discarded and the mean of `reps` timed runs is reported.
ScenarioResult run_timing_benchmark(const std::vector<int>& d_grid, const std::vector<int>& n_grid,
                                    const std::vector<int>& B_grid,
                                    const std::vector<ResamplingMethod>& methods, int reps,
                                    std::uint64_t seed);

void write_scenario_csv(std::ostream& out, const ScenarioResult& rows);
ScenarioResult read_scenario_csv(std::istream& in);

/// Parses the flat key = value scenario description.
ScenarioConfig parse_scenario_config(std::istream& in);
ScenarioConfig load_scenario_config(const std::string& path);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

} // namespace kbqd

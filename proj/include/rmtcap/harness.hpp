// SPDX-License-Identifier: Apache-2.0
//
// rmtcap - capacity estimation for clustered ultra-dense wireless networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RMTCAP_HARNESS_HPP
#define RMTCAP_HARNESS_HPP

#include "rmtcap/baseline.hpp"
#include "rmtcap/channel.hpp"
#include "rmtcap/mpm.hpp"
#include "rmtcap/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rmtcap
{

enum class ScenarioMode
{
    full_network, // M clusters over the region, measure the central cluster
    direct        // one cluster with exactly the requested counts
};

struct ExperimentConfig
{
    RegionShape shape = RegionShape::square;
    double D = 2000.0;
    Distribution dist = Distribution::uniform;
    int M = 25;
    int bs = 200;      // J_m target: per-cluster in full mode, total in direct mode
    double beta = 2.0; // users-to-BSs ratio, K = beta * J
    int users = -1;    // explicit user count, overrides beta when >= 0
    bool run_mpm = true;
    bool run_cdm = true;
    int trials = 20;
    double eta = 4e-3;
    int moments = 3; // polynomial order N
    std::uint64_t seed = 1;
    double log_base = 0.0; // 0 = natural log
    FadingParams fading;
    ScenarioMode mode = ScenarioMode::full_network;
    double trunc_sigma = -1.0; // truncated-normal std dev, default D/4
    int ext_interferers = 0;   // direct mode: interfering users on a ring outside the region
    int threads = 0;           // 0 = auto; RMTCAP_THREADS overrides
    bool record_timing = true; // false writes 0 wall times for byte-stable reports
    int power_iters = 15;
    int quad_nodes = 256;

    std::string out;            // report path, empty = stdout summary only
    std::string format = "csv"; // report format: csv or json
    std::vector<int> sizes;     // timing-sweep sizes
    std::vector<double> etas;   // eta-sweep grid
    std::string tag_suffix;     // appended to the scenario tag, e.g. "eta=0.004"

    std::string scenario_tag() const;
};

struct ReportRow
{
    std::string scenario;
    int J_m = 0;
    int K_m = 0;
    double beta = 0.0;
    std::string method;
    int trial = 0;
    double capacity = 0.0;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
    double neg_density_frac = 0.0;
    double fit_residual = 0.0;
};

struct ExperimentResult
{
    std::vector<ReportRow> rows;
    std::optional<CapacityEstimate> mpm;
    std::optional<CapacityEstimate> cdm;
    int J_m = 0;
    int K_m = 0;
    double beta_m = 0.0;
};

// Build the scenario (sample, cluster, pick the central cluster in full
// mode), run the requested methods with paired per-trial streams, and emit
// one row per (method, trial). Throws when the measured cluster has no BSs
// or no users.
ExperimentResult run_experiment(const ExperimentConfig &config);

// Scenario plumbing shared by the runner and the CLI.
ChannelProfile build_scenario_profile(const ExperimentConfig &config,
                                      int *out_J_m = nullptr, int *out_K_m = nullptr);

struct TimingEntry
{
    int size = 0;
    std::string method;
    double median_time_s = 0.0;
    int reps = 0;
};

// Median single-trial wall time per size and method, single-threaded,
// direct-mode scenarios. Requires at least 4 sizes spanning an 8x range.
std::vector<TimingEntry> sweep_sizes(const ExperimentConfig &config,
                                     const std::vector<int> &sizes, int reps = 3);

// Least-squares slope of log(time) against log(size).
double fit_complexity_slope(const std::vector<double> &sizes,
                            const std::vector<double> &times);

enum class ReportFormat
{
    csv,
    json
};

std::string rows_to_csv(const std::vector<ReportRow> &rows);
std::string rows_to_json(const std::vector<ReportRow> &rows);
std::string timing_to_csv(const std::vector<TimingEntry> &entries);

void emit_report(const std::vector<ReportRow> &rows, ReportFormat format,
                 const std::string &path);

// Flat key=value configuration with the same keys as the CLI flags.
void apply_config_entry(ExperimentConfig &config, const std::string &key,
                        const std::string &value);
void load_config_file(ExperimentConfig &config, const std::string &path);

std::vector<int> parse_int_list(const std::string &text);
std::vector<double> parse_double_list(const std::string &text);

// Worker count: RMTCAP_THREADS overrides `requested`; 0 means auto.
int resolve_threads(int requested);

// Monte-Carlo moment oracle: averages of (1/p) tr((Q o G)(Q o G)^H)^j for
// j = 1..3 over `draws` realizations, computed by direct Gram products,
// independent of the closed-form moment path.
std::vector<double> moment_mc_oracle(const RealMatrix &Q, int draws, RngStream &rng);

} // namespace rmtcap

#endif

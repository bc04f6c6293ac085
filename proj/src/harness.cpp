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

#include "rmtcap/harness.hpp"

#include "rmtcap/numkernel.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rmtcap
{

namespace
{

constexpr std::uint64_t STREAM_EXT_RING = 4;
constexpr std::uint64_t STREAM_TRIALS = 8;

std::string fmt_double(double v)
{
    char buf[48];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double median_of(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string trim(const std::string &s)
{
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double_value(const std::string &key, const std::string &value)
{
    try
    {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    }
    catch (const std::exception &)
    {
        throw std::invalid_argument("config key '" + key + "': bad numeric value '" + value + "'");
    }
}

long long parse_int_value(const std::string &key, const std::string &value)
{
    try
    {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    }
    catch (const std::exception &)
    {
        throw std::invalid_argument("config key '" + key + "': bad integer value '" + value + "'");
    }
}

bool parse_bool_value(const std::string &key, const std::string &value)
{
    if (value == "1" || value == "true" || value == "yes" || value == "on")
        return true;
    if (value == "0" || value == "false" || value == "no" || value == "off")
        return false;
    throw std::invalid_argument("config key '" + key + "': bad boolean value '" + value + "'");
}

void append_method_rows(std::vector<ReportRow> &rows, const ExperimentConfig &config,
                        const ChannelProfile &profile, const CapacityEstimate &est,
                        double log_conv)
{
    for (int t = 0; t < est.trials; ++t)
    {
        ReportRow row;
        row.scenario = config.scenario_tag();
        row.J_m = int(profile.J_m);
        row.K_m = int(profile.K_m);
        row.beta = profile.beta;
        row.method = est.method;
        row.trial = t;
        row.capacity = est.per_trial[t] * log_conv;
        row.wall_time_s = config.record_timing ? est.per_trial_time_s[t] : 0.0;
        row.seed = config.seed;
        row.neg_density_frac = est.diagnostics[t].neg_density_frac;
        row.fit_residual = est.diagnostics[t].fit_residual;
        rows.push_back(std::move(row));
    }
}

} // namespace

std::string ExperimentConfig::scenario_tag() const
{
    std::string tag = shape == RegionShape::square ? "square" : "circle";
    tag += dist == Distribution::uniform ? "-uniform" : "-normal";
    if (mode == ScenarioMode::direct)
        tag += "-direct";
    if (!tag_suffix.empty())
        tag += ";" + tag_suffix;
    return tag;
}

ChannelProfile build_scenario_profile(const ExperimentConfig &config, int *out_J_m, int *out_K_m)
{
    if (config.bs < 1)
        throw std::invalid_argument("build_scenario_profile: bs must be >= 1");
    if (config.M < 1)
        throw std::invalid_argument("build_scenario_profile: M must be >= 1");
    if (config.users < 0 && config.beta < 0.0)
        throw std::invalid_argument("build_scenario_profile: need users >= 0 or beta >= 0");

    Region region{config.shape, config.D, {0.0, 0.0}};
    ChannelProfile profile;

    if (config.mode == ScenarioMode::full_network)
    {
        const std::size_t J = std::size_t(config.M) * std::size_t(config.bs);
        const std::size_t K = config.users >= 0 ? std::size_t(config.users)
                                                : std::size_t(std::llround(config.beta * double(J)));
        NodeSet nodes = sample_nodes(region, J, K, config.dist, config.seed, config.trunc_sigma);
        ClusterAssignment assignment = cluster_network(nodes, config.M, config.seed);
        int central = central_cluster(assignment, region);
        profile = cluster_profile(nodes, assignment, central, config.fading);
    }
    else
    {
        const std::size_t J = std::size_t(config.bs);
        const std::size_t K = config.users >= 0 ? std::size_t(config.users)
                                                : std::size_t(std::llround(config.beta * double(J)));
        NodeSet nodes = sample_nodes(region, J, K, config.dist, config.seed, config.trunc_sigma);
        std::vector<Point> ring;
        if (config.ext_interferers > 0)
        {
            // interfering users on an annulus just outside the region
            RngStream rng(config.seed, STREAM_EXT_RING);
            const double r1 = 0.5 * config.D, r2 = config.D;
            for (int i = 0; i < config.ext_interferers; ++i)
            {
                double r = std::sqrt(rng.uniform() * (r2 * r2 - r1 * r1) + r1 * r1);
                double phi = 2.0 * M_PI * rng.uniform();
                ring.push_back({r * std::cos(phi), r * std::sin(phi)});
            }
        }
        profile = direct_profile(nodes, ring, config.fading);
    }

    if (out_J_m)
        *out_J_m = int(profile.J_m);
    if (out_K_m)
        *out_K_m = int(profile.K_m);
    return profile;
}

ExperimentResult run_experiment(const ExperimentConfig &config)
{
    if (config.trials < 1)
        throw std::invalid_argument("run_experiment: trials must be >= 1");

    ExperimentResult result;
    ChannelProfile profile = build_scenario_profile(config, &result.J_m, &result.K_m);
    result.beta_m = profile.beta;

    if (profile.J_m == 0)
    {
        std::ostringstream msg;
        msg << "run_experiment: degenerate scenario, central cluster has no base stations (seed "
            << config.seed << ")";
        throw std::runtime_error(msg.str());
    }
    if (profile.K_m == 0)
    {
        std::ostringstream msg;
        msg << "run_experiment: degenerate scenario, central cluster has no users (seed "
            << config.seed << ")";
        throw std::runtime_error(msg.str());
    }

    const int threads = resolve_threads(config.threads);
    const double log_conv = config.log_base > 0.0 ? 1.0 / std::log(config.log_base) : 1.0;
    const RngStream trial_base(config.seed, STREAM_TRIALS);

    if (config.run_mpm)
    {
        MpmOptions opt;
        opt.eta = config.eta;
        opt.order = config.moments;
        opt.trials = config.trials;
        opt.power_iters = config.power_iters;
        opt.quad_nodes = config.quad_nodes;
        opt.threads = threads;
        result.mpm = estimate_capacity_mpm(profile, opt, trial_base);
        append_method_rows(result.rows, config, profile, *result.mpm, log_conv);
    }
    if (config.run_cdm)
    {
        CdmOptions opt;
        opt.trials = config.trials;
        opt.threads = threads;
        result.cdm = estimate_capacity_cdm(profile, opt, trial_base);
        append_method_rows(result.rows, config, profile, *result.cdm, log_conv);
    }
    return result;
}

std::vector<TimingEntry> sweep_sizes(const ExperimentConfig &config,
                                     const std::vector<int> &sizes, int reps)
{
    if (sizes.size() < 4)
        throw std::invalid_argument("sweep_sizes: need at least 4 sizes");
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    if (*lo < 1 || double(*hi) / double(*lo) < 8.0)
        throw std::invalid_argument("sweep_sizes: sizes must span at least an 8x range");
    if (reps < 1)
        throw std::invalid_argument("sweep_sizes: reps must be >= 1");

    std::vector<TimingEntry> table;
    for (std::size_t idx = 0; idx < sizes.size(); ++idx)
    {
        ExperimentConfig cfg = config;
        cfg.mode = ScenarioMode::direct;
        cfg.bs = sizes[idx];
        cfg.users = -1;
        cfg.seed = config.seed + idx; // fresh layout per size, still reproducible
        ChannelProfile profile = build_scenario_profile(cfg);

        const RngStream base(cfg.seed, STREAM_TRIALS);
        if (config.run_mpm)
        {
            std::vector<double> times;
            for (int r = 0; r < reps; ++r)
            {
                MpmOptions opt;
                opt.eta = cfg.eta;
                opt.order = cfg.moments;
                opt.trials = 1;
                opt.power_iters = cfg.power_iters;
                opt.quad_nodes = cfg.quad_nodes;
                opt.threads = 1; // timing reflects algorithmic cost, not core count
                times.push_back(estimate_capacity_mpm(profile, opt, base.substream(r)).wall_time_s);
            }
            table.push_back({sizes[idx], "mpm", median_of(times), reps});
        }
        if (config.run_cdm)
        {
            std::vector<double> times;
            for (int r = 0; r < reps; ++r)
            {
                CdmOptions opt;
                opt.trials = 1;
                opt.threads = 1;
                times.push_back(estimate_capacity_cdm(profile, opt, base.substream(r)).wall_time_s);
            }
            table.push_back({sizes[idx], "cdm", median_of(times), reps});
        }
    }
    return table;
}

double fit_complexity_slope(const std::vector<double> &sizes, const std::vector<double> &times)
{
    if (sizes.size() != times.size())
        throw std::invalid_argument("fit_complexity_slope: length mismatch");
    if (sizes.size() < 2)
        throw std::invalid_argument("fit_complexity_slope: need at least 2 points");
    const std::size_t n = sizes.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        if (!(sizes[i] > 0.0) || !(times[i] > 0.0))
            throw std::invalid_argument("fit_complexity_slope: sizes and times must be positive");
        lx[i] = std::log(sizes[i]);
        ly[i] = std::log(times[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        mx += lx[i];
        my += ly[i];
    }
    mx /= double(n);
    my /= double(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    if (den == 0.0)
        throw std::invalid_argument("fit_complexity_slope: all sizes identical");
    return num / den;
}

std::string rows_to_csv(const std::vector<ReportRow> &rows)
{
    std::string out = "scenario,J_m,K_m,beta,method,trial,capacity,wall_time_s,seed,"
                      "neg_density_frac,fit_residual\n";
    for (const auto &r : rows)
    {
        out += r.scenario;
        out += ',';
        out += std::to_string(r.J_m);
        out += ',';
        out += std::to_string(r.K_m);
        out += ',';
        out += fmt_double(r.beta);
        out += ',';
        out += r.method;
        out += ',';
        out += std::to_string(r.trial);
        out += ',';
        out += fmt_double(r.capacity);
        out += ',';
        out += fmt_double(r.wall_time_s);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        out += fmt_double(r.neg_density_frac);
        out += ',';
        out += fmt_double(r.fit_residual);
        out += '\n';
    }
    return out;
}

std::string rows_to_json(const std::vector<ReportRow> &rows)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : rows)
    {
        nlohmann::ordered_json obj;
        obj["scenario"] = r.scenario;
        obj["J_m"] = r.J_m;
        obj["K_m"] = r.K_m;
        obj["beta"] = r.beta;
        obj["method"] = r.method;
        obj["trial"] = r.trial;
        obj["capacity"] = r.capacity;
        obj["wall_time_s"] = r.wall_time_s;
        obj["seed"] = r.seed;
        obj["neg_density_frac"] = r.neg_density_frac;
        obj["fit_residual"] = r.fit_residual;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string timing_to_csv(const std::vector<TimingEntry> &entries)
{
    std::string out = "size,method,median_wall_time_s,reps\n";
    for (const auto &e : entries)
    {
        out += std::to_string(e.size);
        out += ',';
        out += e.method;
        out += ',';
        out += fmt_double(e.median_time_s);
        out += ',';
        out += std::to_string(e.reps);
        out += '\n';
    }
    return out;
}

void emit_report(const std::vector<ReportRow> &rows, ReportFormat format, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("emit_report: cannot open '" + path + "' for writing");
    out << (format == ReportFormat::csv ? rows_to_csv(rows) : rows_to_json(rows));
    if (!out)
        throw std::runtime_error("emit_report: write failed for '" + path + "'");
}

void apply_config_entry(ExperimentConfig &config, const std::string &key, const std::string &value)
{
    if (key == "shape")
    {
        if (value == "square")
            config.shape = RegionShape::square;
        else if (value == "circle")
            config.shape = RegionShape::circle;
        else
            throw std::invalid_argument("config key 'shape': expected square or circle");
    }
    else if (key == "dist")
    {
        if (value == "uniform")
            config.dist = Distribution::uniform;
        else if (value == "normal" || value == "truncated_normal")
            config.dist = Distribution::truncated_normal;
        else
            throw std::invalid_argument("config key 'dist': expected uniform or normal");
    }
    else if (key == "D")
        config.D = parse_double_value(key, value);
    else if (key == "M")
        config.M = int(parse_int_value(key, value));
    else if (key == "bs")
        config.bs = int(parse_int_value(key, value));
    else if (key == "users")
        config.users = int(parse_int_value(key, value));
    else if (key == "beta")
        config.beta = parse_double_value(key, value);
    else if (key == "methods")
    {
        config.run_mpm = value.find("mpm") != std::string::npos;
        config.run_cdm = value.find("cdm") != std::string::npos;
        if (!config.run_mpm && !config.run_cdm)
            throw std::invalid_argument("config key 'methods': expected mpm, cdm or mpm,cdm");
    }
    else if (key == "trials")
        config.trials = int(parse_int_value(key, value));
    else if (key == "eta")
        config.eta = parse_double_value(key, value);
    else if (key == "moments")
        config.moments = int(parse_int_value(key, value));
    else if (key == "seed")
        config.seed = std::uint64_t(parse_int_value(key, value));
    else if (key == "log-base")
    {
        if (value == "e" || value == "natural")
            config.log_base = 0.0;
        else
            config.log_base = parse_double_value(key, value);
    }
    else if (key == "mode")
    {
        if (value == "full")
            config.mode = ScenarioMode::full_network;
        else if (value == "direct")
            config.mode = ScenarioMode::direct;
        else
            throw std::invalid_argument("config key 'mode': expected full or direct");
    }
    else if (key == "trunc-sigma")
        config.trunc_sigma = parse_double_value(key, value);
    else if (key == "ext-interferers")
        config.ext_interferers = int(parse_int_value(key, value));
    else if (key == "threads")
        config.threads = int(parse_int_value(key, value));
    else if (key == "record-timing")
        config.record_timing = parse_bool_value(key, value);
    else if (key == "power-iters")
        config.power_iters = int(parse_int_value(key, value));
    else if (key == "quad-nodes")
        config.quad_nodes = int(parse_int_value(key, value));
    else if (key == "d0")
        config.fading.d0 = parse_double_value(key, value);
    else if (key == "d1")
        config.fading.d1 = parse_double_value(key, value);
    else if (key == "P")
        config.fading.P = parse_double_value(key, value);
    else if (key == "N0")
        config.fading.N0 = parse_double_value(key, value);
    else if (key == "out")
        config.out = value;
    else if (key == "format")
    {
        if (value != "csv" && value != "json")
            throw std::invalid_argument("config key 'format': expected csv or json");
        config.format = value;
    }
    else if (key == "sizes")
        config.sizes = parse_int_list(value);
    else if (key == "etas")
        config.etas = parse_double_list(value);
    else
        throw std::invalid_argument("unknown config key: '" + key + "'");
}

void load_config_file(ExperimentConfig &config, const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#')
            continue;
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file '" + path + "' line " +
                                        std::to_string(lineno) + ": expected key=value");
        apply_config_entry(config, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
}

std::vector<int> parse_int_list(const std::string &text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (item.empty())
            continue;
        out.push_back(int(parse_int_value("list", item)));
    }
    return out;
}

std::vector<double> parse_double_list(const std::string &text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (item.empty())
            continue;
        out.push_back(parse_double_value("list", item));
    }
    return out;
}

int resolve_threads(int requested)
{
    int value = requested;
    if (const char *env = std::getenv("RMTCAP_THREADS"); env && *env)
    {
        try
        {
            value = std::stoi(env);
        }
        catch (const std::exception &)
        {
            value = requested;
        }
    }
    if (value <= 0)
    {
        unsigned hw = std::thread::hardware_concurrency();
        value = hw > 0 ? int(hw) : 1;
    }
    return value;
}

std::vector<double> moment_mc_oracle(const RealMatrix &Q, int draws, RngStream &rng)
{
    if (draws < 1)
        throw std::invalid_argument("moment_mc_oracle: draws must be >= 1");
    const std::size_t p = Q.rows, n = Q.cols;
    if (p == 0 || n == 0)
        throw std::invalid_argument("moment_mc_oracle: empty profile");

    // Work with the smaller Gram matrix; traces of powers are identical.
    const bool use_rows = p <= n;
    const std::size_t m = use_rows ? p : n;

    std::vector<double> acc(3, 0.0);
    ComplexMatrix gram(m, m), sq(m, m);
    for (int d = 0; d < draws; ++d)
    {
        ComplexMatrix G = sample_complex_gaussian(rng, p, n);
        ComplexMatrix B = gain_realization(Q, G);

        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
            {
                cxdouble s(0.0, 0.0);
                if (use_rows)
                {
                    const cxdouble *bi = B.row(i), *bj = B.row(j);
                    for (std::size_t k = 0; k < n; ++k)
                        s += bi[k] * std::conj(bj[k]);
                }
                else
                {
                    for (std::size_t k = 0; k < p; ++k)
                        s += std::conj(B(k, i)) * B(k, j);
                }
                gram(i, j) = s;
            }

        double t1 = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            t1 += gram(i, i).real();

        double t2 = 0.0;
        for (const auto &v : gram.data)
            t2 += std::norm(v);

        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
            {
                cxdouble s(0.0, 0.0);
                for (std::size_t k = 0; k < m; ++k)
                    s += gram(i, k) * gram(k, j);
                sq(i, j) = s;
            }
        double t3 = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                t3 += (sq(i, j) * std::conj(gram(i, j))).real();

        acc[0] += t1;
        acc[1] += t2;
        acc[2] += t3;
    }
    for (double &v : acc)
        v /= double(draws) * double(p);
    return acc;
}

} // namespace rmtcap

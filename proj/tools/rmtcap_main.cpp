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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace
{

using rmtcap::ExperimentConfig;

const std::vector<std::string> COMMON_KEYS = {
    "shape", "dist", "D", "M", "bs", "users", "beta", "methods", "trials",
    "eta", "moments", "seed", "log-base", "out", "format", "mode",
    "trunc-sigma", "ext-interferers", "threads", "record-timing",
    "power-iters", "quad-nodes", "d0", "d1", "P", "N0"};

void add_common_options(CLI::App *cmd, std::map<std::string, std::string> &raw)
{
    for (const auto &key : COMMON_KEYS)
        cmd->add_option_function<std::string>(
            "--" + key, [&raw, key](const std::string &v) { raw[key] = v; });
    cmd->add_option_function<std::string>(
        "--config", [&raw](const std::string &v) { raw["@config"] = v; },
        "key=value config file; flags override file entries");
}

ExperimentConfig make_config(const std::map<std::string, std::string> &raw)
{
    ExperimentConfig cfg;
    if (auto it = raw.find("@config"); it != raw.end())
        rmtcap::load_config_file(cfg, it->second);
    for (const auto &[key, value] : raw)
        if (key != "@config")
            rmtcap::apply_config_entry(cfg, key, value);
    return cfg;
}

std::string capacity_unit(const ExperimentConfig &cfg)
{
    if (cfg.log_base == 0.0)
        return "nat/channel use";
    if (cfg.log_base == 2.0)
        return "bit/channel use";
    return "log" + std::to_string(cfg.log_base) + " units/channel use";
}

void write_text(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

void maybe_emit(const ExperimentConfig &cfg, const std::vector<rmtcap::ReportRow> &rows)
{
    if (cfg.out.empty())
        return;
    rmtcap::emit_report(rows,
                        cfg.format == "json" ? rmtcap::ReportFormat::json
                                             : rmtcap::ReportFormat::csv,
                        cfg.out);
    std::cout << "report written to " << cfg.out << "\n";
}

double conv_factor(const ExperimentConfig &cfg)
{
    return cfg.log_base > 0.0 ? 1.0 / std::log(cfg.log_base) : 1.0;
}

int cmd_estimate(const ExperimentConfig &cfg)
{
    rmtcap::ExperimentResult res = rmtcap::run_experiment(cfg);
    const double conv = conv_factor(cfg);
    std::cout << "scenario " << cfg.scenario_tag() << "  J_m=" << res.J_m
              << " K_m=" << res.K_m << " beta=" << res.beta_m << " seed=" << cfg.seed << "\n";
    if (res.mpm)
        std::printf("mpm capacity %.6f %s  (%.3f s, %d trials)\n", res.mpm->value * conv,
                    capacity_unit(cfg).c_str(), res.mpm->wall_time_s, res.mpm->trials);
    if (res.cdm)
        std::printf("cdm capacity %.6f %s  (%.3f s, %d trials)\n", res.cdm->value * conv,
                    capacity_unit(cfg).c_str(), res.cdm->wall_time_s, res.cdm->trials);
    if (res.mpm && res.cdm)
        std::printf("relative error %.4f%%\n", 100.0 * rmtcap::relative_error(*res.mpm, *res.cdm));
    maybe_emit(cfg, res.rows);
    return 0;
}

int cmd_sweep(const ExperimentConfig &cfg, int reps)
{
    std::vector<int> sizes = cfg.sizes.empty() ? std::vector<int>{100, 200, 400, 800} : cfg.sizes;
    auto table = rmtcap::sweep_sizes(cfg, sizes, reps);

    std::printf("%8s %6s %16s\n", "size", "method", "median_time_s");
    for (const auto &e : table)
        std::printf("%8d %6s %16.6f\n", e.size, e.method.c_str(), e.median_time_s);

    for (const std::string &method : {"mpm", "cdm"})
    {
        std::vector<double> xs, ts;
        for (const auto &e : table)
            if (e.method == method)
            {
                xs.push_back(double(e.size));
                ts.push_back(e.median_time_s);
            }
        if (xs.size() >= 2)
            std::printf("%s empirical complexity exponent: %.3f\n", method.c_str(),
                        rmtcap::fit_complexity_slope(xs, ts));
    }
    if (!cfg.out.empty())
    {
        write_text(cfg.out, rmtcap::timing_to_csv(table));
        std::cout << "timing table written to " << cfg.out << "\n";
    }
    return 0;
}

int cmd_moments_check(const ExperimentConfig &cfg, int p, int n, int draws, int profiles)
{
    bool all_pass = true;
    std::printf("%4s %4s %4s  %12s %12s %12s  %s\n", "prof", "p", "n", "err1", "err2", "err3",
                "status");
    for (int i = 0; i < profiles; ++i)
    {
        // alternate tall and wide orientations
        int pp = (i % 2 == 0) ? p : n;
        int nn = (i % 2 == 0) ? n : p;
        rmtcap::RngStream qs(cfg.seed, 1000 + i);
        rmtcap::RealMatrix Q(pp, nn);
        for (auto &v : Q.data)
            v = 0.1 + 0.9 * qs.uniform();

        rmtcap::MomentVector phi = rmtcap::moments(rmtcap::theta_matrix(Q), 3);
        rmtcap::RngStream ms(cfg.seed, 2000 + i);
        std::vector<double> mc = rmtcap::moment_mc_oracle(Q, draws, ms);

        double e1 = std::abs(phi[1] - mc[0]) / mc[0];
        double e2 = std::abs(phi[2] - mc[1]) / mc[1];
        double e3 = std::abs(phi[3] - mc[2]) / mc[2];
        bool pass = e1 < 0.02 && e2 < 0.02 && e3 < 0.05;
        all_pass = all_pass && pass;
        std::printf("%4d %4d %4d  %12.5e %12.5e %12.5e  %s\n", i, pp, nn, e1, e2, e3,
                    pass ? "ok" : "FAIL");
    }
    return all_pass ? 0 : 2;
}

int cmd_eta_sweep(const ExperimentConfig &cfg)
{
    std::vector<double> etas = cfg.etas;
    if (etas.empty())
        etas = {0.0, 0.0005, 0.001, 0.002, 0.004, 0.008, 0.01, 0.02};

    std::vector<rmtcap::ReportRow> rows;

    // baseline once; it does not depend on eta
    ExperimentConfig base = cfg;
    base.run_mpm = false;
    base.run_cdm = true;
    rmtcap::ExperimentResult cdm_res = rmtcap::run_experiment(base);
    rows.insert(rows.end(), cdm_res.rows.begin(), cdm_res.rows.end());

    std::printf("%12s %14s %14s %12s\n", "eta", "mpm", "cdm", "rel_error");
    const double conv = conv_factor(cfg);
    for (double eta : etas)
    {
        ExperimentConfig c = cfg;
        c.eta = eta;
        c.run_mpm = true;
        c.run_cdm = false;
        char suffix[48];
        std::snprintf(suffix, sizeof(suffix), "eta=%g", eta);
        c.tag_suffix = suffix;
        rmtcap::ExperimentResult res = rmtcap::run_experiment(c);
        double err = rmtcap::relative_error(*res.mpm, *cdm_res.cdm);
        std::printf("%12g %14.6f %14.6f %11.4f%%\n", eta, res.mpm->value * conv,
                    cdm_res.cdm->value * conv, 100.0 * err);
        rows.insert(rows.end(), res.rows.begin(), res.rows.end());
    }
    maybe_emit(cfg, rows);
    return 0;
}

int cmd_moments_sweep(const ExperimentConfig &cfg, const std::string &orders_text)
{
    std::vector<int> orders = rmtcap::parse_int_list(orders_text);
    if (orders.empty())
        orders = {1, 2, 3};

    std::vector<rmtcap::ReportRow> rows;
    ExperimentConfig base = cfg;
    base.run_mpm = false;
    base.run_cdm = true;
    rmtcap::ExperimentResult cdm_res = rmtcap::run_experiment(base);
    rows.insert(rows.end(), cdm_res.rows.begin(), cdm_res.rows.end());

    std::printf("%8s %14s %14s %12s\n", "N", "mpm", "cdm", "rel_error");
    const double conv = conv_factor(cfg);
    for (int N : orders)
    {
        ExperimentConfig c = cfg;
        c.moments = N;
        c.run_mpm = true;
        c.run_cdm = false;
        c.tag_suffix = "N=" + std::to_string(N);
        rmtcap::ExperimentResult res = rmtcap::run_experiment(c);
        double err = rmtcap::relative_error(*res.mpm, *cdm_res.cdm);
        std::printf("%8d %14.6f %14.6f %11.4f%%\n", N, res.mpm->value * conv,
                    cdm_res.cdm->value * conv, 100.0 * err);
        rows.insert(rows.end(), res.rows.begin(), res.rows.end());
    }
    maybe_emit(cfg, rows);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"capacity estimation for clustered ultra-dense wireless networks"};
    app.require_subcommand(1);

    std::map<std::string, std::string> raw_estimate, raw_sweep, raw_moments, raw_eta, raw_msweep;

    CLI::App *est = app.add_subcommand("estimate", "one scenario, MPM and CDM, prints the error");
    add_common_options(est, raw_estimate);

    CLI::App *swp = app.add_subcommand("sweep", "timing sweep over sizes plus complexity fit");
    add_common_options(swp, raw_sweep);
    std::string sweep_sizes_text;
    int sweep_reps = 3;
    swp->add_option("--sizes", sweep_sizes_text, "comma-separated J_m sizes");
    swp->add_option("--reps", sweep_reps, "timing repetitions per point");

    CLI::App *mck = app.add_subcommand("moments-check", "Monte-Carlo check of the moment formulas");
    add_common_options(mck, raw_moments);
    int mc_p = 20, mc_n = 30, mc_draws = 2000, mc_profiles = 4;
    mck->add_option("--p", mc_p, "profile rows");
    mck->add_option("--n", mc_n, "profile columns");
    mck->add_option("--draws", mc_draws, "Monte-Carlo draws");
    mck->add_option("--profiles", mc_profiles, "number of random profiles");

    CLI::App *eta = app.add_subcommand("eta-sweep", "error against the baseline over an eta grid");
    add_common_options(eta, raw_eta);
    std::string etas_text;
    eta->add_option("--etas", etas_text, "comma-separated eta values");

    CLI::App *msw = app.add_subcommand("moments-sweep", "error against the baseline per moment order");
    add_common_options(msw, raw_msweep);
    std::string orders_text;
    msw->add_option("--orders", orders_text, "comma-separated polynomial orders (subset of 0..3)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        if (est->parsed())
            return cmd_estimate(make_config(raw_estimate));
        if (swp->parsed())
        {
            ExperimentConfig cfg = make_config(raw_sweep);
            if (!sweep_sizes_text.empty())
                cfg.sizes = rmtcap::parse_int_list(sweep_sizes_text);
            return cmd_sweep(cfg, sweep_reps);
        }
        if (mck->parsed())
            return cmd_moments_check(make_config(raw_moments), mc_p, mc_n, mc_draws, mc_profiles);
        if (eta->parsed())
        {
            ExperimentConfig cfg = make_config(raw_eta);
            if (!etas_text.empty())
                cfg.etas = rmtcap::parse_double_list(etas_text);
            return cmd_eta_sweep(cfg);
        }
        if (msw->parsed())
            return cmd_moments_sweep(make_config(raw_msweep), orders_text);
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

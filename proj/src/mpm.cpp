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

#include "rmtcap/mpm.hpp"

#include "rmtcap/numkernel.hpp"
#include "rmtcap/parallel.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rmtcap
{

RealMatrix theta_matrix(const RealMatrix &Q)
{
    RealMatrix theta(Q.rows, Q.cols);
    const double n = double(Q.cols);
    for (std::size_t i = 0; i < Q.data.size(); ++i)
        theta.data[i] = n * Q.data[i] * Q.data[i];
    return theta;
}

MomentVector moments(const RealMatrix &theta, int order)
{
    if (order < 0 || order > 3)
        throw std::invalid_argument("moments: only orders 0..3 are available");
    if (theta.empty())
        throw std::invalid_argument("moments: empty profile");

    const std::size_t p = theta.rows, n = theta.cols;
    MomentVector phi;
    phi.values.assign(order + 1, 0.0);
    phi.values[0] = 1.0;
    if (order == 0)
        return phi;

    std::vector<double> row_sum(p, 0.0), col_sum(n, 0.0);
    for (std::size_t i = 0; i < p; ++i)
    {
        const double *ti = theta.row(i);
        double r = 0.0;
        for (std::size_t k = 0; k < n; ++k)
        {
            r += ti[k];
            col_sum[k] += ti[k];
        }
        row_sum[i] = r;
    }

    const double pn = double(p) * double(n);
    double total = 0.0;
    for (double r : row_sum)
        total += r;
    phi.values[1] = total / pn;
    if (order == 1)
        return phi;

    double r2 = 0.0, c2 = 0.0;
    for (double r : row_sum)
        r2 += r * r;
    for (double c : col_sum)
        c2 += c * c;
    phi.values[2] = (r2 + c2) / (pn * double(n));
    if (order == 2)
        return phi;

    // Third moment from the u^4 coefficient of the Laurent expansion of the
    // deterministic-equivalent Stieltjes transform: row-sum cubes, column-sum
    // cubes, and three times the theta-weighted cross term. All terms add.
    double r3 = 0.0, c3 = 0.0, cross = 0.0;
    for (double r : row_sum)
        r3 += r * r * r;
    for (double c : col_sum)
        c3 += c * c * c;
    for (std::size_t i = 0; i < p; ++i)
    {
        const double *ti = theta.row(i);
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            s += ti[k] * col_sum[k];
        cross += row_sum[i] * s;
    }
    phi.values[3] = (r3 + c3 + 3.0 * cross) / (pn * double(n) * double(n));
    return phi;
}

std::vector<double> mp_coefficient_table(double a, double b, double beta,
                                         std::size_t K_m, int max_index, int nodes)
{
    if (!(a >= 0.0) || !(a < b))
        throw std::invalid_argument("mp_coefficient_table: need 0 <= a < b");
    if (K_m < 1)
        throw std::invalid_argument("mp_coefficient_table: K_m must be >= 1");
    if (max_index < 0)
        throw std::invalid_argument("mp_coefficient_table: max_index must be >= 0");

    std::vector<double> c(max_index + 1, 0.0);
    // i = 0: closed form of the 1/x weight integral, finite down to a = 0
    c[0] = beta / (2.0 * double(K_m)) * (0.5 * (a + b) - std::sqrt(a * b));
    if (max_index == 0)
        return c;

    std::vector<double> x, w;
    chebyshev_weighted_nodes(a, b, nodes, x, w);
    const double front = beta / (2.0 * M_PI * double(K_m));
    for (int k = 0; k < nodes; ++k)
    {
        double wk = front * w[k];
        double pow_x = 1.0; // x^{i-1} for i = 1
        for (int i = 1; i <= max_index; ++i)
        {
            c[i] += wk * pow_x;
            pow_x *= x[k];
        }
    }
    return c;
}

AlphaFit fit_alpha(const std::vector<double> &c, const MomentVector &phi,
                   double beta, int order)
{
    const int dim = order + 1;
    if (int(c.size()) < 2 * order + 1)
        throw std::invalid_argument("fit_alpha: coefficient table shorter than 2N+1");
    if (phi.order() < order)
        throw std::invalid_argument("fit_alpha: moment vector shorter than N+1");

    std::vector<double> rhs(dim);
    for (int j = 0; j < dim; ++j)
        rhs[j] = phi[j];
    if (beta < 1.0)
        rhs[0] -= (1.0 - beta); // mass carried by the point mass at zero

    // Column/row scaling by the geometric growth rate of the c table keeps
    // the Hankel system well scaled when b is large.
    double s = 1.0;
    if (order > 0 && c[0] > 0.0 && c[2 * order] > 0.0)
        s = std::pow(c[2 * order] / c[0], 1.0 / double(2 * order));
    if (!(s > 0.0) || !std::isfinite(s))
        s = 1.0;

    RealMatrix H(dim, dim);
    std::vector<double> rhs_scaled(dim);
    for (int j = 0; j < dim; ++j)
    {
        double sj = std::pow(s, -double(j));
        for (int k = 0; k < dim; ++k)
            H(j, k) = c[j + k] * sj * std::pow(s, -double(k));
        rhs_scaled[j] = rhs[j] * sj;
    }

    // condition estimate of the scaled system via explicit tiny inverse
    double hnorm = 0.0;
    for (int j = 0; j < dim; ++j)
    {
        double rsum = 0.0;
        for (int k = 0; k < dim; ++k)
            rsum += std::abs(H(j, k));
        hnorm = std::max(hnorm, rsum);
    }
    double inv_norm = 0.0;
    std::vector<std::vector<double>> inv_cols(dim);
    try
    {
        for (int j = 0; j < dim; ++j)
        {
            std::vector<double> e(dim, 0.0);
            e[j] = 1.0;
            inv_cols[j] = solve_dense(H, e).x;
        }
    }
    catch (const std::runtime_error &err)
    {
        throw std::runtime_error(std::string("fit_alpha: singular moment system (") + err.what() + ")");
    }
    for (int j = 0; j < dim; ++j)
    {
        double rsum = 0.0;
        for (int k = 0; k < dim; ++k)
            rsum += std::abs(inv_cols[k][j]);
        inv_norm = std::max(inv_norm, rsum);
    }

    AlphaFit fit;
    fit.condition = hnorm * inv_norm;
    if (fit.condition > 1e12)
    {
        std::ostringstream msg;
        msg << "fit_alpha: ill-conditioned moment system, condition estimate "
            << fit.condition << " (order " << order << ")";
        throw std::runtime_error(msg.str());
    }

    DenseSolve sol = solve_dense(H, rhs_scaled);
    fit.alpha.resize(dim);
    for (int k = 0; k < dim; ++k)
        fit.alpha[k] = sol.x[k] * std::pow(s, -double(k));

    double rmax = 0.0, bmax = 0.0;
    for (int j = 0; j < dim; ++j)
    {
        double r = -rhs[j];
        for (int k = 0; k < dim; ++k)
            r += c[j + k] * fit.alpha[k];
        rmax = std::max(rmax, std::abs(r));
        bmax = std::max(bmax, std::abs(rhs[j]));
    }
    fit.residual = bmax > 0.0 ? rmax / bmax : rmax;
    return fit;
}

double lsd_density(const LsdModel &model, double x)
{
    if (x <= model.a || x >= model.b)
        return 0.0;
    double poly = 0.0;
    for (int k = model.order; k >= 0; --k)
        poly = poly * x + model.alpha[k];
    return model.beta * std::sqrt((model.b - x) * (x - model.a)) /
           (2.0 * M_PI * double(model.K_m) * x) * poly;
}

double capacity_integral(const LsdModel &model, int nodes)
{
    if (!(model.b > model.a) || model.K_m == 0)
        return 0.0;
    const double front = model.beta / (2.0 * M_PI * double(model.K_m));
    auto g = [&](double x) {
        double poly = 0.0;
        for (int k = model.order; k >= 0; --k)
            poly = poly * x + model.alpha[k];
        // log(1+x)/x is analytic at 0, so the integrand stays smooth at a = 0
        return std::log1p(x) / x * front * poly;
    };
    return chebyshev_weighted_integral(g, model.a, model.b, nodes);
}

namespace
{

void finalize_estimate(CapacityEstimate &est)
{
    const int n = est.trials;
    double sum = 0.0;
    for (double v : est.per_trial)
        sum += v;
    est.mean = n > 0 ? sum / n : 0.0;
    est.value = est.mean;
    if (n > 1)
    {
        double ss = 0.0;
        for (double v : est.per_trial)
            ss += (v - est.mean) * (v - est.mean);
        est.std_error = std::sqrt(ss / double(n - 1)) / std::sqrt(double(n));
    }
}

} // namespace

CapacityEstimate estimate_capacity_mpm(const ChannelProfile &profile,
                                       const MpmOptions &options,
                                       const RngStream &base)
{
    if (options.trials < 1)
        throw std::invalid_argument("estimate_capacity_mpm: trials must be >= 1");
    if (!(options.eta >= 0.0) || options.eta >= 1.0)
        throw std::invalid_argument("estimate_capacity_mpm: eta must lie in [0,1)");
    if (options.order < 0 || options.order > 3)
        throw std::invalid_argument("estimate_capacity_mpm: polynomial order must be 0..3");

    CapacityEstimate est;
    est.method = "mpm";
    est.trials = options.trials;
    est.per_trial.assign(options.trials, 0.0);
    est.per_trial_time_s.assign(options.trials, 0.0);
    est.diagnostics.assign(options.trials, TrialDiagnostics{});

    if (profile.J_m == 0 || profile.K_m == 0)
    {
        finalize_estimate(est); // no signal dimensions: capacity 0
        return est;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const MomentVector phi = moments(theta_matrix(profile.Q), options.order);

    parallel_indexed(options.trials, options.threads, [&](int t) {
        const auto trial_start = std::chrono::steady_clock::now();
        try
        {
            RngStream stream = base.substream(std::uint64_t(t));
            ComplexMatrix G = sample_complex_gaussian(stream, profile.J_m, profile.K_m);
            ComplexMatrix B = gain_realization(profile.Q, G);
            double b_edge = power_method_max_eig(B, options.power_iters, stream);
            if (!(b_edge > 0.0))
            {
                est.per_trial[t] = 0.0;
                return;
            }
            double a_edge = options.eta * b_edge;

            std::vector<double> c = mp_coefficient_table(a_edge, b_edge, profile.beta,
                                                         profile.K_m, 2 * options.order,
                                                         options.quad_nodes);
            AlphaFit fit = fit_alpha(c, phi, profile.beta, options.order);

            LsdModel model;
            model.a = a_edge;
            model.b = b_edge;
            model.beta = profile.beta;
            model.K_m = profile.K_m;
            model.alpha = fit.alpha;
            model.delta_mass = profile.beta < 1.0 ? 1.0 - profile.beta : 0.0;
            model.order = options.order;

            est.per_trial[t] = capacity_integral(model, options.quad_nodes);

            std::vector<double> x, w;
            chebyshev_weighted_nodes(a_edge, b_edge, options.quad_nodes, x, w);
            int neg = 0;
            for (double xv : x)
            {
                double poly = 0.0;
                for (int k = model.order; k >= 0; --k)
                    poly = poly * xv + model.alpha[k];
                if (poly < 0.0)
                    ++neg;
            }
            est.diagnostics[t].neg_density_frac = double(neg) / double(options.quad_nodes);
            est.diagnostics[t].fit_residual = fit.residual;
        }
        catch (const std::exception &e)
        {
            std::ostringstream msg;
            msg << "mpm trial " << t << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
        est.per_trial_time_s[t] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - trial_start).count();
    });

    est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    finalize_estimate(est);
    return est;
}

} // namespace rmtcap

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

#ifndef RMTCAP_MPM_HPP
#define RMTCAP_MPM_HPP

#include "rmtcap/channel.hpp"
#include "rmtcap/matrix.hpp"
#include "rmtcap/rng.hpp"

#include <string>
#include <vector>

namespace rmtcap
{

// Spectral moments phi_0..phi_N of the limiting eigenvalue distribution of
// (Q o G)(Q o G)^H. phi_0 is always exactly 1.
struct MomentVector
{
    std::vector<double> values;
    int order() const { return int(values.size()) - 1; }
    double operator[](int j) const { return values[j]; }
};

// Fitted spectral model: Marchenko-Pastur weight on [a,b] times a degree-N
// polynomial, plus a point mass at zero when beta < 1.
struct LsdModel
{
    double a = 0.0;
    double b = 0.0;
    double beta = 0.0;
    std::size_t K_m = 0;
    std::vector<double> alpha; // polynomial coefficients alpha_0..alpha_N
    double delta_mass = 0.0;   // (1 - beta) when beta < 1, else 0
    int order = 0;
};

struct TrialDiagnostics
{
    double neg_density_frac = 0.0; // quadrature nodes where the fitted density is negative
    double fit_residual = 0.0;     // relative residual of the moment system
};

// Per-method capacity estimate. Values are in natural-log units; report
// layers convert to a configured base.
struct CapacityEstimate
{
    double value = 0.0; // mean over trials
    int trials = 0;
    std::vector<double> per_trial;
    std::vector<double> per_trial_time_s;
    std::vector<TrialDiagnostics> diagnostics;
    double mean = 0.0;
    double std_error = 0.0;
    double wall_time_s = 0.0;
    std::string method;
};

// theta_ij = n * q_ij^2 with n the number of columns of Q.
RealMatrix theta_matrix(const RealMatrix &Q);

// Closed-form moments of the limiting spectral distribution up to order 3
// from the variance profile theta. Orders above 3 are not available.
MomentVector moments(const RealMatrix &theta, int order);

// c_i = integral x^i * beta sqrt((b-x)(x-a)) / (2 pi K_m x) dx on [a,b],
// for i = 0..max_index. c_0 uses the closed form
// (beta/(2 K_m)) ((a+b)/2 - sqrt(ab)); the quadrature is exact for i >= 1.
std::vector<double> mp_coefficient_table(double a, double b, double beta,
                                         std::size_t K_m, int max_index,
                                         int nodes = 256);

struct AlphaFit
{
    std::vector<double> alpha;
    double residual = 0.0;  // relative residual of the original system
    double condition = 0.0; // max-norm condition estimate of the scaled system
};

// Solve the Hankel moment-matching system sum_k c_{j+k} alpha_k = phi_j.
// For beta < 1 the j=0 right-hand side is beta: the point mass at zero
// carries the remaining (1-beta) of the total mass.
AlphaFit fit_alpha(const std::vector<double> &c, const MomentVector &phi,
                   double beta, int order);

// Continuous part of the fitted density; zero outside (a,b). The point mass
// is tracked in delta_mass and never evaluated pointwise.
double lsd_density(const LsdModel &model, double x);

// integral log(1+x) f(x) dx over the continuous part; the point mass at zero
// contributes log(1+0) = 0.
double capacity_integral(const LsdModel &model, int nodes = 256);

struct MpmOptions
{
    double eta = 4e-3; // lower support edge ratio, a = eta * b
    int order = 3;     // polynomial order N
    int trials = 20;
    int power_iters = 15;
    int quad_nodes = 256;
    int threads = 1;
};

// Full estimator: moments once from Q, then per trial draw G, estimate the
// top eigenvalue by the power method, fit the polynomial and integrate.
// Trial t uses base.substream(t); a failing trial throws with its index.
CapacityEstimate estimate_capacity_mpm(const ChannelProfile &profile,
                                       const MpmOptions &options,
                                       const RngStream &base);

} // namespace rmtcap

#endif

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

#ifndef RMTCAP_CHANNEL_HPP
#define RMTCAP_CHANNEL_HPP

#include "rmtcap/clustering.hpp"
#include "rmtcap/matrix.hpp"
#include "rmtcap/scenario.hpp"

#include <vector>

namespace rmtcap
{

// Large-scale fading and link-budget parameters. The path gain is
//   d^-exp_far                      for d >  d1,
//   d1^-(exp_far-exp_mid) d^-exp_mid for d0 < d <= d1,
//   d1^-(exp_far-exp_mid) d0^-exp_mid for d <= d0,
// continuous in d for any exponent pair.
struct FadingParams
{
    double d0 = 10.0;   // near-field threshold, meters
    double d1 = 50.0;   // far-field threshold, meters
    double P = 1.0;     // per-user transmit power, watts
    double N0 = 1e-12;  // noise power, watts
    double exp_far = 1.75;
    double exp_mid = 1.0;
};

// Deterministic channel structure of one cluster.
struct ChannelProfile
{
    RealMatrix L;           // J_m x K_m path gains
    std::vector<double> xi; // J_m diagonal of the noise-plus-interference limit, watts
    RealMatrix Q;           // J_m x K_m whitened gains, Q_jk = sqrt(P/xi_j) L_jk
    std::size_t J_m = 0;
    std::size_t K_m = 0;
    double beta = 0.0; // K_m / J_m
};

// Piecewise path gain; d = 0 hits the near-field plateau.
double large_scale_fading(double d, const FadingParams &params);

// Entrywise path gains for a block of BS-to-user distances.
RealMatrix fading_matrix(const RealMatrix &distances, const FadingParams &params);

// xi_j = N0 + P * sum over out-of-cluster users k of l_jk^2, compensated
// summation. `distances` holds rows for the cluster's BSs and columns for
// ALL users; in_cluster flags the columns belonging to the cluster.
std::vector<double> interference_diagonal(const RealMatrix &distances,
                                          const std::vector<bool> &in_cluster,
                                          const FadingParams &params);

// Whitened profile Q_jk = sqrt(P / xi_j) * L_jk.
RealMatrix profile_matrix(const RealMatrix &L, const std::vector<double> &xi,
                          const FadingParams &params);

// One small-scale realization B = Q o G (entrywise product).
ComplexMatrix gain_realization(const RealMatrix &Q, const ComplexMatrix &G);

// Assemble the ChannelProfile of cluster `m` from a clustered node set.
ChannelProfile cluster_profile(const NodeSet &nodes, const ClusterAssignment &assignment,
                               int m, const FadingParams &params);

// Profile of a stand-alone cluster: every sampled node belongs to it and
// `external_users` contribute only to the interference diagonal.
ChannelProfile direct_profile(const NodeSet &nodes, const std::vector<Point> &external_users,
                              const FadingParams &params);

} // namespace rmtcap

#endif

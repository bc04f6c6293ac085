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

#include "rmtcap/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rmtcap
{

double large_scale_fading(double d, const FadingParams &params)
{
    const double knee = std::pow(params.d1, -(params.exp_far - params.exp_mid));
    if (d > params.d1)
        return std::pow(d, -params.exp_far);
    if (d > params.d0)
        return knee * std::pow(d, -params.exp_mid);
    return knee * std::pow(params.d0, -params.exp_mid);
}

RealMatrix fading_matrix(const RealMatrix &distances, const FadingParams &params)
{
    RealMatrix L(distances.rows, distances.cols);
    for (std::size_t i = 0; i < distances.data.size(); ++i)
        L.data[i] = large_scale_fading(distances.data[i], params);
    return L;
}

std::vector<double> interference_diagonal(const RealMatrix &distances,
                                          const std::vector<bool> &in_cluster,
                                          const FadingParams &params)
{
    if (in_cluster.size() != distances.cols)
        throw std::invalid_argument("interference_diagonal: membership size mismatch");

    std::vector<double> xi(distances.rows, 0.0);
    for (std::size_t j = 0; j < distances.rows; ++j)
    {
        const double *dj = distances.row(j);
        // Kahan summation: the l^2 terms span many orders of magnitude
        double sum = 0.0, comp = 0.0;
        for (std::size_t k = 0; k < distances.cols; ++k)
        {
            if (in_cluster[k])
                continue;
            double l = large_scale_fading(dj[k], params);
            double term = l * l - comp;
            double next = sum + term;
            comp = (next - sum) - term;
            sum = next;
        }
        xi[j] = params.N0 + params.P * sum;
    }
    return xi;
}

RealMatrix profile_matrix(const RealMatrix &L, const std::vector<double> &xi,
                          const FadingParams &params)
{
    if (xi.size() != L.rows)
        throw std::invalid_argument("profile_matrix: xi length must match rows of L");
    RealMatrix Q(L.rows, L.cols);
    for (std::size_t j = 0; j < L.rows; ++j)
    {
        if (!(xi[j] > 0.0))
            throw std::runtime_error("profile_matrix: nonpositive interference diagonal");
        const double w = std::sqrt(params.P / xi[j]);
        const double *lj = L.row(j);
        double *qj = Q.row(j);
        for (std::size_t k = 0; k < L.cols; ++k)
            qj[k] = w * lj[k];
    }
    return Q;
}

ComplexMatrix gain_realization(const RealMatrix &Q, const ComplexMatrix &G)
{
    if (Q.rows != G.rows || Q.cols != G.cols)
        throw std::invalid_argument("gain_realization: shape mismatch");
    ComplexMatrix B(Q.rows, Q.cols);
    for (std::size_t i = 0; i < Q.data.size(); ++i)
        B.data[i] = Q.data[i] * G.data[i];
    return B;
}

ChannelProfile cluster_profile(const NodeSet &nodes, const ClusterAssignment &assignment,
                               int m, const FadingParams &params)
{
    if (m < 0 || m >= assignment.M)
        throw std::invalid_argument("cluster_profile: cluster index out of range");

    std::vector<Point> bs;
    for (std::size_t j = 0; j < nodes.bs_positions.size(); ++j)
        if (assignment.labels_bs[j] == m)
            bs.push_back(nodes.bs_positions[j]);

    std::vector<Point> users;
    std::vector<bool> in_cluster(nodes.user_positions.size(), false);
    for (std::size_t k = 0; k < nodes.user_positions.size(); ++k)
        if (assignment.labels_user[k] == m)
        {
            users.push_back(nodes.user_positions[k]);
            in_cluster[k] = true;
        }

    ChannelProfile p;
    p.J_m = bs.size();
    p.K_m = users.size();
    p.beta = p.J_m ? double(p.K_m) / double(p.J_m) : 0.0;
    if (p.J_m == 0)
        return p; // degenerate cluster, capacity undefined

    RealMatrix d_all = distance_matrix(bs, nodes.user_positions);
    p.xi = interference_diagonal(d_all, in_cluster, params);
    if (p.K_m > 0)
    {
        p.L = fading_matrix(distance_matrix(bs, users), params);
        p.Q = profile_matrix(p.L, p.xi, params);
    }
    return p;
}

ChannelProfile direct_profile(const NodeSet &nodes, const std::vector<Point> &external_users,
                              const FadingParams &params)
{
    ChannelProfile p;
    p.J_m = nodes.bs_positions.size();
    p.K_m = nodes.user_positions.size();
    p.beta = p.J_m ? double(p.K_m) / double(p.J_m) : 0.0;
    if (p.J_m == 0)
        return p;

    if (external_users.empty())
    {
        p.xi.assign(p.J_m, params.N0);
    }
    else
    {
        RealMatrix d_ext = distance_matrix(nodes.bs_positions, external_users);
        std::vector<bool> none(external_users.size(), false);
        p.xi = interference_diagonal(d_ext, none, params);
    }
    if (p.K_m > 0)
    {
        p.L = fading_matrix(distance_matrix(nodes.bs_positions, nodes.user_positions), params);
        p.Q = profile_matrix(p.L, p.xi, params);
    }
    return p;
}

} // namespace rmtcap

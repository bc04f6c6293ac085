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

#include "rmtcap/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace rmtcap
{

namespace
{

// Fixed stream ids so BS and user draws do not interact through counts.
constexpr std::uint64_t STREAM_BS = 1;
constexpr std::uint64_t STREAM_USERS = 2;

Point draw_point(const Region &region, Distribution dist, double sigma, RngStream &rng)
{
    const double half = 0.5 * region.scale;
    for (;;)
    {
        Point p;
        if (dist == Distribution::uniform)
        {
            p.x = region.center.x + (2.0 * rng.uniform() - 1.0) * half;
            p.y = region.center.y + (2.0 * rng.uniform() - 1.0) * half;
        }
        else
        {
            double z0, z1;
            rng.normal_pair(z0, z1);
            p.x = region.center.x + sigma * z0;
            p.y = region.center.y + sigma * z1;
        }
        if (in_region(p, region))
            return p;
    }
}

} // namespace

bool in_region(const Point &p, const Region &region)
{
    const double half = 0.5 * region.scale;
    const double dx = p.x - region.center.x;
    const double dy = p.y - region.center.y;
    if (region.shape == RegionShape::square)
        return std::abs(dx) <= half && std::abs(dy) <= half;
    return dx * dx + dy * dy <= half * half;
}

NodeSet sample_nodes(const Region &region, std::size_t J, std::size_t K,
                     Distribution distribution, std::uint64_t seed, double sigma)
{
    if (J < 1)
        throw std::invalid_argument("sample_nodes: need at least one base station");
    if (!(region.scale > 0.0))
        throw std::invalid_argument("sample_nodes: region scale must be positive");
    if (sigma <= 0.0)
        sigma = 0.25 * region.scale;

    NodeSet nodes;
    nodes.region = region;
    nodes.distribution = distribution;
    nodes.seed = seed;

    RngStream bs_stream(seed, STREAM_BS);
    nodes.bs_positions.reserve(J);
    for (std::size_t j = 0; j < J; ++j)
        nodes.bs_positions.push_back(draw_point(region, distribution, sigma, bs_stream));

    RngStream user_stream(seed, STREAM_USERS);
    nodes.user_positions.reserve(K);
    for (std::size_t k = 0; k < K; ++k)
        nodes.user_positions.push_back(draw_point(region, distribution, sigma, user_stream));

    return nodes;
}

RealMatrix distance_matrix(const std::vector<Point> &bs, const std::vector<Point> &users)
{
    if (bs.empty())
        throw std::invalid_argument("distance_matrix: need at least one base station");
    RealMatrix d(bs.size(), users.size());
    for (std::size_t j = 0; j < bs.size(); ++j)
        for (std::size_t k = 0; k < users.size(); ++k)
            d(j, k) = std::hypot(bs[j].x - users[k].x, bs[j].y - users[k].y);
    return d;
}

} // namespace rmtcap

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

#ifndef RMTCAP_SCENARIO_HPP
#define RMTCAP_SCENARIO_HPP

#include "rmtcap/matrix.hpp"
#include "rmtcap/rng.hpp"

#include <cstdint>
#include <vector>

namespace rmtcap
{

struct Point
{
    double x = 0.0;
    double y = 0.0;
};

enum class RegionShape
{
    square,
    circle
};

enum class Distribution
{
    uniform,
    truncated_normal
};

// Planar deployment region. `scale` is the side length (square) or the
// diameter (circle), in meters.
struct Region
{
    RegionShape shape = RegionShape::square;
    double scale = 2000.0;
    Point center{0.0, 0.0};
};

// Base station and user positions with full provenance: the same
// (seed, counts, region, distribution) regenerate identical positions.
struct NodeSet
{
    std::vector<Point> bs_positions;
    std::vector<Point> user_positions;
    Region region;
    Distribution distribution = Distribution::uniform;
    std::uint64_t seed = 0;
};

// Membership test; region boundaries count as inside.
bool in_region(const Point &p, const Region &region);

// Draw J base stations and K users. Uniform draws are uniform over the
// region; truncated-normal draws are isotropic normal at the region center
// (std deviation sigma, default scale/4) rejected until inside.
NodeSet sample_nodes(const Region &region, std::size_t J, std::size_t K,
                     Distribution distribution, std::uint64_t seed,
                     double sigma = -1.0);

// Entry (j,k) = Euclidean distance from bs[j] to users[k], in meters.
RealMatrix distance_matrix(const std::vector<Point> &bs,
                           const std::vector<Point> &users);

} // namespace rmtcap

#endif

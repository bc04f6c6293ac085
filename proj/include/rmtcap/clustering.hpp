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

#ifndef RMTCAP_CLUSTERING_HPP
#define RMTCAP_CLUSTERING_HPP

#include "rmtcap/scenario.hpp"

#include <vector>

namespace rmtcap
{

struct KmeansResult
{
    std::vector<Point> centroids;
    std::vector<int> labels;        // nearest centroid per point, ties to lowest index
    std::vector<double> wcss_trace; // within-cluster sum of squares after each update
    int iterations = 0;
    bool converged = false; // centroid movement fell below tol before max_iter
};

// Lloyd's algorithm with k-means++ seeding from the given stream. An empty
// cluster is re-seeded at the point farthest from its assigned centroid.
// Passing `initial` (size M) skips the seeding and makes the result
// independent of input point order.
KmeansResult kmeans(const std::vector<Point> &points, int M, RngStream &rng,
                    int max_iter = 100, double tol = 1e-6,
                    const std::vector<Point> &initial = {});

// Partition of a network into M clusters over the pooled BS+user positions,
// split back into per-kind labels.
struct ClusterAssignment
{
    std::vector<int> labels_bs;
    std::vector<int> labels_user;
    std::vector<Point> centroids;
    std::vector<int> bs_count;   // J_m per cluster
    std::vector<int> user_count; // K_m per cluster
    int M = 0;
    bool converged = false;
};

ClusterAssignment cluster_network(const NodeSet &nodes, int M, std::uint64_t seed);

// Index of the cluster whose centroid is closest to the region center,
// ties broken by lowest index.
int central_cluster(const ClusterAssignment &assignment, const Region &region);

} // namespace rmtcap

#endif

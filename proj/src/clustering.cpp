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

#include "rmtcap/clustering.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rmtcap
{

namespace
{

constexpr std::uint64_t STREAM_KMEANS = 3;

inline double sqdist(const Point &a, const Point &b)
{
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// k-means++ seeding: first centroid uniform, then proportional to the
// squared distance to the nearest centroid chosen so far.
std::vector<Point> seed_centroids(const std::vector<Point> &pts, int M, RngStream &rng)
{
    const std::size_t n = pts.size();
    std::vector<Point> centroids;
    centroids.reserve(M);

    std::size_t first = std::size_t(rng.uniform() * double(n));
    if (first >= n)
        first = n - 1;
    centroids.push_back(pts[first]);

    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i)
        d2[i] = sqdist(pts[i], centroids[0]);

    while (int(centroids.size()) < M)
    {
        double total = 0.0;
        for (double v : d2)
            total += v;
        std::size_t pick = 0;
        if (total > 0.0)
        {
            double target = rng.uniform() * total;
            double acc = 0.0;
            pick = n - 1;
            for (std::size_t i = 0; i < n; ++i)
            {
                acc += d2[i];
                if (acc > target)
                {
                    pick = i;
                    break;
                }
            }
        }
        else
        {
            // all points coincide with a centroid; any choice is equivalent
            pick = std::size_t(rng.uniform() * double(n));
            if (pick >= n)
                pick = n - 1;
        }
        centroids.push_back(pts[pick]);
        for (std::size_t i = 0; i < n; ++i)
            d2[i] = std::min(d2[i], sqdist(pts[i], centroids.back()));
    }
    return centroids;
}

} // namespace

KmeansResult kmeans(const std::vector<Point> &points, int M, RngStream &rng,
                    int max_iter, double tol, const std::vector<Point> &initial)
{
    if (M < 1)
        throw std::invalid_argument("kmeans: M must be >= 1");
    if (points.size() < std::size_t(M))
        throw std::invalid_argument("kmeans: more clusters than points");
    if (!initial.empty() && initial.size() != std::size_t(M))
        throw std::invalid_argument("kmeans: initial centroid count must equal M");

    const std::size_t n = points.size();
    KmeansResult res;
    res.centroids = initial.empty() ? seed_centroids(points, M, rng) : initial;
    res.labels.assign(n, 0);

    std::vector<double> sum_x(M), sum_y(M);
    std::vector<int> count(M);

    for (int iter = 0; iter < max_iter; ++iter)
    {
        // assignment step, ties to the lowest centroid index
        double wcss = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            int best = 0;
            double bestd = sqdist(points[i], res.centroids[0]);
            for (int m = 1; m < M; ++m)
            {
                double d = sqdist(points[i], res.centroids[m]);
                if (d < bestd)
                {
                    bestd = d;
                    best = m;
                }
            }
            res.labels[i] = best;
            wcss += bestd;
        }
        res.wcss_trace.push_back(wcss);
        res.iterations = iter + 1;

        // update step
        std::fill(sum_x.begin(), sum_x.end(), 0.0);
        std::fill(sum_y.begin(), sum_y.end(), 0.0);
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
        {
            sum_x[res.labels[i]] += points[i].x;
            sum_y[res.labels[i]] += points[i].y;
            ++count[res.labels[i]];
        }

        double moved = 0.0;
        bool reseeded = false;
        for (int m = 0; m < M; ++m)
        {
            if (count[m] == 0)
            {
                // re-seed an empty cluster at the point farthest from its
                // assigned centroid (lowest index on ties)
                std::size_t far = 0;
                double fard = -1.0;
                for (std::size_t i = 0; i < n; ++i)
                {
                    double d = sqdist(points[i], res.centroids[res.labels[i]]);
                    if (d > fard)
                    {
                        fard = d;
                        far = i;
                    }
                }
                res.centroids[m] = points[far];
                res.labels[far] = m;
                reseeded = true;
                continue;
            }
            Point next{sum_x[m] / count[m], sum_y[m] / count[m]};
            moved = std::max(moved, std::sqrt(sqdist(next, res.centroids[m])));
            res.centroids[m] = next;
        }

        if (!reseeded && moved < tol)
        {
            res.converged = true;
            // final assignment so labels match the last centroid update
            for (std::size_t i = 0; i < n; ++i)
            {
                int best = 0;
                double bestd = sqdist(points[i], res.centroids[0]);
                for (int m = 1; m < M; ++m)
                {
                    double d = sqdist(points[i], res.centroids[m]);
                    if (d < bestd)
                    {
                        bestd = d;
                        best = m;
                    }
                }
                res.labels[i] = best;
            }
            break;
        }
    }

    if (!res.converged)
    {
        // cap reached: refresh labels against the final centroids
        for (std::size_t i = 0; i < n; ++i)
        {
            int best = 0;
            double bestd = sqdist(points[i], res.centroids[0]);
            for (int m = 1; m < M; ++m)
            {
                double d = sqdist(points[i], res.centroids[m]);
                if (d < bestd)
                {
                    bestd = d;
                    best = m;
                }
            }
            res.labels[i] = best;
        }
    }
    return res;
}

ClusterAssignment cluster_network(const NodeSet &nodes, int M, std::uint64_t seed)
{
    const std::size_t J = nodes.bs_positions.size();
    const std::size_t K = nodes.user_positions.size();
    if (J + K < std::size_t(M))
        throw std::invalid_argument("cluster_network: fewer nodes than clusters");

    std::vector<Point> pooled;
    pooled.reserve(J + K);
    pooled.insert(pooled.end(), nodes.bs_positions.begin(), nodes.bs_positions.end());
    pooled.insert(pooled.end(), nodes.user_positions.begin(), nodes.user_positions.end());

    RngStream stream(seed, STREAM_KMEANS);
    KmeansResult km = kmeans(pooled, M, stream, 100, 1e-6 * nodes.region.scale);

    ClusterAssignment a;
    a.M = M;
    a.converged = km.converged;
    a.centroids = std::move(km.centroids);
    a.labels_bs.assign(km.labels.begin(), km.labels.begin() + J);
    a.labels_user.assign(km.labels.begin() + J, km.labels.end());
    a.bs_count.assign(M, 0);
    a.user_count.assign(M, 0);
    for (int m : a.labels_bs)
        ++a.bs_count[m];
    for (int m : a.labels_user)
        ++a.user_count[m];
    return a;
}

int central_cluster(const ClusterAssignment &assignment, const Region &region)
{
    if (assignment.M < 1)
        throw std::invalid_argument("central_cluster: empty assignment");
    int best = 0;
    double bestd = std::numeric_limits<double>::infinity();
    for (int m = 0; m < assignment.M; ++m)
    {
        const double dx = assignment.centroids[m].x - region.center.x;
        const double dy = assignment.centroids[m].y - region.center.y;
        const double d = dx * dx + dy * dy;
        if (d < bestd)
        {
            bestd = d;
            best = m;
        }
    }
    return best;
}

} // namespace rmtcap

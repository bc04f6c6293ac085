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

#include "rmtcap/rng.hpp"

#include <cmath>

namespace rmtcap
{

namespace
{

constexpr std::uint32_t PHILOX_M0 = 0xD2511F53u;
constexpr std::uint32_t PHILOX_M1 = 0xCD9E8D57u;
constexpr std::uint32_t PHILOX_W0 = 0x9E3779B9u;
constexpr std::uint32_t PHILOX_W1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t ctr[4], std::uint32_t k0, std::uint32_t k1)
{
    std::uint64_t p0 = std::uint64_t(PHILOX_M0) * ctr[0];
    std::uint64_t p1 = std::uint64_t(PHILOX_M1) * ctr[2];
    std::uint32_t c0 = std::uint32_t(p1 >> 32) ^ ctr[1] ^ k0;
    std::uint32_t c1 = std::uint32_t(p1);
    std::uint32_t c2 = std::uint32_t(p0 >> 32) ^ ctr[3] ^ k1;
    std::uint32_t c3 = std::uint32_t(p0);
    ctr[0] = c0;
    ctr[1] = c1;
    ctr[2] = c2;
    ctr[3] = c3;
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

RngStream RngStream::substream(std::uint64_t index) const
{
    return RngStream(seed_, splitmix64(stream_id_ + 0x9E3779B97F4A7C15ull * (index + 1)));
}

void RngStream::refill()
{
    // Counter block: 64-bit running counter in words 0..1, stream id in 2..3.
    std::uint32_t ctr[4] = {std::uint32_t(counter_), std::uint32_t(counter_ >> 32),
                            std::uint32_t(stream_id_), std::uint32_t(stream_id_ >> 32)};
    std::uint32_t k0 = std::uint32_t(seed_);
    std::uint32_t k1 = std::uint32_t(seed_ >> 32);
    for (int r = 0; r < 10; ++r)
    {
        philox_round(ctr, k0, k1);
        k0 += PHILOX_W0;
        k1 += PHILOX_W1;
    }
    block_[0] = ctr[0];
    block_[1] = ctr[1];
    block_[2] = ctr[2];
    block_[3] = ctr[3];
    ++counter_;
    pos_ = 0;
}

std::uint32_t RngStream::next_u32()
{
    if (pos_ >= 4)
        refill();
    return block_[pos_++];
}

std::uint64_t RngStream::next_u64()
{
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double RngStream::uniform()
{
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos()
{
    return 1.0 - uniform();
}

void RngStream::normal_pair(double &z0, double &z1)
{
    double u1 = uniform_pos();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double phi = 2.0 * M_PI * u2;
    z0 = r * std::cos(phi);
    z1 = r * std::sin(phi);
}

double RngStream::normal()
{
    double z0, z1;
    normal_pair(z0, z1);
    return z0;
}

std::complex<double> RngStream::complex_gaussian()
{
    // |g|^2 ~ Exp(1), phase uniform: total variance 1, halves per component.
    double u1 = uniform_pos();
    double u2 = uniform();
    double r = std::sqrt(-std::log(u1));
    double phi = 2.0 * M_PI * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

} // namespace rmtcap

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

#ifndef RMTCAP_RNG_HPP
#define RMTCAP_RNG_HPP

#include <complex>
#include <cstdint>

namespace rmtcap
{

// Counter-based random stream (Philox4x32-10). A stream is identified by
// (seed, stream id): equal identifiers reproduce the same sequence bit for
// bit, distinct identifiers give statistically independent sequences.
// Cheap to copy; a copy continues from the same position.
class RngStream
{
  public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    // Child stream fully determined by (seed, stream id, index). Used to give
    // every Monte-Carlo trial its own independent stream.
    RngStream substream(std::uint64_t index) const;

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    double uniform();     // [0, 1)
    double uniform_pos(); // (0, 1]

    // Standard normal pair (Box-Muller).
    void normal_pair(double &z0, double &z1);
    double normal();

    // CN(0,1): real and imaginary parts independent N(0, 1/2).
    std::complex<double> complex_gaussian();

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t counter_ = 0;
    std::uint32_t block_[4] = {0, 0, 0, 0};
    int pos_ = 4; // next unread word of block_
};

} // namespace rmtcap

#endif

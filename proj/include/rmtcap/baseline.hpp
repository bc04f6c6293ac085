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

#ifndef RMTCAP_BASELINE_HPP
#define RMTCAP_BASELINE_HPP

#include "rmtcap/mpm.hpp"

namespace rmtcap
{

struct CdmOptions
{
    int trials = 20;
    int threads = 1;
};

// Exact baseline: per trial (1/J_m) log det(I + (Q o G)(Q o G)^H) by
// Cholesky. Trial t draws G from base.substream(t), so estimates with the
// same base stream see the same realizations as the MPM estimator.
CapacityEstimate estimate_capacity_cdm(const ChannelProfile &profile,
                                       const CdmOptions &options,
                                       const RngStream &base);

// |mpm - cdm| / cdm. Both zero gives 0; a zero baseline against a nonzero
// estimate throws.
double relative_error(const CapacityEstimate &mpm, const CapacityEstimate &cdm);

} // namespace rmtcap

#endif

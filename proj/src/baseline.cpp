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

#include "rmtcap/baseline.hpp"

#include "rmtcap/numkernel.hpp"
#include "rmtcap/parallel.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rmtcap
{

CapacityEstimate estimate_capacity_cdm(const ChannelProfile &profile,
                                       const CdmOptions &options,
                                       const RngStream &base)
{
    if (options.trials < 1)
        throw std::invalid_argument("estimate_capacity_cdm: trials must be >= 1");

    CapacityEstimate est;
    est.method = "cdm";
    est.trials = options.trials;
    est.per_trial.assign(options.trials, 0.0);
    est.per_trial_time_s.assign(options.trials, 0.0);
    est.diagnostics.assign(options.trials, TrialDiagnostics{});

    if (profile.J_m == 0 || profile.K_m == 0)
    {
        est.value = est.mean = 0.0;
        return est;
    }

    const auto t0 = std::chrono::steady_clock::now();
    parallel_indexed(options.trials, options.threads, [&](int t) {
        const auto trial_start = std::chrono::steady_clock::now();
        try
        {
            RngStream stream = base.substream(std::uint64_t(t));
            ComplexMatrix G = sample_complex_gaussian(stream, profile.J_m, profile.K_m);
            ComplexMatrix B = gain_realization(profile.Q, G);
            est.per_trial[t] = logdet_i_plus_gram(B) / double(profile.J_m);
        }
        catch (const std::exception &e)
        {
            std::ostringstream msg;
            msg << "cdm trial " << t << ": " << e.what();
            throw std::runtime_error(msg.str());
        }
        est.per_trial_time_s[t] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - trial_start).count();
    });
    est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    double sum = 0.0;
    for (double v : est.per_trial)
        sum += v;
    est.mean = sum / options.trials;
    est.value = est.mean;
    if (options.trials > 1)
    {
        double ss = 0.0;
        for (double v : est.per_trial)
            ss += (v - est.mean) * (v - est.mean);
        est.std_error = std::sqrt(ss / double(options.trials - 1)) / std::sqrt(double(options.trials));
    }
    return est;
}

double relative_error(const CapacityEstimate &mpm, const CapacityEstimate &cdm)
{
    if (cdm.value == 0.0)
    {
        if (mpm.value == 0.0)
            return 0.0;
        throw std::runtime_error("relative_error: baseline capacity is zero");
    }
    return std::abs(mpm.value - cdm.value) / std::abs(cdm.value);
}

} // namespace rmtcap

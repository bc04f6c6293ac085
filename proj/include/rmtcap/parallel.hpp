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

#ifndef RMTCAP_PARALLEL_HPP
#define RMTCAP_PARALLEL_HPP

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rmtcap
{

// Run fn(0..count-1) on up to `threads` workers. Results must be written to
// per-index slots by the caller; the first failing index (in index order)
// has its exception rethrown after all workers join.
inline void parallel_indexed(int count, int threads, const std::function<void(int)> &fn)
{
    if (count <= 0)
        return;
    if (threads <= 1 || count == 1)
    {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }

    const int workers = std::min(threads, count);
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (int i = w; i < count; i += workers)
            {
                try
                {
                    fn(i);
                }
                catch (...)
                {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto &t : pool)
        t.join();
    for (int i = 0; i < count; ++i)
        if (errors[i])
            std::rethrow_exception(errors[i]);
}

} // namespace rmtcap

#endif

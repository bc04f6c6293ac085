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

#ifndef RMTCAP_MATRIX_HPP
#define RMTCAP_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace rmtcap
{

using cxdouble = std::complex<double>;

// Dense row-major complex matrix.
struct ComplexMatrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cxdouble> data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cxdouble &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cxdouble &operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    cxdouble *row(std::size_t i) { return data.data() + i * cols; }
    const cxdouble *row(std::size_t i) const { return data.data() + i * cols; }

    bool empty() const { return rows == 0 || cols == 0; }
};

// Dense row-major real matrix.
struct RealMatrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const double &operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double *row(std::size_t i) { return data.data() + i * cols; }
    const double *row(std::size_t i) const { return data.data() + i * cols; }

    bool empty() const { return rows == 0 || cols == 0; }
};

} // namespace rmtcap

#endif

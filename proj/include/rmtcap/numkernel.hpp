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

#ifndef RMTCAP_NUMKERNEL_HPP
#define RMTCAP_NUMKERNEL_HPP

#include "rmtcap/matrix.hpp"
#include "rmtcap/rng.hpp"

#include <functional>
#include <vector>

namespace rmtcap
{

// i.i.d. CN(0,1) matrix from the given stream, filled row-major.
ComplexMatrix sample_complex_gaussian(RngStream &rng, std::size_t rows, std::size_t cols);

// Rayleigh-quotient estimate of the largest eigenvalue of A = B B^H after
// `iters` power iterations, using only products with B and B^H (A is never
// formed, cost O(iters * rows * cols)). The estimate never exceeds the true
// maximum eigenvalue. Start vector is drawn from `rng`. Zero B returns 0.
double power_method_max_eig(const ComplexMatrix &B, int iters, RngStream &rng);

// Lower-triangular L with L L^H = M for Hermitian positive definite M.
// Throws std::runtime_error on a non-positive pivot.
ComplexMatrix hermitian_cholesky(const ComplexMatrix &M);

// log det(I + B B^H) in natural log, via a Cholesky factorization of the
// Gram matrix. Nonnegative for every B, zero iff B = 0.
double logdet_i_plus_gram(const ComplexMatrix &B);

// Nodes x_k in (a,b) and weights w_k of the Gauss-Chebyshev rule of the
// second kind mapped to [a,b]:
//   integral_a^b sqrt((b-x)(x-a)) g(x) dx  ~=  sum_k w_k g(x_k),
// exact for polynomial g of degree <= 2*nodes - 1.
void chebyshev_weighted_nodes(double a, double b, int nodes,
                              std::vector<double> &x, std::vector<double> &w);

// integral_a^b sqrt((b-x)(x-a)) g(x) dx by the rule above. Requires a < b.
double chebyshev_weighted_integral(const std::function<double(double)> &g,
                                   double a, double b, int nodes);

struct DenseSolve
{
    std::vector<double> x;
    double residual = 0.0; // max-norm of A x - rhs
};

// Gaussian elimination with partial pivoting for small square systems.
// Throws std::runtime_error when a pivot falls below 1e-14 * max-norm of A.
DenseSolve solve_dense(const RealMatrix &A, const std::vector<double> &rhs);

// All eigenvalues of a Hermitian matrix (dimension <= 64), ascending, via
// cyclic Jacobi rotations. Test/oracle use only; throws std::invalid_argument
// when the input is measurably non-Hermitian.
std::vector<double> eig_hermitian_small(const ComplexMatrix &M);

} // namespace rmtcap

#endif

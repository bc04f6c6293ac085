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

#include "rmtcap/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmtcap
{

namespace
{

// sum_k a[k] * conj(b[k]), fixed evaluation order, two-way unrolled.
// std::complex<double> arrays may be accessed as interleaved doubles.
cxdouble dot_conj(const cxdouble *a, const cxdouble *b, std::size_t n)
{
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    double re0 = 0.0, re1 = 0.0, im0 = 0.0, im1 = 0.0;
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2)
    {
        double ar0 = pa[2 * k], ai0 = pa[2 * k + 1];
        double br0 = pb[2 * k], bi0 = pb[2 * k + 1];
        double ar1 = pa[2 * k + 2], ai1 = pa[2 * k + 3];
        double br1 = pb[2 * k + 2], bi1 = pb[2 * k + 3];
        re0 += ar0 * br0 + ai0 * bi0;
        im0 += ai0 * br0 - ar0 * bi0;
        re1 += ar1 * br1 + ai1 * bi1;
        im1 += ai1 * br1 - ar1 * bi1;
    }
    if (k < n)
    {
        double ar = pa[2 * k], ai = pa[2 * k + 1];
        double br = pb[2 * k], bi = pb[2 * k + 1];
        re0 += ar * br + ai * bi;
        im0 += ai * br - ar * bi;
    }
    return {re0 + re1, im0 + im1};
}

// In-place Cholesky of the lower triangle of the n x n matrix stored in S
// (row-major). The strict upper triangle is ignored.
void cholesky_lower_inplace(std::vector<cxdouble> &S, std::size_t n)
{
    for (std::size_t j = 0; j < n; ++j)
    {
        cxdouble *rowj = S.data() + j * n;
        double d = rowj[j].real() - dot_conj(rowj, rowj, j).real();
        if (!(d > 0.0) || !std::isfinite(d))
            throw std::runtime_error("hermitian_cholesky: matrix is not positive definite");
        double ljj = std::sqrt(d);
        rowj[j] = ljj;
        for (std::size_t i = j + 1; i < n; ++i)
        {
            cxdouble *rowi = S.data() + i * n;
            rowi[j] = (rowi[j] - dot_conj(rowi, rowj, j)) / ljj;
        }
    }
}

} // namespace

ComplexMatrix sample_complex_gaussian(RngStream &rng, std::size_t rows, std::size_t cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("sample_complex_gaussian: rows and cols must be >= 1");
    ComplexMatrix G(rows, cols);
    for (auto &g : G.data)
        g = rng.complex_gaussian();
    return G;
}

double power_method_max_eig(const ComplexMatrix &B, int iters, RngStream &rng)
{
    if (iters < 1)
        throw std::invalid_argument("power_method_max_eig: iters must be >= 1");
    if (B.empty())
        return 0.0;

    const std::size_t J = B.rows, K = B.cols;
    std::vector<cxdouble> x(J), y(K), z(J);

    for (auto &v : x)
        v = rng.complex_gaussian();
    double nx = 0.0;
    for (const auto &v : x)
        nx += std::norm(v);
    if (nx == 0.0)
        return 0.0;
    nx = std::sqrt(nx);
    for (auto &v : x)
        v /= nx;

    auto apply_bh = [&](const std::vector<cxdouble> &in, std::vector<cxdouble> &out) {
        std::fill(out.begin(), out.end(), cxdouble(0.0, 0.0));
        for (std::size_t i = 0; i < J; ++i)
        {
            const cxdouble xi = in[i];
            const cxdouble *bi = B.row(i);
            for (std::size_t k = 0; k < K; ++k)
                out[k] += std::conj(bi[k]) * xi;
        }
    };

    for (int t = 0; t < iters; ++t)
    {
        apply_bh(x, y);
        for (std::size_t i = 0; i < J; ++i)
        {
            // z = B y, row dot without conjugation
            const cxdouble *bi = B.row(i);
            cxdouble s(0.0, 0.0);
            for (std::size_t k = 0; k < K; ++k)
                s += bi[k] * y[k];
            z[i] = s;
        }
        double nz = 0.0;
        for (const auto &v : z)
            nz += std::norm(v);
        if (nz == 0.0)
            return 0.0;
        nz = std::sqrt(nz);
        for (std::size_t i = 0; i < J; ++i)
            x[i] = z[i] / nz;
    }

    // Rayleigh quotient of the final unit iterate: x^H B B^H x = |B^H x|^2.
    apply_bh(x, y);
    double lambda = 0.0;
    for (const auto &v : y)
        lambda += std::norm(v);
    return lambda;
}

ComplexMatrix hermitian_cholesky(const ComplexMatrix &M)
{
    if (M.rows != M.cols)
        throw std::invalid_argument("hermitian_cholesky: matrix must be square");
    const std::size_t n = M.rows;
    std::vector<cxdouble> S = M.data;
    cholesky_lower_inplace(S, n);
    ComplexMatrix L(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            L(i, j) = S[i * n + j];
    return L;
}

double logdet_i_plus_gram(const ComplexMatrix &B)
{
    if (B.rows == 0)
        return 0.0;
    const std::size_t J = B.rows, K = B.cols;
    std::vector<cxdouble> S(J * J, cxdouble(0.0, 0.0));
    for (std::size_t i = 0; i < J; ++i)
    {
        const cxdouble *bi = B.row(i);
        for (std::size_t j = 0; j <= i; ++j)
            S[i * J + j] = dot_conj(bi, B.row(j), K);
        S[i * J + i] += 1.0;
    }
    cholesky_lower_inplace(S, J);
    double logdet = 0.0;
    for (std::size_t j = 0; j < J; ++j)
        logdet += std::log(S[j * J + j].real());
    return 2.0 * logdet;
}

void chebyshev_weighted_nodes(double a, double b, int nodes,
                              std::vector<double> &x, std::vector<double> &w)
{
    if (!(a < b))
        throw std::invalid_argument("chebyshev_weighted_nodes: need a < b");
    if (nodes < 1)
        throw std::invalid_argument("chebyshev_weighted_nodes: need nodes >= 1");
    x.resize(nodes);
    w.resize(nodes);
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    const double scale = rad * rad; // from sqrt((b-x)(x-a)) = rad*sqrt(1-t^2) and dx = rad*dt
    for (int k = 1; k <= nodes; ++k)
    {
        double th = k * M_PI / (nodes + 1);
        double s = std::sin(th);
        x[k - 1] = mid + rad * std::cos(th);
        w[k - 1] = scale * (M_PI / (nodes + 1)) * s * s;
    }
}

double chebyshev_weighted_integral(const std::function<double(double)> &g,
                                   double a, double b, int nodes)
{
    std::vector<double> x, w;
    chebyshev_weighted_nodes(a, b, nodes, x, w);
    double sum = 0.0;
    for (int k = 0; k < nodes; ++k)
        sum += w[k] * g(x[k]);
    return sum;
}

DenseSolve solve_dense(const RealMatrix &A, const std::vector<double> &rhs)
{
    if (A.rows != A.cols)
        throw std::invalid_argument("solve_dense: matrix must be square");
    const std::size_t n = A.rows;
    if (rhs.size() != n)
        throw std::invalid_argument("solve_dense: rhs size mismatch");

    double anorm = 0.0; // max-norm (max absolute row sum)
    for (std::size_t i = 0; i < n; ++i)
    {
        double rsum = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            rsum += std::abs(A(i, j));
        anorm = std::max(anorm, rsum);
    }

    std::vector<double> M = A.data;
    std::vector<double> b = rhs;
    const double pivot_floor = 1e-14 * anorm;

    for (std::size_t col = 0; col < n; ++col)
    {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(M[r * n + col]) > std::abs(M[piv * n + col]))
                piv = r;
        if (std::abs(M[piv * n + col]) <= pivot_floor)
            throw std::runtime_error("solve_dense: singular or near-singular system");
        if (piv != col)
        {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(M[piv * n + j], M[col * n + j]);
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r)
        {
            double f = M[r * n + col] / M[col * n + col];
            if (f == 0.0)
                continue;
            for (std::size_t j = col; j < n; ++j)
                M[r * n + j] -= f * M[col * n + j];
            b[r] -= f * b[col];
        }
    }

    DenseSolve out;
    out.x.assign(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;)
    {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j)
            s -= M[ii * n + j] * out.x[j];
        out.x[ii] = s / M[ii * n + ii];
    }

    for (std::size_t i = 0; i < n; ++i)
    {
        double s = -rhs[i];
        for (std::size_t j = 0; j < n; ++j)
            s += A(i, j) * out.x[j];
        out.residual = std::max(out.residual, std::abs(s));
    }
    return out;
}

std::vector<double> eig_hermitian_small(const ComplexMatrix &M)
{
    if (M.rows != M.cols)
        throw std::invalid_argument("eig_hermitian_small: matrix must be square");
    const std::size_t n = M.rows;
    if (n > 64)
        throw std::invalid_argument("eig_hermitian_small: dimension limited to 64");
    if (n == 0)
        return {};

    double amax = 0.0;
    for (const auto &v : M.data)
        amax = std::max(amax, std::abs(v));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::abs(M(i, j) - std::conj(M(j, i))) > 1e-12 * std::max(1.0, amax))
                throw std::invalid_argument("eig_hermitian_small: matrix is not Hermitian");

    std::vector<cxdouble> A = M.data;
    auto at = [&](std::size_t i, std::size_t j) -> cxdouble & { return A[i * n + j]; };

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j)
                    s += std::norm(at(i, j));
        return std::sqrt(s);
    };

    const double off0 = off_norm();
    if (off0 > 0.0)
    {
        for (int sweep = 0; sweep < 40; ++sweep)
        {
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = p + 1; q < n; ++q)
                {
                    cxdouble apq = at(p, q);
                    double h = std::abs(apq);
                    if (h == 0.0)
                        continue;
                    cxdouble f = std::conj(apq) / h; // phase making the pivot real
                    double app = at(p, p).real();
                    double aqq = at(q, q).real();
                    double tau = (aqq - app) / (2.0 * h);
                    double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                    double c = 1.0 / std::sqrt(1.0 + t * t);
                    double s = t * c;
                    cxdouble fs = f * s, fc = f * c;
                    for (std::size_t k = 0; k < n; ++k)
                    {
                        cxdouble zp = at(k, p), zq = at(k, q);
                        at(k, p) = c * zp - fs * zq;
                        at(k, q) = s * zp + fc * zq;
                    }
                    cxdouble fsc = std::conj(f) * s, fcc = std::conj(f) * c;
                    for (std::size_t k = 0; k < n; ++k)
                    {
                        cxdouble zp = at(p, k), zq = at(q, k);
                        at(p, k) = c * zp - fsc * zq;
                        at(q, k) = s * zp + fcc * zq;
                    }
                }
            if (off_norm() < 1e-12 * off0)
                break;
        }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i)
        ev[i] = at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace rmtcap

// SPDX-License-Identifier: Apache-2.0
//
// oamcap: electromagnetic capacity analysis of UCA-based OAM links
// Copyright (C) 2026 The oamcap authors
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

#include "oamcap/correlation.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "oamcap/error.hpp"

namespace oamcap {
namespace {

void check_ring_mode(int mode, std::size_t ring_size) {
    if (mode < 0 || static_cast<std::size_t>(mode) >= ring_size)
        throw InvalidArgument("mode bin " + std::to_string(mode) + " outside 0.." + std::to_string(ring_size - 1));
}

// Per-point 3 x N_t response matrices for the whole ring.
std::vector<Eigen::Matrix<cdouble, 3, Eigen::Dynamic>> ring_responses(std::span<const Vec3> ring,
                                                                      const TransmitArray& array,
                                                                      const PhysicalConstants& constants) {
    std::vector<Eigen::Matrix<cdouble, 3, Eigen::Dynamic>> out;
    out.reserve(ring.size());
    for (const Vec3& r : ring) out.push_back(array.response(r, constants));
    return out;
}

}  // namespace

cdouble current_cross_correlation(int source_index, int other_index, int n_sources) {
    if (n_sources < 1) throw InvalidArgument("source count must be positive");
    if (source_index < 1 || source_index > n_sources || other_index < 1 || other_index > n_sources)
        throw InvalidArgument("source index out of range 1.." + std::to_string(n_sources));
    const int diff = source_index - other_index;
    cdouble sum{0.0, 0.0};
    for (int m = 0; m < n_sources; ++m) {
        const long long k = ((static_cast<long long>(m) * diff) % n_sources + n_sources) % n_sources;
        sum += std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / n_sources);
    }
    return sum / static_cast<double>(n_sources);
}

CMat3 field_autocorrelation(const Vec3& r, const Vec3& r_prime, const TransmitArray& array,
                            const PhysicalConstants& constants) {
    const auto a = array.response(r, constants);
    const auto b = array.response(r_prime, constants);
    return a * b.adjoint();
}

CMat3 received_cross_correlation(int mode, int other_mode, std::span<const Vec3> ring, const TransmitArray& array,
                                 const PhysicalConstants& constants) {
    check_ring_mode(mode, ring.size());
    check_ring_mode(other_mode, ring.size());
    const auto responses = ring_responses(ring, array, constants);
    const int n = static_cast<int>(ring.size());
    // Demodulated responses y_l = sum_n w_l(n) A(r_n), then R = y_l y_l'^H.
    Eigen::Matrix<cdouble, 3, Eigen::Dynamic> yl = Eigen::Matrix<cdouble, 3, Eigen::Dynamic>::Zero(3, array.n_sources());
    Eigen::Matrix<cdouble, 3, Eigen::Dynamic> ylp = yl;
    const CMatrix d = ring_dft_matrix(n);
    for (int nr = 0; nr < n; ++nr) {
        yl += d(mode, nr) * responses[nr];
        ylp += d(other_mode, nr) * responses[nr];
    }
    return yl * ylp.adjoint();
}

CMatrix ring_source_channel(std::span<const Vec3> ring, const TransmitArray& array,
                            const PhysicalConstants& constants) {
    const auto nr = static_cast<Eigen::Index>(ring.size());
    const int nt = array.n_sources();
    CMatrix a(nr, nt);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (Eigen::Index i = 0; i < nr; ++i) {
        try {
            for (int t = 1; t <= nt; ++t) a(i, t - 1) = array.source_response(ring[i], t, constants)(1);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return a;
}

CMatrix ring_dft_matrix(int n_points) {
    if (n_points < 1) throw InvalidArgument("ring size must be positive");
    CMatrix d(n_points, n_points);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_points));
    for (int l = 0; l < n_points; ++l)
        for (int nr = 0; nr < n_points; ++nr) {
            const long long k = (static_cast<long long>(l) * nr) % n_points;
            d(l, nr) = scale * std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / n_points);
        }
    return d;
}

cdouble received_cross_correlation_yy(int mode, int other_mode, std::span<const Vec3> ring,
                                      const TransmitArray& array, const PhysicalConstants& constants) {
    check_ring_mode(mode, ring.size());
    check_ring_mode(other_mode, ring.size());
    const CMatrix a = ring_source_channel(ring, array, constants);
    const CMatrix d = ring_dft_matrix(static_cast<int>(ring.size()));
    const CVector yl = (d.row(mode) * a).transpose();
    const CVector ylp = (d.row(other_mode) * a).transpose();
    // sum_t y_l(t) conj(y_l'(t)); Eigen's dot conjugates its left operand.
    return ylp.dot(yl);
}

OamCorrelationMatrix build_oam_correlation_matrix(std::span<const Vec3> ring, const TransmitArray& array,
                                                  const PhysicalConstants& constants) {
    if (ring.empty()) throw InvalidArgument("receive ring is empty");
    const CMatrix a = ring_source_channel(ring, array, constants);
    const CMatrix h = ring_dft_matrix(static_cast<int>(ring.size())) * a;
    OamCorrelationMatrix r;
    r.matrix = h * h.adjoint();
    // Remove round-off asymmetry of the product.
    r.matrix = (0.5 * (r.matrix + r.matrix.adjoint())).eval();
    return r;
}

}  // namespace oamcap

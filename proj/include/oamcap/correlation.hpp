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

#pragma once

#include <span>

#include "oamcap/fields.hpp"

namespace oamcap {

/// Hermitian N_r x N_r correlation of the demodulated y-component mode signals.
/// Rows and columns follow DFT bin order 0..N_r-1.
struct OamCorrelationMatrix {
    CMatrix matrix;

    Eigen::Index size() const noexcept { return matrix.rows(); }
    cdouble operator()(Eigen::Index l, Eigen::Index lp) const { return matrix(l, lp); }
};

/// E{J_{n_t} J_{n'_t}^*} for unit-power independent inputs, evaluated from the
/// closed-form DFT sum (1/N_t) sum_m exp(j 2 pi (m-1)(n_t - n'_t)/N_t).
/// Exactly 1 on the diagonal and 0 elsewhere. Indices are 1-based.
cdouble current_cross_correlation(int source_index, int other_index, int n_sources);

/// R_E(r, r') = E{E(r) E(r')^H} = sum_{n_t} c(r, n_t) c(r', n_t)^H, the source
/// double sum having collapsed through the delta current correlation.
CMat3 field_autocorrelation(const Vec3& r, const Vec3& r_prime, const TransmitArray& array,
                            const PhysicalConstants& constants);

/// Full 3x3 E{y_l y_{l'}^H} for ring modes l, l' (diagnostic; capacity uses the yy entry).
CMat3 received_cross_correlation(int mode, int other_mode, std::span<const Vec3> ring, const TransmitArray& array,
                                 const PhysicalConstants& constants);

/// y-component cross-correlation R_y(l, l') between received modes (bins 0..N_r-1).
cdouble received_cross_correlation_yy(int mode, int other_mode, std::span<const Vec3> ring,
                                      const TransmitArray& array, const PhysicalConstants& constants);

/// N_r x N_t matrix A(n_r, n_t) = c_y(r_{n_r}, n_t): the antenna-domain y-channel
/// from per-source currents to ring samples.
CMatrix ring_source_channel(std::span<const Vec3> ring, const TransmitArray& array,
                            const PhysicalConstants& constants);

/// Mode-domain demodulation matrix D(l, n_r) = exp(j 2 pi l (n_r - 1)/N_r) / sqrt(N_r).
CMatrix ring_dft_matrix(int n_points);

/// Assembles R_OAM as (D A)(D A)^H. A single O(N_r N_t) kernel pass replaces
/// the literal quadruple sum.
OamCorrelationMatrix build_oam_correlation_matrix(std::span<const Vec3> ring, const TransmitArray& array,
                                                  const PhysicalConstants& constants);

}  // namespace oamcap

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
#include <vector>

#include "oamcap/constants.hpp"
#include "oamcap/geometry.hpp"
#include "oamcap/types.hpp"

namespace oamcap {

/// How each line source is integrated: the equal-weight feed sum of the
/// discrete model, or Gauss-Legendre quadrature of the continuous line integral.
enum class SourceForm { Discrete, Continuous };

inline constexpr int kDefaultQuadratureOrder = 32;

/// Current carried by each of the N_l feeds of a source with amplitude J.
///  - PerFeedPower: J / sqrt(N_l), so a unit-power mode puts 1/sqrt(N_t N_l)
///    on every feed and the total feed power is independent of N_l.
///  - SourceAverage: J / N_l, the plain feed average.
enum class FeedNormalization { PerFeedPower, SourceAverage };

/// Per-feed weight 1/sqrt(N_l) or 1/N_l.
double feed_weight(int feeds_per_source, FeedNormalization normalization);

/// DFT bin carrying signed OAM mode `mode` on an n-element ring (mode mod n).
int mode_to_bin(int mode, int n);

/// Signed label of bin b: b for b <= n/2, b - n above.
int bin_to_mode(int bin, int n);

/// Normalized IDFT matrix, W(n1, n2) = exp(j 2 pi (n1-1)(n2-1)/n) / sqrt(n).
CMatrix idft_matrix(int n);

/// Unit-power one-hot excitation for signed mode `mode`.
CVector pure_mode_excitation(int mode, int n_sources);

/// Per-source y-current amplitudes J = W x.
CVector synthesize_currents(const CVector& excitation, int n_sources);

/// Transmit UCA together with the source-integration rule. Owns the feed
/// layout and evaluates the per-source Green's column
///
///   c(r, n_t) = w sum_{n_l} G_{:,y}(r, s_{n_t,n_l})            (discrete)
///   c(r, n_t) = w N_l (1/L) int G_{:,y}(r, s) ds^y              (continuous)
///
/// with w = feed_weight(N_l), so that E(r) = sum_{n_t} c(r, n_t) J_{n_t} in
/// either form and the continuous form is the dense-feed limit of the discrete one.
class TransmitArray {
public:
    explicit TransmitArray(const TransmitArrayConfig& config, SourceForm form = SourceForm::Discrete,
                           int quadrature_order = kDefaultQuadratureOrder,
                           FeedNormalization normalization = FeedNormalization::PerFeedPower);

    const TransmitArrayConfig& config() const noexcept { return config_; }
    SourceForm form() const noexcept { return form_; }
    int quadrature_order() const noexcept { return quadrature_order_; }
    FeedNormalization normalization() const noexcept { return normalization_; }
    int n_sources() const noexcept { return config_.n_sources; }
    const std::vector<FeedPoint>& feeds() const noexcept { return feeds_; }

    /// Unit-current y response of source n_t (1-based) at r.
    CVec3 source_response(const Vec3& r, int source_index, const PhysicalConstants& constants) const;

    /// 3 x N_t matrix whose columns are source_response for every source.
    Eigen::Matrix<cdouble, 3, Eigen::Dynamic> response(const Vec3& r, const PhysicalConstants& constants) const;

    /// Field at r for the given source currents.
    CVec3 field(const Vec3& r, const CVector& currents, const PhysicalConstants& constants) const;

private:
    TransmitArrayConfig config_;
    SourceForm form_;
    int quadrature_order_;
    FeedNormalization normalization_;
    std::vector<FeedPoint> feeds_;
    std::vector<double> nodes_;    // on [-1, 1]
    std::vector<double> weights_;  // sum to 2
};

/// Discrete-form field: E(r) = w sum_{n_t, n_l} G_{:,y}(r, s_{n_t,n_l}) J_{n_t}.
/// N_l is inferred as feeds.size() / currents.size().
CVec3 field_at_point_discrete(const Vec3& r, const CVector& currents, std::span<const FeedPoint> feeds,
                              const PhysicalConstants& constants,
                              FeedNormalization normalization = FeedNormalization::PerFeedPower);

/// A y-directed line source of the transmit array.
struct SourceSegment {
    Vec3 center = Vec3::Zero();
    double length = 0.0;
};

std::vector<SourceSegment> build_source_segments(const TransmitArrayConfig& config);

/// Continuous-form field by Gauss-Legendre quadrature of each line integral,
/// normalized by the source length and scaled like N_l feeds of the discrete form.
CVec3 field_at_point_continuous(const Vec3& r, const CVector& currents, std::span<const SourceSegment> segments,
                                const PhysicalConstants& constants, int quadrature_order, int feeds_per_source = 1,
                                FeedNormalization normalization = FeedNormalization::PerFeedPower);

/// Complex field on an observer grid plus derived views.
struct FieldMap {
    ObserverGrid grid;
    std::vector<Vec3> positions;
    std::vector<CVec3> fields;

    std::size_t size() const noexcept { return fields.size(); }
    /// |E_component|^2 per sample; component in {0, 1, 2}.
    std::vector<double> component_power(int component) const;
    /// arg(E_component) in radians, [-pi, pi].
    std::vector<double> component_phase(int component) const;
    /// |E|^2 per sample.
    std::vector<double> total_power() const;
    /// |E| per sample.
    std::vector<double> magnitude() const;
};

FieldMap render_field_map(const ObserverGrid& grid, const CVector& excitation, const TransmitArray& array,
                          const PhysicalConstants& constants);

/// Fields at arbitrary points for one excitation; evaluated concurrently.
std::vector<CVec3> fields_at_points(std::span<const Vec3> points, const CVector& excitation,
                                    const TransmitArray& array, const PhysicalConstants& constants);

/// y_l = (1/sqrt(N_r)) sum_{n_r} E(r_{n_r}) exp(j 2 pi l (n_r - 1)/N_r), noise-free.
CVec3 demodulate_ring(std::span<const CVec3> samples, int mode);

}  // namespace oamcap

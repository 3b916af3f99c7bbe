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

#include "oamcap/fields.hpp"

#include <cmath>
#include <exception>
#include <memory>
#include <string>

#include <gsl/gsl_integration.h>

#include "oamcap/error.hpp"
#include "oamcap/green.hpp"

namespace oamcap {
namespace {

cdouble unit_phasor(long long numerator, int denominator) {
    // Reduce the integer phase first so large products stay exact.
    const long long reduced = ((numerator % denominator) + denominator) % denominator;
    return std::polar(1.0, 2.0 * kPi * static_cast<double>(reduced) / denominator);
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(order)), &gsl_integration_glfixed_table_free);
    if (!table) throw InvalidArgument("cannot build Gauss-Legendre rule of order " + std::to_string(order));
    nodes.resize(order);
    weights.resize(order);
    for (int i = 0; i < order; ++i)
        gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &nodes[i], &weights[i], table.get());
}

}  // namespace

double feed_weight(int feeds_per_source, FeedNormalization normalization) {
    if (feeds_per_source < 1) throw InvalidArgument("feeds per source must be positive");
    const double nl = static_cast<double>(feeds_per_source);
    return normalization == FeedNormalization::PerFeedPower ? 1.0 / std::sqrt(nl) : 1.0 / nl;
}

int mode_to_bin(int mode, int n) {
    if (n < 1) throw InvalidArgument("ring size must be positive");
    return ((mode % n) + n) % n;
}

int bin_to_mode(int bin, int n) {
    if (n < 1) throw InvalidArgument("ring size must be positive");
    const int b = mode_to_bin(bin, n);
    return (2 * b > n) ? b - n : b;
}

CMatrix idft_matrix(int n) {
    if (n < 1) throw InvalidArgument("IDFT size must be positive");
    CMatrix w(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) w(r, c) = scale * unit_phasor(static_cast<long long>(r) * c, n);
    return w;
}

CVector pure_mode_excitation(int mode, int n_sources) {
    CVector x = CVector::Zero(n_sources);
    x(mode_to_bin(mode, n_sources)) = 1.0;
    return x;
}

CVector synthesize_currents(const CVector& excitation, int n_sources) {
    if (excitation.size() != n_sources)
        throw DimensionError("excitation has " + std::to_string(excitation.size()) + " entries, expected " +
                             std::to_string(n_sources));
    return idft_matrix(n_sources) * excitation;
}

// --- TransmitArray ----------------------------------------------------------

TransmitArray::TransmitArray(const TransmitArrayConfig& config, SourceForm form, int quadrature_order,
                             FeedNormalization normalization)
    : config_(config),
      form_(form),
      quadrature_order_(quadrature_order),
      normalization_(normalization),
      feeds_(build_feed_points(config)) {
    if (form_ == SourceForm::Continuous) {
        if (quadrature_order_ < 2) throw InvalidArgument("quadrature order must be at least 2");
        gauss_legendre(quadrature_order_, nodes_, weights_);
    }
}

CVec3 TransmitArray::source_response(const Vec3& r, int source_index, const PhysicalConstants& constants) const {
    if (source_index < 1 || source_index > config_.n_sources)
        throw InvalidArgument("source index " + std::to_string(source_index) + " out of range");
    CVec3 acc = CVec3::Zero();
    const int nl = config_.feeds_per_source;
    const double w = feed_weight(nl, normalization_);
    if (form_ == SourceForm::Discrete) {
        const auto first = static_cast<std::size_t>(source_index - 1) * nl;
        for (int i = 0; i < nl; ++i) acc += green_column_y(r, feeds_[first + i].position, constants);
        return acc * w;
    }
    const Vec3 center = source_center(config_, source_index);
    const double half = config_.source_length / 2.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Vec3 s(center.x(), center.y() + half * nodes_[i], 0.0);
        acc += weights_[i] * green_column_y(r, s, constants);
    }
    // (1/L) * (L/2) * sum w_i f(s_i), scaled like N_l feeds
    return acc * (w * nl / 2.0);
}

Eigen::Matrix<cdouble, 3, Eigen::Dynamic> TransmitArray::response(const Vec3& r,
                                                                  const PhysicalConstants& constants) const {
    Eigen::Matrix<cdouble, 3, Eigen::Dynamic> out(3, config_.n_sources);
    for (int nt = 1; nt <= config_.n_sources; ++nt) out.col(nt - 1) = source_response(r, nt, constants);
    return out;
}

CVec3 TransmitArray::field(const Vec3& r, const CVector& currents, const PhysicalConstants& constants) const {
    if (currents.size() != config_.n_sources)
        throw DimensionError("expected " + std::to_string(config_.n_sources) + " source currents");
    CVec3 e = CVec3::Zero();
    for (int nt = 1; nt <= config_.n_sources; ++nt) e += source_response(r, nt, constants) * currents(nt - 1);
    return e;
}

CVec3 field_at_point_discrete(const Vec3& r, const CVector& currents, std::span<const FeedPoint> feeds,
                              const PhysicalConstants& constants, FeedNormalization normalization) {
    const auto n_sources = static_cast<std::size_t>(currents.size());
    if (n_sources == 0 || feeds.size() % n_sources != 0)
        throw DimensionError("feed count is not a multiple of the source count");
    const double w = feed_weight(static_cast<int>(feeds.size() / n_sources), normalization);
    CVec3 e = CVec3::Zero();
    for (const FeedPoint& feed : feeds) {
        if (feed.source_index < 1 || static_cast<std::size_t>(feed.source_index) > n_sources)
            throw DimensionError("feed refers to source " + std::to_string(feed.source_index));
        e += green_column_y(r, feed.position, constants) * currents(feed.source_index - 1);
    }
    return e * w;
}

std::vector<SourceSegment> build_source_segments(const TransmitArrayConfig& config) {
    validate(config);
    std::vector<SourceSegment> segments;
    segments.reserve(static_cast<std::size_t>(config.n_sources));
    for (int nt = 1; nt <= config.n_sources; ++nt) segments.push_back({source_center(config, nt), config.source_length});
    return segments;
}

CVec3 field_at_point_continuous(const Vec3& r, const CVector& currents, std::span<const SourceSegment> segments,
                                const PhysicalConstants& constants, int quadrature_order, int feeds_per_source,
                                FeedNormalization normalization) {
    if (quadrature_order < 2) throw InvalidArgument("quadrature order must be at least 2");
    if (static_cast<std::size_t>(currents.size()) != segments.size())
        throw DimensionError("one current per source segment required");
    const double scale = feed_weight(feeds_per_source, normalization) * feeds_per_source / 2.0;
    std::vector<double> nodes, weights;
    gauss_legendre(quadrature_order, nodes, weights);
    CVec3 e = CVec3::Zero();
    for (std::size_t nt = 0; nt < segments.size(); ++nt) {
        const SourceSegment& seg = segments[nt];
        CVec3 acc = CVec3::Zero();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const Vec3 s = seg.center + Vec3(0.0, seg.length / 2.0 * nodes[i], 0.0);
            acc += weights[i] * green_column_y(r, s, constants);
        }
        e += (acc * scale) * currents(static_cast<Eigen::Index>(nt));
    }
    return e;
}

// --- Field maps -------------------------------------------------------------

std::vector<CVec3> fields_at_points(std::span<const Vec3> points, const CVector& excitation,
                                    const TransmitArray& array, const PhysicalConstants& constants) {
    const CVector currents = synthesize_currents(excitation, array.n_sources());
    std::vector<CVec3> out(points.size(), CVec3::Zero());
    const auto n = static_cast<long long>(points.size());
    // Errors inside the parallel region are captured and rethrown afterwards.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < n; ++i) {
        try {
            out[i] = array.field(points[i], currents, constants);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

FieldMap render_field_map(const ObserverGrid& grid, const CVector& excitation, const TransmitArray& array,
                          const PhysicalConstants& constants) {
    FieldMap map;
    map.grid = grid;
    map.positions = build_observer_grid(grid);
    map.fields = fields_at_points(map.positions, excitation, array, constants);
    return map;
}

std::vector<double> FieldMap::component_power(int component) const {
    std::vector<double> out(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) out[i] = std::norm(fields[i](component));
    return out;
}

std::vector<double> FieldMap::component_phase(int component) const {
    std::vector<double> out(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) out[i] = std::arg(fields[i](component));
    return out;
}

std::vector<double> FieldMap::total_power() const {
    std::vector<double> out(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) out[i] = fields[i].squaredNorm();
    return out;
}

std::vector<double> FieldMap::magnitude() const {
    std::vector<double> out(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) out[i] = fields[i].norm();
    return out;
}

CVec3 demodulate_ring(std::span<const CVec3> samples, int mode) {
    if (samples.empty()) throw DimensionError("demodulation needs at least one ring sample");
    const int n = static_cast<int>(samples.size());
    CVec3 y = CVec3::Zero();
    for (int nr = 1; nr <= n; ++nr)
        y += samples[nr - 1] * unit_phasor(static_cast<long long>(mode) * (nr - 1), n);
    return y / std::sqrt(static_cast<double>(n));
}

}  // namespace oamcap

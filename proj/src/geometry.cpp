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

#include "oamcap/geometry.hpp"

#include <cmath>
#include <string>

#include "oamcap/constants.hpp"
#include "oamcap/error.hpp"

namespace oamcap {

PhysicalConstants PhysicalConstants::at_frequency(double frequency_hz, double speed_of_light) {
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw InvalidArgument("frequency must be positive and finite");
    if (!(speed_of_light > 0.0) || !std::isfinite(speed_of_light))
        throw InvalidArgument("speed of light must be positive and finite");
    PhysicalConstants c;
    c.frequency = frequency_hz;
    c.wavelength = speed_of_light / frequency_hz;
    c.wave_number = 2.0 * kPi / c.wavelength;
    c.impedance = kFreeSpaceImpedance;
    return c;
}

double element_angle(int index, int count) noexcept {
    return 2.0 * kPi * static_cast<double>(index) / static_cast<double>(count);
}

void validate(const TransmitArrayConfig& config) {
    if (config.n_sources < 1) throw InvalidArgument("transmit array needs at least one source");
    if (config.feeds_per_source < 1) throw InvalidArgument("each source needs at least one feed");
    if (!(config.radius > 0.0)) throw InvalidArgument("transmit radius must be positive");
    if (!(config.source_length > 0.0)) throw InvalidArgument("source length must be positive");
}

void validate(const ReceiveRingConfig& config) {
    if (config.n_points < 1) throw InvalidArgument("receive ring needs at least one point");
    if (!(config.radius > 0.0)) throw InvalidArgument("receive radius must be positive");
    if (!std::isfinite(config.axial_distance) || !std::isfinite(config.angular_offset))
        throw InvalidArgument("receive ring distance and offset must be finite");
}

void validate(const ObserverGrid& grid) {
    if (grid.resolution < 2) throw InvalidArgument("observer grid needs at least 2x2 samples");
    if (!(grid.width > 0.0)) throw InvalidArgument("observer grid width must be positive");
    if (!std::isfinite(grid.axial_distance)) throw InvalidArgument("observer grid distance must be finite");
}

Vec3 source_center(const TransmitArrayConfig& config, int source_index) {
    if (source_index < 1 || source_index > config.n_sources)
        throw InvalidArgument("source index " + std::to_string(source_index) + " out of range");
    const double phi = element_angle(source_index, config.n_sources);
    return {config.radius * std::cos(phi), config.radius * std::sin(phi), 0.0};
}

std::vector<FeedPoint> build_feed_points(const TransmitArrayConfig& config) {
    validate(config);
    std::vector<FeedPoint> feeds;
    feeds.reserve(static_cast<std::size_t>(config.n_sources) * config.feeds_per_source);
    const double length = config.source_length;
    for (int nt = 1; nt <= config.n_sources; ++nt) {
        const double phi = element_angle(nt, config.n_sources);
        const double x = config.radius * std::cos(phi);
        const double yc = config.radius * std::sin(phi);
        for (int nl = 1; nl <= config.feeds_per_source; ++nl) {
            double offset = 0.0;
            if (config.feeds_per_source > 1)
                offset = static_cast<double>(nl - 1) / (config.feeds_per_source - 1) * length - length / 2.0;
            feeds.push_back({nt, nl, Vec3(x, yc + offset, 0.0)});
        }
    }
    return feeds;
}

std::vector<Vec3> build_receive_ring(const ReceiveRingConfig& config) {
    validate(config);
    std::vector<Vec3> points;
    points.reserve(static_cast<std::size_t>(config.n_points));
    for (int nr = 1; nr <= config.n_points; ++nr) {
        const double phi = element_angle(nr, config.n_points) + config.angular_offset;
        points.emplace_back(config.radius * std::cos(phi), config.radius * std::sin(phi), config.axial_distance);
    }
    return points;
}

std::vector<Vec3> build_observer_grid(const ObserverGrid& grid) {
    validate(grid);
    const int n = grid.resolution;
    const double step = grid.width / (n - 1);
    const double center = (n - 1) / 2.0;
    std::vector<Vec3> points;
    points.reserve(static_cast<std::size_t>(n) * n);
    // (i - center) is exact, so the grid is exactly antisymmetric about the axis.
    for (int row = 0; row < n; ++row) {
        const double y = (row - center) * step;
        for (int col = 0; col < n; ++col) points.emplace_back((col - center) * step, y, grid.axial_distance);
    }
    return points;
}

}  // namespace oamcap

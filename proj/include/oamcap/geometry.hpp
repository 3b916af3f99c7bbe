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

#include <vector>

#include "oamcap/types.hpp"

namespace oamcap {

/// Transmit UCA of `n_sources` y-aligned line sources in the z = 0 plane,
/// each sampled by `feeds_per_source` small feeds spanning `source_length`.
struct TransmitArrayConfig {
    int n_sources = 0;
    int feeds_per_source = 1;
    double radius = 0.0;         // m
    double source_length = 0.0;  // m
};

struct FeedPoint {
    int source_index = 0;  // 1..N_t
    int feed_index = 0;    // 1..N_l
    Vec3 position = Vec3::Zero();
};

/// Receive UCA of point antennas in the plane z = axial_distance.
struct ReceiveRingConfig {
    int n_points = 0;
    double radius = 0.0;          // m
    double axial_distance = 0.0;  // m
    double angular_offset = 0.0;  // rad
};

/// Square observer plane centered on the z-axis.
struct ObserverGrid {
    double axial_distance = 0.0;  // m
    double width = 0.0;           // m
    int resolution = 0;           // samples per side
};

/// Angle of element n in 1..N: 2*pi*n/N. Element N therefore sits at angle 0.
double element_angle(int index, int count) noexcept;

/// Center of transmit source n_t (1-based).
Vec3 source_center(const TransmitArrayConfig& config, int source_index);

/// Feed coordinates in row-major (n_t, n_l) order. A single feed per source
/// sits at the source center.
std::vector<FeedPoint> build_feed_points(const TransmitArrayConfig& config);

std::vector<Vec3> build_receive_ring(const ReceiveRingConfig& config);

/// Row-major positions; row index runs along y, column index along x, both
/// from -width/2 to +width/2 inclusive.
std::vector<Vec3> build_observer_grid(const ObserverGrid& grid);

void validate(const TransmitArrayConfig& config);
void validate(const ReceiveRingConfig& config);
void validate(const ObserverGrid& grid);

}  // namespace oamcap

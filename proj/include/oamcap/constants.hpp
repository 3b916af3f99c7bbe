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

namespace oamcap {

/// Free-space intrinsic impedance, ohms.
inline constexpr double kFreeSpaceImpedance = 376.730313668;

/// Propagation speed used to derive the wavelength. 3e8 m/s reproduces the
/// customary engineering lengths (e.g. 200 wavelengths at 5.8 GHz = 10344.8 mm).
inline constexpr double kDefaultSpeedOfLight = 3.0e8;

/// Frequency-derived constants shared by every kernel.
struct PhysicalConstants {
    double frequency = 0.0;   // Hz
    double wavelength = 0.0;  // m
    double wave_number = 0.0; // rad/m
    double impedance = kFreeSpaceImpedance;

    /// Throws InvalidArgument unless frequency and speed are positive and finite.
    static PhysicalConstants at_frequency(double frequency_hz, double speed_of_light = kDefaultSpeedOfLight);

    /// Separations below this are rejected by the Green's kernel.
    double singular_radius() const noexcept { return wavelength * 1e-6; }
};

}  // namespace oamcap

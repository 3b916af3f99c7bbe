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

#include <cmath>
#include <complex>
#include <filesystem>
#include <random>
#include <string>

#include "oamcap/config.hpp"
#include "oamcap/constants.hpp"
#include "oamcap/geometry.hpp"
#include "oamcap/types.hpp"

namespace oamcap::test {

inline PhysicalConstants constants_5g8() { return PhysicalConstants::at_frequency(5.8e9); }

inline double lambda() { return constants_5g8().wavelength; }

/// Eight linear sources of 30 feeds on a 2 lambda/pi ring, half-wave long.
inline TransmitArrayConfig field_map_array(int feeds = 30) {
    const double l = lambda();
    return {8, feeds, 2.0 * l / kPi, 0.5 * l};
}

/// Link of the EIT/CIT comparison: 8x8, 10 feeds, 2 lambda/pi radii, 200 lambda apart.
inline Scenario comparison_link() {
    Scenario s;
    s.constants = constants_5g8();
    const double l = s.constants.wavelength;
    s.tx = {8, 10, 2.0 * l / kPi, 0.5 * l};
    s.rx = {8, 2.0 * l / kPi, 200.0 * l, 0.0};
    return s;
}

/// Mode-configuration link with radii N lambda / (4 pi).
inline Scenario mode_link(int n_tx, int n_rx, double distance_lambda = 200.0) {
    Scenario s;
    s.constants = constants_5g8();
    const double l = s.constants.wavelength;
    s.tx = {n_tx, 10, n_tx * l / (4.0 * kPi), 0.5 * l};
    s.rx = {n_rx, n_rx * l / (4.0 * kPi), distance_lambda * l, 0.0};
    return s;
}

inline double rel_diff(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

inline double rel_diff(cdouble a, cdouble b) { return std::abs(a - b) / std::abs(b); }

inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("oamcap_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::filesystem::path config_path(const std::string& name) {
    return std::filesystem::path(OAMCAP_CONFIG_DIR) / name;
}

inline std::filesystem::path data_path(const std::string& name) {
    return std::filesystem::path(OAMCAP_TEST_DATA_DIR) / name;
}

}  // namespace oamcap::test

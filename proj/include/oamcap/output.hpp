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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "oamcap/fields.hpp"
#include "oamcap/sweep.hpp"
#include "oamcap/types.hpp"

namespace oamcap {

/// 8-bit RGB raster, row-major from the top row.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;
};

/// Power in dB relative to the image maximum, clipped at -floor_db, grayscale.
Image render_power_db(const std::vector<double>& power, int resolution, double floor_db = 40.0);

/// Phase in radians mapped to a cyclic palette over [-180, 180) degrees.
Image render_phase(const std::vector<double>& phase, int resolution);

/// Linear magnitude scaled to the image maximum, grayscale.
Image render_magnitude(const std::vector<double>& magnitude, int resolution);

/// Grid samples are stored with rows along y; images put +y at the top.
void write_png(const std::filesystem::path& path, const Image& image);

/// x_m,y_m,z_m,re_ex,im_ex,re_ey,im_ey,re_ez,im_ez
void write_field_map_csv(const std::filesystem::path& path, const FieldMap& map);

/// parameter,value,unit,variant,method,snr_db,bps_hz
void write_capacity_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows);

/// One row per matrix row, Re and Im interleaved per entry.
void write_matrix_csv(const std::filesystem::path& path, const CMatrix& matrix);

}  // namespace oamcap

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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "oamcap/types.hpp"

namespace oamcap {

/// Single-frequency multiport scattering matrix. Ports 1..N_t are transmit
/// ports and N_t+1..N_t+N_r receive ports.
struct SParameterSet {
    int port_count = 0;
    double frequency = 0.0;  // Hz
    CMatrix matrix;
};

/// Sampled complex fields, one group per transmit-mode label. Every group holds
/// the same points in the same order (ring index order).
struct FieldExport {
    std::vector<int> modes;                     // ascending signed labels
    std::vector<int> point_indices;             // 1-based, ascending
    std::vector<Vec3> positions;                // one per point
    std::vector<std::vector<CVec3>> fields;     // [group][point]

    std::size_t group_count() const noexcept { return modes.size(); }
    std::size_t point_count() const noexcept { return positions.size(); }
};

/// Position tolerance (m) for matching points across mode groups.
inline constexpr double kFieldExportPositionTolerance = 1e-9;

// S-parameter carrier: a header line `ports=<n>, freq_hz=<f>, format=ri`
// followed by n rows of 2n comma-separated reals (Re, Im interleaved).
// Blank lines and lines starting with '#' are ignored.
SParameterSet parse_sparams(std::string_view text, const std::string& source_name = "<sparams>");
SParameterSet parse_sparams_file(const std::filesystem::path& path);
void write_sparams(std::ostream& out, const SParameterSet& sparams);
void write_sparams_file(const std::filesystem::path& path, const SParameterSet& sparams);

/// Channel from the lower-left block: H(i, j) = sqrt(S(N_t + i, j)), principal branch.
struct LumpedChannel {
    CMatrix h;
    int passive_violations = 0;  // entries of the block with |S| > 1
};
LumpedChannel extract_lumped_channel(const SParameterSet& sparams, int n_tx, int n_rx);

// Field-export carrier: header
//   mode,point,x,y,z,re_ex,im_ex,re_ey,im_ey,re_ez,im_ez
// one record per (mode, point). The `point` column may be omitted, in which
// case records are indexed in file order within each mode group.
FieldExport parse_field_export(std::string_view text, const std::string& source_name = "<fields>");
FieldExport parse_field_export_file(const std::filesystem::path& path);
void write_field_export(std::ostream& out, const FieldExport& data);
void write_field_export_file(const std::filesystem::path& path, const FieldExport& data);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double value);

/// Strict full-token parse; returns false on any trailing garbage.
bool parse_double(std::string_view token, double& value);

}  // namespace oamcap

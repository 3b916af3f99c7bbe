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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oamcap/capacity.hpp"
#include "oamcap/constants.hpp"
#include "oamcap/fields.hpp"
#include "oamcap/geometry.hpp"

namespace oamcap {

/// Everything needed to evaluate one link: constants, both arrays and the
/// source-integration rule.
struct Scenario {
    PhysicalConstants constants;
    TransmitArrayConfig tx;
    ReceiveRingConfig rx;
    SourceForm form = SourceForm::Discrete;
    int quadrature_order = kDefaultQuadratureOrder;
    FeedNormalization normalization = FeedNormalization::PerFeedPower;

    TransmitArray transmit_array() const { return TransmitArray(tx, form, quadrature_order, normalization); }
    std::vector<Vec3> receive_ring() const { return build_receive_ring(rx); }
};

/// One (N_t, N_r) configuration of a multi-variant run.
struct Variant {
    int n_tx = 0;
    int n_rx = 0;
    std::string label() const { return std::to_string(n_tx) + "x" + std::to_string(n_rx); }
    bool operator==(const Variant&) const = default;
};

enum class SweepParameter { SnrDb, Distance, RadiusTx, RadiusRx, Modes };

std::string to_string(SweepParameter parameter);
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);
/// "dB", "m" or "count".
std::string sweep_unit(SweepParameter parameter);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::SnrDb;
    std::vector<double> values;  // SI units (m, dB) or mode counts
    std::vector<CapacityMethod> methods;
};

/// Length given as an arithmetic expression over numbers, `pi`, `lambda`,
/// `Nt`, `Nr`, e.g. "2lambda/pi", "Nt*lambda/(4pi)", "25.9 mm".
struct LengthExpression {
    std::string text;
    double evaluate(double wavelength, int n_tx, int n_rx) const;
};

/// Fully resolved run configuration.
struct RunConfig {
    std::string run_id = "run";
    double speed_of_light = kDefaultSpeedOfLight;
    Scenario scenario;

    // Unresolved radius expressions; re-evaluated per variant.
    LengthExpression radius_tx;
    LengthExpression radius_rx;

    std::vector<int> modes;
    std::optional<ObserverGrid> grid;
    bool component_views = false;
    bool autocorrelation_panels = false;
    bool export_ring_fields = false;

    double power = 1.0;            // W
    std::vector<double> snr_db;    // P/N0 grid
    std::vector<CapacityMethod> methods{CapacityMethod::Eit};
    bool normalize_gain = false;

    std::optional<SweepSpec> sweep;
    double sweep_snr_db = 20.0;
    std::vector<Variant> variants;

    std::filesystem::path output_dir = "out";
    std::uint64_t seed = 0;
};

/// Key = value text, '#' comments. Throws MissingKey, BadUnit, RangeError
/// (each naming the key) or ConfigError for unknown keys.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

/// Copy of `config` with N_t/N_r replaced and radii re-evaluated.
RunConfig resolve_variant(const RunConfig& config, const Variant& variant);

/// Parses "5.8 GHz", "5800MHz", "5.8e9".
double parse_frequency(std::string_view key, std::string_view value);

}  // namespace oamcap

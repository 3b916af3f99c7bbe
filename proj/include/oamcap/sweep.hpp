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

#include "oamcap/capacity.hpp"
#include "oamcap/config.hpp"

namespace oamcap {

/// Correlation matrices of one link, evaluated once and reused across SNRs.
struct LinkCorrelations {
    int n_tx = 0;
    int n_rx = 0;
    CMatrix eit;         // R_OAM
    CMatrix cit_linear;  // R_c for feed-averaged Friis channel
    CMatrix cit_point;   // R_c for element-center Friis channel
};

/// Computes the matrices needed by `methods`; the others stay empty.
/// With normalize_gain each matrix is rescaled to trace N_r.
LinkCorrelations evaluate_link(const Scenario& scenario, const std::vector<CapacityMethod>& methods,
                               bool normalize_gain);

/// Capacity of an evaluated link. Ingested is not a link method and throws InvalidArgument.
double link_capacity(const LinkCorrelations& link, CapacityMethod method, double power, double snr_db);

struct SweepRow {
    SweepParameter parameter = SweepParameter::SnrDb;
    double value = 0.0;
    Variant variant;
    CapacityMethod method = CapacityMethod::Eit;
    double snr_db = 0.0;
    double bps_hz = 0.0;
};

/// Evaluates every (value, variant, method) combination. Points run concurrently;
/// rows come back sorted by value, then variant order, then method order.
/// Without configured variants the base configuration is the only variant.
std::vector<SweepRow> run_sweep(const RunConfig& config, const SweepSpec& spec);

}  // namespace oamcap

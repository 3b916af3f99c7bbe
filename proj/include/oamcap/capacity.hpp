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
#include <span>
#include <string>
#include <vector>

#include "oamcap/correlation.hpp"
#include "oamcap/ingest.hpp"

namespace oamcap {

/// AWGN power per received mode (y-component), W.
struct NoiseModel {
    double n0 = 1.0;
};

/// Total transmit power, split evenly over the N_t modes.
struct PowerBudget {
    double total = 1.0;
    double per_mode(int n_tx) const noexcept { return total / n_tx; }
};

enum class CapacityMethod { Eit, CitLinear, CitPoint, Ingested };

std::string to_string(CapacityMethod method);

struct CapacityPoint {
    double parameter = 0.0;
    double bps_hz = 0.0;
    CapacityMethod method = CapacityMethod::Eit;
};

struct CapacityCurve {
    std::string parameter;  // e.g. "snr_db"
    std::string unit;       // e.g. "dB"
    std::vector<CapacityPoint> points;
};

/// Relative tolerance used by the Hermitian check: max|R - R^H| <= tol * max|R|.
inline constexpr double kHermitianTolerance = 1e-10;

bool is_hermitian(const CMatrix& m, double relative_tolerance = kHermitianTolerance);

/// Ascending real eigenvalues of a Hermitian matrix.
RVector hermitian_eigenvalues(const CMatrix& m);

/// Rescales R so that trace(R) = N_r (no-op for a zero matrix).
CMatrix normalize_gain(const CMatrix& r);

/// log2 det(I + (P/N_t/N0) R) summed over Hermitian eigenvalues; eigenvalues
/// below zero (round-off of a PSD matrix) contribute nothing.
/// Throws NonHermitianInput when R fails is_hermitian.
double log_det_capacity(const CMatrix& r, double snr_per_mode);

/// EIT capacity from R_OAM.
double eit_capacity(const OamCorrelationMatrix& r, const PowerBudget& power, const NoiseModel& noise, int n_tx);
double eit_capacity(const CMatrix& r, const PowerBudget& power, const NoiseModel& noise, int n_tx);

/// Scalar free-space (Friis) gain between element centers (Point) or averaged
/// over the feeds of each source (Linear).
enum class CitSource { Point, Linear };

/// H(n_r, n_t) = lambda/(4 pi p) exp(j k0 p). Throws SingularSeparation.
CMatrix cit_channel_matrix(std::span<const Vec3> ring, const TransmitArrayConfig& tx, CitSource source,
                           const PhysicalConstants& constants);

/// (W_r^H H W_t)(W_r^H H W_t)^H with N_r- and N_t-point normalized IDFT matrices.
CMatrix cit_correlation(const CMatrix& h);

/// log2 det(I + (P/N_t/N0) R_c). Throws DimensionError unless H has n_tx columns.
double cit_capacity(const CMatrix& h, const PowerBudget& power, const NoiseModel& noise, int n_tx);

/// Lumped-port CIT capacity from S-parameters.
double capacity_from_sparams(const SParameterSet& sparams, int n_tx, int n_rx, const PowerBudget& power,
                             const NoiseModel& noise);

/// Mode-domain channel from ring field exports: column m holds the DFT of the
/// y-component ring samples produced by transmit mode m.
CMatrix mode_channel_from_field_export(const FieldExport& data);

/// Capacity from exported ring fields: R = H_mode H_mode^H with N_t = group count.
double capacity_from_field_export(const FieldExport& data, const PowerBudget& power, const NoiseModel& noise);

/// P/N0 for an SNR expressed in dB.
inline double snr_linear(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

}  // namespace oamcap

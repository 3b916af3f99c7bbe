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

#include "oamcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "oamcap/error.hpp"

namespace oamcap {

std::string to_string(CapacityMethod method) {
    switch (method) {
        case CapacityMethod::Eit: return "EIT";
        case CapacityMethod::CitLinear: return "CIT-linear";
        case CapacityMethod::CitPoint: return "CIT-point";
        case CapacityMethod::Ingested: return "INGESTED";
    }
    return "unknown";
}

bool is_hermitian(const CMatrix& m, double relative_tolerance) {
    if (m.rows() != m.cols()) return false;
    if (m.size() == 0) return true;
    const double scale = m.cwiseAbs().maxCoeff();
    if (!std::isfinite(scale)) return false;
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    return asym <= relative_tolerance * scale;
}

RVector hermitian_eigenvalues(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("eigenvalues need a square matrix");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
    return solver.eigenvalues();
}

CMatrix normalize_gain(const CMatrix& r) {
    const double trace = r.trace().real();
    if (trace == 0.0) return r;
    return r * (static_cast<double>(r.rows()) / trace);
}

double log_det_capacity(const CMatrix& r, double snr_per_mode) {
    if (!is_hermitian(r))
        throw NonHermitianInput("correlation matrix is not Hermitian within relative tolerance " +
                                std::to_string(kHermitianTolerance));
    if (!(snr_per_mode >= 0.0)) throw InvalidArgument("SNR must be non-negative");
    const RVector eig = hermitian_eigenvalues(r);
    double bits = 0.0;
    for (Eigen::Index i = 0; i < eig.size(); ++i) bits += std::log2(1.0 + snr_per_mode * std::max(0.0, eig(i)));
    return bits;
}

namespace {

double per_mode_snr(const PowerBudget& power, const NoiseModel& noise, int n_tx) {
    if (n_tx < 1) throw InvalidArgument("transmit mode count must be positive");
    if (!(power.total >= 0.0)) throw InvalidArgument("transmit power must be non-negative");
    if (!(noise.n0 > 0.0)) throw InvalidArgument("noise power must be positive");
    return power.per_mode(n_tx) / noise.n0;
}

}  // namespace

double eit_capacity(const CMatrix& r, const PowerBudget& power, const NoiseModel& noise, int n_tx) {
    return log_det_capacity(r, per_mode_snr(power, noise, n_tx));
}

double eit_capacity(const OamCorrelationMatrix& r, const PowerBudget& power, const NoiseModel& noise, int n_tx) {
    return eit_capacity(r.matrix, power, noise, n_tx);
}

CMatrix cit_channel_matrix(std::span<const Vec3> ring, const TransmitArrayConfig& tx, CitSource source,
                           const PhysicalConstants& constants) {
    const std::vector<FeedPoint> feeds = build_feed_points(tx);
    const auto n_rx = static_cast<Eigen::Index>(ring.size());
    CMatrix h = CMatrix::Zero(n_rx, tx.n_sources);

    auto gain = [&](const Vec3& r, const Vec3& s) {
        const double p = (r - s).norm();
        if (!(p >= constants.singular_radius()))
            throw SingularSeparation("receive point coincides with a transmit element");
        return (constants.wavelength / (4.0 * kPi * p)) * std::polar(1.0, constants.wave_number * p);
    };

    for (Eigen::Index i = 0; i < n_rx; ++i) {
        for (int nt = 1; nt <= tx.n_sources; ++nt) {
            if (source == CitSource::Point) {
                h(i, nt - 1) = gain(ring[i], source_center(tx, nt));
            } else {
                cdouble acc{0.0, 0.0};
                const auto first = static_cast<std::size_t>(nt - 1) * tx.feeds_per_source;
                for (int f = 0; f < tx.feeds_per_source; ++f) acc += gain(ring[i], feeds[first + f].position);
                h(i, nt - 1) = acc / static_cast<double>(tx.feeds_per_source);
            }
        }
    }
    return h;
}

CMatrix cit_correlation(const CMatrix& h) {
    const auto n_rx = static_cast<int>(h.rows());
    const auto n_tx = static_cast<int>(h.cols());
    if (n_rx < 1 || n_tx < 1) throw DimensionError("channel matrix is empty");
    const CMatrix mode_domain = idft_matrix(n_rx).adjoint() * h * idft_matrix(n_tx);
    CMatrix r = mode_domain * mode_domain.adjoint();
    return (0.5 * (r + r.adjoint())).eval();
}

double cit_capacity(const CMatrix& h, const PowerBudget& power, const NoiseModel& noise, int n_tx) {
    if (h.cols() != n_tx)
        throw DimensionError("channel has " + std::to_string(h.cols()) + " columns, expected " + std::to_string(n_tx));
    if (!h.allFinite()) throw InvalidArgument("channel matrix has non-finite entries");
    return log_det_capacity(cit_correlation(h), per_mode_snr(power, noise, n_tx));
}

double capacity_from_sparams(const SParameterSet& sparams, int n_tx, int n_rx, const PowerBudget& power,
                             const NoiseModel& noise) {
    const LumpedChannel channel = extract_lumped_channel(sparams, n_tx, n_rx);
    return cit_capacity(channel.h, power, noise, n_tx);
}

CMatrix mode_channel_from_field_export(const FieldExport& data) {
    const auto n_modes = static_cast<Eigen::Index>(data.group_count());
    const auto n_points = static_cast<Eigen::Index>(data.point_count());
    if (n_modes == 0 || n_points == 0) throw DimensionError("field export has no samples");
    CMatrix h(n_points, n_modes);
    for (Eigen::Index m = 0; m < n_modes; ++m) {
        const auto& group = data.fields[static_cast<std::size_t>(m)];
        if (static_cast<Eigen::Index>(group.size()) != n_points)
            throw DimensionError("field export group sizes differ");
        for (Eigen::Index l = 0; l < n_points; ++l) h(l, m) = demodulate_ring(group, static_cast<int>(l))(1);
    }
    return h;
}

double capacity_from_field_export(const FieldExport& data, const PowerBudget& power, const NoiseModel& noise) {
    const CMatrix h = mode_channel_from_field_export(data);
    CMatrix r = h * h.adjoint();
    r = (0.5 * (r + r.adjoint())).eval();
    return eit_capacity(r, power, noise, static_cast<int>(h.cols()));
}

}  // namespace oamcap

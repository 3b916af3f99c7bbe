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

#include <catch_amalgamated.hpp>

#include <random>

#include <Eigen/LU>
#include <Eigen/QR>

#include "oamcap/capacity.hpp"
#include "oamcap/correlation.hpp"
#include "oamcap/error.hpp"
#include "oamcap/sweep.hpp"
#include "support.hpp"

using namespace oamcap;
using Catch::Approx;

namespace {

CMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> n;
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = {n(rng), n(rng)};
    return m;
}

CMatrix random_unitary(std::mt19937_64& rng, int n) {
    Eigen::HouseholderQR<CMatrix> qr(random_matrix(rng, n, n));
    return qr.householderQ() * CMatrix::Identity(n, n);
}

}  // namespace

TEST_CASE("EIT capacity of simple spectra", "[capacity]") {
    const CMatrix id = CMatrix::Identity(8, 8);
    CHECK(eit_capacity(id, PowerBudget{8.0}, NoiseModel{1.0}, 8) == Approx(8.0));
    CHECK(eit_capacity(id, PowerBudget{0.0}, NoiseModel{1.0}, 8) == 0.0);
    CHECK(eit_capacity(id, PowerBudget{1e-12}, NoiseModel{1.0}, 8) < 1e-11);
    CHECK(eit_capacity(CMatrix::Zero(4, 4), PowerBudget{1.0}, NoiseModel{1.0}, 4) == 0.0);
}

TEST_CASE("eigenvalue log-det equals the direct determinant", "[capacity][property]") {
    std::mt19937_64 rng(5);
    for (int n : {2, 5, 8, 16}) {
        const CMatrix h = random_matrix(rng, n, n);
        const CMatrix r = h * h.adjoint();
        const CMatrix rs = 0.5 * (r + r.adjoint());
        const double c = 0.37;
        const double direct = std::log2(std::abs((CMatrix::Identity(n, n) + c * rs).determinant()));
        const double viaeig = log_det_capacity(rs, c);
        CHECK(std::abs(viaeig - direct) <= 1e-9 * direct);
    }
}

TEST_CASE("capacity grows strictly with SNR", "[capacity][property]") {
    const Scenario link = test::comparison_link();
    const LinkCorrelations lc = evaluate_link(link, {CapacityMethod::Eit, CapacityMethod::CitLinear}, false);
    for (CapacityMethod m : {CapacityMethod::Eit, CapacityMethod::CitLinear}) {
        double previous = -1.0;
        for (int i = 0; i < 10; ++i) {
            const double c = link_capacity(lc, m, 1.0, -10.0 + 5.0 * i);
            CHECK(c > previous);
            previous = c;
        }
    }
}

TEST_CASE("non-Hermitian input is rejected", "[capacity]") {
    CMatrix r = CMatrix::Identity(3, 3);
    r(0, 1) = {0.5, 0.0};
    CHECK_THROWS_AS(log_det_capacity(r, 1.0), NonHermitianInput);
    CHECK_THROWS_AS(eit_capacity(CMatrix::Identity(3, 3), PowerBudget{1.0}, NoiseModel{0.0}, 3), InvalidArgument);
    CHECK_THROWS_AS(eit_capacity(CMatrix::Identity(3, 3), PowerBudget{1.0}, NoiseModel{1.0}, 0), InvalidArgument);
}

TEST_CASE("CIT capacity of the identity channel", "[capacity]") {
    for (int n : {1, 4, 8}) {
        const CMatrix h = CMatrix::Identity(n, n);
        CHECK(cit_capacity(h, PowerBudget{static_cast<double>(n)}, NoiseModel{1.0}, n) == Approx(n));
    }
    CHECK_THROWS_AS(cit_capacity(CMatrix::Identity(4, 3), PowerBudget{1.0}, NoiseModel{1.0}, 4), DimensionError);
}

TEST_CASE("CIT capacity is unitarily invariant", "[capacity][property]") {
    std::mt19937_64 rng(9);
    for (auto [nr, nt] : {std::pair{4, 4}, std::pair{8, 6}, std::pair{5, 9}}) {
        const CMatrix h = random_matrix(rng, nr, nt);
        const CMatrix u = random_unitary(rng, nr);
        const CMatrix v = random_unitary(rng, nt);
        const double c1 = cit_capacity(h, PowerBudget{3.0}, NoiseModel{0.1}, nt);
        const double c2 = cit_capacity(u * h * v, PowerBudget{3.0}, NoiseModel{0.1}, nt);
        const double c3 = cit_capacity(idft_matrix(nr).adjoint() * h * idft_matrix(nt), PowerBudget{3.0},
                                       NoiseModel{0.1}, nt);
        CHECK(std::abs(c1 - c2) <= 1e-10 * c1);
        CHECK(std::abs(c1 - c3) <= 1e-10 * c1);
    }
}

TEST_CASE("Friis channel matrices", "[capacity]") {
    const PhysicalConstants c = test::constants_5g8();
    const double l = c.wavelength;
    const double d = 37.0 * l;
    // One element on axis-shifted ring of tiny radius opposite one receive point.
    const TransmitArrayConfig tx{1, 1, 1e-3, 0.5 * l};
    const std::vector<Vec3> rx{source_center(tx, 1) + Vec3(0, 0, d)};
    const CMatrix h = cit_channel_matrix(rx, tx, CitSource::Point, c);
    CHECK(std::abs(h(0, 0)) == Approx(l / (4.0 * kPi * d)).epsilon(1e-14));

    const Scenario link = test::comparison_link();
    const auto ring = link.receive_ring();
    const CMatrix hp = cit_channel_matrix(ring, link.tx, CitSource::Point, link.constants);
    const CMatrix hl = cit_channel_matrix(ring, link.tx, CitSource::Linear, link.constants);
    CHECK((hp - hl).cwiseAbs().maxCoeff() <= 1e-3 * hp.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < hp.size(); ++i) CHECK(std::abs(hp(i) - hl(i)) <= 1e-3 * std::abs(hp(i)));
}

TEST_CASE("coaxial UCA channel is diagonal-dominant in the DFT domain", "[capacity][oracle]") {
    Scenario s;
    s.constants = test::constants_5g8();
    const double l = s.constants.wavelength;
    s.tx = {8, 1, 2.0 * l, 0.5 * l};
    s.rx = {8, 2.0 * l, 10.0 * l, 0.0};
    const CMatrix h = cit_channel_matrix(s.receive_ring(), s.tx, CitSource::Point, s.constants);
    // Circulant: every row is a cyclic shift of the first.
    for (int i = 1; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(std::abs(h(i, (j + i) % 8) - h(0, j)) < 1e-12 * h.cwiseAbs().maxCoeff());
    const CMatrix w = idft_matrix(8);
    const CMatrix mode = w.adjoint() * h * w;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (i != j) CHECK(std::abs(mode(i, j)) < 1e-10 * mode.cwiseAbs().maxCoeff());
}

TEST_CASE("S-parameter capacity", "[capacity]") {
    const double g = 0.3;
    SParameterSet s{8, 5.8e9, CMatrix::Zero(8, 8)};
    s.matrix.block(4, 0, 4, 4) = (g * g) * CMatrix::Identity(4, 4);
    const double expected = 4.0 * std::log2(1.0 + (2.0 / 4.0 / 0.01) * g * g);
    CHECK(capacity_from_sparams(s, 4, 4, PowerBudget{2.0}, NoiseModel{0.01}) == Approx(expected).epsilon(1e-12));
}

TEST_CASE("field-export capacity equals the correlation path", "[capacity][oracle]") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        Scenario s;
        s.constants = test::constants_5g8();
        const double l = s.constants.wavelength;
        const int n = 4 + 2 * trial;
        s.tx = {n, 1 + trial, (0.5 + 2.0 * u(rng)) * l, 0.5 * l};
        s.rx = {n + trial % 2, (0.5 + 2.0 * u(rng)) * l, (5.0 + 30.0 * u(rng)) * l, u(rng)};
        const auto ring = s.receive_ring();
        const TransmitArray array = s.transmit_array();
        FieldExport data;
        data.positions = ring;
        for (int p = 1; p <= s.rx.n_points; ++p) data.point_indices.push_back(p);
        for (int m = -(n / 2) + 1; m <= n / 2; ++m) {
            data.modes.push_back(m);
            data.fields.push_back(fields_at_points(ring, pure_mode_excitation(m, n), array, s.constants));
        }
        const double snr = 100.0;
        const double ref = eit_capacity(build_oam_correlation_matrix(ring, array, s.constants), PowerBudget{1.0},
                                        NoiseModel{1.0 / snr}, n);
        const double got = capacity_from_field_export(data, PowerBudget{1.0}, NoiseModel{1.0 / snr});
        CHECK(std::abs(got - ref) <= 1e-6 * ref);
    }
}

TEST_CASE("field-export edge cases", "[capacity]") {
    FieldExport zero;
    zero.positions = {Vec3(1, 0, 1), Vec3(0, 1, 1), Vec3(-1, 0, 1)};
    zero.point_indices = {1, 2, 3};
    zero.modes = {0, 1};
    zero.fields.assign(2, std::vector<CVec3>(3, CVec3::Zero()));
    CHECK(capacity_from_field_export(zero, PowerBudget{1.0}, NoiseModel{1.0}) == 0.0);

    // Single excited mode landing in one ring bin: rank-one capacity.
    FieldExport one;
    one.positions = zero.positions;
    one.point_indices = zero.point_indices;
    one.modes = {1};
    const cdouble gain{0.4, -0.3};
    std::vector<CVec3> f;
    for (int k = 0; k < 3; ++k) f.push_back(CVec3(0.0, gain * std::polar(1.0, -2.0 * kPi * k / 3.0), 0.0));
    one.fields = {f};
    const double snr = 50.0;
    const double expected = std::log2(1.0 + snr * 3.0 * std::norm(gain));
    CHECK(capacity_from_field_export(one, PowerBudget{1.0}, NoiseModel{1.0 / snr}) == Approx(expected).epsilon(1e-12));
}

TEST_CASE("gain normalization", "[capacity]") {
    const Scenario link = test::comparison_link();
    const LinkCorrelations lc = evaluate_link(link, {CapacityMethod::Eit, CapacityMethod::CitPoint}, true);
    CHECK(lc.eit.trace().real() == Approx(8.0));
    CHECK(lc.cit_point.trace().real() == Approx(8.0));
    CHECK(lc.cit_linear.size() == 0);
    CHECK_THROWS_AS(link_capacity(lc, CapacityMethod::CitLinear, 1.0, 10.0), InvalidArgument);
    CHECK_THROWS_AS(link_capacity(lc, CapacityMethod::Ingested, 1.0, 10.0), InvalidArgument);
}

TEST_CASE("method names", "[capacity]") {
    CHECK(to_string(CapacityMethod::Eit) == "EIT");
    CHECK(to_string(CapacityMethod::CitLinear) == "CIT-linear");
    CHECK(to_string(CapacityMethod::CitPoint) == "CIT-point");
    CHECK(to_string(CapacityMethod::Ingested) == "INGESTED");
}

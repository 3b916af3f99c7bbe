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

#include <Eigen/Eigenvalues>

#include "oamcap/correlation.hpp"
#include "oamcap/error.hpp"
#include "oamcap/green.hpp"
#include "support.hpp"

using namespace oamcap;
using Catch::Approx;

namespace {

// Literal four-fold sum over ring points and same-source feed pairs.
CMatrix literal_roam(const Scenario& s) {
    const auto ring = s.receive_ring();
    const auto feeds = build_feed_points(s.tx);
    const int nr = s.rx.n_points;
    const int nl = s.tx.feeds_per_source;
    const double w = feed_weight(nl, s.normalization);
    CMatrix r = CMatrix::Zero(nr, nr);
    for (int l = 0; l < nr; ++l)
        for (int lp = 0; lp < nr; ++lp) {
            cdouble acc = 0.0;
            for (int a = 0; a < nr; ++a)
                for (int b = 0; b < nr; ++b) {
                    cdouble k = 0.0;
                    for (int t = 0; t < s.tx.n_sources; ++t)
                        for (int i = 0; i < nl; ++i)
                            for (int j = 0; j < nl; ++j)
                                k += green_yy(ring[a], feeds[t * nl + i].position, s.constants) *
                                     std::conj(green_yy(ring[b], feeds[t * nl + j].position, s.constants));
                    acc += std::polar(1.0, 2.0 * kPi * (l * a - lp * b) / nr) * k;
                }
            r(l, lp) = w * w * acc / static_cast<double>(nr);
        }
    return r;
}

}  // namespace

TEST_CASE("current cross-correlation is a Kronecker delta", "[correlation]") {
    CHECK(std::abs(current_cross_correlation(3, 3, 8) - 1.0) < 1e-14);
    CHECK(std::abs(current_cross_correlation(3, 5, 8)) < 1e-14);
    for (int n : {4, 8, 16, 64})
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                CHECK(std::abs(current_cross_correlation(a, b, n) - (a == b ? 1.0 : 0.0)) < 1e-14);
    CHECK_THROWS_AS(current_cross_correlation(0, 1, 8), InvalidArgument);
    CHECK_THROWS_AS(current_cross_correlation(1, 9, 8), InvalidArgument);
}

TEST_CASE("R_OAM matches frozen literal-sum values", "[correlation][oracle]") {
    // Reference values from an independent literal summation in double precision.
    const Scenario link = test::comparison_link();
    const CMatrix r = build_oam_correlation_matrix(link.receive_ring(), link.transmit_array(), link.constants).matrix;
    CHECK(r(0, 0).real() == Approx(79303014.63768882).epsilon(1e-9));
    CHECK(r(1, 1).real() == Approx(3214.0832195321564).epsilon(1e-6));
    CHECK(r(7, 7).real() == Approx(3214.0832195319235).epsilon(1e-6));
    CHECK(r.trace().real() == Approx(79309442.87155594).epsilon(1e-9));

    Scenario near;
    near.constants = test::constants_5g8();
    near.tx = {4, 3, 0.1, 0.03};
    near.rx = {6, 0.07, 0.4, 0.0};
    const CMatrix rn = build_oam_correlation_matrix(near.receive_ring(), near.transmit_array(), near.constants).matrix;
    CHECK(test::rel_diff(rn(0, 0), {219731384.43282878, 0.0}) < 1e-10);
    CHECK(test::rel_diff(rn(5, 1), {-113481402.83037153, 196555555.41639256}) < 1e-10);
    CHECK(std::abs(rn(2, 3)) < 1e-6);
}

TEST_CASE("fast assembly equals the literal four-fold sum", "[correlation][oracle]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 4; ++trial) {
        Scenario s;
        s.constants = test::constants_5g8();
        const double l = s.constants.wavelength;
        s.tx = {3 + trial, 1 + trial, (0.5 + u(rng)) * l, (0.2 + 0.5 * u(rng)) * l};
        s.rx = {4 + trial, (0.5 + u(rng)) * l, (2.0 + 20.0 * u(rng)) * l, u(rng)};
        s.normalization = (trial % 2) ? FeedNormalization::SourceAverage : FeedNormalization::PerFeedPower;
        const CMatrix fast = build_oam_correlation_matrix(s.receive_ring(), s.transmit_array(), s.constants).matrix;
        CHECK(test::rel_diff(fast, literal_roam(s)) < 1e-11);
    }
}

TEST_CASE("R_OAM is Hermitian PSD with the ring trace identity", "[correlation][property]") {
    const Scenario link = test::comparison_link();
    const auto ring = link.receive_ring();
    const TransmitArray array = link.transmit_array();
    const CMatrix r = build_oam_correlation_matrix(ring, array, link.constants).matrix;
    CHECK((r - r.adjoint()).cwiseAbs().maxCoeff() <= 1e-10 * r.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(r, Eigen::EigenvaluesOnly);
    const double trace = r.trace().real();
    CHECK(es.eigenvalues().minCoeff() >= -1e-10 * trace);
    double ring_sum = 0.0;
    for (const Vec3& p : ring) ring_sum += field_autocorrelation(p, p, array, link.constants)(1, 1).real();
    CHECK(std::abs(trace - ring_sum) <= 1e-10 * trace);
}

TEST_CASE("scalar and tensor cross-correlations agree with the matrix", "[correlation]") {
    Scenario s;
    s.constants = test::constants_5g8();
    const double l = s.constants.wavelength;
    s.tx = {6, 4, 1.3 * l, 0.5 * l};
    s.rx = {6, 1.1 * l, 8.0 * l, 0.1};
    const auto ring = s.receive_ring();
    const TransmitArray array = s.transmit_array();
    const CMatrix r = build_oam_correlation_matrix(ring, array, s.constants).matrix;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            const cdouble yy = received_cross_correlation_yy(a, b, ring, array, s.constants);
            const CMat3 full = received_cross_correlation(a, b, ring, array, s.constants);
            CHECK(std::abs(yy - r(a, b)) <= 1e-12 * r.cwiseAbs().maxCoeff());
            CHECK(std::abs(full(1, 1) - r(a, b)) <= 1e-12 * r.cwiseAbs().maxCoeff());
        }
    CHECK_THROWS_AS(received_cross_correlation_yy(6, 0, ring, array, s.constants), InvalidArgument);
}

TEST_CASE("field autocorrelation symmetries", "[correlation][property]") {
    const PhysicalConstants c = test::constants_5g8();
    const TransmitArray array(test::field_map_array(5));
    const Vec3 r(0.1, 0.2, 1.0), rp(-0.3, 0.05, 1.2);
    const CMat3 a = field_autocorrelation(r, rp, array, c);
    const CMat3 b = field_autocorrelation(rp, r, array, c);
    CHECK((a - b.adjoint()).norm() <= 1e-13 * a.norm());
    const CMat3 self = field_autocorrelation(r, r, array, c);
    CHECK((self - self.adjoint()).norm() <= 1e-13 * self.norm());
    Eigen::SelfAdjointEigenSolver<CMat3> es(self);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12 * self.trace().real());
}

TEST_CASE("Monte-Carlo covariance of demodulated signals", "[correlation][oracle]") {
    const Scenario link = test::comparison_link();
    const auto ring = link.receive_ring();
    const TransmitArray array = link.transmit_array();
    const CMatrix r = build_oam_correlation_matrix(ring, array, link.constants).matrix;
    const CMatrix a = ring_source_channel(ring, array, link.constants);
    const CMatrix m = ring_dft_matrix(link.rx.n_points) * a * idft_matrix(link.tx.n_sources);

    std::mt19937_64 rng(20240611);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const int draws = 10000;
    CMatrix cov = CMatrix::Zero(r.rows(), r.cols());
    CVector x(link.tx.n_sources);
    for (int d = 0; d < draws; ++d) {
        for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = {normal(rng), normal(rng)};
        const CVector y = m * x;
        cov += y * y.adjoint();
    }
    cov /= static_cast<double>(draws);
    CHECK(test::rel_diff(cov, r) < 0.02);
}

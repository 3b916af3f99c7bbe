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

#include "oamcap/config.hpp"
#include "oamcap/error.hpp"
#include "support.hpp"

using namespace oamcap;
using Catch::Approx;

namespace {

const std::string kBase = "frequency = 5.8 GHz\nn_tx = 8\nradius_tx = 2lambda/pi\ndistance = 200 lambda\n";

template <typename E>
std::string key_of(const std::string& text) {
    try {
        (void)parse_config(text);
    } catch (const E& e) {
        return e.key();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("the EIT/CIT comparison config resolves to SI units", "[config]") {
    const RunConfig cfg = load_config(test::config_path("fig6.cfg"));
    const Scenario& s = cfg.scenario;
    CHECK(s.constants.wavelength == Approx(0.0517241379310345).epsilon(1e-14));
    CHECK(s.rx.axial_distance == Approx(10.3448).margin(5e-5));
    CHECK(s.tx.radius == Approx(0.0329).margin(5e-5));
    CHECK(s.rx.radius == s.tx.radius);
    CHECK(s.tx.source_length == Approx(0.0259).margin(5e-5));
    CHECK(s.tx.n_sources == 8);
    CHECK(s.tx.feeds_per_source == 10);
    CHECK(s.rx.n_points == 8);
    REQUIRE(cfg.snr_db.size() == 51);
    CHECK(cfg.snr_db.front() == -10.0);
    CHECK(cfg.snr_db.back() == 40.0);
    CHECK(cfg.snr_db[1] == Approx(-9.0));
    CHECK(cfg.methods ==
          std::vector<CapacityMethod>{CapacityMethod::Eit, CapacityMethod::CitLinear, CapacityMethod::CitPoint});
    CHECK(cfg.run_id == "fig6");
}

TEST_CASE("every shipped config loads", "[config]") {
    for (const char* name : {"fig3.cfg", "fig4.cfg", "fig5.cfg", "fig6.cfg", "fig7.cfg", "fig8a.cfg", "fig8b.cfg",
                             "fig9.cfg"}) {
        INFO(name);
        CHECK_NOTHROW(load_config(test::config_path(name)));
    }
    const RunConfig fig3 = load_config(test::config_path("fig3.cfg"));
    CHECK(fig3.modes == std::vector<int>{-1, 0, 1, 2});
    REQUIRE(fig3.grid);
    CHECK(fig3.grid->resolution == 100);
    CHECK(fig3.grid->width == Approx(20.0 * test::lambda()));
}

TEST_CASE("length expressions", "[config]") {
    const double l = test::lambda();
    CHECK(LengthExpression{"2lambda/pi"}.evaluate(l, 8, 8) == Approx(2.0 * l / kPi));
    CHECK(LengthExpression{"Nt*lambda/(4pi)"}.evaluate(l, 16, 8) == Approx(16.0 * l / (4.0 * kPi)));
    CHECK(LengthExpression{"Nr lambda / (4 pi)"}.evaluate(l, 16, 8) == Approx(8.0 * l / (4.0 * kPi)));
    CHECK(LengthExpression{"25.9 mm"}.evaluate(l, 8, 8) == Approx(0.0259));
    CHECK(LengthExpression{"1.5 m"}.evaluate(l, 8, 8) == Approx(1.5));
    CHECK(LengthExpression{"0.5 lambda"}.evaluate(l, 8, 8) == Approx(0.5 * l));
    CHECK_THROWS_AS(LengthExpression{"2/pi"}.evaluate(l, 8, 8), BadUnit);
    CHECK_THROWS_AS(LengthExpression{"2 lambda lambda"}.evaluate(l, 8, 8), BadUnit);
    CHECK_THROWS_AS(LengthExpression{"2 lambda m"}.evaluate(l, 8, 8), BadUnit);
    CHECK_THROWS_AS(LengthExpression{"3 deg"}.evaluate(l, 8, 8), BadUnit);
    CHECK_THROWS(LengthExpression{"2 lambda +"}.evaluate(l, 8, 8));
}

TEST_CASE("frequencies", "[config]") {
    CHECK(parse_frequency("f", "5.8 GHz") == Approx(5.8e9));
    CHECK(parse_frequency("f", "5800MHz") == Approx(5.8e9));
    CHECK(parse_frequency("f", "5.8e9") == Approx(5.8e9));
    CHECK_THROWS_AS(parse_frequency("f", "5.8 parsecs"), BadUnit);
    CHECK_THROWS_AS(parse_frequency("f", "-1 GHz"), RangeError);
}

TEST_CASE("configuration errors name the offending key", "[config]") {
    CHECK(key_of<MissingKey>("n_tx = 8\nradius_tx = 1 m\ndistance = 2 m\n") == "frequency");
    CHECK(key_of<MissingKey>("frequency = 5.8 GHz\nradius_tx = 1 m\ndistance = 2 m\n") == "n_tx");
    CHECK(key_of<BadUnit>(kBase + "source_length = 3\n") == "source_length");
    CHECK(key_of<BadUnit>("frequency = 5.8 GHz\nn_tx = 8\nradius_tx = 2 deg\ndistance = 1 m\n") == "radius_tx");
    CHECK(key_of<RangeError>(kBase + "feeds_per_source = 0\n") == "feeds_per_source");
    CHECK(key_of<RangeError>("frequency = 5.8 GHz\nn_tx = 8\nradius_tx = 2lambda/pi\ndistance = -3 lambda\n") ==
          "distance");
    CHECK(key_of<RangeError>(kBase + "quadrature = 1\n") == "quadrature");
    CHECK(key_of<RangeError>(kBase + "form = curved\n") == "form");
    CHECK(key_of<ConfigError>(kBase + "colour = blue\n") == "colour");
    CHECK(key_of<ConfigError>(kBase + "n_tx = 4\n") == "n_tx");
    CHECK(key_of<ConfigError>(kBase + "methods = EIT, magic\n") == "methods");
    CHECK(key_of<MissingKey>(kBase + "sweep_parameter = distance\n") == "sweep_values");
    CHECK(key_of<ConfigError>(kBase + "run_id = a/b\n") == "run_id");
    CHECK_THROWS_AS(load_config(test::config_path("missing.cfg")), ConfigError);
}

TEST_CASE("defaults and optional keys", "[config]") {
    const RunConfig cfg = parse_config(kBase + "# comment\n\nmodes = 2, -1, 0\n");
    CHECK(cfg.scenario.rx.n_points == 8);
    CHECK(cfg.scenario.tx.feeds_per_source == 1);
    CHECK(cfg.scenario.form == SourceForm::Discrete);
    CHECK(cfg.scenario.normalization == FeedNormalization::PerFeedPower);
    CHECK(cfg.methods == std::vector<CapacityMethod>{CapacityMethod::Eit});
    CHECK(cfg.power == 1.0);
    CHECK_FALSE(cfg.sweep);
    CHECK_FALSE(cfg.grid);
    CHECK(cfg.modes.size() == 3);

    const RunConfig alt = parse_config(kBase + "form = continuous\nquadrature = 64\nfeed_normalization = source_average\n"
                                               "rx_offset = 22.5 deg\nseed = 42\n");
    CHECK(alt.scenario.form == SourceForm::Continuous);
    CHECK(alt.scenario.quadrature_order == 64);
    CHECK(alt.scenario.normalization == FeedNormalization::SourceAverage);
    CHECK(alt.scenario.rx.angular_offset == Approx(kPi / 8.0));
    CHECK(alt.seed == 42);
}

TEST_CASE("sweeps and variants", "[config]") {
    const RunConfig fig7 = load_config(test::config_path("fig7.cfg"));
    REQUIRE(fig7.sweep);
    CHECK(fig7.sweep->parameter == SweepParameter::Distance);
    REQUIRE(fig7.sweep->values.size() == 50);
    CHECK(fig7.sweep->values.front() == Approx(10.0 * test::lambda()));
    CHECK(fig7.sweep->values.back() == Approx(500.0 * test::lambda()));
    CHECK(fig7.sweep_snr_db == 20.0);
    REQUIRE(fig7.variants.size() == 4);
    CHECK(fig7.variants[1] == Variant{8, 16});
    CHECK(fig7.variants[1].label() == "8x16");

    const RunConfig v = resolve_variant(fig7, {16, 8});
    CHECK(v.scenario.tx.n_sources == 16);
    CHECK(v.scenario.rx.n_points == 8);
    CHECK(v.scenario.tx.radius == Approx(16.0 * test::lambda() / (4.0 * kPi)));
    CHECK(v.scenario.rx.radius == Approx(8.0 * test::lambda() / (4.0 * kPi)));
    CHECK_THROWS_AS(resolve_variant(fig7, {0, 8}), RangeError);

    CHECK(to_string(SweepParameter::RadiusTx) == "radius_tx");
    CHECK(parse_sweep_parameter("snr_db") == SweepParameter::SnrDb);
    CHECK_FALSE(parse_sweep_parameter("bogus"));
    CHECK(sweep_unit(SweepParameter::Distance) == "m");
    CHECK(sweep_unit(SweepParameter::SnrDb) == "dB");
}

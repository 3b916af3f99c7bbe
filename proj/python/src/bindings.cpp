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

#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "oamcap/capacity.hpp"
#include "oamcap/cli.hpp"
#include "oamcap/config.hpp"
#include "oamcap/correlation.hpp"
#include "oamcap/error.hpp"
#include "oamcap/green.hpp"
#include "oamcap/ingest.hpp"

namespace py = pybind11;
using namespace oamcap;

namespace {

Scenario scenario_from(const std::filesystem::path& path, std::optional<int> n_tx, std::optional<int> n_rx) {
    RunConfig cfg = load_config(path);
    if (n_tx || n_rx)
        cfg = resolve_variant(cfg, {n_tx.value_or(cfg.scenario.tx.n_sources), n_rx.value_or(cfg.scenario.rx.n_points)});
    return cfg.scenario;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Electromagnetic capacity analysis of UCA-based OAM links";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
    py::register_exception<SingularSeparation>(m, "SingularSeparation", error.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
    py::register_exception<NonHermitianInput>(m, "NonHermitianInput", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<InconsistentGrid>(m, "InconsistentGrid", error.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", error.ptr());

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def_static("at_frequency", &PhysicalConstants::at_frequency, py::arg("frequency"),
                    py::arg("speed_of_light") = kDefaultSpeedOfLight)
        .def_readonly("frequency", &PhysicalConstants::frequency)
        .def_readonly("wavelength", &PhysicalConstants::wavelength)
        .def_readonly("wave_number", &PhysicalConstants::wave_number)
        .def_readonly("impedance", &PhysicalConstants::impedance);

    m.def(
        "dyadic_green",
        [](const Vec3& r, const Vec3& s, double frequency) {
            return CMat3(dyadic_green(r, s, PhysicalConstants::at_frequency(frequency)));
        },
        py::arg("r"), py::arg("s"), py::arg("frequency"), "Free-space dyadic Green's tensor G(r, s).");

    m.def("idft_matrix", &idft_matrix, py::arg("n"), "Normalized N-point IDFT matrix.");

    m.def(
        "oam_correlation_matrix",
        [](const std::filesystem::path& config, std::optional<int> n_tx, std::optional<int> n_rx) {
            const Scenario s = scenario_from(config, n_tx, n_rx);
            return build_oam_correlation_matrix(s.receive_ring(), s.transmit_array(), s.constants).matrix;
        },
        py::arg("config"), py::arg("n_tx") = py::none(), py::arg("n_rx") = py::none(),
        "Mode-domain correlation matrix R_OAM for the link described by a config file.");

    m.def(
        "eit_capacity",
        [](const CMatrix& r, double power, double noise, int n_tx) {
            return eit_capacity(r, PowerBudget{power}, NoiseModel{noise}, n_tx);
        },
        py::arg("r"), py::arg("power"), py::arg("noise"), py::arg("n_tx"));

    m.def(
        "cit_capacity",
        [](const CMatrix& h, double power, double noise, int n_tx) {
            return cit_capacity(h, PowerBudget{power}, NoiseModel{noise}, n_tx);
        },
        py::arg("h"), py::arg("power"), py::arg("noise"), py::arg("n_tx"));

    m.def("log_det_capacity", &log_det_capacity, py::arg("r"), py::arg("snr_per_mode"));

    m.def(
        "read_sparams",
        [](const std::filesystem::path& path) {
            const SParameterSet s = parse_sparams_file(path);
            return py::make_tuple(s.port_count, s.frequency, s.matrix);
        },
        py::arg("path"), "Returns (port_count, frequency_hz, S).");

    m.def(
        "lumped_channel",
        [](const CMatrix& s, int n_tx, int n_rx) {
            const LumpedChannel ch = extract_lumped_channel({static_cast<int>(s.rows()), 0.0, s}, n_tx, n_rx);
            return py::make_tuple(ch.h, ch.passive_violations);
        },
        py::arg("s"), py::arg("n_tx"), py::arg("n_rx"), "Returns (H, passive_violations).");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int status = 0;
            {
                py::gil_scoped_release release;
                status = cli::run(args, out, err);
            }
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line interface in-process; returns (status, stdout, stderr).");
}

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

#include "oamcap/sweep.hpp"

#include <algorithm>
#include <exception>

#include "oamcap/correlation.hpp"
#include "oamcap/error.hpp"

namespace oamcap {
namespace {

bool wants(const std::vector<CapacityMethod>& methods, CapacityMethod m) {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

}  // namespace

LinkCorrelations evaluate_link(const Scenario& scenario, const std::vector<CapacityMethod>& methods,
                               bool normalize) {
    LinkCorrelations link;
    link.n_tx = scenario.tx.n_sources;
    link.n_rx = scenario.rx.n_points;
    const std::vector<Vec3> ring = scenario.receive_ring();
    auto finish = [&](CMatrix r) { return normalize ? normalize_gain(r) : r; };

    if (wants(methods, CapacityMethod::Eit)) {
        const TransmitArray array = scenario.transmit_array();
        link.eit = finish(build_oam_correlation_matrix(ring, array, scenario.constants).matrix);
    }
    if (wants(methods, CapacityMethod::CitLinear))
        link.cit_linear =
            finish(cit_correlation(cit_channel_matrix(ring, scenario.tx, CitSource::Linear, scenario.constants)));
    if (wants(methods, CapacityMethod::CitPoint))
        link.cit_point =
            finish(cit_correlation(cit_channel_matrix(ring, scenario.tx, CitSource::Point, scenario.constants)));
    return link;
}

double link_capacity(const LinkCorrelations& link, CapacityMethod method, double power, double snr_db) {
    const CMatrix* r = nullptr;
    switch (method) {
        case CapacityMethod::Eit: r = &link.eit; break;
        case CapacityMethod::CitLinear: r = &link.cit_linear; break;
        case CapacityMethod::CitPoint: r = &link.cit_point; break;
        case CapacityMethod::Ingested: throw InvalidArgument("ingested capacity is not a link method");
    }
    if (r->size() == 0) throw InvalidArgument(to_string(method) + " correlation was not evaluated for this link");
    const NoiseModel noise{power / snr_linear(snr_db)};
    return eit_capacity(*r, PowerBudget{power}, noise, link.n_tx);
}

std::vector<SweepRow> run_sweep(const RunConfig& config, const SweepSpec& spec) {
    if (spec.values.empty()) throw InvalidArgument("sweep has no values");
    if (spec.methods.empty()) throw InvalidArgument("sweep has no methods");
    for (CapacityMethod m : spec.methods)
        if (m == CapacityMethod::Ingested) throw InvalidArgument("sweeps cannot use the ingested method");

    std::vector<double> values = spec.values;
    std::sort(values.begin(), values.end());
    std::vector<Variant> variants = config.variants;
    if (variants.empty()) variants.push_back({config.scenario.tx.n_sources, config.scenario.rx.n_points});

    struct Task {
        std::size_t value_index;
        std::size_t variant_index;
    };
    std::vector<Task> tasks;
    for (std::size_t v = 0; v < values.size(); ++v)
        for (std::size_t k = 0; k < variants.size(); ++k) tasks.push_back({v, k});

    const std::size_t n_methods = spec.methods.size();
    std::vector<SweepRow> rows(tasks.size() * n_methods);
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < static_cast<long long>(tasks.size()); ++t) {
        try {
            const Task& task = tasks[static_cast<std::size_t>(t)];
            const double value = values[task.value_index];
            Variant variant = variants[task.variant_index];
            if (spec.parameter == SweepParameter::Modes) variant = {static_cast<int>(value), static_cast<int>(value)};
            RunConfig cfg = resolve_variant(config, variant);
            double snr = config.sweep_snr_db;
            switch (spec.parameter) {
                case SweepParameter::SnrDb: snr = value; break;
                case SweepParameter::Distance: cfg.scenario.rx.axial_distance = value; break;
                case SweepParameter::RadiusTx: cfg.scenario.tx.radius = value; break;
                case SweepParameter::RadiusRx: cfg.scenario.rx.radius = value; break;
                case SweepParameter::Modes: break;
            }
            validate(cfg.scenario.tx);
            validate(cfg.scenario.rx);
            const LinkCorrelations link = evaluate_link(cfg.scenario, spec.methods, config.normalize_gain);
            for (std::size_t m = 0; m < n_methods; ++m) {
                SweepRow& row = rows[static_cast<std::size_t>(t) * n_methods + m];
                row.parameter = spec.parameter;
                row.value = value;
                row.variant = variant;
                row.method = spec.methods[m];
                row.snr_db = snr;
                row.bps_hz = link_capacity(link, spec.methods[m], config.power, snr);
            }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace oamcap

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

#include "oamcap/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>

#include "oamcap/capacity.hpp"
#include "oamcap/config.hpp"
#include "oamcap/correlation.hpp"
#include "oamcap/error.hpp"
#include "oamcap/ingest.hpp"
#include "oamcap/output.hpp"
#include "oamcap/sweep.hpp"

namespace oamcap::cli {
namespace {

namespace fs = std::filesystem;

struct GlobalOptions {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    bool normalize_gain = false;
    std::optional<int> quadrature;
    std::string form;
};

struct IngestOptions {
    std::string kind;
    std::string file;
    double power = 1.0;
    std::optional<double> noise;
    std::optional<double> snr_db;
    std::optional<int> tx_ports;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RunConfig load_with_overrides(const GlobalOptions& g) {
    if (g.config.empty()) throw UsageError("--config is required for this command");
    RunConfig cfg = load_config(g.config);
    if (!g.out.empty()) cfg.output_dir = g.out;
    if (g.seed) cfg.seed = *g.seed;
    if (g.normalize_gain) cfg.normalize_gain = true;
    if (g.quadrature) cfg.scenario.quadrature_order = *g.quadrature;
    if (g.form == "discrete") cfg.scenario.form = SourceForm::Discrete;
    if (g.form == "continuous") cfg.scenario.form = SourceForm::Continuous;
    return cfg;
}

fs::path prepare_output(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());
    return dir;
}

std::string mode_tag(int mode) { return "mode" + std::to_string(mode); }

const char* kComponentNames[3] = {"x", "y", "z"};

int cmd_field_map(const RunConfig& cfg, std::ostream& out) {
    if (cfg.modes.empty()) throw UsageError("no modes given; set 'modes' in the config");
    if (!cfg.grid && !cfg.export_ring_fields)
        throw UsageError("field-map needs grid_resolution/grid_width or export_ring_fields = true");
    const fs::path dir = prepare_output(cfg.output_dir);
    const Scenario& sc = cfg.scenario;
    const TransmitArray array = sc.transmit_array();
    const int n_tx = sc.tx.n_sources;

    if (cfg.grid) {
        const int res = cfg.grid->resolution;
        for (int mode : cfg.modes) {
            const FieldMap map = render_field_map(*cfg.grid, pure_mode_excitation(mode, n_tx), array, sc.constants);
            const std::string stem = cfg.run_id + "_" + mode_tag(mode);
            write_field_map_csv(dir / (stem + ".csv"), map);
            write_png(dir / (stem + "_power.png"), render_power_db(map.total_power(), res));
            write_png(dir / (stem + "_phase.png"), render_phase(map.component_phase(1), res));
            write_png(dir / (stem + "_magnitude.png"), render_magnitude(map.magnitude(), res));
            if (cfg.component_views) {
                for (int c = 0; c < 3; ++c) {
                    const std::string tag = std::string("_") + kComponentNames[c];
                    write_png(dir / (stem + "_power" + tag + ".png"), render_power_db(map.component_power(c), res));
                    write_png(dir / (stem + "_phase" + tag + ".png"), render_phase(map.component_phase(c), res));
                }
            }
            out << "mode " << mode << ": wrote " << stem << ".csv and images\n";
        }
        if (cfg.autocorrelation_panels) {
            // Field autocorrelation R_E(r, r) for independent unit-power sources, one panel per component pair.
            const std::vector<Vec3> points = build_observer_grid(*cfg.grid);
            std::vector<CMat3> r(points.size());
            std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 64)
            for (long long i = 0; i < static_cast<long long>(points.size()); ++i) {
                try {
                    r[i] = field_autocorrelation(points[i], points[i], array, sc.constants);
                } catch (...) {
#pragma omp critical
                    if (!failure) failure = std::current_exception();
                }
            }
            if (failure) std::rethrow_exception(failure);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    std::vector<double> panel(points.size());
                    for (std::size_t i = 0; i < points.size(); ++i) panel[i] = std::abs(r[i](a, b));
                    const std::string name =
                        cfg.run_id + "_autocorr_" + kComponentNames[a] + kComponentNames[b] + ".png";
                    write_png(dir / name, render_power_db(panel, res));
                }
            out << "wrote 9 autocorrelation panels\n";
        }
    }

    if (cfg.export_ring_fields) {
        FieldExport data;
        data.positions = sc.receive_ring();
        for (int p = 1; p <= static_cast<int>(data.positions.size()); ++p) data.point_indices.push_back(p);
        for (int mode : cfg.modes) {
            data.modes.push_back(mode);
            data.fields.push_back(fields_at_points(data.positions, pure_mode_excitation(mode, n_tx), array, sc.constants));
        }
        const std::string name = cfg.run_id + "_ring_fields.csv";
        write_field_export_file(dir / name, data);
        out << "wrote " << name << " (" << data.modes.size() << " modes x " << data.positions.size() << " points)\n";
    }
    return kSuccess;
}

void print_spectrum(std::ostream& out, const std::string& label, const CMatrix& r) {
    const RVector eig = hermitian_eigenvalues(r);
    const double trace = r.trace().real();
    const double max_eig = eig.size() ? eig.maxCoeff() : 0.0;
    const double min_eig = eig.size() ? eig.minCoeff() : 0.0;
    out << label << ": size " << r.rows() << ", trace " << format_double(trace) << ", eigenvalue sum "
        << format_double(eig.sum()) << ", condition ";
    if (min_eig > 0.0) out << format_double(max_eig / min_eig);
    else out << "inf";
    out << '\n';
    for (Eigen::Index i = eig.size(); i-- > 0;)
        out << "  lambda[" << (eig.size() - 1 - i) << "] = " << format_double(eig(i)) << '\n';
}

int cmd_capacity(const RunConfig& cfg, std::ostream& out) {
    if (cfg.snr_db.empty()) throw MissingKey("snr_db");
    const fs::path dir = prepare_output(cfg.output_dir);
    const LinkCorrelations link = evaluate_link(cfg.scenario, cfg.methods, cfg.normalize_gain);
    const Variant variant{link.n_tx, link.n_rx};

    std::vector<SweepRow> rows;
    for (CapacityMethod m : cfg.methods)
        for (double snr : cfg.snr_db)
            rows.push_back({SweepParameter::SnrDb, snr, variant, m, snr, link_capacity(link, m, cfg.power, snr)});
    const std::string name = cfg.run_id + "_capacity.csv";
    write_capacity_csv(dir / name, rows);

    out << (cfg.normalize_gain ? "gain: normalized to trace N_r\n" : "gain: raw\n");
    if (link.eit.size()) {
        print_spectrum(out, "R_OAM", link.eit);
        write_matrix_csv(dir / (cfg.run_id + "_roam.csv"), link.eit);
    }
    if (link.cit_linear.size()) print_spectrum(out, "R_c (CIT-linear)", link.cit_linear);
    if (link.cit_point.size()) print_spectrum(out, "R_c (CIT-point)", link.cit_point);
    for (const SweepRow& row : rows)
        out << to_string(row.method) << " @ " << format_double(row.snr_db) << " dB: " << format_double(row.bps_hz)
            << " bps/Hz\n";
    out << "wrote " << name << '\n';
    return kSuccess;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.sweep) throw MissingKey("sweep_parameter");
    const fs::path dir = prepare_output(cfg.output_dir);
    const std::vector<SweepRow> rows = run_sweep(cfg, *cfg.sweep);
    const std::string name = cfg.run_id + "_sweep.csv";
    write_capacity_csv(dir / name, rows);
    out << "sweep over " << to_string(cfg.sweep->parameter) << ": " << rows.size() << " rows, wrote " << name << '\n';
    return kSuccess;
}

int cmd_ingest(const IngestOptions& opt, const GlobalOptions& g, std::ostream& out) {
    if (opt.noise && opt.snr_db) throw UsageError("give either --noise or --snr-db, not both");
    if (!(opt.power > 0.0)) throw UsageError("--power must be positive");
    double n0 = 1.0;
    if (opt.noise) n0 = *opt.noise;
    if (opt.snr_db) n0 = opt.power / snr_linear(*opt.snr_db);
    if (!(n0 > 0.0)) throw UsageError("--noise must be positive");

    int n_tx = 0;
    int n_rx = 0;
    double bps = 0.0;
    if (opt.kind == "sparams") {
        const SParameterSet s = parse_sparams_file(opt.file);
        n_tx = opt.tx_ports.value_or(s.port_count / 2);
        n_rx = s.port_count - n_tx;
        if (n_tx < 1 || n_rx < 1) throw UsageError("--tx-ports must leave at least one port on each side");
        const LumpedChannel channel = extract_lumped_channel(s, n_tx, n_rx);
        out << "file: " << opt.file << "\nports: " << s.port_count << " (tx " << n_tx << ", rx " << n_rx
            << ")\nfrequency_hz: " << format_double(s.frequency) << '\n';
        if (channel.passive_violations)
            out << "warning: " << channel.passive_violations << " transfer entries exceed unit magnitude\n";
        bps = cit_capacity(channel.h, PowerBudget{opt.power}, NoiseModel{n0}, n_tx);
    } else {
        if (opt.tx_ports) throw UsageError("--tx-ports applies to sparams only");
        const FieldExport data = parse_field_export_file(opt.file);
        n_tx = static_cast<int>(data.group_count());
        n_rx = static_cast<int>(data.point_count());
        out << "file: " << opt.file << "\nmodes: " << n_tx << "\npoints: " << n_rx << '\n';
        bps = capacity_from_field_export(data, PowerBudget{opt.power}, NoiseModel{n0});
    }
    const double snr_db = 10.0 * std::log10(opt.power / n0);
    out << "power_w: " << format_double(opt.power) << "\nnoise_w: " << format_double(n0)
        << "\ncapacity_bps_hz: " << format_double(bps) << '\n';

    const fs::path dir = prepare_output(g.out.empty() ? fs::path("out") : fs::path(g.out));
    const std::string name = "ingest_" + opt.kind + ".csv";
    write_capacity_csv(dir / name, {{SweepParameter::SnrDb, snr_db, {n_tx, n_rx}, CapacityMethod::Ingested, snr_db, bps}});
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Electromagnetic capacity analysis of UCA-based OAM links", "oamcap"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--config", g.config, "Run configuration file");
    app.add_option("--out", g.out, "Output directory (overrides output_dir)");
    app.add_option("--seed", g.seed, "Seed for Monte-Carlo validation paths");
    app.add_flag("--normalize-gain", g.normalize_gain, "Rescale correlation matrices to trace N_r");
    app.add_option("--quadrature", g.quadrature, "Gauss-Legendre order for continuous sources")
        ->check(CLI::Range(2, 1024));
    app.add_option("--form", g.form, "Source form")->check(CLI::IsMember({"discrete", "continuous"}));

    auto* field_map = app.add_subcommand("field-map", "Render induced field maps per OAM mode");
    auto* capacity = app.add_subcommand("capacity", "Capacity versus SNR for the configured link");
    auto* sweep = app.add_subcommand("sweep", "Capacity sweep over one configuration parameter");
    auto* ingest = app.add_subcommand("ingest", "Capacity from exported S-parameters or ring fields");

    IngestOptions io;
    ingest->add_option("kind", io.kind, "sparams or fields")->required()->check(CLI::IsMember({"sparams", "fields"}));
    ingest->add_option("file", io.file, "Input file")->required();
    ingest->add_option("--power", io.power, "Total transmit power P in W");
    ingest->add_option("--noise", io.noise, "Noise power N0 in W");
    ingest->add_option("--snr-db", io.snr_db, "P/N0 in dB (alternative to --noise)");
    ingest->add_option("--tx-ports", io.tx_ports, "Number of transmit ports (default: half)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*ingest) return cmd_ingest(io, g, out);
        const RunConfig cfg = load_with_overrides(g);
        if (*field_map) return cmd_field_map(cfg, out);
        if (*capacity) return cmd_capacity(cfg, out);
        if (*sweep) return cmd_sweep(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsageError;
}

}  // namespace oamcap::cli

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

#include "oamcap/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "oamcap/error.hpp"
#include "oamcap/ingest.hpp"

namespace oamcap {

std::string to_string(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::SnrDb: return "snr_db";
        case SweepParameter::Distance: return "distance";
        case SweepParameter::RadiusTx: return "radius_tx";
        case SweepParameter::RadiusRx: return "radius_rx";
        case SweepParameter::Modes: return "modes";
    }
    return "unknown";
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
    for (SweepParameter p : {SweepParameter::SnrDb, SweepParameter::Distance, SweepParameter::RadiusTx,
                             SweepParameter::RadiusRx, SweepParameter::Modes})
        if (to_string(p) == name) return p;
    return std::nullopt;
}

std::string sweep_unit(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::SnrDb: return "dB";
        case SweepParameter::Modes: return "count";
        default: return "m";
    }
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// --- Expression evaluation --------------------------------------------------

struct Quantity {
    double value = 0.0;
    int lambda_power = 0;  // 1 for expressions proportional to lambda
    std::string unit;      // trailing unit identifier, if any
};

struct Variables {
    double wavelength = 0.0;
    double n_tx = 0.0;
    double n_rx = 0.0;
};

class ExpressionParser {
public:
    ExpressionParser(std::string_view key, std::string_view text, const Variables& vars)
        : key_(key), text_(text), vars_(vars) {}

    Quantity parse() {
        skip_space();
        if (pos_ == text_.size()) throw RangeError(key_, "empty value");
        Quantity q = expression();
        skip_space();
        // Trailing unit suffix.
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            const std::string id = identifier();
            if (id != "m" && id != "mm" && id != "deg" && id != "rad" && id != "db")
                throw BadUnit(key_, "unknown unit '" + id + "'");
            q.unit = id;
            skip_space();
        }
        if (pos_ != text_.size())
            throw RangeError(key_, "cannot parse '" + std::string(text_) + "' near position " + std::to_string(pos_ + 1));
        return q;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_primary() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(') return true;
        if (!std::isalpha(static_cast<unsigned char>(c))) return false;
        // Unit suffixes end the expression instead of multiplying into it.
        std::size_t end = pos_;
        while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
        const std::string id = lower(text_.substr(pos_, end - pos_));
        return id == "pi" || id == "lambda" || id == "nt" || id == "nr";
    }

    std::string identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return lower(text_.substr(start, pos_ - start));
    }

    Quantity expression() {
        Quantity q = term();
        while (peek('+') || peek('-')) {
            const char op = text_[pos_++];
            const Quantity rhs = term();
            if (rhs.lambda_power != q.lambda_power) throw BadUnit(key_, "cannot add lengths and plain numbers");
            q.value = (op == '+') ? q.value + rhs.value : q.value - rhs.value;
        }
        return q;
    }

    Quantity term() {
        Quantity q = unary();
        while (true) {
            if (peek('*') || peek('/')) {
                const char op = text_[pos_++];
                const Quantity rhs = unary();
                if (op == '*') {
                    q.value *= rhs.value;
                    q.lambda_power += rhs.lambda_power;
                } else {
                    if (rhs.value == 0.0) throw RangeError(key_, "division by zero");
                    q.value /= rhs.value;
                    q.lambda_power -= rhs.lambda_power;
                }
            } else if (starts_primary()) {
                const Quantity rhs = unary();
                q.value *= rhs.value;
                q.lambda_power += rhs.lambda_power;
            } else {
                return q;
            }
        }
    }

    Quantity unary() {
        if (peek('-')) {
            ++pos_;
            Quantity q = unary();
            q.value = -q.value;
            return q;
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return primary();
    }

    Quantity primary() {
        skip_space();
        if (pos_ >= text_.size()) throw RangeError(key_, "unexpected end of '" + std::string(text_) + "'");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Quantity q = expression();
            if (!peek(')')) throw RangeError(key_, "missing ')' in '" + std::string(text_) + "'");
            ++pos_;
            return q;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.'))
                ++end;
            // Exponent only when followed by digits, so "2e" is not swallowed.
            if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
                std::size_t e = end + 1;
                if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
                if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
                    while (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) ++e;
                    end = e;
                }
            }
            double v = 0.0;
            if (!parse_double(text_.substr(pos_, end - pos_), v))
                throw RangeError(key_, "bad number '" + std::string(text_.substr(pos_, end - pos_)) + "'");
            pos_ = end;
            return {v, 0, {}};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            const std::string id = identifier();
            if (id == "pi") return {kPi, 0, {}};
            if (id == "lambda") return {vars_.wavelength, 1, {}};
            if (id == "nt") return {vars_.n_tx, 0, {}};
            if (id == "nr") return {vars_.n_rx, 0, {}};
            pos_ = start;
            throw BadUnit(key_, "unexpected '" + id + "' in '" + std::string(text_) + "'");
        }
        throw RangeError(key_, "unexpected '" + std::string(1, c) + "' in '" + std::string(text_) + "'");
    }

    std::string key_;
    std::string_view text_;
    Variables vars_;
    std::size_t pos_ = 0;
};

double evaluate_length(const std::string& key, std::string_view text, const Variables& vars) {
    const Quantity q = ExpressionParser(key, text, vars).parse();
    double v = 0.0;
    if (q.lambda_power == 1 && q.unit.empty()) {
        v = q.value;
    } else if (q.lambda_power == 0 && q.unit == "m") {
        v = q.value;
    } else if (q.lambda_power == 0 && q.unit == "mm") {
        v = q.value * 1e-3;
    } else {
        throw BadUnit(key, "'" + std::string(text) + "' is not a length (use m, mm or lambda)");
    }
    if (!std::isfinite(v)) throw RangeError(key, "non-finite length");
    return v;
}

double evaluate_angle(const std::string& key, std::string_view text) {
    const Quantity q = ExpressionParser(key, text, {}).parse();
    if (q.lambda_power != 0) throw BadUnit(key, "angle cannot depend on lambda");
    if (q.unit.empty() || q.unit == "rad") return q.value;
    if (q.unit == "deg") return q.value * kPi / 180.0;
    throw BadUnit(key, "angles take rad or deg");
}

double evaluate_number(const std::string& key, std::string_view text) {
    const Quantity q = ExpressionParser(key, text, {}).parse();
    if (q.lambda_power != 0 || (!q.unit.empty() && q.unit != "db"))
        throw BadUnit(key, "'" + std::string(text) + "' must be a plain number");
    if (!std::isfinite(q.value)) throw RangeError(key, "non-finite value");
    return q.value;
}

long long parse_integer(const std::string& key, std::string_view text) {
    text = trim(text);
    long long v = 0;
    const char* begin = text.data();
    if (!text.empty() && text.front() == '+') ++begin;
    const auto res = std::from_chars(begin, text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw RangeError(key, "expected an integer, got '" + std::string(text) + "'");
    return v;
}

int parse_count(const std::string& key, std::string_view text, int minimum = 1, int maximum = 1 << 20) {
    const long long v = parse_integer(key, text);
    if (v < minimum || v > maximum)
        throw RangeError(key, std::to_string(v) + " not in [" + std::to_string(minimum) + ", " +
                                  std::to_string(maximum) + "]");
    return static_cast<int>(v);
}

bool parse_bool(const std::string& key, std::string_view text) {
    const std::string t = lower(trim(text));
    if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
    if (t == "false" || t == "no" || t == "off" || t == "0") return false;
    throw RangeError(key, "expected true or false, got '" + std::string(text) + "'");
}

// "start:stop:steps" (inclusive, linear) or a comma list; each item evaluated by `item`.
template <class F>
std::vector<double> parse_grid(const std::string& key, std::string_view text, F item) {
    std::vector<double> out;
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw RangeError(key, "ranges are written start:stop:steps");
        const double start = item(parts[0]);
        const double stop = item(parts[1]);
        const int steps = parse_count(key, parts[2], 1, 1000000);
        if (steps == 1) {
            if (start != stop) throw RangeError(key, "a one-step range needs start == stop");
            return {start};
        }
        for (int i = 0; i < steps; ++i) out.push_back(start + (stop - start) * i / (steps - 1));
        return out;
    }
    for (std::string_view part : split(text, ',')) {
        if (part.empty()) throw RangeError(key, "empty list item");
        out.push_back(item(part));
    }
    return out;
}

std::vector<int> parse_modes(const std::string& key, std::string_view text) {
    std::vector<int> out;
    if (trim(text).empty()) return out;
    for (std::string_view part : split(text, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string_view::npos) {
            out.push_back(static_cast<int>(parse_count(key, part, -100000, 100000)));
            continue;
        }
        const int a = parse_count(key, part.substr(0, dots), -100000, 100000);
        const int b = parse_count(key, part.substr(dots + 2), -100000, 100000);
        if (b < a) throw RangeError(key, "descending mode range");
        for (int m = a; m <= b; ++m) out.push_back(m);
    }
    return out;
}

std::vector<CapacityMethod> parse_methods(const std::string& key, std::string_view text) {
    std::vector<CapacityMethod> out;
    for (std::string_view part : split(text, ',')) {
        const std::string m = lower(part);
        CapacityMethod method;
        if (m == "eit") method = CapacityMethod::Eit;
        else if (m == "cit-linear") method = CapacityMethod::CitLinear;
        else if (m == "cit-point") method = CapacityMethod::CitPoint;
        else throw RangeError(key, "unknown method '" + std::string(part) + "'");
        if (std::find(out.begin(), out.end(), method) == out.end()) out.push_back(method);
    }
    if (out.empty()) throw RangeError(key, "no methods given");
    return out;
}

std::vector<Variant> parse_variants(const std::string& key, std::string_view text) {
    std::vector<Variant> out;
    for (std::string_view part : split(text, ',')) {
        const auto x = lower(part).find('x');
        if (x == std::string::npos) throw RangeError(key, "variants are written NtxNr, e.g. 8x16");
        Variant v{parse_count(key, part.substr(0, x)), parse_count(key, part.substr(x + 1))};
        out.push_back(v);
    }
    return out;
}

const std::set<std::string> kKnownKeys{
    "run_id",       "frequency",    "speed_of_light", "n_tx",         "feeds_per_source",
    "radius_tx",    "source_length", "n_rx",          "radius_rx",    "distance",
    "rx_offset",    "modes",        "grid_resolution", "grid_width",  "grid_distance",
    "snr_db",       "power",        "methods",        "form",         "quadrature",
    "normalize_gain", "sweep_parameter", "sweep_values", "sweep_snr_db", "variants",
    "output_dir",   "export_ring_fields", "feed_normalization", "component_views", "autocorrelation_panels", "seed"};

}  // namespace

double LengthExpression::evaluate(double wavelength, int n_tx, int n_rx) const {
    return evaluate_length("length", text, {wavelength, static_cast<double>(n_tx), static_cast<double>(n_rx)});
}

double parse_frequency(std::string_view key, std::string_view value) {
    std::string_view t = trim(value);
    std::size_t end = t.size();
    while (end > 0 && std::isalpha(static_cast<unsigned char>(t[end - 1]))) --end;
    const std::string unit = lower(t.substr(end));
    double scale = 1.0;
    if (unit.empty() || unit == "hz") scale = 1.0;
    else if (unit == "khz") scale = 1e3;
    else if (unit == "mhz") scale = 1e6;
    else if (unit == "ghz") scale = 1e9;
    else if (unit == "thz") scale = 1e12;
    else throw BadUnit(std::string(key), "unknown frequency unit '" + std::string(t.substr(end)) + "'");
    double v = 0.0;
    if (!parse_double(t.substr(0, end), v)) throw RangeError(std::string(key), "bad frequency '" + std::string(t) + "'");
    v *= scale;
    if (!(v > 0.0) || !std::isfinite(v)) throw RangeError(std::string(key), "frequency must be positive");
    return v;
}

RunConfig parse_config(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
        const auto hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = lower(trim(line.substr(0, eq)));
        if (!kKnownKeys.count(key)) throw ConfigError(key, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (kv.count(key)) throw ConfigError(key, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        kv.emplace(key, std::string(trim(line.substr(eq + 1))));
    }

    auto has = [&](const std::string& k) { return kv.count(k) > 0; };
    auto get = [&](const std::string& k) -> const std::string& {
        const auto it = kv.find(k);
        if (it == kv.end()) throw MissingKey(k);
        return it->second;
    };

    RunConfig cfg;
    if (has("run_id")) {
        cfg.run_id = get("run_id");
        const bool ok = !cfg.run_id.empty() && std::all_of(cfg.run_id.begin(), cfg.run_id.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
        });
        if (!ok) throw RangeError("run_id", "use letters, digits, '_', '-' or '.'");
    }
    if (has("speed_of_light")) {
        cfg.speed_of_light = evaluate_number("speed_of_light", get("speed_of_light"));
        if (!(cfg.speed_of_light > 0.0)) throw RangeError("speed_of_light", "must be positive");
    }
    const double frequency = parse_frequency("frequency", get("frequency"));
    cfg.scenario.constants = PhysicalConstants::at_frequency(frequency, cfg.speed_of_light);
    const double lambda = cfg.scenario.constants.wavelength;

    const int n_tx = parse_count("n_tx", get("n_tx"));
    const int n_rx = has("n_rx") ? parse_count("n_rx", get("n_rx")) : n_tx;
    const Variables vars{lambda, static_cast<double>(n_tx), static_cast<double>(n_rx)};

    auto positive_length = [&](const std::string& key, std::string_view value) {
        const double v = evaluate_length(key, value, vars);
        if (!(v > 0.0)) throw RangeError(key, "must be positive");
        return v;
    };

    cfg.radius_tx.text = get("radius_tx");
    cfg.radius_rx.text = has("radius_rx") ? get("radius_rx") : cfg.radius_tx.text;

    TransmitArrayConfig& tx = cfg.scenario.tx;
    tx.n_sources = n_tx;
    tx.feeds_per_source = has("feeds_per_source") ? parse_count("feeds_per_source", get("feeds_per_source")) : 1;
    tx.radius = positive_length("radius_tx", cfg.radius_tx.text);
    tx.source_length = positive_length("source_length", has("source_length") ? get("source_length") : "0.5 lambda");

    ReceiveRingConfig& rx = cfg.scenario.rx;
    rx.n_points = n_rx;
    rx.radius = positive_length("radius_rx", cfg.radius_rx.text);
    rx.axial_distance = positive_length("distance", get("distance"));
    rx.angular_offset = has("rx_offset") ? evaluate_angle("rx_offset", get("rx_offset")) : 0.0;

    if (has("form")) {
        const std::string f = lower(get("form"));
        if (f == "discrete") cfg.scenario.form = SourceForm::Discrete;
        else if (f == "continuous") cfg.scenario.form = SourceForm::Continuous;
        else throw RangeError("form", "expected discrete or continuous");
    }
    if (has("quadrature")) cfg.scenario.quadrature_order = parse_count("quadrature", get("quadrature"), 2, 1024);

    if (has("feed_normalization")) {
        const std::string n = lower(get("feed_normalization"));
        if (n == "per_feed_power") cfg.scenario.normalization = FeedNormalization::PerFeedPower;
        else if (n == "source_average") cfg.scenario.normalization = FeedNormalization::SourceAverage;
        else throw RangeError("feed_normalization", "expected per_feed_power or source_average");
    }
    if (has("modes")) cfg.modes = parse_modes("modes", get("modes"));

    if (has("grid_resolution") || has("grid_width") || has("grid_distance")) {
        ObserverGrid grid;
        grid.resolution = parse_count("grid_resolution", get("grid_resolution"), 2, 8192);
        grid.width = positive_length("grid_width", get("grid_width"));
        grid.axial_distance =
            has("grid_distance") ? positive_length("grid_distance", get("grid_distance")) : rx.axial_distance;
        cfg.grid = grid;
    }
    if (has("component_views")) cfg.component_views = parse_bool("component_views", get("component_views"));
    if (has("autocorrelation_panels"))
        cfg.autocorrelation_panels = parse_bool("autocorrelation_panels", get("autocorrelation_panels"));
    if (has("export_ring_fields")) cfg.export_ring_fields = parse_bool("export_ring_fields", get("export_ring_fields"));

    if (has("power")) {
        cfg.power = evaluate_number("power", get("power"));
        if (!(cfg.power > 0.0)) throw RangeError("power", "must be positive");
    }
    if (has("snr_db"))
        cfg.snr_db = parse_grid("snr_db", get("snr_db"), [](std::string_view s) { return evaluate_number("snr_db", s); });
    if (has("methods")) cfg.methods = parse_methods("methods", get("methods"));
    if (has("normalize_gain")) cfg.normalize_gain = parse_bool("normalize_gain", get("normalize_gain"));

    if (has("sweep_parameter")) {
        SweepSpec spec;
        const auto p = parse_sweep_parameter(lower(get("sweep_parameter")));
        if (!p) throw RangeError("sweep_parameter", "expected snr_db, distance, radius_tx, radius_rx or modes");
        spec.parameter = *p;
        const std::string& values = get("sweep_values");
        switch (spec.parameter) {
            case SweepParameter::SnrDb:
                spec.values = parse_grid("sweep_values", values,
                                         [](std::string_view s) { return evaluate_number("sweep_values", s); });
                break;
            case SweepParameter::Modes:
                spec.values = parse_grid("sweep_values", values, [](std::string_view s) {
                    return static_cast<double>(parse_count("sweep_values", s));
                });
                for (double& v : spec.values) v = std::round(v);
                break;
            default:
                spec.values = parse_grid("sweep_values", values,
                                         [&](std::string_view s) { return positive_length("sweep_values", s); });
        }
        if (spec.values.empty()) throw RangeError("sweep_values", "no values");
        spec.methods = cfg.methods;
        cfg.sweep = spec;
    } else if (has("sweep_values")) {
        throw MissingKey("sweep_parameter");
    }
    if (has("sweep_snr_db")) cfg.sweep_snr_db = evaluate_number("sweep_snr_db", get("sweep_snr_db"));
    if (has("variants")) cfg.variants = parse_variants("variants", get("variants"));
    if (has("output_dir")) cfg.output_dir = get("output_dir");
    if (has("seed")) {
        const std::string& s = get("seed");
        std::uint64_t seed = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), seed);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw RangeError("seed", "expected an unsigned integer");
        cfg.seed = seed;
    }

    try {
        validate(tx);
        validate(rx);
        if (cfg.grid) validate(*cfg.grid);
    } catch (const InvalidArgument& e) {
        throw RangeError("geometry", e.what());
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("", "cannot open config '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

RunConfig resolve_variant(const RunConfig& config, const Variant& variant) {
    if (variant.n_tx < 1 || variant.n_rx < 1) throw RangeError("variants", "counts must be positive");
    RunConfig out = config;
    const double lambda = config.scenario.constants.wavelength;
    out.scenario.tx.n_sources = variant.n_tx;
    out.scenario.rx.n_points = variant.n_rx;
    const Variables vars{lambda, static_cast<double>(variant.n_tx), static_cast<double>(variant.n_rx)};
    out.scenario.tx.radius = evaluate_length("radius_tx", config.radius_tx.text, vars);
    out.scenario.rx.radius = evaluate_length("radius_rx", config.radius_rx.text, vars);
    if (!(out.scenario.tx.radius > 0.0)) throw RangeError("radius_tx", "must be positive");
    if (!(out.scenario.rx.radius > 0.0)) throw RangeError("radius_rx", "must be positive");
    return out;
}

}  // namespace oamcap

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

#include "oamcap/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>

#include "oamcap/error.hpp"

namespace oamcap {

std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

bool parse_double(std::string_view token, double& value) {
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r'))
        token.remove_suffix(1);
    if (token.empty()) return false;
    if (token.front() == '+') token.remove_prefix(1);
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    return res.ec == std::errc() && res.ptr == token.data() + token.size() && std::isfinite(value);
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = (end == std::string_view::npos) ? std::string_view{} : text.substr(end + 1);
        const std::string_view t = trim(raw);
        if (t.empty() || t.front() == '#') continue;
        lines.push_back({number, raw});
    }
    return lines;
}

struct Field {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Field> split_csv(std::string_view line) {
    std::vector<Field> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        const std::string_view piece = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
        out.push_back({piece, start + 1});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double require_double(const Field& f, std::size_t line, const std::string& source) {
    double v = 0.0;
    if (!parse_double(f.text, v))
        throw ParseError(source, line, f.column, "expected a finite number, got '" + std::string(trim(f.text)) + "'");
    return v;
}

long long require_integer(const Field& f, std::size_t line, const std::string& source) {
    const std::string_view t = trim(f.text);
    long long v = 0;
    const char* begin = t.data();
    if (!t.empty() && t.front() == '+') ++begin;
    const auto res = std::from_chars(begin, t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw ParseError(source, line, f.column, "expected an integer, got '" + std::string(t) + "'");
    return v;
}

}  // namespace

// --- S-parameters -----------------------------------------------------------

SParameterSet parse_sparams(std::string_view text, const std::string& source_name) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError(source_name, 0, 0, "empty S-parameter file");

    // Header: ports=<n>, freq_hz=<f>, format=ri
    const Line& header = lines.front();
    std::map<std::string, Field> keys;
    for (const Field& f : split_csv(header.text)) {
        const std::string_view item = trim(f.text);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(source_name, header.number, f.column, "header items must be key=value");
        const std::string key(trim(item.substr(0, eq)));
        if (keys.count(key)) throw ParseError(source_name, header.number, f.column, "duplicate header key '" + key + "'");
        keys.emplace(key, Field{trim(item.substr(eq + 1)), f.column});
    }
    for (const char* required : {"ports", "freq_hz", "format"})
        if (!keys.count(required))
            throw ParseError(source_name, header.number, 0, std::string("header lacks '") + required + "'");
    if (keys.size() != 3) throw ParseError(source_name, header.number, 0, "unexpected header keys");
    if (keys.at("format").text != "ri")
        throw ParseError(source_name, header.number, keys.at("format").column, "only format=ri is supported");

    const long long ports = require_integer(keys.at("ports"), header.number, source_name);
    if (ports < 1 || ports > 4096)
        throw ParseError(source_name, header.number, keys.at("ports").column, "port count out of range");
    const double freq = require_double(keys.at("freq_hz"), header.number, source_name);
    if (!(freq > 0.0)) throw ParseError(source_name, header.number, keys.at("freq_hz").column, "frequency must be positive");

    const auto n = static_cast<Eigen::Index>(ports);
    if (static_cast<long long>(lines.size()) - 1 != ports)
        throw DimensionError(source_name + ": declared " + std::to_string(ports) + " ports but found " +
                             std::to_string(lines.size() - 1) + " matrix rows");

    SParameterSet out;
    out.port_count = static_cast<int>(ports);
    out.frequency = freq;
    out.matrix.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Line& row = lines[static_cast<std::size_t>(i) + 1];
        const std::vector<Field> fields = split_csv(row.text);
        if (static_cast<Eigen::Index>(fields.size()) != 2 * n)
            throw DimensionError(source_name + ":" + std::to_string(row.number) + ": expected " +
                                 std::to_string(2 * n) + " values, found " + std::to_string(fields.size()));
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = require_double(fields[2 * j], row.number, source_name);
            const double im = require_double(fields[2 * j + 1], row.number, source_name);
            out.matrix(i, j) = {re, im};
        }
    }
    return out;
}

SParameterSet parse_sparams_file(const std::filesystem::path& path) {
    return parse_sparams(read_file(path), path.string());
}

void write_sparams(std::ostream& out, const SParameterSet& sparams) {
    const auto n = sparams.matrix.rows();
    if (n != sparams.matrix.cols() || n != sparams.port_count)
        throw DimensionError("S-parameter matrix does not match its port count");
    out << "ports=" << sparams.port_count << ", freq_hz=" << format_double(sparams.frequency) << ", format=ri\n";
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j) out << ',';
            out << format_double(sparams.matrix(i, j).real()) << ',' << format_double(sparams.matrix(i, j).imag());
        }
        out << '\n';
    }
}

void write_sparams_file(const std::filesystem::path& path, const SParameterSet& sparams) {
    std::ostringstream ss;
    write_sparams(ss, sparams);
    write_file(path, ss.str());
}

LumpedChannel extract_lumped_channel(const SParameterSet& sparams, int n_tx, int n_rx) {
    if (n_tx < 1 || n_rx < 1) throw DimensionError("port split needs at least one transmit and one receive port");
    if (sparams.matrix.rows() != sparams.matrix.cols()) throw DimensionError("S-parameter matrix is not square");
    if (sparams.matrix.rows() != n_tx + n_rx)
        throw DimensionError("S-parameter matrix has " + std::to_string(sparams.matrix.rows()) + " ports, expected " +
                             std::to_string(n_tx + n_rx));
    LumpedChannel out;
    out.h.resize(n_rx, n_tx);
    for (int i = 0; i < n_rx; ++i)
        for (int j = 0; j < n_tx; ++j) {
            const cdouble s = sparams.matrix(n_tx + i, j);
            if (std::abs(s) > 1.0) ++out.passive_violations;
            out.h(i, j) = std::sqrt(s);
        }
    return out;
}

// --- Field exports ----------------------------------------------------------

namespace {

const std::vector<std::string> kFieldColumns{"mode", "point", "x", "y", "z", "re_ex", "im_ex",
                                             "re_ey", "im_ey", "re_ez", "im_ez"};

struct FieldRecord {
    int mode;
    long long point;
    Vec3 position;
    CVec3 field;
    std::size_t line;
};

}  // namespace

FieldExport parse_field_export(std::string_view text, const std::string& source_name) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError(source_name, 0, 0, "empty field export");

    const std::vector<Field> header = split_csv(lines.front().text);
    std::vector<std::string> names;
    for (const Field& f : header) names.emplace_back(trim(f.text));
    bool has_point = true;
    if (names != kFieldColumns) {
        std::vector<std::string> without_point = kFieldColumns;
        without_point.erase(without_point.begin() + 1);
        if (names != without_point)
            throw ParseError(source_name, lines.front().number, 1,
                             "header must be mode,point,x,y,z,re_ex,im_ex,re_ey,im_ey,re_ez,im_ez");
        has_point = false;
    }
    if (lines.size() < 2) throw ParseError(source_name, lines.front().number, 0, "field export has no records");

    std::map<int, long long> next_point;  // implicit indices when the column is absent
    std::vector<FieldRecord> records;
    records.reserve(lines.size() - 1);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::vector<Field> f = split_csv(line.text);
        if (f.size() != names.size())
            throw ParseError(source_name, line.number, 0,
                             "expected " + std::to_string(names.size()) + " columns, found " + std::to_string(f.size()));
        std::size_t c = 0;
        const long long mode = require_integer(f[c++], line.number, source_name);
        if (mode < -1000000 || mode > 1000000) throw ParseError(source_name, line.number, f[0].column, "mode out of range");
        FieldRecord rec{};
        rec.mode = static_cast<int>(mode);
        rec.line = line.number;
        if (has_point) {
            rec.point = require_integer(f[c], line.number, source_name);
            if (rec.point < 1) throw ParseError(source_name, line.number, f[c].column, "point index must be >= 1");
            ++c;
        } else {
            rec.point = ++next_point[rec.mode];
        }
        double v[9];
        for (double& x : v) x = require_double(f[c++], line.number, source_name);
        rec.position = Vec3(v[0], v[1], v[2]);
        rec.field = CVec3(cdouble(v[3], v[4]), cdouble(v[5], v[6]), cdouble(v[7], v[8]));
        records.push_back(rec);
    }

    // Group by declared (mode, point); record order is irrelevant.
    std::map<int, std::map<long long, const FieldRecord*>> groups;
    for (const FieldRecord& rec : records) {
        auto& group = groups[rec.mode];
        if (!group.emplace(rec.point, &rec).second)
            throw ParseError(source_name, rec.line, 0,
                             "duplicate record for mode " + std::to_string(rec.mode) + " point " +
                                 std::to_string(rec.point));
    }

    FieldExport out;
    const auto& reference = groups.begin()->second;
    for (const auto& [point, rec] : reference) {
        out.point_indices.push_back(static_cast<int>(point));
        out.positions.push_back(rec->position);
    }
    for (const auto& [mode, group] : groups) {
        if (group.size() != reference.size())
            throw InconsistentGrid("mode " + std::to_string(mode) + " has " + std::to_string(group.size()) +
                                   " points, expected " + std::to_string(reference.size()));
        std::vector<CVec3> samples;
        samples.reserve(group.size());
        std::size_t i = 0;
        for (const auto& [point, rec] : group) {
            if (point != out.point_indices[i])
                throw InconsistentGrid("mode " + std::to_string(mode) + " lacks point " +
                                       std::to_string(out.point_indices[i]));
            if ((rec->position - out.positions[i]).cwiseAbs().maxCoeff() > kFieldExportPositionTolerance)
                throw InconsistentGrid("mode " + std::to_string(mode) + " point " + std::to_string(point) +
                                       " position differs from the first mode group");
            samples.push_back(rec->field);
            ++i;
        }
        out.modes.push_back(mode);
        out.fields.push_back(std::move(samples));
    }
    return out;
}

FieldExport parse_field_export_file(const std::filesystem::path& path) {
    return parse_field_export(read_file(path), path.string());
}

void write_field_export(std::ostream& out, const FieldExport& data) {
    if (data.fields.size() != data.modes.size()) throw DimensionError("field export mode/group count mismatch");
    if (data.point_indices.size() != data.positions.size())
        throw DimensionError("field export point index/position count mismatch");
    for (std::size_t i = 0; i < kFieldColumns.size(); ++i) out << (i ? "," : "") << kFieldColumns[i];
    out << '\n';
    for (std::size_t g = 0; g < data.modes.size(); ++g) {
        if (data.fields[g].size() != data.positions.size()) throw DimensionError("field export group size mismatch");
        for (std::size_t p = 0; p < data.positions.size(); ++p) {
            const Vec3& r = data.positions[p];
            const CVec3& e = data.fields[g][p];
            out << data.modes[g] << ',' << data.point_indices[p];
            for (int k = 0; k < 3; ++k) out << ',' << format_double(r(k));
            for (int k = 0; k < 3; ++k) out << ',' << format_double(e(k).real()) << ',' << format_double(e(k).imag());
            out << '\n';
        }
    }
}

void write_field_export_file(const std::filesystem::path& path, const FieldExport& data) {
    std::ostringstream ss;
    write_field_export(ss, data);
    write_file(path, ss.str());
}

}  // namespace oamcap

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

#include "oamcap/output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <png.h>

#include "oamcap/error.hpp"
#include "oamcap/ingest.hpp"

namespace oamcap {
namespace {

Image blank(int resolution) {
    if (resolution < 1) throw InvalidArgument("image resolution must be positive");
    Image img;
    img.width = resolution;
    img.height = resolution;
    img.rgb.assign(static_cast<std::size_t>(resolution) * resolution * 3, 0);
    return img;
}

void check_size(const std::vector<double>& v, int resolution) {
    if (v.size() != static_cast<std::size_t>(resolution) * resolution)
        throw DimensionError("sample count does not match a " + std::to_string(resolution) + "x" +
                             std::to_string(resolution) + " grid");
}

// Grid index (row along y, column along x) to image pixel with +y up.
std::size_t pixel(int row, int col, int resolution) {
    return (static_cast<std::size_t>(resolution - 1 - row) * resolution + col) * 3;
}

std::uint8_t to_byte(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

template <class F>
Image render(const std::vector<double>& values, int resolution, F colour) {
    check_size(values, resolution);
    Image img = blank(resolution);
    for (int row = 0; row < resolution; ++row)
        for (int col = 0; col < resolution; ++col) {
            const double v = values[static_cast<std::size_t>(row) * resolution + col];
            const std::size_t p = pixel(row, col, resolution);
            const auto c = colour(v);
            img.rgb[p] = c[0];
            img.rgb[p + 1] = c[1];
            img.rgb[p + 2] = c[2];
        }
    return img;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace

Image render_power_db(const std::vector<double>& power, int resolution, double floor_db) {
    const double peak = power.empty() ? 0.0 : *std::max_element(power.begin(), power.end());
    return render(power, resolution, [&](double p) {
        double level = 0.0;
        if (peak > 0.0 && p > 0.0) level = 1.0 + std::max(10.0 * std::log10(p / peak), -floor_db) / floor_db;
        const std::uint8_t g = to_byte(level);
        return std::array<std::uint8_t, 3>{g, g, g};
    });
}

Image render_phase(const std::vector<double>& phase, int resolution) {
    return render(phase, resolution, [](double ph) {
        // Cosine palette with 120 degree channel offsets is continuous across the wrap.
        double t = std::fmod(ph + kPi, 2.0 * kPi);
        if (t < 0.0) t += 2.0 * kPi;
        return std::array<std::uint8_t, 3>{to_byte(0.5 + 0.5 * std::cos(t)),
                                           to_byte(0.5 + 0.5 * std::cos(t - 2.0 * kPi / 3.0)),
                                           to_byte(0.5 + 0.5 * std::cos(t + 2.0 * kPi / 3.0))};
    });
}

Image render_magnitude(const std::vector<double>& magnitude, int resolution) {
    const double peak = magnitude.empty() ? 0.0 : *std::max_element(magnitude.begin(), magnitude.end());
    return render(magnitude, resolution, [&](double m) {
        const std::uint8_t g = to_byte(peak > 0.0 ? m / peak : 0.0);
        return std::array<std::uint8_t, 3>{g, g, g};
    });
}

void write_png(const std::filesystem::path& path, const Image& image) {
    if (image.width < 1 || image.height < 1 ||
        image.rgb.size() != static_cast<std::size_t>(image.width) * image.height * 3)
        throw DimensionError("malformed image buffer");
    std::unique_ptr<FILE, int (*)(FILE*)> file(std::fopen(path.string().c_str(), "wb"), &std::fclose);
    if (!file) throw Error("cannot write '" + path.string() + "'");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error("libpng initialisation failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error("libpng initialisation failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error("PNG encoding failed for '" + path.string() + "'");
    }
    png_init_io(png, file.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < image.height; ++y)
        png_write_row(png, image.rgb.data() + static_cast<std::size_t>(y) * image.width * 3);
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void write_field_map_csv(const std::filesystem::path& path, const FieldMap& map) {
    if (map.positions.size() != map.fields.size()) throw DimensionError("field map positions and samples differ");
    std::ostringstream out;
    out << "x_m,y_m,z_m,re_ex,im_ex,re_ey,im_ey,re_ez,im_ez\n";
    for (std::size_t i = 0; i < map.positions.size(); ++i) {
        const Vec3& r = map.positions[i];
        const CVec3& e = map.fields[i];
        out << format_double(r.x()) << ',' << format_double(r.y()) << ',' << format_double(r.z());
        for (int k = 0; k < 3; ++k) out << ',' << format_double(e(k).real()) << ',' << format_double(e(k).imag());
        out << '\n';
    }
    write_text(path, out.str());
}

void write_capacity_csv(const std::filesystem::path& path, const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "parameter,value,unit,variant,method,snr_db,bps_hz\n";
    for (const SweepRow& row : rows)
        out << to_string(row.parameter) << ',' << format_double(row.value) << ',' << sweep_unit(row.parameter) << ','
            << row.variant.label() << ',' << to_string(row.method) << ',' << format_double(row.snr_db) << ','
            << format_double(row.bps_hz) << '\n';
    write_text(path, out.str());
}

void write_matrix_csv(const std::filesystem::path& path, const CMatrix& matrix) {
    std::ostringstream out;
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
            if (j) out << ',';
            out << format_double(matrix(i, j).real()) << ',' << format_double(matrix(i, j).imag());
        }
        out << '\n';
    }
    write_text(path, out.str());
}

}  // namespace oamcap

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

#include "oamcap/green.hpp"

#include <cmath>
#include <sstream>

#include "oamcap/error.hpp"

namespace oamcap {
namespace {

// Shared by every entry point so that columns and single entries are bitwise
// identical to the corresponding entries of the full tensor.
struct KernelTerms {
    cdouble prefactor;  // j k0 Z0 e^{j k0 p} / (4 pi p)
    cdouble near;       // j/(k0 p) - 1/(k0 p)^2
    Vec3 unit;

    cdouble entry(int a, int b) const {
        const double uu = unit[a] * unit[b];
        const double delta = (a == b) ? 1.0 : 0.0;
        return prefactor * ((delta - uu) + near * (delta - 3.0 * uu));
    }
};

KernelTerms kernel_terms(const Vec3& r, const Vec3& s, const PhysicalConstants& constants) {
    const Vec3 p = r - s;
    const double dist = p.norm();
    if (!(dist >= constants.singular_radius())) {
        std::ostringstream msg;
        msg << "field point within " << constants.singular_radius() << " m of source (separation " << dist << " m)";
        throw SingularSeparation(msg.str());
    }
    const double k = constants.wave_number;
    const double kp = k * dist;
    KernelTerms t;
    t.prefactor = kJ * (k * constants.impedance / (4.0 * kPi * dist)) * std::polar(1.0, kp);
    t.near = cdouble(-1.0 / (kp * kp), 1.0 / kp);
    t.unit = p / dist;
    return t;
}

}  // namespace

CMat3 dyadic_green(const Vec3& r, const Vec3& s, const PhysicalConstants& constants) {
    const KernelTerms t = kernel_terms(r, s, constants);
    CMat3 g;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) g(a, b) = t.entry(a, b);
    return g;
}

CVec3 green_column_y(const Vec3& r, const Vec3& s, const PhysicalConstants& constants) {
    const KernelTerms t = kernel_terms(r, s, constants);
    return {t.entry(0, 1), t.entry(1, 1), t.entry(2, 1)};
}

cdouble green_yy(const Vec3& r, const Vec3& s, const PhysicalConstants& constants) {
    return kernel_terms(r, s, constants).entry(1, 1);
}

}  // namespace oamcap

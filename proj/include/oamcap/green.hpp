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

#pragma once

#include "oamcap/constants.hpp"
#include "oamcap/types.hpp"

namespace oamcap {

/// Free-space dyadic Green's function between field point r and source s,
///
///   G = (j k0 Z0 e^{+j k0 p} / (4 pi p)) [ (I - uu^T) + (j/(k0 p) - 1/(k0 p)^2)(I - 3 uu^T) ],
///
/// with p = |r - s| and u = (r - s)/p. The e^{+jkp} sign is kept; the physics
/// convention e^{-jkr} is a global conjugation and leaves every capacity unchanged.
/// Throws SingularSeparation when p < constants.singular_radius().
CMat3 dyadic_green(const Vec3& r, const Vec3& s, const PhysicalConstants& constants);

/// Second column (G^xy, G^yy, G^zy): the response to a y-directed current.
/// Bitwise identical to dyadic_green(r, s, constants).col(1).
CVec3 green_column_y(const Vec3& r, const Vec3& s, const PhysicalConstants& constants);

/// Only G^yy; same arithmetic as the full kernel.
cdouble green_yy(const Vec3& r, const Vec3& s, const PhysicalConstants& constants);

}  // namespace oamcap

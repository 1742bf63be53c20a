// Copyright 2026 The jwm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Every default the CLI and the sweep driver fall back on.

#pragma once

#include <numbers>
#include <vector>

namespace jwm::defaults {

/// Strength grid for sweeps. Starts at the theta = pi/4 meter (G = 2/3) and
/// runs down far enough that a line through the three smallest points pins
/// the G -> 0 intercept to ~1e-8 (the readout is linear in G near zero).
inline const std::vector<double> kStrengthGrid{2.0 / 3.0, 0.5, 0.2, 0.1, 0.05, 0.01, 1e-3, 1e-4, 1e-5};

/// Pair-angle grid for optical sweeps, in radians. G(theta) ~ 2 theta / 3
/// for small theta.
inline const std::vector<double> kThetaGrid{std::numbers::pi / 3,  std::numbers::pi / 4, std::numbers::pi / 6,
                                            std::numbers::pi / 8,  std::numbers::pi / 12, 1e-2,
                                            1e-3, 1e-4, 1e-5};

/// Amplitude and probability comparisons.
inline constexpr double kTolerance = 1e-12;

/// Minimum fidelity deficit accepted for a prepared optical meter.
inline constexpr double kFidelityTolerance = 1e-10;

/// Overlap floor when sampling random pre/postselections.
inline constexpr double kOverlapFloor = 1e-6;

}  // namespace jwm::defaults

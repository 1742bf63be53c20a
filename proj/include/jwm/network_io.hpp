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

/**
 * @file
 * Line-oriented text format for optical networks.
 *
 *     jwm-network 1                  # required header, format version 1
 *     ports A B C a2 a3 ...          # every spatial port, once
 *     inputs A B C                   # photon sources, in order
 *     outputs C c2 c3                # monitored ports; k-th entry = output k
 *     hwp <degrees> <port>
 *     bs <T> <port_a> <port_b>       # T may be written as p/q, e.g. 1/3
 *     phase <degrees> <port>
 *
 * '#' starts a comment. Elements are applied in file order. Declarations
 * (ports/inputs/outputs) may appear once each, before any element.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "jwm/photonics.hpp"

namespace jwm {

inline constexpr std::string_view kNetworkHeader = "jwm-network";
inline constexpr int kNetworkFormatVersion = 1;

/// Parses a network; errors carry `source` and the 1-based line number.
ModeNetwork parse_network(std::istream &in, std::string_view source = "<input>");
ModeNetwork parse_network_text(std::string_view text, std::string_view source = "<input>");
ModeNetwork load_network(const std::filesystem::path &path);

/// Serializes with 17 significant digits; parse_network inverts it exactly.
std::string format_network(const ModeNetwork &network);

/// Shipped meter-source network: every input reaches every output with
/// amplitude 1/3, the rest of each photon leaves through ancilla ports.
std::string_view default_network_text();
ModeNetwork default_network();

/// Parses a real number, also accepting a plain fraction "p/q".
double parse_real(std::string_view token);

}  // namespace jwm

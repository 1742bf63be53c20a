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
 * End-to-end pigeonhole experiment: strength sweeps, CSV tables and the
 * acceptance report.
 */

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jwm/photonics.hpp"
#include "jwm/weakmeas.hpp"

namespace jwm {

enum class Backend { Circuit, Optical };

/// Pair of pigeons whose "same hole" projector is read out.
enum class PigeonPair { I_II, II_III, III_I };

std::string to_string(Backend backend);
std::string to_string(PigeonPair pair);         ///< "I-II"
std::string column_suffix(PigeonPair pair);     ///< "I_II"
PigeonPair parse_pigeon_pair(std::string_view text);
Backend parse_backend(std::string_view text);
/// Positions of the two pigeons in the I, II, III register.
std::pair<std::size_t, std::size_t> positions(PigeonPair pair);
std::vector<PigeonPair> all_pigeon_pairs();

enum class GridAxis { Strength, Theta };

struct SweepConfig {
    Backend backend = Backend::Circuit;
    GridAxis axis = GridAxis::Strength;
    std::vector<double> grid;
    std::vector<PigeonPair> pairs = all_pigeon_pairs();
    std::filesystem::path output;   ///< empty: caller decides (CLI writes stdout)
    std::filesystem::path network;  ///< empty: built-in default network
    double fidelity_tolerance = 1e-10;
    bool parallel = true;

    /// Throws InvalidInput on an empty grid, out-of-domain grid values, an
    /// optical backend on a strength grid, or an empty pair list.
    void validate() const;
};

/// Same dialect as network files: header "jwm-sweep 1", then one directive
/// per line (backend, g-grid, g-range, theta-grid, theta-range, pairs,
/// output, network, fidelity-tolerance, parallel). load_sweep_config resolves
/// a relative network path against the configuration file's directory.
SweepConfig parse_sweep_config(std::istream &in, std::string_view source = "<input>");
SweepConfig load_sweep_config(const std::filesystem::path &path);

/// Radians, written plainly or as a fraction of pi: "0.5", "pi", "pi/4".
double parse_angle(std::string_view text);

/// `count` evenly spaced values from `lo` to `hi` inclusive.
std::vector<double> linear_range(double lo, double hi, std::size_t count);

struct SweepRow {
    double strength = 0.0;
    std::optional<double> theta;
    std::vector<std::optional<double>> readout;  ///< per configured pair
    std::vector<double> weak_value;              ///< Re of the analytic weak value, per pair
    double p_postselect = 0.0;
    std::optional<double> p_coincidence;
    bool analytic = false;
    std::optional<std::string> flag;  ///< set when the grid point failed
};

/// Runs the pigeonhole readout at every grid point, followed by one analytic
/// G = 0 row holding the weak values. Rows keep grid order.
std::vector<SweepRow> run_pigeonhole(const SweepConfig &config, const ModeNetwork &network,
                                     const PrePost &prepost = pigeonhole_prepost());
std::vector<SweepRow> run_pigeonhole(const SweepConfig &config);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t points = 0;
};

/// Least-squares line through the three smallest positive-G, unflagged rows
/// of readout column `column`. Reported alongside the analytic value, never
/// substituted for it.
LinearFit extrapolate_to_zero(const std::vector<SweepRow> &rows, std::size_t column);

/// CSV with header G[,theta],R_<pair>...,wv_<pair>...,p_postselect[,p_coincidence]
/// and 17 significant digits. Flagged rows print "nan" readouts.
std::string format_table(const std::vector<SweepRow> &rows, const std::vector<PigeonPair> &pairs);
void emit_table(const std::vector<SweepRow> &rows, const std::vector<PigeonPair> &pairs,
                const std::filesystem::path &path);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string measured;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    /// Relative phase of |1> in each photon's postselection; i is the paradox.
    cplx post_phase{0.0, 1.0};
    std::optional<ModeNetwork> network;
    unsigned long long seed = 20170123;
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;
    double optical_constant = 0.0;  ///< coincidence probability / (1 + 2 cos^2 theta)

    bool all_passed() const;
};

AcceptanceReport run_acceptance(const AcceptanceOptions &options = {});
std::string format_report(const AcceptanceReport &report);

}  // namespace jwm

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
 * Few-photon linear optics in second quantization.
 *
 * A mode is a spatial port carrying H or V polarization. Optical elements act
 * linearly on creation operators,
 *
 *     a^dag_j  ->  sum_k M(k, j) a^dag_k,
 *
 * and a Fock state is evolved by substituting this map into its creation
 * polynomial and expanding exactly. Beam splitters are symmetric with an
 * i on reflection:
 *
 *     a^dag -> sqrt(T) a^dag + i sqrt(1-T) b^dag
 *     b^dag -> i sqrt(1-T) a^dag + sqrt(T) b^dag
 *
 * Polarization H encodes meter bit 0 and V encodes bit 1.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "jwm/qstate.hpp"
#include "jwm/weakmeas.hpp"

namespace jwm {

enum class Polarization : std::uint8_t { H = 0, V = 1 };

struct Mode {
    std::string port;
    Polarization polarization;

    auto operator<=>(const Mode &) const = default;
};

std::string to_string(const Mode &mode);

/// Photon count per mode, indexed like FockState::modes().
using Occupation = std::vector<std::uint8_t>;

/// One monomial of a creation polynomial: coefficient * prod a^dag_{modes}.
struct CreationTerm {
    cplx coefficient;
    std::vector<Mode> creations;
};

/// Superposition of occupation-number states over a fixed list of modes.
/// May be subnormalized after postselection.
class FockState {
   public:
    /// Vacuum over `modes`.
    explicit FockState(std::vector<Mode> modes, std::size_t photon_budget = 3);
    FockState(std::vector<Mode> modes, std::map<Occupation, cplx> terms, std::size_t photon_budget = 3);

    /// Applies a creation polynomial to the vacuum (with the usual sqrt(n!)
    /// normalization of repeated creations).
    static FockState from_creations(std::vector<Mode> modes, const std::vector<CreationTerm> &terms,
                                    std::size_t photon_budget = 3);

    const std::vector<Mode> &modes() const noexcept { return modes_; }
    const std::map<Occupation, cplx> &terms() const noexcept { return terms_; }
    std::size_t photon_budget() const noexcept { return photon_budget_; }

    std::optional<std::size_t> mode_index(const Mode &mode) const;
    cplx amplitude(const Occupation &occupation) const;
    double norm_squared() const;

    /// Same state over a larger mode list (new modes in vacuum).
    FockState embedded(const std::vector<Mode> &universe) const;

   private:
    std::vector<Mode> modes_;
    std::map<Occupation, cplx> terms_;
    std::size_t photon_budget_;
};

struct BeamSplitter {
    double transmissivity;
    std::string port_a;
    std::string port_b;
};

/// Half-wave plate with its optical axis at `angle_deg` to H.
struct HalfWavePlate {
    double angle_deg;
    std::string port;
};

/// Path-length adjustment: both polarizations of `port` pick up exp(i phi).
struct PhaseShift {
    double angle_deg;
    std::string port;
};

using Element = std::variant<BeamSplitter, HalfWavePlate, PhaseShift>;

BeamSplitter beamsplitter(double transmissivity, std::string port_a, std::string port_b);
HalfWavePlate hwp(double angle_deg, std::string port);
PhaseShift phase_shift(double angle_deg, std::string port);

/// Creation-operator map restricted to a handful of modes.
struct ModeMap {
    std::vector<Mode> modes;
    Eigen::MatrixXcd matrix;
};

/// Decomposes an element into independent per-polarization (or per-port) maps.
std::vector<ModeMap> mode_maps(const Element &element);

/// Ordered optical elements over declared ports. Ports that are neither
/// inputs nor outputs start in vacuum and are discarded by coincidence
/// detection.
class ModeNetwork {
   public:
    ModeNetwork(std::vector<std::string> ports, std::vector<std::string> inputs, std::vector<std::string> outputs,
                std::vector<Element> elements);

    const std::vector<std::string> &ports() const noexcept { return ports_; }
    const std::vector<std::string> &inputs() const noexcept { return inputs_; }
    const std::vector<std::string> &outputs() const noexcept { return outputs_; }
    const std::vector<Element> &elements() const noexcept { return elements_; }

    /// ports x {H, V}, in port order.
    std::vector<Mode> modes() const;

    /// Composite creation-operator matrix over modes().
    Eigen::MatrixXcd transfer_matrix() const;
    bool is_unitary(double tol = kDefaultTolerance) const;

   private:
    std::vector<std::string> ports_;
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::vector<Element> elements_;
};

/// Applies a single local map.
FockState apply_map(const FockState &state, const ModeMap &map);

/// Runs `state` through every element of `network`. Modes of the network
/// missing from the state are added in vacuum.
FockState evolve(const FockState &state, const ModeNetwork &network);

struct Coincidence {
    Ket polarization;    ///< normalized, one qubit per monitored port
    double probability;  ///< squared norm of the kept component
};

/// Keeps terms with exactly one photon in each of `ports` and none anywhere
/// else. Qubit k of the result is the polarization at ports[k]; labels default
/// to "1".."n".
Coincidence coincidence_project(const FockState &state, const std::vector<std::string> &ports,
                                Labels qubit_labels = {});

/// Entangled-pair angle theta and the meter coefficients it induces.
struct OpticalMeterParams {
    double theta;
    double alpha;
    double beta;
    double delta;
    double epsilon;
    double strength;

    static OpticalMeterParams from_theta(double theta);
};

/// Closed-form G(theta) = 2 sin(theta)(3 cos(theta) + sin(theta)) / (3 (1 + 2 cos^2(theta))).
double strength_from_theta(double theta);

/// Cyclically symmetrized pair (x) diagonal-photon polarization state built
/// directly from alpha and beta.
Ket optical_target_meter(const OpticalMeterParams &params, Labels labels = {});

/// |<a|b>|^2 / (<a|a><b|b>), after aligning labels.
double fidelity(const Ket &a, const Ket &b);

/// cos(theta)|HH>_{in0,in1} + sin(theta)|VV>_{in0,in1}, times (|H>+|V>)/sqrt2 on in2.
FockState meter_source_state(const OpticalMeterParams &params, const ModeNetwork &network);

struct PreparedMeter {
    Ket meter;           ///< conditional polarization ket, global phase aligned to the target
    double probability;  ///< threefold-coincidence probability
    double fidelity;     ///< against optical_target_meter
};

/// Source -> network -> threefold coincidence. Throws FidelityGateFailure
/// when the conditional state misses the target by more than `fidelity_tol`.
PreparedMeter prepare_meter(const OpticalMeterParams &params, const ModeNetwork &network,
                            double fidelity_tol = 1e-10);

/// One Mach-Zehnder interferometer per photon: ports d<k> (detector arm) and
/// u<k>. The path is preselected in (|0>+|1>)/sqrt2, a 45 degree HWP in arm 1
/// flips the polarization, and the output port d<k> postselects
/// (|0>+i|1>)/sqrt2.
ModeNetwork mach_zehnder_network(std::size_t photons);

/// Sends each photon of `meter` (one polarization qubit per photon) through
/// its interferometer and conditions on a click at every detector port.
ReadoutTable mach_zehnder_stage(const Ket &meter, double strength);

}  // namespace jwm

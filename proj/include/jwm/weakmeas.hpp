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
 * Joint weak measurement with CNOT-coupled meter registers.
 *
 * A signal register is pre- and postselected. Each signal qubit controls a
 * CNOT onto its own meter qubit; the meter register is prepared in one of the
 * entangled families below, parametrized by the measurement strength
 * G = delta^2 - epsilon^2. Conditional meter statistics, rescaled as
 * (P - epsilon^2) / G, approach the weak value of the corresponding signal
 * projector as G -> 0.
 */

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jwm/qstate.hpp"

namespace jwm {

enum class MeterFamily {
    OneQubit,     ///< delta|0> + eps|1>
    TwoFull,      ///< delta|00> + eps(|01>+|10>+|11>)
    TwoPaired,    ///< [delta(|00>+|11>) + eps(|01>+|10>)]/sqrt2
    ThreeFull,    ///< delta|000> + eps * (all other bitstrings)
    ThreePaired,  ///< [delta(|000>+|111>) + eps * (other six)]/sqrt2
    NFull,        ///< delta|0..0> + eps * (all other bitstrings)
};

std::string to_string(MeterFamily family);

/// Meter family and strength. delta and epsilon follow from G and the
/// family's normalization condition.
class MeterSpec {
   public:
    /// `qubits` is only read for NFull.
    MeterSpec(MeterFamily family, double strength, std::size_t qubits = 0);

    MeterFamily family() const noexcept { return family_; }
    double strength() const noexcept { return strength_; }
    double delta() const noexcept { return delta_; }
    double epsilon() const noexcept { return epsilon_; }
    std::size_t qubits() const noexcept { return qubits_; }

    /// Count of epsilon-weighted basis states in the normalization
    /// delta^2 + c * epsilon^2 = 1.
    double epsilon_weight() const noexcept;

   private:
    MeterFamily family_;
    double strength_;
    std::size_t qubits_;
    double delta_;
    double epsilon_;
};

/// Pre- and postselected signal states on identical labels.
class PrePost {
   public:
    PrePost(Ket pre, Ket post);

    const Ket &pre() const noexcept { return pre_; }
    const Ket &post() const noexcept { return post_; }
    const Labels &labels() const noexcept { return pre_.labels(); }
    cplx overlap() const { return inner(post_, pre_); }

   private:
    Ket pre_;
    Ket post_;
};

/// Conditional meter distribution after a successful postselection.
class ReadoutTable {
   public:
    ReadoutTable(Labels meter_labels, std::map<std::string, double> entries, double success_probability,
                 double strength);

    const Labels &meter_labels() const noexcept { return meter_labels_; }
    const std::map<std::string, double> &entries() const noexcept { return entries_; }
    double success_probability() const noexcept { return success_probability_; }
    double strength() const noexcept { return strength_; }

    double probability(const std::string &bits) const;
    double total(const std::set<std::string> &outcomes) const;

   private:
    Labels meter_labels_;
    std::map<std::string, double> entries_;
    double success_probability_;
    double strength_;
};

/// <f|A|i>/<f|i>. Throws UndefinedWeakValue when |<f|i>| <= floor.
cplx weak_value(const PrePost &pp, const Operator &op, double floor = kDefaultTolerance);

/// Weak value of the rank-1 projector |bits><bits| on `labels`.
cplx joint_weak_value(const PrePost &pp, std::string_view bits, const Labels &labels,
                      double floor = kDefaultTolerance);

/// Aharonov-Bergmann-Lebowitz probability of `proj` versus `complement`.
double abl_probability(const PrePost &pp, const Operator &proj, const Operator &complement,
                       double tol = kDefaultTolerance);

/// Normalized meter ket of the given family, on `labels` (defaults "1", "2", ...).
Ket make_meter(const MeterSpec &spec, Labels labels = {});

/// Default meter labels "1".."n".
Labels meter_labels(std::size_t n);

/// Signal (control) / meter (target) CNOT pairs, one per signal qubit.
using CouplingPairs = std::vector<std::pair<Label, Label>>;

/// signal (x) meter followed by one CNOT per pair.
Ket couple(const Ket &signal, const Ket &meter, const CouplingPairs &pairs);

/// Pairs signal.labels()[k] with meter.labels()[k].
CouplingPairs pair_in_order(const Ket &signal, const Ket &meter);

/// Projects the signal qubits of `joint` onto `post` and returns the
/// conditional meter distribution. `strength` is recorded for readout().
ReadoutTable meter_distribution(const Ket &joint, const Ket &post, double strength);

/// (sum of P over `outcomes` - subtracted) / G. Throws ZeroStrength at G = 0.
double readout(const ReadoutTable &table, const std::set<std::string> &outcomes, double subtracted);

/// Full pipeline: couple `pp.pre()` to the meter of `spec`, postselect on `pp.post()`.
ReadoutTable simulate(const PrePost &pp, const MeterSpec &spec);

/// Rank-1 pigeonhole pair projectors (same, diff) on two signal qubits.
std::pair<Operator, Operator> pigeonhole_projectors(const Label &x, const Label &y);

/// Signal labels of the three-particle pigeonhole register.
Labels pigeonhole_labels();

/// |i> = (|0>+|1>)^3/sqrt8 and |f> = (|0>+phase|1>)^3/sqrt8 on I, II, III.
/// phase = i gives the pigeonhole paradox.
PrePost pigeonhole_prepost(cplx post_phase = cplx(0.0, 1.0));

/// Product of single-qubit states over `labels`; `factors[k]` = (a0, a1).
Ket product_ket(const Labels &labels, const std::vector<std::pair<cplx, cplx>> &factors);

/// Meter outcomes whose bits at positions x and y agree.
std::set<std::string> same_pair_outcomes(std::size_t num_qubits, std::size_t x, std::size_t y);

/// Combined readout for "X and Y in the same hole" from a three-qubit paired
/// meter: sum over both complementary outcome pairs with a 2*eps^2 offset.
double pigeonhole_readout(const ReadoutTable &table, const MeterSpec &spec, std::size_t x, std::size_t y);

}  // namespace jwm

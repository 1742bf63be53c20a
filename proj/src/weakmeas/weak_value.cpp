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

#include <cmath>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/weakmeas.hpp"

namespace jwm {

PrePost::PrePost(Ket pre, Ket post) : pre_(std::move(pre)), post_(std::move(post)) {
    if (!pre_.is_normalized() || !post_.is_normalized()) {
        throw InvalidInput("pre- and postselected states must be normalized");
    }
    if (post_.labels() != pre_.labels()) {
        post_ = post_.reordered(pre_.labels());
    }
}

cplx weak_value(const PrePost &pp, const Operator &op, double floor) {
    const cplx overlap = pp.overlap();
    if (std::abs(overlap) <= floor) {
        throw UndefinedWeakValue(
            fmt::format("undefined weak value: |<f|i>| = {:.3e} is below the floor {:.1e}", std::abs(overlap), floor));
    }
    return inner(pp.post(), apply(op, pp.pre())) / overlap;
}

cplx joint_weak_value(const PrePost &pp, std::string_view bits, const Labels &labels, double floor) {
    return weak_value(pp, projector(bits, labels), floor);
}

double abl_probability(const PrePost &pp, const Operator &proj, const Operator &complement, double tol) {
    if (!proj.is_projector(tol) || !complement.is_projector(tol)) {
        throw InvalidInput("ABL probability needs two projectors");
    }
    if (!(proj + complement).approx_equal(Operator::identity(proj.labels()), tol)) {
        throw InvalidInput("ABL projectors do not sum to the identity");
    }
    const double kept = std::norm(inner(pp.post(), apply(proj, pp.pre())));
    const double other = std::norm(inner(pp.post(), apply(complement, pp.pre())));
    if (kept + other <= tol * tol) {
        throw PostselectionFailure("degenerate postselection: both ABL branches are orthogonal to <f|");
    }
    return kept / (kept + other);
}

std::pair<Operator, Operator> pigeonhole_projectors(const Label &x, const Label &y) {
    if (x == y) {
        throw InvalidInput(fmt::format("pigeonhole pair needs two distinct qubits, got '{}' twice", x));
    }
    const Labels pair{x, y};
    Operator same = projector("00", pair) + projector("11", pair);
    Operator diff = projector("01", pair) + projector("10", pair);
    return {std::move(same), std::move(diff)};
}

Labels pigeonhole_labels() { return {"I", "II", "III"}; }

Ket product_ket(const Labels &labels, const std::vector<std::pair<cplx, cplx>> &factors) {
    if (labels.size() != factors.size()) {
        throw InvalidInput("product_ket needs one factor per label");
    }
    Ket out({}, {1.0});
    for (std::size_t k = 0; k < labels.size(); ++k) {
        out = tensor(out, Ket::qubit(labels[k], factors[k].first, factors[k].second));
    }
    return out;
}

PrePost pigeonhole_prepost(cplx post_phase) {
    const double r = 1.0 / std::sqrt(2.0);
    const auto labels = pigeonhole_labels();
    const std::vector<std::pair<cplx, cplx>> pre(3, {r, r});
    const std::vector<std::pair<cplx, cplx>> post(3, {r, r * post_phase});
    return PrePost(product_ket(labels, pre), product_ket(labels, post));
}

}  // namespace jwm

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

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/harness.hpp"

namespace jwm {

namespace {

std::string num(double v) {
    // Normalize -0 so that reruns and platforms agree byte for byte.
    return fmt::format("{:.17g}", v == 0.0 ? 0.0 : v);
}

}  // namespace

std::string format_table(const std::vector<SweepRow> &rows, const std::vector<PigeonPair> &pairs) {
    if (rows.empty()) {
        throw InvalidInput("no rows to write");
    }
    const bool with_theta = std::any_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.theta.has_value(); });
    const bool with_coincidence =
        std::any_of(rows.begin(), rows.end(), [](const SweepRow &r) { return r.p_coincidence.has_value(); });

    std::string out = "G";
    if (with_theta) out += ",theta";
    for (auto p : pairs) out += ",R_" + column_suffix(p);
    for (auto p : pairs) out += ",wv_" + column_suffix(p);
    out += ",p_postselect";
    if (with_coincidence) out += ",p_coincidence";
    out += '\n';

    for (const auto &r : rows) {
        if (r.readout.size() != pairs.size() || r.weak_value.size() != pairs.size()) {
            throw InvalidInput("row width does not match the pair list");
        }
        out += num(r.strength);
        if (with_theta) out += ',' + (r.theta ? num(*r.theta) : std::string("nan"));
        for (const auto &v : r.readout) out += ',' + (v ? num(*v) : std::string("nan"));
        for (double v : r.weak_value) out += ',' + num(v);
        out += ',' + (r.flag ? std::string("nan") : num(r.p_postselect));
        if (with_coincidence) {
            out += ',' + (r.p_coincidence && !r.flag ? num(*r.p_coincidence) : std::string("nan"));
        }
        out += '\n';
    }
    return out;
}

void emit_table(const std::vector<SweepRow> &rows, const std::vector<PigeonPair> &pairs,
                const std::filesystem::path &path) {
    const std::string text = format_table(rows, pairs);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InvalidInput(fmt::format("cannot write table to '{}'", path.string()));
    }
    out << text;
    if (!out.flush()) {
        throw InvalidInput(fmt::format("write to '{}' failed", path.string()));
    }
}

}  // namespace jwm

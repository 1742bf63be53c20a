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

#include "jwm/network_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "jwm/errors.hpp"

namespace jwm {

namespace {

constexpr std::string_view kDefaultNetwork = R"(jwm-network 1
# Three-photon meter source. The pair enters A and B, the diagonal photon C.
# Each input is split three ways (T = 1/3, then T = 1/2) and every output
# recombines one branch of each input (T = 1/2, then T = 1/3), so each input
# reaches each output with amplitude 1/3. Leftover amplitude exits through
# the unmonitored ports.
ports A B C a2 a3 b2 b3 c2 c3
inputs A B C
outputs C c2 c3

# pair photons to the diagonal basis
hwp 22.5 A
hwp 22.5 B

# splitters
bs 1/3 A a2
bs 1/2 a2 a3
bs 1/3 B b2
bs 1/2 b2 b3
bs 1/3 C c2
bs 1/2 c2 c3

# combiners, output k collects branch k of A, B and C
bs 1/2 A B
bs 1/3 C B
bs 1/2 a2 b2
bs 1/3 c2 b2
bs 1/2 a3 b3
bs 1/3 c3 b3
)";

std::vector<std::string> split_words(const std::string &line) {
    std::istringstream ss(line.substr(0, line.find('#')));
    std::vector<std::string> words;
    for (std::string w; ss >> w;) {
        words.push_back(std::move(w));
    }
    return words;
}

std::optional<double> try_number(std::string_view token) {
    double v = 0.0;
    const auto *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

double parse_real(std::string_view token) {
    const auto slash = token.find('/');
    if (slash != std::string_view::npos) {
        auto num = try_number(token.substr(0, slash));
        auto den = try_number(token.substr(slash + 1));
        if (!num || !den || *den == 0.0) {
            throw InvalidInput(fmt::format("'{}' is not a valid fraction", token));
        }
        return *num / *den;
    }
    auto v = try_number(token);
    if (!v) {
        throw InvalidInput(fmt::format("'{}' is not a number", token));
    }
    return *v;
}

ModeNetwork parse_network(std::istream &in, std::string_view source) {
    std::optional<std::vector<std::string>> ports;
    std::optional<std::vector<std::string>> inputs;
    std::optional<std::vector<std::string>> outputs;
    std::vector<Element> elements;
    bool header_seen = false;

    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        const auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        auto fail = [&](const std::string &msg) {
            return InvalidInput(fmt::format("{}:{}: {}", source, line_no, msg));
        };
        try {
            const std::string &key = words[0];
            if (!header_seen) {
                if (key != kNetworkHeader || words.size() != 2) {
                    throw fail(fmt::format("expected header '{} {}'", kNetworkHeader, kNetworkFormatVersion));
                }
                if (words[1] != std::to_string(kNetworkFormatVersion)) {
                    throw fail(fmt::format("unsupported network format version {}", words[1]));
                }
                header_seen = true;
                continue;
            }
            auto declare = [&](std::optional<std::vector<std::string>> &slot) {
                if (slot) {
                    throw fail(fmt::format("'{}' declared twice", key));
                }
                if (!elements.empty()) {
                    throw fail(fmt::format("'{}' must precede the first element", key));
                }
                slot.emplace(words.begin() + 1, words.end());
            };
            auto arity = [&](std::size_t n) {
                if (words.size() != n + 1) {
                    throw fail(fmt::format("'{}' takes {} arguments, got {}", key, n, words.size() - 1));
                }
            };
            if (key == "ports") {
                declare(ports);
            } else if (key == "inputs") {
                declare(inputs);
            } else if (key == "outputs") {
                declare(outputs);
            } else if (key == "bs") {
                arity(3);
                elements.emplace_back(beamsplitter(parse_real(words[1]), words[2], words[3]));
            } else if (key == "hwp") {
                arity(2);
                elements.emplace_back(hwp(parse_real(words[1]), words[2]));
            } else if (key == "phase") {
                arity(2);
                elements.emplace_back(phase_shift(parse_real(words[1]), words[2]));
            } else {
                throw fail(fmt::format("unknown directive '{}'", key));
            }
        } catch (const InvalidInput &e) {
            const std::string what = e.what();
            if (what.rfind(std::string(source) + ":", 0) == 0) {
                throw;
            }
            throw fail(what);
        }
    }
    if (!header_seen) {
        throw InvalidInput(fmt::format("{}: empty network description", source));
    }
    if (!ports) {
        throw InvalidInput(fmt::format("{}: missing 'ports' declaration", source));
    }
    try {
        return ModeNetwork(*ports, inputs.value_or(std::vector<std::string>{}),
                           outputs.value_or(std::vector<std::string>{}), std::move(elements));
    } catch (const InvalidInput &e) {
        throw InvalidInput(fmt::format("{}: {}", source, e.what()));
    }
}

ModeNetwork parse_network_text(std::string_view text, std::string_view source) {
    std::istringstream in{std::string(text)};
    return parse_network(in, source);
}

ModeNetwork load_network(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput(fmt::format("cannot open network file '{}'", path.string()));
    }
    return parse_network(in, path.string());
}

std::string format_network(const ModeNetwork &network) {
    auto join = [](const std::vector<std::string> &v) {
        std::string s;
        for (const auto &w : v) {
            s += ' ' + w;
        }
        return s;
    };
    std::string out = fmt::format("{} {}\n", kNetworkHeader, kNetworkFormatVersion);
    out += "ports" + join(network.ports()) + '\n';
    if (!network.inputs().empty()) out += "inputs" + join(network.inputs()) + '\n';
    if (!network.outputs().empty()) out += "outputs" + join(network.outputs()) + '\n';
    for (const auto &element : network.elements()) {
        if (const auto *bs = std::get_if<BeamSplitter>(&element)) {
            out += fmt::format("bs {:.17g} {} {}\n", bs->transmissivity, bs->port_a, bs->port_b);
        } else if (const auto *plate = std::get_if<HalfWavePlate>(&element)) {
            out += fmt::format("hwp {:.17g} {}\n", plate->angle_deg, plate->port);
        } else if (const auto *ph = std::get_if<PhaseShift>(&element)) {
            out += fmt::format("phase {:.17g} {}\n", ph->angle_deg, ph->port);
        }
    }
    return out;
}

std::string_view default_network_text() { return kDefaultNetwork; }

ModeNetwork default_network() { return parse_network_text(kDefaultNetwork, "<default network>"); }

}  // namespace jwm

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

#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "jwm/errors.hpp"
#include "jwm/harness.hpp"
#include "jwm/network_io.hpp"

namespace jwm {

namespace {

constexpr std::string_view kSweepHeader = "jwm-sweep";

std::size_t parse_count(std::string_view token) {
    const double v = parse_real(token);
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
        throw InvalidInput(fmt::format("'{}' is not a positive integer count", token));
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

double parse_angle(std::string_view token) {
    if (token.rfind("pi", 0) == 0) {
        const auto rest = token.substr(2);
        if (rest.empty()) {
            return std::numbers::pi;
        }
        if (rest.front() == '/') {
            return std::numbers::pi / parse_real(rest.substr(1));
        }
        throw InvalidInput(fmt::format("'{}' is not an angle", token));
    }
    return parse_real(token);
}

SweepConfig parse_sweep_config(std::istream &in, std::string_view source) {
    SweepConfig config;
    bool header_seen = false;
    bool grid_seen = false;
    std::set<std::string> seen;

    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        std::istringstream ss(line.substr(0, line.find('#')));
        std::vector<std::string> words;
        for (std::string w; ss >> w;) {
            words.push_back(std::move(w));
        }
        if (words.empty()) {
            continue;
        }
        auto fail = [&](const std::string &msg) {
            return InvalidInput(fmt::format("{}:{}: {}", source, line_no, msg));
        };
        const std::string &key = words[0];
        const std::vector<std::string> args(words.begin() + 1, words.end());
        try {
            if (!header_seen) {
                if (key != kSweepHeader || args.size() != 1 || args[0] != "1") {
                    throw fail(fmt::format("expected header '{} 1'", kSweepHeader));
                }
                header_seen = true;
                continue;
            }
            if (!seen.insert(key).second) {
                throw fail(fmt::format("'{}' given twice", key));
            }
            auto arity = [&](std::size_t n) {
                if (args.size() != n) {
                    throw fail(fmt::format("'{}' takes {} argument(s), got {}", key, n, args.size()));
                }
            };
            auto set_grid = [&](GridAxis axis, std::vector<double> values) {
                if (grid_seen) {
                    throw fail("only one grid directive is allowed");
                }
                grid_seen = true;
                config.axis = axis;
                config.grid = std::move(values);
            };

            if (key == "backend") {
                arity(1);
                config.backend = parse_backend(args[0]);
            } else if (key == "g-grid" || key == "theta-grid") {
                if (args.empty()) {
                    throw fail(fmt::format("'{}' needs at least one value", key));
                }
                const bool theta = key == "theta-grid";
                std::vector<double> values;
                for (const auto &a : args) {
                    values.push_back(theta ? parse_angle(a) : parse_real(a));
                }
                set_grid(theta ? GridAxis::Theta : GridAxis::Strength, std::move(values));
            } else if (key == "g-range" || key == "theta-range") {
                arity(3);
                const bool theta = key == "theta-range";
                const double lo = theta ? parse_angle(args[0]) : parse_real(args[0]);
                const double hi = theta ? parse_angle(args[1]) : parse_real(args[1]);
                set_grid(theta ? GridAxis::Theta : GridAxis::Strength, linear_range(lo, hi, parse_count(args[2])));
            } else if (key == "pairs") {
                if (args.empty()) {
                    throw fail("'pairs' needs at least one pair");
                }
                config.pairs.clear();
                for (const auto &a : args) {
                    config.pairs.push_back(parse_pigeon_pair(a));
                }
            } else if (key == "output") {
                arity(1);
                config.output = args[0];
            } else if (key == "network") {
                arity(1);
                config.network = args[0];
            } else if (key == "fidelity-tolerance") {
                arity(1);
                config.fidelity_tolerance = parse_real(args[0]);
            } else if (key == "parallel") {
                arity(1);
                if (args[0] != "on" && args[0] != "off") {
                    throw fail("'parallel' is 'on' or 'off'");
                }
                config.parallel = args[0] == "on";
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
        throw InvalidInput(fmt::format("{}: empty sweep configuration", source));
    }
    return config;
}

SweepConfig load_sweep_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput(fmt::format("cannot open sweep configuration '{}'", path.string()));
    }
    SweepConfig config = parse_sweep_config(in, path.string());
    // A network named by the file lives next to it; output stays relative to
    // the working directory.
    if (!config.network.empty() && config.network.is_relative()) {
        config.network = path.parent_path() / config.network;
    }
    return config;
}

}  // namespace jwm

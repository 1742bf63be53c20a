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
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "jwm/defaults.hpp"
#include "jwm/errors.hpp"
#include "jwm/harness.hpp"
#include "jwm/network_io.hpp"

using namespace jwm;

namespace {

SweepConfig parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_sweep_config(in, "s.cfg");
}

std::string first_line(const std::string &text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST(Pairs, NamesAndPositions) {
    EXPECT_EQ(to_string(PigeonPair::III_I), "III-I");
    EXPECT_EQ(column_suffix(PigeonPair::II_III), "II_III");
    EXPECT_EQ(parse_pigeon_pair("I-II"), PigeonPair::I_II);
    EXPECT_EQ(parse_pigeon_pair("III_I"), PigeonPair::III_I);
    EXPECT_THROW(parse_pigeon_pair("I-III"), InvalidInput);
    EXPECT_EQ(positions(PigeonPair::III_I), (std::pair<std::size_t, std::size_t>{2, 0}));
    EXPECT_THROW(parse_backend("quantum"), InvalidInput);
}

TEST(SweepConfig, ParsesEveryDirective) {
    const SweepConfig c = parse(
        "jwm-sweep 1\n"
        "backend optical\n"
        "theta-grid pi/4 pi/6 0.1\n"
        "pairs II-III\n"
        "output out.csv\n"
        "network n.net\n"
        "fidelity-tolerance 1e-9\n"
        "parallel off\n");
    EXPECT_EQ(c.backend, Backend::Optical);
    EXPECT_EQ(c.axis, GridAxis::Theta);
    ASSERT_EQ(c.grid.size(), 3U);
    EXPECT_DOUBLE_EQ(c.grid[0], std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(c.grid[2], 0.1);
    EXPECT_EQ(c.pairs, (std::vector<PigeonPair>{PigeonPair::II_III}));
    EXPECT_EQ(c.output, "out.csv");
    EXPECT_EQ(c.network, "n.net");
    EXPECT_DOUBLE_EQ(c.fidelity_tolerance, 1e-9);
    EXPECT_FALSE(c.parallel);
    EXPECT_NO_THROW(c.validate());
}

TEST(SweepConfig, RangeDirective) {
    const SweepConfig c = parse("jwm-sweep 1\ng-range 0.1 0.5 5\n");
    EXPECT_EQ(c.axis, GridAxis::Strength);
    ASSERT_EQ(c.grid.size(), 5U);
    EXPECT_DOUBLE_EQ(c.grid[0], 0.1);
    EXPECT_DOUBLE_EQ(c.grid[4], 0.5);
    EXPECT_NEAR(c.grid[2], 0.3, 1e-15);
    EXPECT_EQ(linear_range(1.0, 2.0, 1), (std::vector<double>{1.0}));
    EXPECT_THROW(linear_range(1.0, 2.0, 0), InvalidInput);
}

TEST(SweepConfig, ErrorsCarryLineNumbers) {
    auto message = [](std::string_view text) {
        try {
            parse(text);
        } catch (const InvalidInput &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(message("backend circuit\n").find("s.cfg:1:"), std::string::npos);
    EXPECT_NE(message("jwm-sweep 1\n\nbackend laser\n").find("s.cfg:3:"), std::string::npos);
    EXPECT_NE(message("jwm-sweep 1\ng-grid 0.1\ntheta-grid 0.1\n").find("s.cfg:3:"), std::string::npos);
    EXPECT_NE(message("jwm-sweep 1\ng-grid 0.1 zz\n").find("s.cfg:2:"), std::string::npos);
    EXPECT_NE(message("jwm-sweep 1\ng-range 0.1 0.2 2.5\n").find("s.cfg:2:"), std::string::npos);
    EXPECT_NE(message("jwm-sweep 1\nparallel maybe\n").find("s.cfg:2:"), std::string::npos);
    EXPECT_NE(message("jwm-sweep 1\nwhat 1\n").find("s.cfg:2:"), std::string::npos);
    EXPECT_NE(message("jwm-sweep 1\nbackend circuit\nbackend circuit\n").find("s.cfg:3:"), std::string::npos);
    EXPECT_NE(message("").find("s.cfg"), std::string::npos);
    EXPECT_THROW(load_sweep_config("/nonexistent/s.cfg"), InvalidInput);
}

TEST(SweepConfig, ValidateRejectsBadGrids) {
    SweepConfig c;
    EXPECT_THROW(c.validate(), InvalidInput);  // empty grid
    c.grid = {0.0};
    EXPECT_THROW(c.validate(), InvalidInput);
    c.grid = {1.2};
    EXPECT_THROW(c.validate(), InvalidInput);
    c.grid = {0.5};
    c.backend = Backend::Optical;
    EXPECT_THROW(c.validate(), InvalidInput);  // optical needs theta
    c.axis = GridAxis::Theta;
    c.grid = {2.0};
    EXPECT_THROW(c.validate(), InvalidInput);
    c.grid = {0.5};
    c.pairs.clear();
    EXPECT_THROW(c.validate(), InvalidInput);
}

TEST(SweepConfig, ShippedConfigsLoad) {
    const SweepConfig strength = load_sweep_config(JWM_DATA_DIR "/sweeps/strength.cfg");
    EXPECT_EQ(strength.grid, defaults::kStrengthGrid);
    const SweepConfig optical = load_sweep_config(JWM_DATA_DIR "/sweeps/optical.cfg");
    EXPECT_EQ(optical.backend, Backend::Optical);
    EXPECT_TRUE(std::filesystem::exists(optical.network));
    EXPECT_NO_THROW(optical.validate());
}

TEST(Sweep, CircuitRowsAreOrderedAndParallelMatchesSerial) {
    SweepConfig c;
    c.grid = defaults::kStrengthGrid;
    const auto parallel = run_pigeonhole(c);
    c.parallel = false;
    const auto serial = run_pigeonhole(c);
    EXPECT_EQ(format_table(parallel, c.pairs), format_table(serial, c.pairs));
    ASSERT_EQ(parallel.size(), c.grid.size() + 1);
    for (std::size_t k = 0; k < c.grid.size(); ++k) EXPECT_EQ(parallel[k].strength, c.grid[k]);
    const SweepRow &analytic = parallel.back();
    EXPECT_TRUE(analytic.analytic);
    EXPECT_EQ(analytic.strength, 0.0);
    EXPECT_NEAR(analytic.p_postselect, 0.125, 1e-12);
    for (const auto &r : analytic.readout) EXPECT_NEAR(*r, 0.0, 1e-15);
    // Frozen oracle value at G = 2/3.
    EXPECT_NEAR(*parallel[0].readout[0], 0.25, 1e-12);
}

TEST(Sweep, ExtrapolationInterceptIsTiny) {
    SweepConfig c;
    c.grid = defaults::kStrengthGrid;
    const auto rows = run_pigeonhole(c);
    for (std::size_t k = 0; k < 3; ++k) {
        const LinearFit fit = extrapolate_to_zero(rows, k);
        EXPECT_EQ(fit.points, 3U);
        EXPECT_LE(std::abs(fit.intercept), 1e-6);
        EXPECT_NEAR(fit.slope, 0.5, 1e-3);
    }
    SweepConfig one;
    one.grid = {0.5};
    EXPECT_THROW(extrapolate_to_zero(run_pigeonhole(one), 0), InvalidInput);
}

TEST(Sweep, OpticalBackendAgreesWithCircuitAtSameStrength) {
    SweepConfig optical;
    optical.backend = Backend::Optical;
    optical.axis = GridAxis::Theta;
    optical.grid = {std::numbers::pi / 4, std::numbers::pi / 8};
    const auto rows = run_pigeonhole(optical);
    ASSERT_EQ(rows.size(), 3U);
    ASSERT_TRUE(rows[0].p_coincidence.has_value());
    EXPECT_NEAR(*rows[0].p_coincidence / 2.0, 4.0 / 243.0, 1e-14);  // 1 + 2cos^2(pi/4) = 2
    SweepConfig circuit;
    circuit.grid = {rows[0].strength, rows[1].strength};
    const auto reference = run_pigeonhole(circuit);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t k = 0; k < 3; ++k) {
            EXPECT_NEAR(*rows[r].readout[k], *reference[r].readout[k], 1e-10);
        }
    }
    EXPECT_EQ(rows.back().theta, 0.0);
}

TEST(Sweep, OpticalFidelityFailureFlagsRowInsteadOfAborting) {
    std::string text(default_network_text());
    for (std::size_t at; (at = text.find("hwp 22.5")) != std::string::npos;) text.replace(at, 8, "hwp 0");
    SweepConfig c;
    c.backend = Backend::Optical;
    c.axis = GridAxis::Theta;
    c.grid = {std::numbers::pi / 8};
    const auto rows = run_pigeonhole(c, parse_network_text(text));
    ASSERT_TRUE(rows[0].flag.has_value());
    EXPECT_FALSE(rows[0].readout[0].has_value());
    const std::string table = format_table(rows, c.pairs);
    EXPECT_NE(table.find("nan"), std::string::npos);
}

TEST(Sweep, OrthogonalPostselectionHasNoWeakValue) {
    // Postselection orthogonal to the preselection on every photon.
    const Labels l = pigeonhole_labels();
    const PrePost pp(product_ket(l, {{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}}),
                     product_ket(l, {{0.0, 1.0}, {0.0, 1.0}, {0.0, 1.0}}));
    SweepConfig c;
    c.grid = {0.5};
    EXPECT_THROW(run_pigeonhole(c, default_network(), pp), UndefinedWeakValue);
}

TEST(Table, HeaderAndFormatting) {
    SweepConfig c;
    c.grid = {0.5};
    c.pairs = {PigeonPair::I_II, PigeonPair::III_I};
    const auto rows = run_pigeonhole(c);
    const std::string table = format_table(rows, c.pairs);
    EXPECT_EQ(first_line(table), "G,R_I_II,R_III_I,wv_I_II,wv_III_I,p_postselect");
    EXPECT_EQ(table.find("-0,"), std::string::npos);
    EXPECT_THROW(format_table({}, c.pairs), InvalidInput);

    SweepConfig o;
    o.backend = Backend::Optical;
    o.axis = GridAxis::Theta;
    o.grid = {std::numbers::pi / 4};
    EXPECT_EQ(first_line(format_table(run_pigeonhole(o), o.pairs)),
              "G,theta,R_I_II,R_II_III,R_III_I,wv_I_II,wv_II_III,wv_III_I,p_postselect,p_coincidence");
}

TEST(Table, EmitWritesFileAndRejectsBadPath) {
    SweepConfig c;
    c.grid = {0.5};
    const auto rows = run_pigeonhole(c);
    const auto path = std::filesystem::temp_directory_path() / "jwm_table_test.csv";
    emit_table(rows, c.pairs, path);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), format_table(rows, c.pairs));
    std::filesystem::remove(path);
    EXPECT_THROW(emit_table(rows, c.pairs, "/nonexistent/dir/out.csv"), InvalidInput);
}

TEST(Acceptance, AllCriteriaPassByDefault) {
    const AcceptanceReport report = run_acceptance();
    ASSERT_EQ(report.criteria.size(), 10U);
    for (const auto &c : report.criteria) EXPECT_TRUE(c.passed) << c.id << " " << c.name << ": " << c.measured;
    EXPECT_TRUE(report.all_passed());
    EXPECT_NEAR(report.optical_constant, 4.0 / 243.0, 1e-14);
    const std::string text = format_report(report);
    EXPECT_NE(text.find("0.016460905349794"), std::string::npos);
}

TEST(Acceptance, PerturbedPostselectionFailsWeakValueCriterion) {
    AcceptanceOptions options;
    options.post_phase = 1.0;
    const AcceptanceReport report = run_acceptance(options);
    EXPECT_FALSE(report.all_passed());
    EXPECT_FALSE(report.criteria[0].passed);
    EXPECT_NE(report.criteria[0].measured.find("0.5"), std::string::npos);
    const std::string text = format_report(report);
    EXPECT_NE(text.find("[FAIL]  1 pigeonhole weak values vanish"), std::string::npos);
}

// Copyright 2026 The QCSim Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "qcs/cli/commands.h"
#include "qcs/core/linalg.h"
#include "qcs/nmr/executor.h"
#include "qcs/nmr/pulse_program.h"

namespace qcs::cli {
namespace {

struct Invocation {
    int status;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qcsim");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int status = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("qcsim_cli_test_" + name);
}

TEST(Cli, RunIdeal) {
    auto r = invoke({"run", "--mode", "ideal", "--m", "2", "--phi-k", "1"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schema"), kRunSchema);
    EXPECT_EQ(j.at("j_peak"), 1);
    EXPECT_EQ(j.at("peak_bits"), "01");
    EXPECT_DOUBLE_EQ(j.at("delta_estimate").get<double>(), 0.25);
    EXPECT_TRUE(j.at("exact").get<bool>());
}

TEST(Cli, RunIdealOmegaScalesEstimate) {
    auto r = invoke({"run", "--m", "3", "--omega-delta", "0.5", "--omega", "4"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("j_peak"), 4);
    EXPECT_DOUBLE_EQ(j.at("delta_estimate").get<double>(), 0.125);
}

TEST(Cli, RunNmrNoiseOff) {
    auto r = invoke({"run", "--mode", "nmr", "--phi-k", "2", "--noise", "off"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_GE(j.at("fidelity").at("c").get<double>(), 0.999);
    EXPECT_EQ(j.at("peak_bits"), "10");
    EXPECT_EQ(j.at("rho_exp").at("dim"), 8);
}

TEST(Cli, RunNmrNoiseLowersFidelity) {
    auto r = invoke({"run", "--mode", "nmr", "--phi-k", "1", "--noise", "on", "--dephasing", "10", "--seed", "3"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_LT(j.at("fidelity").at("c").get<double>(), 0.95);
    EXPECT_EQ(j.at("noise").at("seed"), 3);
}

TEST(Cli, RunWritesOutput) {
    auto path = temp_path("run.json");
    auto r = invoke({"run", "--phi-k", "3", "--output", path.string()});
    ASSERT_EQ(r.status, 0) << r.err;
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j.at("j_peak"), 3);
    std::filesystem::remove(path);
}

TEST(Cli, RunRejectsBadInput) {
    EXPECT_NE(invoke({"run", "--phi-k", "1", "--omega-delta", "0.2"}).status, 0);
    EXPECT_NE(invoke({"run", "--mode", "nmr", "--m", "3", "--phi-k", "1"}).status, 0);
    EXPECT_NE(invoke({"run", "--mode", "quantum", "--phi-k", "1"}).status, 0);
    EXPECT_NE(invoke({"run", "--phi-k", "9"}).status, 0);
    EXPECT_NE(invoke({}).status, 0);
    RunConfig c;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Cli, CompilePhase11) {
    auto r = invoke({"compile", "--gate", "phase11"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto prog = nmr::PulseProgram::parse(r.out);
    EXPECT_NE(r.out.find("PULSE 1,2 y -1.5707963267948966\nPULSE 1,2 x 0.7853981633974483\nPULSE 1,2 y "
                         "1.5707963267948966\n"),
              std::string::npos);
    EXPECT_NEAR(prog.delay_for_coupling(QubitIndex(0), QubitIndex(1)), 1 / (4 * nmr::kTceJ12), 1e-15);
}

TEST(Cli, CompileVerify) {
    for (std::string g : {"h12", "h2", "h1", "phase11", "readout-y2", "readout-x3"}) {
        auto r = invoke({"compile", "--gate", g, "--verify"});
        EXPECT_EQ(r.status, 0) << g << r.err;
        EXPECT_NE(r.out.find("# max deviation vs ideal:"), std::string::npos);
    }
    auto t = cmd_compile({"tphases", false, 3, true, nmr::ZRotationRoute::kCompositePulse, ""});
    EXPECT_LE(*t.deviation, 1e-6);
    auto n = cmd_compile({"", true, 1, true, nmr::ZRotationRoute::kCompositePulse, ""});
    EXPECT_LE(*n.deviation, 1e-6);
    EXPECT_NE(invoke({"compile", "--gate", "cz"}).status, 0);
    EXPECT_NE(invoke({"compile"}).status, 0);
}

TEST(Cli, CompiledTextRoundTripIsBitIdentical) {
    auto sys = nmr::SpinSystem::trichloroethylene();
    for (int k = 0; k < 4; ++k) {
        auto first = cmd_compile({"", true, k, true, nmr::ZRotationRoute::kCompositePulse, ""});
        auto reparsed = nmr::PulseProgram::parse(first.program_text);
        auto params = ProtocolParams::from_phase_index(2, k);
        EXPECT_EQ(reparsed, nmr::compile_qcs_network(params, sys));
        double direct = max_deviation_up_to_global_phase(nmr::program_propagator(nmr::compile_qcs_network(params, sys), sys),
                                                         nmr::ideal_compiled_network(params));
        EXPECT_EQ(*first.deviation, direct);
        EXPECT_EQ(nmr::PulseProgram::parse(reparsed.to_text()), reparsed);
    }
}

TEST(Cli, CompileNetworkSections) {
    auto r = invoke({"compile", "--network", "qcs", "--phi-k", "0"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("# t-phases (empty)\n# h2\n"), std::string::npos);
    auto r1 = invoke({"compile", "--network", "qcs", "--phi-k", "1"});
    auto t = r1.out.find("# t-phases\n");
    ASSERT_NE(t, std::string::npos);
    EXPECT_EQ(r1.out.compare(t + 11, 5, "DELAY"), 0);
}

TEST(Cli, CompileWithSpinSystemFile) {
    auto path = temp_path("spins.cfg");
    std::ofstream(path) << "# shifted frame\nnu2_hz = 250\nnu3_hz = -400\n";
    auto r = invoke({"compile", "--network", "qcs", "--phi-k", "2", "--verify", "--spin-system", path.string(),
                     "--z-route", "shift"});
    EXPECT_EQ(r.status, 0) << r.err;
    std::filesystem::remove(path);
}

TEST(Cli, Reproduce) {
    auto path = temp_path("report.md");
    auto r = invoke({"reproduce", "--output", path.string()});
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("not reproduced"), std::string::npos);
    EXPECT_NE(r.out.find("as printed"), std::string::npos);
    EXPECT_NE(r.out.find("Overall: PASS"), std::string::npos);
    auto json_path = path;
    json_path.replace_extension(".json");
    std::ifstream in(json_path);
    auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j.at("schema"), kReproduceSchema);
    EXPECT_EQ(j.at("rows").size(), 4u);
    for (const auto &row : j.at("rows")) {
        EXPECT_TRUE(row.at("pass").get<bool>());
    }
    EXPECT_GT(j.at("prep").at("as_printed").at("residual").get<double>(), 0.1);
    EXPECT_LE(j.at("prep").at("corrected").at("residual").get<double>(), 1e-5);
    std::filesystem::remove(path);
    std::filesystem::remove(json_path);
}

}  // namespace
}  // namespace qcs::cli

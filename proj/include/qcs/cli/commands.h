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

#ifndef QCS_CLI_COMMANDS_H
#define QCS_CLI_COMMANDS_H

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "qcs/nmr/compiler.h"
#include "qcs/nmr/executor.h"
#include "qcs/nmr/spin_system.h"
#include "qcs/protocol/params.h"

namespace qcs::cli {

inline constexpr const char *kRunSchema = "qcsim.run/1";
inline constexpr const char *kReproduceSchema = "qcsim.reproduce/1";

enum class Mode { kIdeal, kNmr };

struct RunConfig {
    Mode mode = Mode::kIdeal;
    int m = 2;
    std::optional<double> omega_delta;
    std::optional<int> phi_k;
    double omega = 1.0;
    std::optional<nmr::NoiseParams> noise;
    std::string spin_system_path;
    std::string output_path;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
    ProtocolParams params() const;
};

/// Loads the config file when a path is given, otherwise the default system.
nmr::SpinSystem load_spin_system(const std::string &path);

/// QcsOutcome plus, in nmr mode, the final deviation matrix and its fidelity
/// against the ideal-layer result.
nlohmann::json cmd_run(const RunConfig &config);

struct CompileRequest {
    std::string gate;
    bool network = false;
    int phi_k = 0;
    bool verify = false;
    nmr::ZRotationRoute route = nmr::ZRotationRoute::kCompositePulse;
    std::string spin_system_path;
};

struct CompileResult {
    std::string program_text;
    /// Max deviation from the ideal operator after re-parsing the text.
    std::optional<double> deviation;
};

CompileResult cmd_compile(const CompileRequest &request);

struct ReproduceReport {
    std::string markdown;
    nlohmann::json json;
    bool all_pass = false;
};

ReproduceReport cmd_reproduce(const std::string &spin_system_path = "");

/// Parses argv and dispatches. Returns the process exit status.
int run_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qcs::cli

#endif

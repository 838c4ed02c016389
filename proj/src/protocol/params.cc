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

#include "qcs/protocol/params.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcs/core/types.h"

namespace qcs {

ProtocolParams ProtocolParams::from_omega_delta(int m, double omega_delta, double omega) {
    ProtocolParams p{m, omega, omega_delta / omega};
    p.validate();
    return p;
}

ProtocolParams ProtocolParams::from_phase_index(int m, int k, double omega) {
    if (m < 1 || m >= kMaxQubits) {
        throw std::invalid_argument("m out of range");
    }
    if (k < 0 || k >= (1 << m)) {
        throw std::invalid_argument("phase index " + std::to_string(k) + " outside [0, 2^m)");
    }
    return from_omega_delta(m, static_cast<double>(k) / static_cast<double>(1 << m), omega);
}

double ProtocolParams::phi() const {
    return -2.0 * std::numbers::pi * omega_delta();
}

void ProtocolParams::validate() const {
    if (m < 1 || m + 1 > kMaxQubits) {
        throw std::invalid_argument("m must be in [1, " + std::to_string(kMaxQubits - 1) + "]");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("omega must be positive");
    }
    if (!std::isfinite(delta)) {
        throw std::invalid_argument("delta must be finite");
    }
}

}  // namespace qcs

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

#ifndef QCS_NMR_EXECUTOR_H
#define QCS_NMR_EXECUTOR_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qcs/core/types.h"
#include "qcs/nmr/gradient.h"
#include "qcs/nmr/pulse_program.h"
#include "qcs/nmr/spin_system.h"

namespace qcs::nmr {

/// Parametric imperfections. Dephasing damps every coherence of spin j by
/// exp(-rate_j t) during delays; pulse angles are scaled by
/// (1 + pulse_angle_error + jitter) with jitter ~ N(0, pulse_angle_jitter^2)
/// drawn per pulse from a generator seeded with `seed`.
struct NoiseParams {
    std::vector<double> dephasing_rate;
    double pulse_angle_error = 0.0;
    double pulse_angle_jitter = 0.0;
    std::uint64_t seed = 0;

    static NoiseParams uniform_dephasing(double rate, int spins, std::uint64_t seed = 0);
    void validate(int spins) const;
};

/// exp(+i angle * sum_t I_axis^t).
ComplexMatrix rf_rotation(const RfPulse &pulse, int n, double angle_scale = 1.0);

/// Noise-free propagator of a program without gradients.
ComplexMatrix program_propagator(const PulseProgram &program, const SpinSystem &sys);

/// Runs each step in order on a deviation matrix. Delays evolve under the full
/// spin Hamiltonian; gradients use `model` (defaults to the system's gammas).
DeviationDensityMatrix execute_pulse_program(const PulseProgram &program, const DeviationDensityMatrix &state,
                                             const SpinSystem &sys, const std::optional<NoiseParams> &noise = std::nullopt,
                                             const std::optional<GradientModel> &model = std::nullopt);

}  // namespace qcs::nmr

#endif

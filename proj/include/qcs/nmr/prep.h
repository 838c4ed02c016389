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

#ifndef QCS_NMR_PREP_H
#define QCS_NMR_PREP_H

#include <optional>
#include <string>

#include "qcs/core/types.h"
#include "qcs/nmr/executor.h"
#include "qcs/nmr/gradient.h"
#include "qcs/nmr/pulse_program.h"
#include "qcs/nmr/spin_system.h"

namespace qcs::nmr {

enum class PrepVariant {
    /// The rf/gradient sequence exactly as published.
    kAsPrinted,
    /// As printed, plus [pi]_x^1 - [grad]_z - [pi]_x^1 right after the first
    /// gradient. Flipping C1 turns the surviving C1-C2 zero-quantum coherence
    /// into double-quantum coherence, which the gradient removes.
    kCorrected,
};

/// One-line description of how kCorrected differs from kAsPrinted.
std::string prep_correction_diff();

/// alpha = arccos(-gamma_C sqrt(6) / gamma_H).
double prep_alpha(const SpinSystem &sys);

/// sum_j gamma_j I_z^j.
DeviationDensityMatrix equilibrium_state(const SpinSystem &sys);

/// I1z/2 + I2z/2 + I3z/2 + I1zI2z + I2zI3z + I1zI3z + 2 I1zI2zI3z, built from
/// product operators.
DeviationDensityMatrix effective_pure_target();
/// 2 |000><000| - I/4, the same matrix in projector form.
DeviationDensityMatrix effective_pure_target_projector_form();

PulseProgram effective_pure_prep_sequence(const SpinSystem &sys, PrepVariant variant = PrepVariant::kCorrected);

struct PrepResult {
    DeviationDensityMatrix state;
    /// Best-fit real factor s with state ~ s * target (sign included).
    double scale;
    /// || state / s - target ||_F.
    double residual;
};

/// Fits `state` to the effective-pure target up to a real scale.
PrepResult compare_to_effective_pure(const DeviationDensityMatrix &state);

PrepResult prepare_effective_pure_state(const SpinSystem &sys, const GradientModel &model,
                                        PrepVariant variant = PrepVariant::kCorrected,
                                        const std::optional<NoiseParams> &noise = std::nullopt);

/// Unit-trace pure-state equivalent of a deviation matrix: rho_dev is split
/// into trace and traceless parts and the traceless part rescaled so the
/// result has purity one. The sign is taken from the dominant eigenvalue.
DeviationDensityMatrix to_effective_pure(const DeviationDensityMatrix &deviation);

}  // namespace qcs::nmr

#endif

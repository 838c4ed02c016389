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

#ifndef QCS_TOMOGRAPHY_FIDELITY_H
#define QCS_TOMOGRAPHY_FIDELITY_H

#include "qcs/core/types.h"

namespace qcs::tomo {

/// C = Tr(rt re) / (sqrt(Tr rt^2) sqrt(Tr re^2)) * sqrt(Tr re^2 / Tr ri^2).
///
/// The first factor is the normalized overlap between the expected and the
/// measured matrix and ignores overall signal size. The second factor charges
/// for signal lost relative to the initial state.
struct FidelityReport {
    double c = 0.0;
    double overlap_factor = 0.0;
    double purity_factor = 0.0;
};

/// Throws std::invalid_argument for mismatched dimensions or a zero Tr(rho^2).
FidelityReport fidelity(const DeviationDensityMatrix &theory, const DeviationDensityMatrix &experiment,
                        const DeviationDensityMatrix &initial);

}  // namespace qcs::tomo

#endif

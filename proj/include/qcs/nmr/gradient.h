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

#ifndef QCS_NMR_GRADIENT_H
#define QCS_NMR_GRADIENT_H

#include <vector>

#include "qcs/core/types.h"
#include "qcs/nmr/spin_system.h"

namespace qcs::nmr {

/// Ideal spatial-averaging model: a z gradient fully dephases every matrix
/// element whose gamma-weighted coherence order is nonzero.
struct GradientModel {
    std::vector<double> weights;
    double tolerance = 1e-9;

    static GradientModel for_system(const SpinSystem &sys);
};

/// sum_j w_j (m_j(a) - m_j(b)) for basis states a, b.
double coherence_order(std::size_t a, std::size_t b, const GradientModel &model);

DeviationDensityMatrix gradient_pulse(const DeviationDensityMatrix &state, const GradientModel &model);

}  // namespace qcs::nmr

#endif

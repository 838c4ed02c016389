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

#include "qcs/tomography/fidelity.h"

#include <cmath>

namespace qcs::tomo {

FidelityReport fidelity(const DeviationDensityMatrix &theory, const DeviationDensityMatrix &experiment,
                        const DeviationDensityMatrix &initial) {
    if (theory.dim() != experiment.dim() || theory.dim() != initial.dim()) {
        throw std::invalid_argument("fidelity needs matrices of one dimension");
    }
    double pt = theory.purity();
    double pe = experiment.purity();
    double pi = initial.purity();
    constexpr double kFloor = 1e-300;
    if (pt <= kFloor || pe <= kFloor || pi <= kFloor) {
        throw std::invalid_argument("fidelity undefined for a matrix with Tr(rho^2) = 0");
    }
    double overlap = (theory.matrix() * experiment.matrix()).trace().real();
    FidelityReport r;
    r.overlap_factor = overlap / (std::sqrt(pt) * std::sqrt(pe));
    r.purity_factor = std::sqrt(pe / pi);
    r.c = r.overlap_factor * r.purity_factor;
    return r;
}

}  // namespace qcs::tomo

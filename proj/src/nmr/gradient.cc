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

#include "qcs/nmr/gradient.h"

#include <cmath>

#include "qcs/core/linalg.h"

namespace qcs::nmr {

GradientModel GradientModel::for_system(const SpinSystem &sys) {
    sys.validate();
    return GradientModel{sys.gammas};
}

double coherence_order(std::size_t a, std::size_t b, const GradientModel &model) {
    int n = static_cast<int>(model.weights.size());
    double p = 0.0;
    for (int j = 0; j < n; ++j) {
        // m_j = +1/2 for bit 0, -1/2 for bit 1, so m_j(a) - m_j(b) = bit_b - bit_a.
        int da = qubit_bit(a, QubitIndex(j), n);
        int db = qubit_bit(b, QubitIndex(j), n);
        p += model.weights[static_cast<std::size_t>(j)] * static_cast<double>(db - da);
    }
    return p;
}

DeviationDensityMatrix gradient_pulse(const DeviationDensityMatrix &state, const GradientModel &model) {
    if (static_cast<int>(model.weights.size()) != state.num_qubits()) {
        throw std::invalid_argument("gradient model does not match register size");
    }
    ComplexMatrix out = state.matrix();
    for (Eigen::Index a = 0; a < out.rows(); ++a) {
        for (Eigen::Index b = 0; b < out.cols(); ++b) {
            if (std::abs(coherence_order(static_cast<std::size_t>(a), static_cast<std::size_t>(b), model)) >
                model.tolerance) {
                out(a, b) = 0.0;
            }
        }
    }
    return DeviationDensityMatrix(std::move(out));
}

}  // namespace qcs::nmr

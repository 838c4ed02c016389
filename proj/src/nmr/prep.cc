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

#include "qcs/nmr/prep.h"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qcs/core/gates.h"
#include "qcs/core/linalg.h"
#include "qcs/nmr/compiler.h"

namespace qcs::nmr {

namespace {

constexpr double kPi = std::numbers::pi;

const QubitIndex kC1 = QubitIndex::label(1);
const QubitIndex kC2 = QubitIndex::label(2);
const QubitIndex kH3 = QubitIndex::label(3);

ComplexMatrix iz(QubitIndex q) {
    return gates::spin(gates::Axis::kZ, q, 3);
}

}  // namespace

std::string prep_correction_diff() {
    return "after the first [grad]_z insert: [pi]_x^1 - [grad]_z - [pi]_x^1";
}

double prep_alpha(const SpinSystem &sys) {
    sys.validate();
    double ratio = -sys.gammas[0] * std::sqrt(6.0) / sys.gammas[2];
    if (ratio < -1.0 || ratio > 1.0) {
        throw std::invalid_argument("gamma ratio too small for the prep rotation angle");
    }
    return std::acos(ratio);
}

DeviationDensityMatrix equilibrium_state(const SpinSystem &sys) {
    sys.validate();
    int n = sys.size();
    ComplexMatrix rho = ComplexMatrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (int j = 0; j < n; ++j) {
        rho += sys.gammas[static_cast<std::size_t>(j)] * gates::spin(gates::Axis::kZ, QubitIndex(j), n);
    }
    return DeviationDensityMatrix(std::move(rho));
}

DeviationDensityMatrix effective_pure_target() {
    ComplexMatrix rho = (iz(kC1) + iz(kC2) + iz(kH3)) / 2.0 + iz(kC1) * iz(kC2) + iz(kC2) * iz(kH3) +
                        iz(kC1) * iz(kH3) + 2.0 * iz(kC1) * iz(kC2) * iz(kH3);
    return DeviationDensityMatrix(std::move(rho));
}

DeviationDensityMatrix effective_pure_target_projector_form() {
    ComplexMatrix rho = -0.25 * ComplexMatrix::Identity(8, 8);
    rho(0, 0) += 2.0;
    return DeviationDensityMatrix(std::move(rho));
}

PulseProgram effective_pure_prep_sequence(const SpinSystem &sys, PrepVariant variant) {
    sys.validate();
    if (sys.size() != 3) {
        throw std::invalid_argument("effective-pure prep is defined for the three-spin system");
    }
    double j12 = sys.coupling(kC1, kC2);
    double j23 = sys.coupling(kC2, kH3);
    double j13 = sys.coupling(kC1, kH3);
    double alpha = prep_alpha(sys);

    PulseProgram p;
    p.add(RfPulse{{kC1, kC2}, PulseAxis::kX, kPi / 4});
    p.append(refocused_delay_schedule(kC1, kC2, 1.0 / (2 * j12), sys));
    p.add(RfPulse{{kC1, kC2}, PulseAxis::kY, -5 * kPi / 6});
    p.add(RfPulse{{kH3}, PulseAxis::kX, alpha});
    p.add(Gradient{});
    if (variant == PrepVariant::kCorrected) {
        p.add(RfPulse{{kC1}, PulseAxis::kX, kPi});
        p.add(Gradient{});
        p.add(RfPulse{{kC1}, PulseAxis::kX, kPi});
    }
    p.add(RfPulse{{kH3}, PulseAxis::kY, kPi / 4});
    p.append(refocused_delay_schedule(kC2, kH3, 9.0 / (2 * j23), sys));
    p.append(refocused_delay_schedule(kC1, kH3, 1.0 / (2 * j13), sys));
    p.add(RfPulse{{kH3}, PulseAxis::kY, kPi / 4});
    p.add(Gradient{});
    p.add(RfPulse{{kH3}, PulseAxis::kY, kPi / 4});
    p.append(refocused_delay_schedule(kC2, kH3, 9.0 / (4 * j23), sys));
    p.append(refocused_delay_schedule(kC1, kH3, 1.0 / (4 * j13), sys));
    p.add(RfPulse{{kH3}, PulseAxis::kX, kPi / 4});
    p.add(Gradient{});
    return p;
}

PrepResult compare_to_effective_pure(const DeviationDensityMatrix &state) {
    if (state.num_qubits() != 3) {
        throw std::invalid_argument("effective-pure comparison needs a three-spin state");
    }
    const ComplexMatrix target = effective_pure_target().matrix();
    double overlap = (state.matrix() * target).trace().real();
    double norm = (target * target).trace().real();
    double scale = overlap / norm;
    if (std::abs(scale) < 1e-14) {
        return PrepResult{state, 0.0, INFINITY};
    }
    double residual = frobenius_distance(state.matrix() / scale, target);
    return PrepResult{state, scale, residual};
}

PrepResult prepare_effective_pure_state(const SpinSystem &sys, const GradientModel &model, PrepVariant variant,
                                        const std::optional<NoiseParams> &noise) {
    auto out = execute_pulse_program(effective_pure_prep_sequence(sys, variant), equilibrium_state(sys), sys, noise,
                                     model);
    return compare_to_effective_pure(out);
}

DeviationDensityMatrix to_effective_pure(const DeviationDensityMatrix &deviation) {
    auto d = static_cast<double>(deviation.dim());
    ComplexMatrix identity = ComplexMatrix::Identity(deviation.dim(), deviation.dim());
    ComplexMatrix traceless = deviation.matrix() - deviation.trace().real() / d * identity;
    double norm2 = (traceless * traceless).trace().real();
    if (norm2 < 1e-24) {
        throw std::invalid_argument("deviation matrix has no traceless part");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(traceless, Eigen::EigenvaluesOnly);
    const auto &vals = solver.eigenvalues();
    double dominant = std::abs(vals(0)) > std::abs(vals(vals.size() - 1)) ? vals(0) : vals(vals.size() - 1);
    double c = std::copysign(std::sqrt(norm2 / (1.0 - 1.0 / d)), dominant);
    return DeviationDensityMatrix(traceless / c + identity / d);
}

}  // namespace qcs::nmr

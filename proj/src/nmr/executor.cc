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

#include "qcs/nmr/executor.h"

#include <cmath>
#include <random>

#include "qcs/core/gates.h"
#include "qcs/core/linalg.h"

namespace qcs::nmr {

namespace {

void check_spins(std::span<const QubitIndex> targets, int n) {
    for (auto t : targets) {
        if (t.value < 0 || t.value >= n) {
            throw std::invalid_argument("pulse program addresses spin " + std::to_string(t.one_based()) +
                                        " outside a " + std::to_string(n) + "-spin system");
        }
    }
}

ComplexMatrix z_frame(const ZRotation &z, int n) {
    std::array<QubitIndex, 1> t{z.target};
    check_spins(t, n);
    return embed(gates::z_rotation(z.angle), {z.target}, n);
}

void dephase(ComplexMatrix &rho, const std::vector<double> &rates, double t) {
    if (t <= 0.0) {
        return;
    }
    int n = static_cast<int>(rates.size());
    for (Eigen::Index a = 0; a < rho.rows(); ++a) {
        for (Eigen::Index b = 0; b < rho.cols(); ++b) {
            double rate = 0.0;
            for (int j = 0; j < n; ++j) {
                if (qubit_bit(static_cast<std::size_t>(a), QubitIndex(j), n) !=
                    qubit_bit(static_cast<std::size_t>(b), QubitIndex(j), n)) {
                    rate += rates[static_cast<std::size_t>(j)];
                }
            }
            if (rate > 0.0) {
                rho(a, b) *= std::exp(-rate * t);
            }
        }
    }
}

}  // namespace

NoiseParams NoiseParams::uniform_dephasing(double rate, int spins, std::uint64_t seed) {
    NoiseParams p;
    p.dephasing_rate.assign(static_cast<std::size_t>(spins), rate);
    p.seed = seed;
    return p;
}

void NoiseParams::validate(int spins) const {
    if (!dephasing_rate.empty() && static_cast<int>(dephasing_rate.size()) != spins) {
        throw std::invalid_argument("dephasing rates must list one value per spin");
    }
    for (double r : dephasing_rate) {
        if (!(r >= 0.0)) {
            throw std::invalid_argument("dephasing rates must be non-negative");
        }
    }
    if (!(pulse_angle_error > -0.5 && pulse_angle_error < 0.5)) {
        throw std::invalid_argument("pulse angle error must lie in (-0.5, 0.5)");
    }
    if (!(pulse_angle_jitter >= 0.0)) {
        throw std::invalid_argument("pulse angle jitter must be non-negative");
    }
}

ComplexMatrix rf_rotation(const RfPulse &pulse, int n, double angle_scale) {
    check_spins(pulse.targets, n);
    gates::Axis axis = (pulse.axis == PulseAxis::kX || pulse.axis == PulseAxis::kMinusX) ? gates::Axis::kX
                                                                                           : gates::Axis::kY;
    double sign = (pulse.axis == PulseAxis::kMinusX || pulse.axis == PulseAxis::kMinusY) ? -1.0 : 1.0;
    double theta = sign * pulse.angle * angle_scale;
    // Product of commuting single-spin rotations exp(+i theta I_axis).
    ComplexMatrix local = matrix_exp(-theta * gates::spin(axis), 1.0);
    ComplexMatrix u = gates::identity(n);
    for (auto t : pulse.targets) {
        u = embed(local, {t}, n) * u;
    }
    return u;
}

ComplexMatrix program_propagator(const PulseProgram &program, const SpinSystem &sys) {
    int n = sys.size();
    ComplexMatrix h = build_hamiltonian(sys);
    ComplexMatrix u = gates::identity(n);
    for (const auto &step : program.steps()) {
        if (const auto *p = std::get_if<RfPulse>(&step)) {
            u = rf_rotation(*p, n) * u;
        } else if (const auto *d = std::get_if<Delay>(&step)) {
            u = matrix_exp(h, d->duration) * u;
        } else if (const auto *z = std::get_if<ZRotation>(&step)) {
            u = z_frame(*z, n) * u;
        } else {
            throw std::invalid_argument("a program with gradient steps has no propagator");
        }
    }
    return u;
}

DeviationDensityMatrix execute_pulse_program(const PulseProgram &program, const DeviationDensityMatrix &state,
                                             const SpinSystem &sys, const std::optional<NoiseParams> &noise,
                                             const std::optional<GradientModel> &model) {
    int n = sys.size();
    if (state.num_qubits() != n) {
        throw std::invalid_argument("state dimension does not match the spin system");
    }
    if (noise) {
        noise->validate(n);
    }
    GradientModel grad = model ? *model : GradientModel::for_system(sys);
    ComplexMatrix h = build_hamiltonian(sys);
    std::mt19937_64 rng(noise ? noise->seed : 0);
    std::normal_distribution<double> jitter(0.0, 1.0);

    ComplexMatrix rho = state.matrix();
    for (const auto &step : program.steps()) {
        if (const auto *p = std::get_if<RfPulse>(&step)) {
            double scale = 1.0;
            if (noise) {
                scale += noise->pulse_angle_error + noise->pulse_angle_jitter * jitter(rng);
            }
            ComplexMatrix u = rf_rotation(*p, n, scale);
            rho = u * rho * u.adjoint();
        } else if (const auto *d = std::get_if<Delay>(&step)) {
            ComplexMatrix u = matrix_exp(h, d->duration);
            rho = u * rho * u.adjoint();
            if (noise && !noise->dephasing_rate.empty()) {
                dephase(rho, noise->dephasing_rate, d->duration);
            }
        } else if (const auto *z = std::get_if<ZRotation>(&step)) {
            ComplexMatrix u = z_frame(*z, n);
            rho = u * rho * u.adjoint();
        } else {
            rho = gradient_pulse(DeviationDensityMatrix((rho + rho.adjoint()) * 0.5), grad).matrix();
        }
    }
    return DeviationDensityMatrix((rho + rho.adjoint()) * 0.5);
}

}  // namespace qcs::nmr

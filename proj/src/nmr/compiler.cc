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

#include "qcs/nmr/compiler.h"

#include <bit>
#include <cmath>
#include <numbers>

#include "qcs/core/gates.h"
#include "qcs/core/linalg.h"
#include "qcs/nmr/executor.h"

namespace qcs::nmr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kThreeSpins = 3;

const QubitIndex kC1 = QubitIndex::label(1);
const QubitIndex kC2 = QubitIndex::label(2);
const QubitIndex kH3 = QubitIndex::label(3);

bool walsh_negative(unsigned pattern, unsigned segment) {
    return (std::popcount(pattern & segment) & 1U) != 0;
}

// Splits tau into equal segments; spin s follows Walsh pattern patterns[s].
PulseProgram walsh_block(const std::vector<unsigned> &patterns, double tau, const std::vector<CouplingPair> &annotation) {
    unsigned highest = 0;
    for (unsigned p : patterns) {
        highest = std::max(highest, p);
    }
    unsigned segments = std::bit_ceil(highest + 1);
    PulseProgram out;
    auto flips_between = [&](unsigned from, unsigned to, bool to_is_end) {
        std::vector<QubitIndex> flips;
        for (std::size_t s = 0; s < patterns.size(); ++s) {
            bool before = walsh_negative(patterns[s], from);
            bool after = to_is_end ? false : walsh_negative(patterns[s], to);
            if (before != after) {
                flips.emplace_back(static_cast<int>(s));
            }
        }
        if (!flips.empty()) {
            out.add(RfPulse{flips, PulseAxis::kX, kPi});
        }
    };
    for (unsigned seg = 0; seg < segments; ++seg) {
        if (seg > 0) {
            flips_between(seg - 1, seg, false);
        }
        out.add(Delay{tau / segments, annotation});
    }
    flips_between(segments - 1, 0, true);
    return out;
}

void check_spin(QubitIndex q, const SpinSystem &sys) {
    if (q.value < 0 || q.value >= sys.size()) {
        throw std::invalid_argument("spin " + std::to_string(q.one_based()) + " not in the spin system");
    }
}

void require_three_spins(const SpinSystem &sys) {
    sys.validate();
    if (sys.size() != kThreeSpins) {
        throw std::invalid_argument("gate identities are defined for the three-spin system");
    }
}

RfPulse pulse(std::vector<QubitIndex> targets, PulseAxis axis, double angle) {
    return RfPulse{std::move(targets), axis, angle};
}

ComplexMatrix ideal_rotation(QubitIndex spin, PulseAxis axis) {
    return rf_rotation(RfPulse{{spin}, axis, kPi / 2}, kThreeSpins);
}

}  // namespace

std::string to_string(NmrGate gate) {
    switch (gate) {
        case NmrGate::kH12:
            return "h12";
        case NmrGate::kH2:
            return "h2";
        case NmrGate::kH1:
            return "h1";
        case NmrGate::kPhase11:
            return "phase11";
        case NmrGate::kReadoutX1:
            return "readout-x1";
        case NmrGate::kReadoutY1:
            return "readout-y1";
        case NmrGate::kReadoutX2:
            return "readout-x2";
        case NmrGate::kReadoutY2:
            return "readout-y2";
        case NmrGate::kReadoutX3:
            return "readout-x3";
        case NmrGate::kReadoutY3:
            return "readout-y3";
    }
    return "?";
}

std::vector<NmrGate> all_nmr_gates() {
    return {NmrGate::kH12,       NmrGate::kH2,        NmrGate::kH1,        NmrGate::kPhase11,
            NmrGate::kReadoutX1, NmrGate::kReadoutY1, NmrGate::kReadoutX2, NmrGate::kReadoutY2,
            NmrGate::kReadoutX3, NmrGate::kReadoutY3};
}

NmrGate parse_nmr_gate(const std::string &name) {
    for (auto g : all_nmr_gates()) {
        if (to_string(g) == name) {
            return g;
        }
    }
    throw std::invalid_argument("unsupported gate '" + name + "'");
}

ComplexMatrix ideal_gate(NmrGate gate) {
    ComplexMatrix h = gates::hadamard();
    switch (gate) {
        case NmrGate::kH12:
            return embed(h, {kC1}, kThreeSpins) * embed(h, {kC2}, kThreeSpins);
        case NmrGate::kH2:
            return embed(h, {kC2}, kThreeSpins);
        case NmrGate::kH1:
            return embed(h, {kC1}, kThreeSpins);
        case NmrGate::kPhase11:
            return embed(gates::controlled_phase(-kPi / 2), {kC1, kC2}, kThreeSpins);
        case NmrGate::kReadoutX1:
            return ideal_rotation(kC1, PulseAxis::kX);
        case NmrGate::kReadoutY1:
            return ideal_rotation(kC1, PulseAxis::kY);
        case NmrGate::kReadoutX2:
            return ideal_rotation(kC2, PulseAxis::kX);
        case NmrGate::kReadoutY2:
            return ideal_rotation(kC2, PulseAxis::kY);
        case NmrGate::kReadoutX3:
            return ideal_rotation(kH3, PulseAxis::kX);
        case NmrGate::kReadoutY3:
            return ideal_rotation(kH3, PulseAxis::kY);
    }
    throw std::invalid_argument("unknown gate");
}

PulseProgram refocused_delay_schedule(QubitIndex j, QubitIndex l, double tau, const SpinSystem &sys) {
    sys.validate();
    check_spin(j, sys);
    check_spin(l, sys);
    if (j == l) {
        throw std::invalid_argument("refocused coupling needs two distinct spins");
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("coupling evolution time must be non-negative");
    }
    if (tau == 0.0) {
        return {};
    }
    std::vector<unsigned> patterns(static_cast<std::size_t>(sys.size()));
    unsigned next = 2;
    for (int s = 0; s < sys.size(); ++s) {
        patterns[static_cast<std::size_t>(s)] = (s == j.value || s == l.value) ? 1U : next++;
    }
    return walsh_block(patterns, tau, {CouplingPair{std::min(j, l), std::max(j, l)}});
}

PulseProgram composite_z_rotation(QubitIndex target, double angle, const SpinSystem &sys, ZRotationRoute route) {
    sys.validate();
    check_spin(target, sys);
    if (!std::isfinite(angle)) {
        throw std::invalid_argument("z rotation angle must be finite");
    }
    if (angle == 0.0) {
        return {};
    }
    if (route == ZRotationRoute::kCompositePulse) {
        PulseProgram out;
        out.add(pulse({target}, PulseAxis::kY, kPi / 2));
        out.add(pulse({target}, PulseAxis::kX, -angle));
        out.add(pulse({target}, PulseAxis::kY, -kPi / 2));
        return out;
    }
    double nu = sys.offsets_hz[static_cast<std::size_t>(target.value)];
    if (std::abs(nu) < 1e-9) {
        throw std::invalid_argument("chemical-shift z rotation needs a nonzero offset on spin " +
                                    std::to_string(target.one_based()));
    }
    // exp(-i(-2 pi nu I_z) t) = exp(+i 2 pi nu t I_z); period 1/|nu| up to global phase.
    double period = 1.0 / std::abs(nu);
    double t = std::fmod(angle / (2 * kPi * nu), period);
    if (t < 0) {
        t += period;
    }
    std::vector<unsigned> patterns(static_cast<std::size_t>(sys.size()));
    unsigned next = 1;
    for (int s = 0; s < sys.size(); ++s) {
        patterns[static_cast<std::size_t>(s)] = (s == target.value) ? 0U : next++;
    }
    return walsh_block(patterns, t, {});
}

PulseProgram compile_gate(NmrGate gate, const SpinSystem &sys, ZRotationRoute route) {
    require_three_spins(sys);
    PulseProgram out;
    switch (gate) {
        case NmrGate::kH12:
            out.add(pulse({kC1, kC2}, PulseAxis::kY, -kPi / 2));
            out.add(pulse({kC1, kC2}, PulseAxis::kX, kPi));
            break;
        case NmrGate::kH2:
            out.add(pulse({kC1, kC2, kH3}, PulseAxis::kY, kPi / 4));
            out.append(composite_z_rotation(kC2, kPi, sys, route));
            out.add(pulse({kC1, kC2, kH3}, PulseAxis::kY, -kPi / 4));
            break;
        case NmrGate::kH1:
            out.append(compile_gate(NmrGate::kH2, sys, route));
            out.append(compile_gate(NmrGate::kH12, sys, route));
            break;
        case NmrGate::kPhase11:
            out.append(refocused_delay_schedule(kC1, kC2, 1.0 / (4 * sys.coupling(kC1, kC2)), sys));
            out.add(pulse({kC1, kC2}, PulseAxis::kY, -kPi / 2));
            out.add(pulse({kC1, kC2}, PulseAxis::kX, kPi / 4));
            out.add(pulse({kC1, kC2}, PulseAxis::kY, kPi / 2));
            break;
        case NmrGate::kReadoutX1:
            out.add(pulse({kC1}, PulseAxis::kX, kPi / 2));
            break;
        case NmrGate::kReadoutY1:
            out.add(pulse({kC1}, PulseAxis::kY, kPi / 2));
            break;
        case NmrGate::kReadoutX2:
            // C1 is rotated out and back so only C2 nutates.
            out.add(pulse({kC1, kC2}, PulseAxis::kY, kPi / 2));
            out.append(composite_z_rotation(kC2, kPi / 2, sys, route));
            out.add(pulse({kC1, kC2}, PulseAxis::kY, -kPi / 2));
            break;
        case NmrGate::kReadoutY2:
            out.add(pulse({kC1, kC2}, PulseAxis::kX, -kPi / 2));
            out.append(composite_z_rotation(kC2, kPi / 2, sys, route));
            out.add(pulse({kC1, kC2}, PulseAxis::kX, kPi / 2));
            break;
        case NmrGate::kReadoutX3:
            out.add(pulse({kH3}, PulseAxis::kX, kPi / 2));
            break;
        case NmrGate::kReadoutY3:
            out.add(pulse({kH3}, PulseAxis::kY, kPi / 2));
            break;
    }
    return out;
}

PulseProgram compile_readout_y2_as_printed(const SpinSystem &sys) {
    require_three_spins(sys);
    PulseProgram out;
    out.add(pulse({kC1, kC2}, PulseAxis::kX, -kPi / 2));
    out.append(composite_z_rotation(kC2, kPi / 2, sys));
    out.add(pulse({kC1, kC2}, PulseAxis::kY, kPi / 2));
    return out;
}

double coupling_duration(double angle, double j_hz) {
    if (!(j_hz != 0.0) || !std::isfinite(angle)) {
        throw std::invalid_argument("coupling duration needs a finite angle and nonzero J");
    }
    double tau = -angle / (kPi * j_hz);
    double period = 2.0 / std::abs(j_hz);
    if (tau < 0.0) {
        tau += std::ceil(-tau / period) * period;
    }
    if (std::abs(tau) < 1e-15) {
        tau = 0.0;
    }
    return tau;
}

PulseProgram compile_t_phases(double phi, const SpinSystem &sys) {
    require_three_spins(sys);
    PulseProgram out;
    out.append(refocused_delay_schedule(kC1, kH3, coupling_duration(phi, sys.coupling(kC1, kH3)), sys));
    out.append(refocused_delay_schedule(kC2, kH3, coupling_duration(2 * phi, sys.coupling(kC2, kH3)), sys));
    return out;
}

PulseProgram compile_t_phases(const ProtocolParams &params, const SpinSystem &sys) {
    params.validate();
    if (params.m != 2) {
        throw std::invalid_argument("the three-spin network needs m = 2");
    }
    return compile_t_phases(params.phi(), sys);
}

ComplexMatrix ideal_t_phases(double phi) {
    ComplexMatrix c13 = embed(gates::cnot(), {kC1, kH3}, kThreeSpins);
    ComplexMatrix c23 = embed(gates::cnot(), {kC2, kH3}, kThreeSpins);
    ComplexMatrix rz1 = embed(gates::z_rotation(phi), {kH3}, kThreeSpins);
    ComplexMatrix rz2 = embed(gates::z_rotation(2 * phi), {kH3}, kThreeSpins);
    return (c23 * rz2 * c23) * (c13 * rz1 * c13);
}

std::vector<std::string> qcs_network_outline() {
    return {"h12", "t-phases", "h2", "phase11", "h1"};
}

std::vector<NetworkSection> compile_qcs_network_sections(const ProtocolParams &params, const SpinSystem &sys,
                                                         ZRotationRoute route) {
    return {{"h12", compile_gate(NmrGate::kH12, sys, route)},
            {"t-phases", compile_t_phases(params, sys)},
            {"h2", compile_gate(NmrGate::kH2, sys, route)},
            {"phase11", compile_gate(NmrGate::kPhase11, sys, route)},
            {"h1", compile_gate(NmrGate::kH1, sys, route)}};
}

PulseProgram compile_qcs_network(const ProtocolParams &params, const SpinSystem &sys, ZRotationRoute route) {
    PulseProgram out;
    for (const auto &section : compile_qcs_network_sections(params, sys, route)) {
        out.append(section.program);
    }
    return out;
}

ComplexMatrix ideal_compiled_network(const ProtocolParams &params) {
    params.validate();
    return ideal_gate(NmrGate::kH1) * ideal_gate(NmrGate::kPhase11) * ideal_gate(NmrGate::kH2) *
           ideal_t_phases(params.phi()) * ideal_gate(NmrGate::kH12);
}

}  // namespace qcs::nmr

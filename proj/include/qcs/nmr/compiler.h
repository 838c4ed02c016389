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

#ifndef QCS_NMR_COMPILER_H
#define QCS_NMR_COMPILER_H

#include <string>
#include <vector>

#include "qcs/core/types.h"
#include "qcs/nmr/pulse_program.h"
#include "qcs/nmr/spin_system.h"
#include "qcs/protocol/params.h"

namespace qcs::nmr {

/// Gates the three-spin compiler knows identities for.
enum class NmrGate {
    kH12,      // Hadamard on C1 and C2
    kH2,       // Hadamard on C2
    kH1,       // Hadamard on C1, as H12 after H2
    kPhase11,  // I_{|11>}^{-pi/2} on C1, C2
    kReadoutX1,
    kReadoutY1,
    kReadoutX2,
    kReadoutY2,
    kReadoutX3,
    kReadoutY3,
};

std::string to_string(NmrGate gate);
NmrGate parse_nmr_gate(const std::string &name);
std::vector<NmrGate> all_nmr_gates();

/// Target operator of each compiled gate on the three-spin register.
ComplexMatrix ideal_gate(NmrGate gate);

/// How a single-spin z rotation is realized.
enum class ZRotationRoute {
    /// [pi/2]_y - [-angle]_x - [-pi/2]_y on the target.
    kCompositePulse,
    /// Free chemical-shift precession of the target with every other spin and
    /// every coupling refocused. Needs a nonzero rotating-frame offset.
    kChemicalShift,
};

/// Delays interleaved with hard pi pulses so that, under the full Hamiltonian,
/// only J_jl survives: the block equals [tau]_{jl} up to a global phase.
///
/// Each spin follows a Walsh sign pattern over 2^b equal segments. j and l
/// share one pattern, every other spin gets a distinct nonzero pattern, so all
/// shifts and all other couplings integrate to zero. Every spin is flipped an
/// even number of times.
PulseProgram refocused_delay_schedule(QubitIndex j, QubitIndex l, double tau, const SpinSystem &sys);

/// exp(+i angle I_z) on `target`.
PulseProgram composite_z_rotation(QubitIndex target, double angle, const SpinSystem &sys,
                                  ZRotationRoute route = ZRotationRoute::kCompositePulse);

PulseProgram compile_gate(NmrGate gate, const SpinSystem &sys, ZRotationRoute route = ZRotationRoute::kCompositePulse);

/// The printed C2 y-readout identity, [-pi/2]_x^{1,2} - R_z^2(pi/2) - [pi/2]_y^{1,2}.
/// It does not implement [pi/2]_y^2; kept for comparison against the shipped form.
PulseProgram compile_readout_y2_as_printed(const SpinSystem &sys);

/// Duration realizing exp(+i 2 angle I_z^j I_z^l), i.e. -angle / (pi J), shifted by
/// whole periods 2/J until it is non-negative.
double coupling_duration(double angle, double j_hz);

/// The two handshake compounds for z-angle phi:
/// [-phi/(pi J13)]_13 then [-2 phi/(pi J23)]_23.
PulseProgram compile_t_phases(double phi, const SpinSystem &sys);
PulseProgram compile_t_phases(const ProtocolParams &params, const SpinSystem &sys);

/// CNOT13 Rz3(phi) CNOT13 followed by CNOT23 Rz3(2 phi) CNOT23.
ComplexMatrix ideal_t_phases(double phi);

/// Sequence of compiled gates for the m = 2 clock-synchronization network.
std::vector<std::string> qcs_network_outline();
struct NetworkSection {
    std::string name;
    PulseProgram program;
};

/// The compiled network split by outline entry, in time order.
std::vector<NetworkSection> compile_qcs_network_sections(const ProtocolParams &params, const SpinSystem &sys,
                                                         ZRotationRoute route = ZRotationRoute::kCompositePulse);
PulseProgram compile_qcs_network(const ProtocolParams &params, const SpinSystem &sys,
                                 ZRotationRoute route = ZRotationRoute::kCompositePulse);
/// Product of the ideal gates the compiled network stands for.
ComplexMatrix ideal_compiled_network(const ProtocolParams &params);

}  // namespace qcs::nmr

#endif

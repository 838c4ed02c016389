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

#ifndef QCS_PROTOCOL_QCS_H
#define QCS_PROTOCOL_QCS_H

#include <vector>

#include "qcs/core/types.h"
#include "qcs/protocol/gate_network.h"
#include "qcs/protocol/params.h"

namespace qcs {

/// Register layout: working qubits 0..m-1 hold k_0..k_{m-1} (qubit 0 carries
/// the least significant bit of k), the ancilla sits at position m.
inline QubitIndex ancilla_of(const ProtocolParams &p) {
    return QubitIndex(p.m);
}

/// H on each working qubit, identity on the ancilla.
ComplexMatrix hadamard_all(int m);

/// Handshake phase on (working qubit `layer`, ancilla): diag(e^{-i a}, 1, 1, e^{i a})
/// with a = 2^layer * pi * omega * delta, so |00>+|11> picks up a relative phase
/// of 2^layer * 2 pi * omega * delta.
ComplexMatrix tqh_phase(int layer, const ProtocolParams &params);

/// Per-layer CNOT, handshake, CNOT sequence.
GateNetwork t_operation_network(const ProtocolParams &params);
ComplexMatrix t_operation(const ProtocolParams &params);

/// Runs the T operation on a pure state. Throws if the ancilla is not |0>.
Ket apply_t_operation(const Ket &state, const ProtocolParams &params);

/// Inverse QFT with the output SWAP absorbed, acting on qubits
/// [offset, offset + m) of an n-qubit register. It expects the bit-reversed
/// input that the T operation produces and emits j with the first working
/// qubit as the most significant bit.
GateNetwork inverse_qft_reduced_network(int m, int n, int offset = 0);
ComplexMatrix inverse_qft_reduced(int m);
/// The m = 2 reduced inverse QFT written out entry by entry, for checking the
/// gate-built version.
ComplexMatrix reduced_inverse_qft_table();

/// I_{|11>}^{-pi/2} = diag(1, 1, 1, -i).
ComplexMatrix controlled_phase_gate();

/// Full clock-synchronization network: Hadamards, T, reduced inverse QFT.
GateNetwork qcs_network(const ProtocolParams &params);

struct QcsOutcome {
    BitDistribution distribution;
    std::size_t j_peak = 0;
    double delta_estimate = 0.0;
    /// True iff 2^m omega delta is an integer within 1e-9.
    bool exact = false;
};

QcsOutcome run_qcs(const ProtocolParams &params);

/// |c_j|^2 by direct summation over k.
std::vector<double> outcome_distribution_closed_form(const ProtocolParams &params);
/// Same distribution from the geometric-series (Fejer kernel) form.
std::vector<double> outcome_distribution_geometric(const ProtocolParams &params);

/// j / (2^m omega).
double estimate_delta(std::size_t j, const ProtocolParams &params);

/// round(2^m omega delta) mod 2^m.
std::size_t nearest_j(const ProtocolParams &params);

}  // namespace qcs

#endif

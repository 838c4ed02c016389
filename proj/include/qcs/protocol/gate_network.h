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

#ifndef QCS_PROTOCOL_GATE_NETWORK_H
#define QCS_PROTOCOL_GATE_NETWORK_H

#include <string>
#include <vector>

#include "qcs/core/types.h"

namespace qcs {

enum class GateKind {
    kHadamard,
    kCnot,
    /// Two-qubit diag(e^{-i a}, 1, 1, e^{i a}) on (working qubit, ancilla); a is `parameter`.
    kTqhPhase,
    /// diag(1, 1, 1, e^{i a}) on two qubits; a is `parameter`.
    kControlledPhase,
    kSwap,
    /// e^{i a I_z}; a is `parameter`.
    kZRotation,
};

std::string to_string(GateKind kind);

struct Gate {
    GateKind kind;
    std::vector<QubitIndex> targets;
    double parameter = 0.0;

    /// Local 2^k x 2^k matrix of this gate.
    ComplexMatrix matrix() const;
    std::string describe() const;
};

/// Ordered gate list over a fixed register. Gates apply in list order.
class GateNetwork {
   public:
    explicit GateNetwork(int num_qubits);

    GateNetwork &add(Gate gate);
    GateNetwork &append(const GateNetwork &other);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }

    /// Full register operator: the product of all embedded gates.
    ComplexMatrix unitary() const;
    Ket apply(const Ket &state) const;
    DeviationDensityMatrix apply(const DeviationDensityMatrix &state) const;

   private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

}  // namespace qcs

#endif

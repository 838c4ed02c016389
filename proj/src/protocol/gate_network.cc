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

#include "qcs/protocol/gate_network.h"

#include <sstream>

#include "qcs/core/gates.h"
#include "qcs/core/linalg.h"

namespace qcs {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::kHadamard:
            return "H";
        case GateKind::kCnot:
            return "CNOT";
        case GateKind::kTqhPhase:
            return "TQH";
        case GateKind::kControlledPhase:
            return "CPHASE";
        case GateKind::kSwap:
            return "SWAP";
        case GateKind::kZRotation:
            return "RZ";
    }
    return "?";
}

namespace {

std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::kHadamard:
        case GateKind::kZRotation:
            return 1;
        default:
            return 2;
    }
}

}  // namespace

ComplexMatrix Gate::matrix() const {
    switch (kind) {
        case GateKind::kHadamard:
            return gates::hadamard();
        case GateKind::kCnot:
            return gates::cnot();
        case GateKind::kTqhPhase: {
            ComplexMatrix m = ComplexMatrix::Identity(4, 4);
            m(0, 0) = std::polar(1.0, -parameter);
            m(3, 3) = std::polar(1.0, parameter);
            return m;
        }
        case GateKind::kControlledPhase:
            return gates::controlled_phase(parameter);
        case GateKind::kSwap:
            return gates::swap();
        case GateKind::kZRotation:
            return gates::z_rotation(parameter);
    }
    throw std::invalid_argument("unknown gate kind");
}

std::string Gate::describe() const {
    std::ostringstream out;
    out << to_string(kind);
    for (auto t : targets) {
        out << ' ' << t.one_based();
    }
    if (kind == GateKind::kTqhPhase || kind == GateKind::kControlledPhase || kind == GateKind::kZRotation) {
        out << " (" << parameter << ')';
    }
    return out.str();
}

GateNetwork::GateNetwork(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("register size out of range");
    }
}

GateNetwork &GateNetwork::add(Gate gate) {
    if (gate.targets.size() != arity(gate.kind)) {
        throw std::invalid_argument(to_string(gate.kind) + " takes " + std::to_string(arity(gate.kind)) + " targets");
    }
    for (std::size_t i = 0; i < gate.targets.size(); ++i) {
        if (gate.targets[i].value < 0 || gate.targets[i].value >= num_qubits_) {
            throw std::invalid_argument("gate target outside register");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (gate.targets[k] == gate.targets[i]) {
                throw std::invalid_argument("duplicate gate target");
            }
        }
    }
    gates_.push_back(std::move(gate));
    return *this;
}

GateNetwork &GateNetwork::append(const GateNetwork &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("cannot append networks over different registers");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

ComplexMatrix GateNetwork::unitary() const {
    ComplexMatrix u = gates::identity(num_qubits_);
    for (const auto &g : gates_) {
        u = embed(g.matrix(), g.targets, num_qubits_) * u;
    }
    return u;
}

Ket GateNetwork::apply(const Ket &state) const {
    if (state.num_qubits() != num_qubits_) {
        throw std::invalid_argument("state register size does not match network");
    }
    Ket out = state;
    for (const auto &g : gates_) {
        out = apply_local(out, g.matrix(), g.targets);
    }
    return out;
}

DeviationDensityMatrix GateNetwork::apply(const DeviationDensityMatrix &state) const {
    return apply_unitary(state, unitary());
}

}  // namespace qcs

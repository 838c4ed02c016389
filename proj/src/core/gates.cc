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

#include "qcs/core/gates.h"

#include <cmath>

#include "qcs/core/linalg.h"

namespace qcs::gates {

using namespace std::complex_literals;

ComplexMatrix identity(int n) {
    auto dim = Eigen::Index{1} << n;
    return ComplexMatrix::Identity(dim, dim);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, -1i, 1i, 0.0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

ComplexMatrix hadamard() {
    ComplexMatrix m(2, 2);
    m << 1.0, 1.0, 1.0, -1.0;
    return m / std::sqrt(2.0);
}

ComplexMatrix cnot() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
}

ComplexMatrix swap() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 3) = 1.0;
    return m;
}

ComplexMatrix controlled_phase(double angle) {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4);
    m(3, 3) = std::polar(1.0, angle);
    return m;
}

ComplexMatrix z_rotation(double angle) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, angle / 2);
    m(1, 1) = std::polar(1.0, -angle / 2);
    return m;
}

ComplexMatrix spin(Axis axis) {
    switch (axis) {
        case Axis::kX:
            return pauli_x() * 0.5;
        case Axis::kY:
            return pauli_y() * 0.5;
        case Axis::kZ:
            return pauli_z() * 0.5;
    }
    throw std::invalid_argument("unknown axis");
}

ComplexMatrix spin(Axis axis, QubitIndex q, int n) {
    return embed(spin(axis), {q}, n);
}

}  // namespace qcs::gates

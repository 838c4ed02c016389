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

#ifndef QCS_CORE_GATES_H
#define QCS_CORE_GATES_H

#include "qcs/core/types.h"

namespace qcs::gates {

enum class Axis { kX, kY, kZ };

ComplexMatrix identity(int n);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
/// Control is the first (most significant) qubit.
ComplexMatrix cnot();
ComplexMatrix swap();
/// diag(1, 1, 1, e^{i angle}); controlled_phase(-pi/2) is I_{|11>}^{-pi/2}.
ComplexMatrix controlled_phase(double angle);
/// e^{i angle I_z} with |0> the spin-up (+1/2) state.
ComplexMatrix z_rotation(double angle);

/// Spin-1/2 angular momentum component (Pauli / 2).
ComplexMatrix spin(Axis axis);
/// Spin component on one qubit of an n-qubit register.
ComplexMatrix spin(Axis axis, QubitIndex q, int n);

}  // namespace qcs::gates

#endif

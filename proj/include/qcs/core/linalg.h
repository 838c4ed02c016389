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

#ifndef QCS_CORE_LINALG_H
#define QCS_CORE_LINALG_H

#include <span>

#include "qcs/core/types.h"

namespace qcs {

/// Lifts `gate` to an n-qubit operator acting on `targets` (first target is the
/// most significant bit of the gate's own index) and identity elsewhere.
ComplexMatrix embed(const ComplexMatrix &gate, std::span<const QubitIndex> targets, int n);
ComplexMatrix embed(const ComplexMatrix &gate, std::initializer_list<QubitIndex> targets, int n);

/// rho -> U rho U^dagger.
DeviationDensityMatrix apply_unitary(const DeviationDensityMatrix &state, const ComplexMatrix &unitary);
Ket apply_unitary(const Ket &state, const ComplexMatrix &unitary);

/// Applies a local gate to a ket without building the full register operator.
Ket apply_local(const Ket &state, const ComplexMatrix &gate, std::span<const QubitIndex> targets);

/// Marginal distribution over `targets`, normalized by the trace. Throws on a
/// vanishing trace.
BitDistribution measure_distribution(const DeviationDensityMatrix &state, std::span<const QubitIndex> targets);
BitDistribution measure_distribution(const Ket &state, std::span<const QubitIndex> targets);

/// exp(-i H t) for Hermitian H, via a self-adjoint eigendecomposition.
ComplexMatrix matrix_exp(const ComplexMatrix &hamiltonian, double t);

double max_unitarity_defect(const ComplexMatrix &u);
bool is_unitary(const ComplexMatrix &u, double tolerance = tol::kGate);
bool is_hermitian(const ComplexMatrix &h, double tolerance = tol::kGate);

/// max |a - e^{i theta} b| where theta aligns the first nonzero entry of b.
double max_deviation_up_to_global_phase(const ComplexMatrix &a, const ComplexMatrix &b);

/// Frobenius norm of a - b.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Bit of basis index `bits` for qubit `q` in an n-qubit register.
inline int qubit_bit(std::size_t bits, QubitIndex q, int n) {
    return static_cast<int>((bits >> (n - 1 - q.value)) & 1U);
}

}  // namespace qcs

#endif

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

#ifndef QCS_CORE_TYPES_H
#define QCS_CORE_TYPES_H

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qcs {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 8;

/// Tolerance ladder used across the project.
namespace tol {
inline constexpr double kGate = 1e-12;
inline constexpr double kExp = 1e-10;
inline constexpr double kCompiled = 1e-6;
}  // namespace tol

/// Zero-based qubit position inside a register.
///
/// Position 0 is the most significant bit of a basis label, so in the
/// three-spin system C1 = 0, C2 = 1, H3 = 2 and |010> has C2 set. Use
/// `QubitIndex::label(k)` to build an index from a one-based spin label.
struct QubitIndex {
    int value = 0;

    constexpr QubitIndex() = default;
    constexpr explicit QubitIndex(int v) : value(v) {
    }
    static constexpr QubitIndex label(int one_based) {
        return QubitIndex(one_based - 1);
    }
    constexpr int one_based() const {
        return value + 1;
    }
    constexpr bool operator==(const QubitIndex &) const = default;
    constexpr auto operator<=>(const QubitIndex &) const = default;
};

/// Number of qubits n with 2^n == dim. Throws when dim is not a power of two
/// or exceeds the register cap.
int qubits_for_dim(std::ptrdiff_t dim);

/// Normalized pure state.
class Ket {
   public:
    explicit Ket(ComplexVector amplitudes);
    /// |bits> over n qubits, `bits` read with qubit 0 as the most significant bit.
    static Ket basis(int n, std::size_t bits);

    const ComplexVector &amplitudes() const {
        return amplitudes_;
    }
    std::ptrdiff_t dim() const {
        return amplitudes_.size();
    }
    int num_qubits() const {
        return qubits_for_dim(dim());
    }

   private:
    ComplexVector amplitudes_;
};

/// Hermitian matrix in the high-temperature NMR deviation convention. The trace
/// is unconstrained; ordinary density matrices are a special case.
class DeviationDensityMatrix {
   public:
    explicit DeviationDensityMatrix(ComplexMatrix entries);
    static DeviationDensityMatrix from_ket(const Ket &ket);

    const ComplexMatrix &matrix() const {
        return entries_;
    }
    std::ptrdiff_t dim() const {
        return entries_.rows();
    }
    int num_qubits() const {
        return qubits_for_dim(dim());
    }
    Complex trace() const {
        return entries_.trace();
    }
    /// Tr(rho^2).
    double purity() const;

   private:
    ComplexMatrix entries_;
};

/// Marginal computational-basis distribution over a list of qubits. Index j
/// reads the first listed qubit as the most significant bit.
struct BitDistribution {
    int width = 0;
    std::vector<double> probabilities;

    std::string label(std::size_t j) const;
    double at(const std::string &bits) const;
    double total() const;
    /// Argmax; ties go to the smaller index.
    std::size_t peak() const;
};

}  // namespace qcs

#endif

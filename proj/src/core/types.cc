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

#include "qcs/core/types.h"

#include <numeric>

namespace qcs {

int qubits_for_dim(std::ptrdiff_t dim) {
    if (dim <= 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((std::ptrdiff_t{1} << n) < dim) {
        ++n;
    }
    if (n > kMaxQubits) {
        throw std::invalid_argument("register of " + std::to_string(n) + " qubits exceeds the dense cap");
    }
    return n;
}

Ket::Ket(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    qubits_for_dim(amplitudes_.size());
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > tol::kGate * 10) {
        throw std::invalid_argument("ket is not normalized");
    }
}

Ket Ket::basis(int n, std::size_t bits) {
    std::size_t dim = std::size_t{1} << n;
    if (bits >= dim) {
        throw std::invalid_argument("basis label out of range");
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(bits)) = 1.0;
    return Ket(std::move(v));
}

DeviationDensityMatrix::DeviationDensityMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("density matrix must be square");
    }
    qubits_for_dim(entries_.rows());
    double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > tol::kGate * scale) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    // Remove rounding-level anti-Hermitian noise so downstream traces are real.
    entries_ = (entries_ + entries_.adjoint()) * 0.5;
}

DeviationDensityMatrix DeviationDensityMatrix::from_ket(const Ket &ket) {
    const auto &a = ket.amplitudes();
    return DeviationDensityMatrix(a * a.adjoint());
}

double DeviationDensityMatrix::purity() const {
    return (entries_ * entries_).trace().real();
}

std::string BitDistribution::label(std::size_t j) const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if ((j >> (width - 1 - b)) & 1U) {
            s[static_cast<std::size_t>(b)] = '1';
        }
    }
    return s;
}

double BitDistribution::at(const std::string &bits) const {
    if (static_cast<int>(bits.size()) != width) {
        throw std::invalid_argument("bitstring width mismatch");
    }
    std::size_t j = std::stoul(bits, nullptr, 2);
    return probabilities.at(j);
}

double BitDistribution::total() const {
    return std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
}

std::size_t BitDistribution::peak() const {
    std::size_t best = 0;
    for (std::size_t j = 1; j < probabilities.size(); ++j) {
        if (probabilities[j] > probabilities[best] + 1e-12) {
            best = j;
        }
    }
    return best;
}

}  // namespace qcs

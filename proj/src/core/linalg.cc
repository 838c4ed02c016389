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

#include "qcs/core/linalg.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qcs {

namespace {

void check_targets(std::span<const QubitIndex> targets, int n) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i].value < 0 || targets[i].value >= n) {
            throw std::invalid_argument("qubit index " + std::to_string(targets[i].value) + " out of range");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (targets[k] == targets[i]) {
                throw std::invalid_argument("duplicate target qubit");
            }
        }
    }
}

// Index of the local gate basis state picked out of a register basis state.
std::size_t local_index(std::size_t bits, std::span<const QubitIndex> targets, int n) {
    std::size_t out = 0;
    for (auto t : targets) {
        out = (out << 1) | static_cast<std::size_t>(qubit_bit(bits, t, n));
    }
    return out;
}

std::size_t target_mask(std::span<const QubitIndex> targets, int n) {
    std::size_t mask = 0;
    for (auto t : targets) {
        mask |= std::size_t{1} << (n - 1 - t.value);
    }
    return mask;
}

// Writes the local pattern `local` into the target bits of `base`.
std::size_t scatter(std::size_t base, std::size_t local, std::span<const QubitIndex> targets, int n) {
    std::size_t k = targets.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t bit = (local >> (k - 1 - i)) & 1U;
        base |= bit << (n - 1 - targets[i].value);
    }
    return base;
}

}  // namespace

ComplexMatrix embed(const ComplexMatrix &gate, std::span<const QubitIndex> targets, int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("register size out of range");
    }
    check_targets(targets, n);
    auto local_dim = static_cast<Eigen::Index>(std::size_t{1} << targets.size());
    if (gate.rows() != local_dim || gate.cols() != local_dim) {
        throw std::invalid_argument("gate dimension does not match target count");
    }
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
    std::size_t mask = target_mask(targets, n);
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::size_t col = 0; col < static_cast<std::size_t>(dim); ++col) {
        std::size_t rest = col & ~mask;
        auto lc = static_cast<Eigen::Index>(local_index(col, targets, n));
        for (Eigen::Index lr = 0; lr < local_dim; ++lr) {
            std::size_t row = scatter(rest, static_cast<std::size_t>(lr), targets, n);
            out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = gate(lr, lc);
        }
    }
    return out;
}

ComplexMatrix embed(const ComplexMatrix &gate, std::initializer_list<QubitIndex> targets, int n) {
    return embed(gate, std::span<const QubitIndex>(targets.begin(), targets.size()), n);
}

DeviationDensityMatrix apply_unitary(const DeviationDensityMatrix &state, const ComplexMatrix &unitary) {
    if (unitary.rows() != state.dim() || unitary.cols() != state.dim()) {
        throw std::invalid_argument("unitary dimension does not match state");
    }
    return DeviationDensityMatrix(unitary * state.matrix() * unitary.adjoint());
}

Ket apply_unitary(const Ket &state, const ComplexMatrix &unitary) {
    if (unitary.rows() != state.dim() || unitary.cols() != state.dim()) {
        throw std::invalid_argument("unitary dimension does not match state");
    }
    ComplexVector v = unitary * state.amplitudes();
    v.normalize();
    return Ket(std::move(v));
}

Ket apply_local(const Ket &state, const ComplexMatrix &gate, std::span<const QubitIndex> targets) {
    int n = state.num_qubits();
    check_targets(targets, n);
    auto local_dim = static_cast<Eigen::Index>(std::size_t{1} << targets.size());
    if (gate.rows() != local_dim || gate.cols() != local_dim) {
        throw std::invalid_argument("gate dimension does not match target count");
    }
    std::size_t mask = target_mask(targets, n);
    const ComplexVector &in = state.amplitudes();
    ComplexVector out = in;
    ComplexVector block(local_dim);
    std::vector<std::size_t> rows(static_cast<std::size_t>(local_dim));
    for (std::size_t base = 0; base < static_cast<std::size_t>(in.size()); ++base) {
        if (base & mask) {
            continue;
        }
        for (Eigen::Index l = 0; l < local_dim; ++l) {
            rows[static_cast<std::size_t>(l)] = scatter(base, static_cast<std::size_t>(l), targets, n);
            block(l) = in(static_cast<Eigen::Index>(rows[static_cast<std::size_t>(l)]));
        }
        ComplexVector mixed = gate * block;
        for (Eigen::Index l = 0; l < local_dim; ++l) {
            out(static_cast<Eigen::Index>(rows[static_cast<std::size_t>(l)])) = mixed(l);
        }
    }
    out.normalize();
    return Ket(std::move(out));
}

namespace {

BitDistribution marginal(const Eigen::VectorXd &populations, std::span<const QubitIndex> targets, int n) {
    if (targets.empty()) {
        throw std::invalid_argument("measurement needs at least one target");
    }
    check_targets(targets, n);
    double total = populations.sum();
    if (std::abs(total) < 1e-14) {
        throw std::invalid_argument("state has zero trace");
    }
    BitDistribution d;
    d.width = static_cast<int>(targets.size());
    d.probabilities.assign(std::size_t{1} << targets.size(), 0.0);
    for (Eigen::Index b = 0; b < populations.size(); ++b) {
        d.probabilities[local_index(static_cast<std::size_t>(b), targets, n)] += populations(b) / total;
    }
    return d;
}

}  // namespace

BitDistribution measure_distribution(const DeviationDensityMatrix &state, std::span<const QubitIndex> targets) {
    return marginal(state.matrix().diagonal().real(), targets, state.num_qubits());
}

BitDistribution measure_distribution(const Ket &state, std::span<const QubitIndex> targets) {
    return marginal(state.amplitudes().cwiseAbs2(), targets, state.num_qubits());
}

ComplexMatrix matrix_exp(const ComplexMatrix &hamiltonian, double t) {
    if (hamiltonian.rows() != hamiltonian.cols()) {
        throw std::invalid_argument("hamiltonian must be square");
    }
    double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
    if (!is_hermitian(hamiltonian, 1e-10 * scale)) {
        throw std::invalid_argument("hamiltonian is not Hermitian");
    }
    if (t == 0.0) {
        return ComplexMatrix::Identity(hamiltonian.rows(), hamiltonian.cols());
    }
    if (hamiltonian.isDiagonal(0.0)) {
        ComplexVector phases(hamiltonian.rows());
        for (Eigen::Index k = 0; k < phases.size(); ++k) {
            phases(k) = std::polar(1.0, -hamiltonian(k, k).real() * t);
        }
        return phases.asDiagonal();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hamiltonian);
    const auto &vals = solver.eigenvalues();
    ComplexVector phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        phases(k) = std::polar(1.0, -vals(k) * t);
    }
    const auto &vecs = solver.eigenvectors();
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

double max_unitarity_defect(const ComplexMatrix &u) {
    if (u.rows() != u.cols()) {
        return INFINITY;
    }
    return (u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix &u, double tolerance) {
    return max_unitarity_defect(u) <= tolerance;
}

bool is_hermitian(const ComplexMatrix &h, double tolerance) {
    return h.rows() == h.cols() && (h - h.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

double max_deviation_up_to_global_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("shape mismatch");
    }
    Complex phase = 1.0;
    bool aligned = false;
    for (Eigen::Index r = 0; r < b.rows() && !aligned; ++r) {
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            if (std::abs(b(r, c)) > 1e-9 && std::abs(a(r, c)) > 1e-9) {
                phase = a(r, c) / b(r, c);
                phase /= std::abs(phase);
                aligned = true;
                break;
            }
        }
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).norm();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

}  // namespace qcs

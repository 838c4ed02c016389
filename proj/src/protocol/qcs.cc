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

#include "qcs/protocol/qcs.h"

#include <array>
#include <cmath>
#include <numbers>

#include "qcs/core/gates.h"
#include "qcs/core/linalg.h"

namespace qcs {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t register_size(int m) {
    return std::size_t{1} << m;
}

}  // namespace

ComplexMatrix hadamard_all(int m) {
    ProtocolParams{m, 1.0, 0.0}.validate();
    GateNetwork net(m + 1);
    for (int q = 0; q < m; ++q) {
        net.add({GateKind::kHadamard, {QubitIndex(q)}});
    }
    return net.unitary();
}

ComplexMatrix tqh_phase(int layer, const ProtocolParams &params) {
    params.validate();
    if (layer < 0 || layer >= params.m) {
        throw std::invalid_argument("layer " + std::to_string(layer) + " outside [0, m)");
    }
    Gate g{GateKind::kTqhPhase, {QubitIndex(layer), ancilla_of(params)}, std::ldexp(kPi * params.omega_delta(), layer)};
    return g.matrix();
}

GateNetwork t_operation_network(const ProtocolParams &params) {
    params.validate();
    GateNetwork net(params.num_qubits());
    QubitIndex anc = ancilla_of(params);
    for (int l = 0; l < params.m; ++l) {
        QubitIndex q(l);
        net.add({GateKind::kCnot, {q, anc}});
        net.add({GateKind::kTqhPhase, {q, anc}, std::ldexp(kPi * params.omega_delta(), l)});
        net.add({GateKind::kCnot, {q, anc}});
    }
    return net;
}

ComplexMatrix t_operation(const ProtocolParams &params) {
    return t_operation_network(params).unitary();
}

Ket apply_t_operation(const Ket &state, const ProtocolParams &params) {
    params.validate();
    if (state.num_qubits() != params.num_qubits()) {
        throw std::invalid_argument("state register does not match m + 1 qubits");
    }
    std::array<QubitIndex, 1> anc{ancilla_of(params)};
    if (measure_distribution(state, anc).probabilities[1] > 1e-12) {
        throw std::invalid_argument("ancilla is not in |0>");
    }
    return t_operation_network(params).apply(state);
}

GateNetwork inverse_qft_reduced_network(int m, int n, int offset) {
    if (m < 1 || offset < 0 || offset + m > n) {
        throw std::invalid_argument("inverse QFT does not fit the register");
    }
    // Inverse of the swap-free textbook QFT circuit.
    GateNetwork net(n);
    for (int i = m - 1; i >= 0; --i) {
        for (int j = m - 1; j > i; --j) {
            double angle = -kPi / static_cast<double>(std::size_t{1} << (j - i));
            net.add({GateKind::kControlledPhase, {QubitIndex(offset + i), QubitIndex(offset + j)}, angle});
        }
        net.add({GateKind::kHadamard, {QubitIndex(offset + i)}});
    }
    return net;
}

ComplexMatrix inverse_qft_reduced(int m) {
    return inverse_qft_reduced_network(m, m).unitary();
}

ComplexMatrix reduced_inverse_qft_table() {
    using namespace std::complex_literals;
    ComplexMatrix f(4, 4);
    f << 1.0, 1.0, 1.0, 1.0,
         1.0, -1.0, -1i, 1i,
         1.0, 1.0, -1.0, -1.0,
         1.0, -1.0, 1i, -1i;
    return f / 2.0;
}

ComplexMatrix controlled_phase_gate() {
    return gates::controlled_phase(-kPi / 2);
}

GateNetwork qcs_network(const ProtocolParams &params) {
    params.validate();
    GateNetwork net(params.num_qubits());
    for (int q = 0; q < params.m; ++q) {
        net.add({GateKind::kHadamard, {QubitIndex(q)}});
    }
    net.append(t_operation_network(params));
    net.append(inverse_qft_reduced_network(params.m, params.num_qubits()));
    return net;
}

QcsOutcome run_qcs(const ProtocolParams &params) {
    params.validate();
    Ket out = qcs_network(params).apply(Ket::basis(params.num_qubits(), 0));
    std::vector<QubitIndex> working;
    for (int q = 0; q < params.m; ++q) {
        working.emplace_back(q);
    }
    QcsOutcome outcome;
    outcome.distribution = measure_distribution(out, working);
    outcome.j_peak = outcome.distribution.peak();
    outcome.delta_estimate = estimate_delta(outcome.j_peak, params);
    double scaled = std::ldexp(params.omega_delta(), params.m);
    outcome.exact = std::abs(scaled - std::round(scaled)) <= 1e-9;
    return outcome;
}

std::vector<double> outcome_distribution_closed_form(const ProtocolParams &params) {
    params.validate();
    std::size_t size = register_size(params.m);
    double wd = params.omega_delta();
    std::vector<double> probs(size);
    for (std::size_t j = 0; j < size; ++j) {
        Complex c = 0.0;
        double offset = wd - static_cast<double>(j) / static_cast<double>(size);
        for (std::size_t k = 0; k < size; ++k) {
            c += std::polar(1.0, 2 * kPi * static_cast<double>(k) * offset);
        }
        c /= static_cast<double>(size);
        probs[j] = std::norm(c);
    }
    return probs;
}

std::vector<double> outcome_distribution_geometric(const ProtocolParams &params) {
    params.validate();
    std::size_t size = register_size(params.m);
    auto n = static_cast<double>(size);
    std::vector<double> probs(size);
    for (std::size_t j = 0; j < size; ++j) {
        // |sum_k e^{2 pi i k x}|^2 / N^2 = sin^2(pi N x) / (N^2 sin^2(pi x)).
        double x = params.omega_delta() - static_cast<double>(j) / n;
        double den = std::sin(kPi * x);
        if (std::abs(den) < 1e-12) {
            probs[j] = 1.0;
            continue;
        }
        double num = std::sin(kPi * n * x);
        probs[j] = (num * num) / (n * n * den * den);
    }
    return probs;
}

double estimate_delta(std::size_t j, const ProtocolParams &params) {
    params.validate();
    std::size_t size = register_size(params.m);
    if (j >= size) {
        throw std::invalid_argument("j outside [0, 2^m)");
    }
    return static_cast<double>(j) / (static_cast<double>(size) * params.omega);
}

std::size_t nearest_j(const ProtocolParams &params) {
    auto size = static_cast<long long>(register_size(params.m));
    auto j = static_cast<long long>(std::llround(std::ldexp(params.omega_delta(), params.m)));
    return static_cast<std::size_t>(((j % size) + size) % size);
}

}  // namespace qcs

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

#ifndef QCS_PROTOCOL_PARAMS_H
#define QCS_PROTOCOL_PARAMS_H

namespace qcs {

/// Inputs of one clock-synchronization run: m working qubits, tick angular
/// frequency omega and the true offset delta (omega * delta is dimensionless).
struct ProtocolParams {
    int m = 2;
    double omega = 1.0;
    double delta = 0.0;

    static ProtocolParams from_omega_delta(int m, double omega_delta, double omega = 1.0);
    /// Phase index k in [0, 2^m): omega * delta = k / 2^m, phi_k = -2 pi k / 2^m.
    static ProtocolParams from_phase_index(int m, int k, double omega = 1.0);

    double omega_delta() const {
        return omega * delta;
    }
    /// z-rotation angle written onto the first working qubit, -2 pi omega delta.
    /// For m = 2 this is phi_k = -k pi / 2 at omega delta = k / 4.
    double phi() const;
    int num_qubits() const {
        return m + 1;
    }
    /// Throws std::invalid_argument on m < 1, m > 7 or omega <= 0.
    void validate() const;
};

}  // namespace qcs

#endif

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

#ifndef QCS_NMR_SPIN_SYSTEM_H
#define QCS_NMR_SPIN_SYSTEM_H

#include <string>
#include <vector>

#include "qcs/core/types.h"

namespace qcs::nmr {

/// Weakly coupled spin-1/2 system in the rotating frame.
///
/// `offsets_hz` are the chemical-shift frequencies left over after the
/// transmitter frame is removed; `couplings_hz` is the symmetric scalar
/// coupling matrix; `gammas` are gyromagnetic ratios relative to 13C.
struct SpinSystem {
    std::vector<double> offsets_hz;
    Eigen::MatrixXd couplings_hz;
    std::vector<double> gammas;

    /// Labelled 13C trichloroethylene: C1, C2, H3.
    static SpinSystem trichloroethylene();

    /// Key-value config; keys default to the trichloroethylene values.
    static SpinSystem parse_config(const std::string &text);
    static SpinSystem load_config(const std::string &path);
    std::string to_config() const;

    int size() const {
        return static_cast<int>(offsets_hz.size());
    }
    double coupling(QubitIndex a, QubitIndex b) const {
        return couplings_hz(a.value, b.value);
    }
    void validate() const;
};

inline constexpr double kTceJ12 = 103.1;
inline constexpr double kTceJ23 = 203.8;
inline constexpr double kTceJ13 = 9.16;
inline constexpr double kTceShiftC1MinusC2 = 904.4;
/// gamma(1H) / gamma(13C); a physical constant rather than a measured value.
inline constexpr double kGammaRatioHOverC = 3.9777;

/// Sum of -2 pi nu_j I_z^j + sum_{j<l} 2 pi J_jl I_z^j I_z^l (hbar = 1).
ComplexMatrix build_hamiltonian(const SpinSystem &sys);

/// [tau]_{jl} = exp(-i 2 pi J_jl tau I_z^j I_z^l), identity on the other spins.
ComplexMatrix coupled_evolution(QubitIndex j, QubitIndex l, double tau, const SpinSystem &sys);

}  // namespace qcs::nmr

#endif

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

#ifndef QCS_TOMOGRAPHY_TOMOGRAPHY_H
#define QCS_TOMOGRAPHY_TOMOGRAPHY_H

#include <functional>
#include <string>
#include <vector>

#include "qcs/core/types.h"
#include "qcs/nmr/spin_system.h"

namespace qcs::tomo {

/// Per-spin readout before acquisition: nothing, [pi/2]_x or [pi/2]_y.
enum class Readout { kNone, kX, kY };

struct ReadoutSetting {
    std::vector<Readout> per_spin;
    std::string label() const;
};

/// Readout experiments and the populations each one exposes. Every setting
/// reports the computational-basis diagonal of R rho R^dagger, i.e. the
/// expectation values of all products of {1, I_z} after the readout pulses.
struct TomographyPlan {
    int spins = 0;
    std::vector<ReadoutSetting> settings;

    /// All 3^n combinations of {none, x, y}.
    static TomographyPlan product_readouts(int spins);

    /// Register-wide readout rotation for one setting.
    ComplexMatrix rotation(const ReadoutSetting &setting) const;
    /// Product operators (before readout) measured by a setting, e.g. "zyI".
    std::vector<std::string> exposed_observables(const ReadoutSetting &setting) const;
    /// Rank of the linear map from Hermitian matrices to all recorded populations.
    int rank() const;
    bool informationally_complete() const {
        return rank() == (1 << (2 * spins));
    }
};

/// Evaluates one readout experiment, returning 2^n populations.
using ReadoutOracle = std::function<Eigen::VectorXd(const ReadoutSetting &)>;

/// Exact readouts of a known deviation matrix using ideal rotations.
ReadoutOracle simulated_readout(const DeviationDensityMatrix &state, const TomographyPlan &plan);

/// Readouts where each rotation is the compiled pulse program of the
/// three-spin system, run under the full Hamiltonian.
ReadoutOracle compiled_readout(const DeviationDensityMatrix &state, const nmr::SpinSystem &sys);

/// Least-squares Hermitian matrix consistent with every readout. Throws when
/// the plan is rank deficient.
DeviationDensityMatrix reconstruct(const ReadoutOracle &oracle, const TomographyPlan &plan);

/// Largest element magnitude and largest magnitude among all other elements.
struct DominanceReport {
    std::size_t row = 0;
    std::size_t col = 0;
    double dominant = 0.0;
    double max_spurious = 0.0;
};
DominanceReport dominance(const DeviationDensityMatrix &state);

}  // namespace qcs::tomo

#endif

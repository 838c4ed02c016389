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

#ifndef QCS_NMR_PULSE_PROGRAM_H
#define QCS_NMR_PULSE_PROGRAM_H

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcs/core/types.h"

namespace qcs::nmr {

enum class PulseAxis { kX, kY, kMinusX, kMinusY };

std::string to_string(PulseAxis axis);
PulseAxis parse_axis(const std::string &text);

/// Instantaneous rotation exp(+i angle * sum_t I_axis^t) on the named spins.
struct RfPulse {
    std::vector<QubitIndex> targets;
    PulseAxis axis = PulseAxis::kX;
    double angle = 0.0;
    bool operator==(const RfPulse &) const = default;
};

using CouplingPair = std::pair<QubitIndex, QubitIndex>;

/// Free evolution under the full spin Hamiltonian. `active_couplings` records
/// which J terms the surrounding refocusing block keeps; an empty list marks a
/// chemical-shift-only block.
struct Delay {
    double duration = 0.0;
    std::vector<CouplingPair> active_couplings;
    bool operator==(const Delay &) const = default;
};

/// Exact frame rotation exp(+i angle I_z) on one spin.
struct ZRotation {
    QubitIndex target;
    double angle = 0.0;
    bool operator==(const ZRotation &) const = default;
};

/// Pulsed field gradient along z.
struct Gradient {
    bool operator==(const Gradient &) const = default;
};

using PulseStep = std::variant<RfPulse, Delay, ZRotation, Gradient>;

class PulseProgram {
   public:
    PulseProgram() = default;

    PulseProgram &add(PulseStep step);
    PulseProgram &append(const PulseProgram &other);

    const std::vector<PulseStep> &steps() const {
        return steps_;
    }
    bool empty() const {
        return steps_.empty();
    }
    std::size_t size() const {
        return steps_.size();
    }

    /// Sum of all delay durations (pulses are instantaneous).
    double total_delay() const;
    /// Total delay time annotated with the given coupling.
    double delay_for_coupling(QubitIndex a, QubitIndex b) const;
    bool has_gradient() const;

    /// One step per line:
    ///   PULSE <t1,t2,...> <x|y|-x|-y> <angle_rad>
    ///   DELAY <seconds> COUPLINGS=<j,l;...>
    ///   ZROT <target> <angle_rad>
    ///   GRAD
    /// Spin labels are one-based. Numbers use round-trip precision.
    std::string to_text() const;
    /// Inverse of to_text. Blank lines and '#' comments are skipped.
    static PulseProgram parse(const std::string &text);

    bool operator==(const PulseProgram &) const = default;

   private:
    std::vector<PulseStep> steps_;
};

}  // namespace qcs::nmr

#endif

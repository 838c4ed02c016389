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

#include "qcs/tomography/tomography.h"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "qcs/core/gates.h"
#include "qcs/core/linalg.h"
#include "qcs/nmr/compiler.h"
#include "qcs/nmr/executor.h"

namespace qcs::tomo {

namespace {

using namespace std::complex_literals;

// Real basis of Hermitian d x d matrices: diagonal units, then symmetric and
// antisymmetric off-diagonal pairs.
std::vector<ComplexMatrix> hermitian_basis(Eigen::Index d) {
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(d * d));
    for (Eigen::Index a = 0; a < d; ++a) {
        ComplexMatrix m = ComplexMatrix::Zero(d, d);
        m(a, a) = 1.0;
        basis.push_back(std::move(m));
    }
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = a + 1; b < d; ++b) {
            ComplexMatrix re = ComplexMatrix::Zero(d, d);
            re(a, b) = 1.0;
            re(b, a) = 1.0;
            basis.push_back(std::move(re));
            ComplexMatrix im = ComplexMatrix::Zero(d, d);
            im(a, b) = 1i;
            im(b, a) = -1i;
            basis.push_back(std::move(im));
        }
    }
    return basis;
}

Eigen::MatrixXd design_matrix(const TomographyPlan &plan, const std::vector<ComplexMatrix> &basis) {
    auto d = Eigen::Index{1} << plan.spins;
    Eigen::MatrixXd a(static_cast<Eigen::Index>(plan.settings.size()) * d, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t s = 0; s < plan.settings.size(); ++s) {
        ComplexMatrix r = plan.rotation(plan.settings[s]);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            ComplexMatrix rotated = r * basis[k] * r.adjoint();
            a.block(static_cast<Eigen::Index>(s) * d, static_cast<Eigen::Index>(k), d, 1) =
                rotated.diagonal().real();
        }
    }
    return a;
}

void check_setting(const ReadoutSetting &setting, int spins) {
    if (static_cast<int>(setting.per_spin.size()) != spins) {
        throw std::invalid_argument("readout setting does not match the spin count");
    }
}

}  // namespace

std::string ReadoutSetting::label() const {
    std::string s;
    for (auto r : per_spin) {
        s.push_back(r == Readout::kNone ? '-' : (r == Readout::kX ? 'x' : 'y'));
    }
    return s;
}

TomographyPlan TomographyPlan::product_readouts(int spins) {
    if (spins < 1 || spins > kMaxQubits) {
        throw std::invalid_argument("spin count out of range");
    }
    TomographyPlan plan;
    plan.spins = spins;
    std::size_t count = 1;
    for (int i = 0; i < spins; ++i) {
        count *= 3;
    }
    for (std::size_t code = 0; code < count; ++code) {
        ReadoutSetting s;
        std::size_t rest = code;
        for (int i = 0; i < spins; ++i) {
            s.per_spin.push_back(static_cast<Readout>(rest % 3));
            rest /= 3;
        }
        plan.settings.push_back(std::move(s));
    }
    return plan;
}

ComplexMatrix TomographyPlan::rotation(const ReadoutSetting &setting) const {
    check_setting(setting, spins);
    ComplexMatrix u = gates::identity(spins);
    for (int q = 0; q < spins; ++q) {
        Readout r = setting.per_spin[static_cast<std::size_t>(q)];
        if (r == Readout::kNone) {
            continue;
        }
        nmr::RfPulse p{{QubitIndex(q)}, r == Readout::kX ? nmr::PulseAxis::kX : nmr::PulseAxis::kY,
                       std::numbers::pi / 2};
        u = nmr::rf_rotation(p, spins) * u;
    }
    return u;
}

std::vector<std::string> TomographyPlan::exposed_observables(const ReadoutSetting &setting) const {
    check_setting(setting, spins);
    std::vector<std::string> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << spins); ++mask) {
        std::string label;
        for (int q = 0; q < spins; ++q) {
            if (((mask >> (spins - 1 - q)) & 1U) == 0) {
                label.push_back('I');
                continue;
            }
            // A pi/2 readout about x brings I_y onto z; about y it brings I_x.
            switch (setting.per_spin[static_cast<std::size_t>(q)]) {
                case Readout::kNone:
                    label.push_back('z');
                    break;
                case Readout::kX:
                    label.push_back('y');
                    break;
                case Readout::kY:
                    label.push_back('x');
                    break;
            }
        }
        out.push_back(std::move(label));
    }
    return out;
}

int TomographyPlan::rank() const {
    auto basis = hermitian_basis(Eigen::Index{1} << spins);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design_matrix(*this, basis));
    qr.setThreshold(1e-10);
    return static_cast<int>(qr.rank());
}

ReadoutOracle simulated_readout(const DeviationDensityMatrix &state, const TomographyPlan &plan) {
    if (state.num_qubits() != plan.spins) {
        throw std::invalid_argument("state does not match the tomography plan");
    }
    return [state, plan](const ReadoutSetting &setting) -> Eigen::VectorXd {
        ComplexMatrix r = plan.rotation(setting);
        return (r * state.matrix() * r.adjoint()).diagonal().real();
    };
}

ReadoutOracle compiled_readout(const DeviationDensityMatrix &state, const nmr::SpinSystem &sys) {
    if (state.num_qubits() != 3 || sys.size() != 3) {
        throw std::invalid_argument("compiled readouts are defined for the three-spin system");
    }
    return [state, sys](const ReadoutSetting &setting) -> Eigen::VectorXd {
        check_setting(setting, 3);
        static constexpr nmr::NmrGate kX[3] = {nmr::NmrGate::kReadoutX1, nmr::NmrGate::kReadoutX2,
                                               nmr::NmrGate::kReadoutX3};
        static constexpr nmr::NmrGate kY[3] = {nmr::NmrGate::kReadoutY1, nmr::NmrGate::kReadoutY2,
                                               nmr::NmrGate::kReadoutY3};
        nmr::PulseProgram program;
        for (int q = 0; q < 3; ++q) {
            Readout r = setting.per_spin[static_cast<std::size_t>(q)];
            if (r == Readout::kX) {
                program.append(nmr::compile_gate(kX[q], sys));
            } else if (r == Readout::kY) {
                program.append(nmr::compile_gate(kY[q], sys));
            }
        }
        return nmr::execute_pulse_program(program, state, sys).matrix().diagonal().real();
    };
}

DeviationDensityMatrix reconstruct(const ReadoutOracle &oracle, const TomographyPlan &plan) {
    auto d = Eigen::Index{1} << plan.spins;
    auto basis = hermitian_basis(d);
    Eigen::MatrixXd a = design_matrix(plan, basis);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    qr.setThreshold(1e-10);
    if (qr.rank() != static_cast<Eigen::Index>(basis.size())) {
        throw std::invalid_argument("tomography plan is rank deficient (rank " + std::to_string(qr.rank()) + " of " +
                                    std::to_string(basis.size()) + ")");
    }
    Eigen::VectorXd b(a.rows());
    for (std::size_t s = 0; s < plan.settings.size(); ++s) {
        Eigen::VectorXd populations = oracle(plan.settings[s]);
        if (populations.size() != d) {
            throw std::invalid_argument("readout oracle returned the wrong number of populations");
        }
        b.segment(static_cast<Eigen::Index>(s) * d, d) = populations;
    }
    Eigen::VectorXd x = qr.solve(b);
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        rho += x(static_cast<Eigen::Index>(k)) * basis[k];
    }
    return DeviationDensityMatrix(std::move(rho));
}

DominanceReport dominance(const DeviationDensityMatrix &state) {
    DominanceReport rep;
    const auto &m = state.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (std::abs(m(r, c)) > rep.dominant) {
                rep.dominant = std::abs(m(r, c));
                rep.row = static_cast<std::size_t>(r);
                rep.col = static_cast<std::size_t>(c);
            }
        }
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (static_cast<std::size_t>(r) == rep.row && static_cast<std::size_t>(c) == rep.col) {
                continue;
            }
            rep.max_spurious = std::max(rep.max_spurious, std::abs(m(r, c)));
        }
    }
    return rep;
}

}  // namespace qcs::tomo

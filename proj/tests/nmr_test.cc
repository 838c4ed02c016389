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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qcs/core/linalg.h"
#include "qcs/nmr/compiler.h"
#include "qcs/nmr/executor.h"
#include "qcs/nmr/gradient.h"
#include "qcs/nmr/prep.h"
#include "qcs/nmr/pulse_program.h"
#include "qcs/nmr/spin_system.h"
#include "qcs/protocol/qcs.h"

namespace qcs::nmr {
namespace {

using oracle::Mat;
constexpr double kPi = std::numbers::pi;

using oracle::rot;

Mat coupling_oracle(int j, int l, double j_hz, double tau) {
    return oracle::coupling_evolution(j, l, j_hz, tau);
}

Mat t_phase_oracle(double phi) {
    return oracle::t_phase_compounds(phi);
}

Mat gate_oracle(NmrGate g) {
    using oracle::had;
    using oracle::id2;
    using oracle::kron_all;
    switch (g) {
        case NmrGate::kH12:
            return kron_all({had(), had(), id2()});
        case NmrGate::kH2:
            return kron_all({id2(), had(), id2()});
        case NmrGate::kH1:
            return kron_all({had(), id2(), id2()});
        case NmrGate::kPhase11:
            return oracle::phase11();
        case NmrGate::kReadoutX1:
            return oracle::on(rot(oracle::sx(), kPi / 2), 0, 3);
        case NmrGate::kReadoutY1:
            return oracle::on(rot(oracle::sy(), kPi / 2), 0, 3);
        case NmrGate::kReadoutX2:
            return oracle::on(rot(oracle::sx(), kPi / 2), 1, 3);
        case NmrGate::kReadoutY2:
            return oracle::on(rot(oracle::sy(), kPi / 2), 1, 3);
        case NmrGate::kReadoutX3:
            return oracle::on(rot(oracle::sx(), kPi / 2), 2, 3);
        case NmrGate::kReadoutY3:
            return oracle::on(rot(oracle::sy(), kPi / 2), 2, 3);
    }
    return {};
}

SpinSystem shifted_system() {
    auto sys = SpinSystem::trichloroethylene();
    sys.offsets_hz = {1204.4, 300.0, -750.0};
    return sys;
}

TEST(SpinSystem, Defaults) {
    auto sys = SpinSystem::trichloroethylene();
    EXPECT_DOUBLE_EQ(sys.offsets_hz[0] - sys.offsets_hz[1], 904.4);
    EXPECT_DOUBLE_EQ(sys.coupling(QubitIndex(0), QubitIndex(1)), 103.1);
    EXPECT_DOUBLE_EQ(sys.coupling(QubitIndex(2), QubitIndex(1)), 203.8);
    EXPECT_DOUBLE_EQ(sys.coupling(QubitIndex(0), QubitIndex(2)), 9.16);
    EXPECT_DOUBLE_EQ(sys.gammas[2] / sys.gammas[0], 3.9777);
}

TEST(SpinSystem, HamiltonianDiagonalOracle) {
    for (const auto &sys : {SpinSystem::trichloroethylene(), shifted_system()}) {
        ComplexMatrix h = build_hamiltonian(sys);
        auto want = oracle::hamiltonian_diagonal(sys.offsets_hz, sys.couplings_hz);
        for (int s = 0; s < 8; ++s) {
            EXPECT_NEAR(std::abs(h(s, s) - want[static_cast<std::size_t>(s)]), 0.0, 1e-9);
        }
        EXPECT_LE((h - ComplexMatrix(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0);
    }
    auto sys = SpinSystem::trichloroethylene();
    double e000 = -kPi * (sys.offsets_hz[1] + 904.4 + sys.offsets_hz[1] + sys.offsets_hz[2]) +
                  kPi / 2 * (103.1 + 203.8 + 9.16);
    EXPECT_NEAR(build_hamiltonian(sys)(0, 0).real(), e000, 1e-9);
}

TEST(SpinSystem, ConfigRoundTripAndErrors) {
    auto sys = SpinSystem::parse_config("# comment\nJ13_hz = 10.5\nnu2_hz = 12\n\n");
    EXPECT_DOUBLE_EQ(sys.couplings_hz(0, 2), 10.5);
    EXPECT_DOUBLE_EQ(sys.couplings_hz(2, 0), 10.5);
    EXPECT_DOUBLE_EQ(sys.offsets_hz[0], 916.4);
    auto back = SpinSystem::parse_config(sys.to_config());
    EXPECT_EQ(back.offsets_hz, sys.offsets_hz);
    EXPECT_EQ(back.couplings_hz, sys.couplings_hz);
    EXPECT_EQ(back.gammas, sys.gammas);
    EXPECT_THROW(SpinSystem::parse_config("J99_hz = 1"), std::invalid_argument);
    EXPECT_THROW(SpinSystem::parse_config("J12_hz = abc"), std::invalid_argument);
    EXPECT_THROW(SpinSystem::parse_config("J12_hz"), std::invalid_argument);
    EXPECT_THROW(SpinSystem::load_config("/nonexistent/spins.cfg"), std::exception);
}

TEST(SpinSystem, CoupledEvolutionClosedForm) {
    auto sys = SpinSystem::trichloroethylene();
    ComplexMatrix u = coupled_evolution(QubitIndex(0), QubitIndex(1), 1 / (2 * kTceJ12), sys);
    EXPECT_LE((u - coupling_oracle(0, 1, kTceJ12, 1 / (2 * kTceJ12))).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(std::arg(u(0, 0)), -kPi / 4, 1e-12);
    EXPECT_NEAR(std::arg(u(2, 2)), kPi / 4, 1e-12);
    EXPECT_THROW(coupled_evolution(QubitIndex(1), QubitIndex(1), 0.1, sys), std::invalid_argument);
}

TEST(PulseProgram, TextRoundTripProperty) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        PulseProgram p;
        for (int s = 0; s < 12; ++s) {
            switch (rng() % 4) {
                case 0:
                    p.add(RfPulse{{QubitIndex(static_cast<int>(rng() % 3))}, static_cast<PulseAxis>(rng() % 4), u(rng)});
                    break;
                case 1:
                    p.add(Delay{std::abs(u(rng)) * 1e-3, {{QubitIndex(0), QubitIndex(2)}, {QubitIndex(1), QubitIndex(2)}}});
                    break;
                case 2:
                    p.add(ZRotation{QubitIndex(static_cast<int>(rng() % 3)), u(rng)});
                    break;
                default:
                    p.add(Gradient{});
            }
        }
        EXPECT_EQ(PulseProgram::parse(p.to_text()), p);
    }
}

TEST(PulseProgram, ParseErrors) {
    EXPECT_THROW(PulseProgram::parse("PULSE 1 z 1.0"), std::invalid_argument);
    EXPECT_THROW(PulseProgram::parse("PULSE 0 x 1.0"), std::invalid_argument);
    EXPECT_THROW(PulseProgram::parse("PULSE 1 x"), std::invalid_argument);
    EXPECT_THROW(PulseProgram::parse("DELAY -1"), std::invalid_argument);
    EXPECT_THROW(PulseProgram::parse("DELAY 1e-3 COUPLINGS=1,1"), std::invalid_argument);
    EXPECT_THROW(PulseProgram::parse("ZROT 2 nan"), std::invalid_argument);
    EXPECT_THROW(PulseProgram::parse("WAIT 1"), std::invalid_argument);
    auto ok = PulseProgram::parse("# header\n\nGRAD\nPULSE 1,2 -y 1.5\n");
    EXPECT_EQ(ok.size(), 2u);
    EXPECT_TRUE(ok.has_gradient());
}

TEST(Gradient, CoherenceOrderAndIdempotence) {
    auto sys = SpinSystem::trichloroethylene();
    auto model = GradientModel::for_system(sys);
    EXPECT_DOUBLE_EQ(coherence_order(0b000, 0b100, model), 1.0);
    EXPECT_DOUBLE_EQ(coherence_order(0b100, 0b010, model), 0.0);
    EXPECT_NEAR(coherence_order(0b000, 0b001, model), 3.9777, 1e-12);
    std::mt19937_64 rng(37);
    DeviationDensityMatrix rho(oracle::random_hermitian(8, rng));
    auto once = gradient_pulse(rho, model);
    auto twice = gradient_pulse(once, model);
    EXPECT_LE((once.matrix() - twice.matrix()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(once.matrix()(0, 4), Complex(0.0));
    EXPECT_EQ(once.matrix()(4, 2), rho.matrix()(4, 2));
    EXPECT_EQ(once.matrix()(3, 3), rho.matrix()(3, 3));
}

TEST(Executor, RfRotationSign) {
    RfPulse p{{QubitIndex(1)}, PulseAxis::kY, 0.7};
    EXPECT_LE((rf_rotation(p, 3) - oracle::on(rot(oracle::sy(), 0.7), 1, 3)).cwiseAbs().maxCoeff(), 1e-15);
    RfPulse q{{QubitIndex(0), QubitIndex(2)}, PulseAxis::kMinusX, 1.1};
    Mat want = oracle::kron_all({rot(-oracle::sx(), 1.1), oracle::id2(), rot(-oracle::sx(), 1.1)});
    EXPECT_LE((rf_rotation(q, 3) - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Executor, NoiseOffMatchesIdealGate) {
    auto sys = SpinSystem::trichloroethylene();
    auto rho = DeviationDensityMatrix::from_ket(Ket::basis(3, 0));
    auto out = execute_pulse_program(compile_gate(NmrGate::kH12, sys), rho, sys);
    Mat u = gate_oracle(NmrGate::kH12);
    EXPECT_LE((out.matrix() - u * rho.matrix() * u.adjoint()).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_THROW(program_propagator(PulseProgram().add(Gradient{}), sys), std::invalid_argument);
}

TEST(Executor, NoiseLimits) {
    auto sys = SpinSystem::trichloroethylene();
    auto prog = compile_gate(NmrGate::kPhase11, sys);
    auto rho = DeviationDensityMatrix::from_ket(apply_unitary(Ket::basis(3, 0), gate_oracle(NmrGate::kH12)));
    auto clean = execute_pulse_program(prog, rho, sys);
    auto zero_noise = execute_pulse_program(prog, rho, sys, NoiseParams::uniform_dephasing(0.0, 3));
    EXPECT_LE((clean.matrix() - zero_noise.matrix()).cwiseAbs().maxCoeff(), 1e-12);

    auto heavy = execute_pulse_program(prog, rho, sys, NoiseParams::uniform_dephasing(1e4, 3));
    ComplexMatrix off = heavy.matrix();
    off.diagonal().setZero();
    EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_LE((heavy.matrix().diagonal() - rho.matrix().diagonal()).cwiseAbs().maxCoeff(), 1e-6);

    auto a = NoiseParams::uniform_dephasing(0.0, 3, 5);
    a.pulse_angle_jitter = 0.05;
    auto r1 = execute_pulse_program(prog, rho, sys, a);
    auto r2 = execute_pulse_program(prog, rho, sys, a);
    EXPECT_EQ(r1.matrix(), r2.matrix());
    a.seed = 6;
    EXPECT_GT((execute_pulse_program(prog, rho, sys, a).matrix() - r1.matrix()).cwiseAbs().maxCoeff(), 1e-6);

    NoiseParams bad = NoiseParams::uniform_dephasing(-1.0, 3);
    EXPECT_THROW(bad.validate(3), std::invalid_argument);
    EXPECT_THROW(NoiseParams::uniform_dephasing(1.0, 2).validate(3), std::invalid_argument);
}

TEST(Executor, SystematicAngleErrorScalesPulses) {
    auto sys = SpinSystem::trichloroethylene();
    PulseProgram p;
    p.add(RfPulse{{QubitIndex(0)}, PulseAxis::kX, kPi / 2});
    auto n = NoiseParams::uniform_dephasing(0.0, 3);
    n.pulse_angle_error = 0.1;
    auto rho = DeviationDensityMatrix::from_ket(Ket::basis(3, 0));
    auto out = execute_pulse_program(p, rho, sys, n);
    Mat u = oracle::on(rot(oracle::sx(), 1.1 * kPi / 2), 0, 3);
    EXPECT_LE((out.matrix() - u * rho.matrix() * u.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Compiler, RefocusedCouplings) {
    const std::vector<std::pair<int, int>> pairs = {{0, 2}, {1, 2}, {0, 1}};
    for (const auto &sys : {SpinSystem::trichloroethylene(), shifted_system()}) {
        for (auto [j, l] : pairs) {
            double jhz = sys.couplings_hz(j, l);
            for (double tau : {1 / (2 * jhz), 1 / (4 * jhz), 0.0137, 9 / (4 * kTceJ23), 0.1}) {
                auto prog = refocused_delay_schedule(QubitIndex(j), QubitIndex(l), tau, sys);
                EXPECT_NEAR(prog.delay_for_coupling(QubitIndex(j), QubitIndex(l)), tau, 1e-15);
                EXPECT_NEAR(prog.total_delay(), tau, 1e-15);
                double dev = oracle::phase_aligned_distance(program_propagator(prog, sys),
                                                            coupling_oracle(j, l, jhz, tau));
                EXPECT_LE(dev, 1e-6) << j << l << " tau=" << tau;
            }
        }
    }
    EXPECT_TRUE(refocused_delay_schedule(QubitIndex(0), QubitIndex(1), 0.0, SpinSystem::trichloroethylene()).empty());
}

TEST(Compiler, CompositeZRotation) {
    auto sys = shifted_system();
    for (int q = 0; q < 3; ++q) {
        for (double a : {kPi / 2, kPi, -0.3, 2.0}) {
            Mat want = oracle::on(rot(oracle::sz(), a), q, 3);
            for (auto route : {ZRotationRoute::kCompositePulse, ZRotationRoute::kChemicalShift}) {
                auto prog = composite_z_rotation(QubitIndex(q), a, sys, route);
                EXPECT_LE(oracle::phase_aligned_distance(program_propagator(prog, sys), want), 1e-6);
            }
        }
    }
    // R_z^2(pi): spin-2 up picks up e^{i pi/2}, spin-2 down e^{-i pi/2}.
    ComplexMatrix rz = program_propagator(composite_z_rotation(QubitIndex(1), kPi, sys), sys);
    EXPECT_NEAR(std::abs(rz(0b000, 0b000) / rz(0b010, 0b010) - Complex(-1.0)), 0.0, 1e-9);
    auto tce = SpinSystem::trichloroethylene();
    EXPECT_THROW(composite_z_rotation(QubitIndex(1), 1.0, tce, ZRotationRoute::kChemicalShift), std::invalid_argument);
    EXPECT_TRUE(composite_z_rotation(QubitIndex(1), 0.0, tce).empty());
}

TEST(Compiler, AllGatesMatchOracles) {
    for (const auto &sys : {SpinSystem::trichloroethylene(), shifted_system()}) {
        for (NmrGate g : all_nmr_gates()) {
            ComplexMatrix u = program_propagator(compile_gate(g, sys), sys);
            EXPECT_LE(oracle::phase_aligned_distance(u, gate_oracle(g)), 1e-6) << to_string(g);
            EXPECT_LE(oracle::phase_aligned_distance(ideal_gate(g), gate_oracle(g)), 1e-12) << to_string(g);
            EXPECT_EQ(parse_nmr_gate(to_string(g)), g);
        }
    }
    EXPECT_THROW(parse_nmr_gate("toffoli"), std::invalid_argument);
}

TEST(Compiler, PrintedYReadoutFails) {
    auto sys = SpinSystem::trichloroethylene();
    ComplexMatrix u = program_propagator(compile_readout_y2_as_printed(sys), sys);
    EXPECT_GT(oracle::phase_aligned_distance(u, gate_oracle(NmrGate::kReadoutY2)), 0.5);
}

TEST(Compiler, Phase11Structure) {
    auto prog = compile_gate(NmrGate::kPhase11, SpinSystem::trichloroethylene());
    EXPECT_NEAR(prog.delay_for_coupling(QubitIndex(0), QubitIndex(1)), 1 / (4 * kTceJ12), 1e-15);
    ASSERT_GE(prog.size(), 4u);
    const auto &steps = prog.steps();
    auto tail = [&](std::size_t back) { return std::get<RfPulse>(steps[steps.size() - back]); };
    EXPECT_EQ(tail(3), (RfPulse{{QubitIndex(0), QubitIndex(1)}, PulseAxis::kY, -kPi / 2}));
    EXPECT_EQ(tail(2), (RfPulse{{QubitIndex(0), QubitIndex(1)}, PulseAxis::kX, kPi / 4}));
    EXPECT_EQ(tail(1), (RfPulse{{QubitIndex(0), QubitIndex(1)}, PulseAxis::kY, kPi / 2}));
}

TEST(Compiler, CouplingDurations) {
    EXPECT_NEAR(coupling_duration(-kPi / 2, kTceJ13), 1 / (2 * kTceJ13), 1e-15);
    EXPECT_NEAR(coupling_duration(-kPi / 2, kTceJ13), 0.0546, 1e-4);
    EXPECT_NEAR(coupling_duration(0.0, kTceJ13), 0.0, 0.0);
    EXPECT_NEAR(coupling_duration(kPi / 2, kTceJ13), 2 / kTceJ13 - 1 / (2 * kTceJ13), 1e-15);
    EXPECT_THROW(coupling_duration(1.0, 0.0), std::invalid_argument);
}

TEST(Compiler, TPhaseCompounds) {
    auto sys = SpinSystem::trichloroethylene();
    for (double phi : {0.0, -kPi / 2, -kPi, -1.5 * kPi, 0.4, kPi}) {
        ComplexMatrix u = program_propagator(compile_t_phases(phi, sys), sys);
        EXPECT_LE(oracle::phase_aligned_distance(u, t_phase_oracle(phi)), 1e-6) << phi;
        EXPECT_LE(oracle::phase_aligned_distance(ideal_t_phases(phi), t_phase_oracle(phi)), 1e-12);
    }
    auto prog = compile_t_phases(-kPi / 2, sys);
    EXPECT_NEAR(prog.delay_for_coupling(QubitIndex(0), QubitIndex(2)), 1 / (2 * kTceJ13), 1e-15);
    EXPECT_NEAR(prog.delay_for_coupling(QubitIndex(1), QubitIndex(2)), 1 / kTceJ23, 1e-15);
    EXPECT_THROW(compile_t_phases(ProtocolParams::from_phase_index(3, 1), sys), std::invalid_argument);
}

TEST(Compiler, TPhasesMatchProtocolT) {
    // The compounds equal the protocol-layer T on the ancilla-|0> block, up to phase.
    for (int k = 0; k < 4; ++k) {
        auto p = ProtocolParams::from_phase_index(2, k);
        ComplexMatrix t = t_operation(p);
        ComplexMatrix c = ideal_t_phases(p.phi());
        ComplexMatrix tb(4, 4), cb(4, 4);
        for (int r = 0; r < 4; ++r) {
            for (int s = 0; s < 4; ++s) {
                tb(r, s) = t(2 * r, 2 * s);
                cb(r, s) = c(2 * r, 2 * s);
            }
        }
        EXPECT_LE(max_deviation_up_to_global_phase(tb, cb), 1e-12);
    }
}

TEST(Compiler, FullNetwork) {
    auto sys = SpinSystem::trichloroethylene();
    EXPECT_EQ(qcs_network_outline().size(), 5u);
    for (int k = 0; k < 4; ++k) {
        auto p = ProtocolParams::from_phase_index(2, k);
        ComplexMatrix u = program_propagator(compile_qcs_network(p, sys), sys);
        EXPECT_LE(max_deviation_up_to_global_phase(u, ideal_compiled_network(p)), 1e-6);
        EXPECT_LE(oracle::phase_aligned_distance(u, oracle::qcs_network(p.phi())), 1e-6);
        Ket out = apply_unitary(Ket::basis(3, 0), u);
        EXPECT_NEAR(std::norm(out.amplitudes()(2 * k)), 1.0, 1e-9);
    }
}

TEST(Pipeline, NoiseFreeOutputsMatchIdealLayer) {
    auto sys = SpinSystem::trichloroethylene();
    auto model = GradientModel::for_system(sys);
    auto prep = prepare_effective_pure_state(sys, model);
    for (int k = 0; k < 4; ++k) {
        auto p = ProtocolParams::from_phase_index(2, k);
        auto out = execute_pulse_program(compile_qcs_network(p, sys), prep.state, sys, std::nullopt, model);
        Ket ideal = qcs_network(p).apply(Ket::basis(3, 0));
        ComplexMatrix want = ideal.amplitudes() * ideal.amplitudes().adjoint();
        EXPECT_LE((to_effective_pure(out).matrix() - want).norm(), 1e-5) << k;
        EXPECT_NEAR(std::norm(ideal.amplitudes()(2 * k)), 1.0, 1e-12);
    }
}

TEST(Prep, TargetForms) {
    Mat rho0 = oracle::effective_pure_rho0();
    EXPECT_LE((effective_pure_target().matrix() - rho0).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((effective_pure_target_projector_form().matrix() - rho0).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(rho0(0, 0).real(), 1.75, 1e-15);
    for (int s = 1; s < 8; ++s) {
        EXPECT_NEAR(rho0(s, s).real(), -0.25, 1e-15);
    }
}

TEST(Prep, Alpha) {
    auto sys = SpinSystem::trichloroethylene();
    EXPECT_NEAR(prep_alpha(sys), std::acos(-std::sqrt(6.0) / 3.9777), 1e-15);
    EXPECT_NEAR(prep_alpha(sys), 2.234, 1e-3);
    sys.gammas[2] = 2.0;
    EXPECT_THROW(prep_alpha(sys), std::invalid_argument);
}

TEST(Prep, EquilibriumState) {
    auto sys = SpinSystem::trichloroethylene();
    Mat want = oracle::on(oracle::sz(), 0, 3) + oracle::on(oracle::sz(), 1, 3) + 3.9777 * oracle::on(oracle::sz(), 2, 3);
    EXPECT_LE((equilibrium_state(sys).matrix() - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Prep, CorrectedSequenceReachesTarget) {
    for (const auto &sys : {SpinSystem::trichloroethylene(), shifted_system()}) {
        auto model = GradientModel::for_system(sys);
        auto r = prepare_effective_pure_state(sys, model, PrepVariant::kCorrected);
        EXPECT_LE(r.residual, 1e-5);
        Mat s = r.state.matrix();
        double scale = (s * oracle::effective_pure_rho0()).trace().real() /
                       (oracle::effective_pure_rho0() * oracle::effective_pure_rho0()).trace().real();
        EXPECT_NEAR(scale, r.scale, 1e-12);
        EXPECT_LE((s / scale - oracle::effective_pure_rho0()).norm(), 1e-5);
    }
}

TEST(Prep, PrintedSequenceLeavesZeroQuantum) {
    auto sys = SpinSystem::trichloroethylene();
    auto r = prepare_effective_pure_state(sys, GradientModel::for_system(sys), PrepVariant::kAsPrinted);
    EXPECT_GT(r.residual, 0.1);
    Mat s = r.state.matrix();
    // The leftover lives on the C1-C2 flip-flop elements.
    EXPECT_GT(std::abs(s(0b100, 0b010)), 0.1);
    auto corrected = effective_pure_prep_sequence(sys, PrepVariant::kCorrected);
    auto printed = effective_pure_prep_sequence(sys, PrepVariant::kAsPrinted);
    EXPECT_EQ(corrected.size(), printed.size() + 3);
    EXPECT_FALSE(prep_correction_diff().empty());
}

TEST(Prep, EffectivePureTransformsLikeKet) {
    std::mt19937_64 rng(41);
    Mat h = oracle::random_hermitian(8, rng);
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Mat u = es.eigenvectors() * es.eigenvalues().unaryExpr([](double x) { return std::polar(1.0, x); }).asDiagonal() *
            es.eigenvectors().adjoint();
    DeviationDensityMatrix rho(-1.2247 * (u * oracle::effective_pure_rho0() * u.adjoint()));
    auto pure = to_effective_pure(rho);
    ComplexVector psi = u.col(0);
    EXPECT_LE((pure.matrix() - psi * psi.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(pure.purity(), 1.0, 1e-12);
}

}  // namespace
}  // namespace qcs::nmr

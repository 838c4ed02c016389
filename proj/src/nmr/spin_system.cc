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

#include "qcs/nmr/spin_system.h"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "qcs/core/gates.h"
#include "qcs/core/linalg.h"

namespace qcs::nmr {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SpinSystem SpinSystem::trichloroethylene() {
    SpinSystem sys;
    sys.offsets_hz = {kTceShiftC1MinusC2, 0.0, 0.0};
    sys.couplings_hz = Eigen::MatrixXd::Zero(3, 3);
    sys.couplings_hz(0, 1) = sys.couplings_hz(1, 0) = kTceJ12;
    sys.couplings_hz(1, 2) = sys.couplings_hz(2, 1) = kTceJ23;
    sys.couplings_hz(0, 2) = sys.couplings_hz(2, 0) = kTceJ13;
    sys.gammas = {1.0, 1.0, kGammaRatioHOverC};
    return sys;
}

SpinSystem SpinSystem::parse_config(const std::string &text) {
    std::map<std::string, double> values{
        {"nu1_minus_nu2_hz", kTceShiftC1MinusC2},
        {"nu2_hz", 0.0},
        {"nu3_hz", 0.0},
        {"J12_hz", kTceJ12},
        {"J23_hz", kTceJ23},
        {"J13_hz", kTceJ13},
        {"gamma_ratio_H_over_C", kGammaRatioHOverC},
    };
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("spin system config line " + std::to_string(line_no) + ": expected key=value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        auto it = values.find(key);
        if (it == values.end()) {
            throw std::invalid_argument("spin system config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        std::size_t used = 0;
        try {
            it->second = std::stod(value, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != value.size()) {
            throw std::invalid_argument("spin system config line " + std::to_string(line_no) + ": bad number '" + value + "'");
        }
    }
    SpinSystem sys = trichloroethylene();
    sys.offsets_hz = {values["nu2_hz"] + values["nu1_minus_nu2_hz"], values["nu2_hz"], values["nu3_hz"]};
    sys.couplings_hz(0, 1) = sys.couplings_hz(1, 0) = values["J12_hz"];
    sys.couplings_hz(1, 2) = sys.couplings_hz(2, 1) = values["J23_hz"];
    sys.couplings_hz(0, 2) = sys.couplings_hz(2, 0) = values["J13_hz"];
    sys.gammas[2] = values["gamma_ratio_H_over_C"];
    sys.validate();
    return sys;
}

SpinSystem SpinSystem::load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open spin system config '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string SpinSystem::to_config() const {
    if (size() != 3) {
        throw std::invalid_argument("config format describes three-spin systems only");
    }
    std::ostringstream out;
    out.precision(17);
    out << "nu1_minus_nu2_hz=" << offsets_hz[0] - offsets_hz[1] << '\n';
    out << "nu2_hz=" << offsets_hz[1] << '\n';
    out << "nu3_hz=" << offsets_hz[2] << '\n';
    out << "J12_hz=" << couplings_hz(0, 1) << '\n';
    out << "J23_hz=" << couplings_hz(1, 2) << '\n';
    out << "J13_hz=" << couplings_hz(0, 2) << '\n';
    out << "gamma_ratio_H_over_C=" << gammas[2] / gammas[0] << '\n';
    return out.str();
}

void SpinSystem::validate() const {
    int n = size();
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("spin count out of range");
    }
    if (couplings_hz.rows() != n || couplings_hz.cols() != n || static_cast<int>(gammas.size()) != n) {
        throw std::invalid_argument("spin system arrays disagree on spin count");
    }
    for (int a = 0; a < n; ++a) {
        if (couplings_hz(a, a) != 0.0) {
            throw std::invalid_argument("coupling matrix must have a zero diagonal");
        }
        for (int b = 0; b < a; ++b) {
            if (couplings_hz(a, b) != couplings_hz(b, a)) {
                throw std::invalid_argument("coupling matrix must be symmetric");
            }
        }
        if (!(gammas[static_cast<std::size_t>(a)] > 0.0)) {
            throw std::invalid_argument("gyromagnetic ratios must be positive");
        }
    }
}

ComplexMatrix build_hamiltonian(const SpinSystem &sys) {
    sys.validate();
    int n = sys.size();
    // Diagonal in the computational basis: I_z eigenvalue is +1/2 for bit 0.
    auto dim = Eigen::Index{1} << n;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        double e = 0.0;
        for (int j = 0; j < n; ++j) {
            double mj = qubit_bit(static_cast<std::size_t>(b), QubitIndex(j), n) ? -0.5 : 0.5;
            e -= kTwoPi * sys.offsets_hz[static_cast<std::size_t>(j)] * mj;
            for (int l = j + 1; l < n; ++l) {
                double ml = qubit_bit(static_cast<std::size_t>(b), QubitIndex(l), n) ? -0.5 : 0.5;
                e += kTwoPi * sys.couplings_hz(j, l) * mj * ml;
            }
        }
        h(b, b) = e;
    }
    return h;
}

ComplexMatrix coupled_evolution(QubitIndex j, QubitIndex l, double tau, const SpinSystem &sys) {
    sys.validate();
    int n = sys.size();
    if (j == l) {
        throw std::invalid_argument("coupled evolution needs two distinct spins");
    }
    if (j.value < 0 || j.value >= n || l.value < 0 || l.value >= n) {
        throw std::invalid_argument("spin index out of range");
    }
    ComplexMatrix zz = gates::spin(gates::Axis::kZ, j, n) * gates::spin(gates::Axis::kZ, l, n);
    return matrix_exp(kTwoPi * sys.coupling(j, l) * zz, tau);
}

}  // namespace qcs::nmr

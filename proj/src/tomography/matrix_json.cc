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

#include "qcs/tomography/matrix_json.h"

namespace qcs::tomo {

nlohmann::json matrix_to_json(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("matrix JSON holds square matrices only");
    }
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json rr = nlohmann::json::array();
        nlohmann::json ri = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im")) {
        throw std::invalid_argument("matrix JSON needs dim, re and im");
    }
    auto d = j.at("dim").get<Eigen::Index>();
    const auto &re = j.at("re");
    const auto &im = j.at("im");
    if (d <= 0 || !re.is_array() || !im.is_array() || static_cast<Eigen::Index>(re.size()) != d ||
        static_cast<Eigen::Index>(im.size()) != d) {
        throw std::invalid_argument("matrix JSON rows do not match dim");
    }
    ComplexMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        const auto &rr = re[static_cast<std::size_t>(r)];
        const auto &ri = im[static_cast<std::size_t>(r)];
        if (static_cast<Eigen::Index>(rr.size()) != d || static_cast<Eigen::Index>(ri.size()) != d) {
            throw std::invalid_argument("matrix JSON columns do not match dim");
        }
        for (Eigen::Index c = 0; c < d; ++c) {
            m(r, c) = Complex(rr[static_cast<std::size_t>(c)].get<double>(), ri[static_cast<std::size_t>(c)].get<double>());
        }
    }
    return m;
}

}  // namespace qcs::tomo

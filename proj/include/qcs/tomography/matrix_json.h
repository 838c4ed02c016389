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

#ifndef QCS_TOMOGRAPHY_MATRIX_JSON_H
#define QCS_TOMOGRAPHY_MATRIX_JSON_H

#include "json.hpp"
#include "qcs/core/types.h"

namespace qcs::tomo {

/// {"dim": d, "re": [[...]], "im": [[...]]}, rows first; d is the matrix dimension.
nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j);

inline nlohmann::json matrix_to_json(const DeviationDensityMatrix &rho) {
    return matrix_to_json(rho.matrix());
}

}  // namespace qcs::tomo

#endif

// Copyright 2026 The qudit-mub Authors
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

#ifndef QUDIT_MUB_JSON_IO_H
#define QUDIT_MUB_JSON_IO_H

#include <string>

#include "json.hpp"
#include "qudit_mub/fidelity_mc.h"
#include "qudit_mub/gate_classify.h"
#include "qudit_mub/mub_partition.h"

namespace qmub {

using Json = nlohmann::ordered_json;

/// {"d", "perm", "phase"}.
Json to_json(const MonomialOperator &op);
MonomialOperator monomial_from_json(const Json &j);

/// Rows of [re, im] pairs.
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j);

/// [[a, b], ...], one pair per factor.
Json to_json(const PauliLabel &label, const std::vector<int> &dims);
PauliLabel label_from_json(const Json &j, const std::vector<int> &dims);

/// {"dims", "elements": [{"label", "perm", "phase"}, ...]}.
Json to_json(const OperatorBasis &basis);
OperatorBasis basis_from_json(const Json &j);

Json to_json(const BasisAudit &audit);
Json to_json(const MubCollection &c, const MubReport &report);
Json to_json(const KnightResult &k, const std::optional<DiagonalReport> &diag);
Json to_json(const KnightCount &count);
Json to_json(const ClassificationReport &r, const OperatorBasis &basis);
Json to_json(const FidelityEstimate &e);

/// {"dims", "matrix"}.
Json to_json(const UnitaryGate &u);
UnitaryGate gate_from_json(const Json &j);
/// {"dims", "kraus": [matrix, ...]}.
Json to_json(const QuantumChannel &ch);
QuantumChannel channel_from_json(const Json &j);

/// Indented key: value rendering of a report.
std::string render_text(const Json &j);

}  // namespace qmub

#endif

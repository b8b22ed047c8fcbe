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

#include "qudit_mub/json_io.h"

#include <sstream>

namespace qmub {

static std::invalid_argument bad(const std::string &what) {
    return std::invalid_argument("json: " + what);
}

static const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

static std::vector<int> int_list(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_array()) {
        throw bad(std::string("'") + key + "' must be an array");
    }
    std::vector<int> out;
    for (const auto &x : v) {
        if (!x.is_number_integer()) {
            throw bad(std::string("'") + key + "' must hold integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

Json to_json(const MonomialOperator &op) {
    return Json{{"d", op.dim()}, {"perm", op.perm()}, {"phase", op.phase()}};
}

MonomialOperator monomial_from_json(const Json &j) {
    const Json &d = field(j, "d");
    if (!d.is_number_integer()) {
        throw bad("'d' must be an integer");
    }
    return MonomialOperator(d.get<int>(), int_list(j, "perm"), int_list(j, "phase"));
}

Json matrix_to_json(const Matrix &m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        throw bad("matrix must be a non-empty array of rows");
    }
    Eigen::Index n = (Eigen::Index)j.size();
    Eigen::Index cols = (Eigen::Index)j[0].size();
    Matrix m(n, cols);
    for (Eigen::Index r = 0; r < n; r++) {
        const Json &row = j[(size_t)r];
        if (!row.is_array() || (Eigen::Index)row.size() != cols) {
            throw bad("matrix rows must be arrays of equal length");
        }
        for (Eigen::Index c = 0; c < cols; c++) {
            const Json &e = row[(size_t)c];
            if (e.is_number()) {
                m(r, c) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(r, c) = {e[0].get<double>(), e[1].get<double>()};
            } else {
                throw bad("matrix entries must be numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

Json to_json(const PauliLabel &label, const std::vector<int> &) {
    Json out = Json::array();
    for (const auto &f : label.factors) {
        out.push_back({f.a, f.b});
    }
    return out;
}

PauliLabel label_from_json(const Json &j, const std::vector<int> &dims) {
    if (!j.is_array() || j.size() != dims.size()) {
        throw bad("label must hold one [a, b] pair per factor");
    }
    std::vector<FactorLabel> f;
    for (size_t k = 0; k < dims.size(); k++) {
        const Json &p = j[k];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            throw bad("label entries must be [a, b] integer pairs");
        }
        f.push_back({p[0].get<int>(), p[1].get<int>(), dims[k]});
    }
    return PauliLabel(std::move(f));
}

Json to_json(const OperatorBasis &basis) {
    Json elements = Json::array();
    for (const auto &e : basis.elements()) {
        elements.push_back(
            {{"label", to_json(e.label, basis.dims())}, {"perm", e.op.perm()}, {"phase", e.op.phase()}});
    }
    return Json{{"dims", basis.dims()}, {"elements", elements}};
}

OperatorBasis basis_from_json(const Json &j) {
    std::vector<int> dims = int_list(j, "dims");
    int D = 1;
    for (int d : dims) {
        D *= d;
    }
    const Json &elems = field(j, "elements");
    if (!elems.is_array()) {
        throw bad("'elements' must be an array");
    }
    std::vector<BasisElement> out;
    for (const auto &e : elems) {
        out.push_back({label_from_json(field(e, "label"), dims), MonomialOperator(D, int_list(e, "perm"), int_list(e, "phase"))});
    }
    return OperatorBasis(dims, std::move(out));
}

Json to_json(const BasisAudit &a) {
    return Json{
        {"expected_size", a.expected_size},
        {"size", a.size},
        {"size_ok", a.size_ok},
        {"orthonormal", a.orthonormal},
        {"traceless", a.traceless},
        {"dnary_spectra", a.dnary_spectra},
        {"labels_consistent", a.labels_consistent},
        {"failures", a.failures},
        {"pass", a.pass()},
    };
}

Json to_json(const MubCollection &c, const MubReport &report) {
    Json families = Json::array();
    for (const auto &f : c.families) {
        Json members = Json::array();
        for (size_t k = 0; k < f.basis_indices.size(); k++) {
            members.push_back({{"power", k + 1}, {"index", f.basis_indices[k]}, {"scalar", f.scalars[k].k()}});
        }
        families.push_back({
            {"generator", to_json(f.generator, {c.d})},
            {"closure_phase", f.closure_phase.k()},
            {"members", members},
            {"eigenbasis", matrix_to_json(f.eigenbasis.vectors)},
        });
    }
    return Json{
        {"d", c.d},
        {"families", families},
        {"report",
         {{"max_cross_dev", report.max_cross_dev}, {"max_gram_dev", report.max_gram_dev}, {"pass", report.pass}}},
    };
}

Json to_json(const KnightResult &k, const std::optional<DiagonalReport> &diag) {
    Json violations = Json::array();
    for (const auto &v : k.violations) {
        violations.push_back({
            {"kind", v.kind == KnightViolation::Kind::kColumnCollision ? "column" : "diagonal"},
            {"row_a", v.row_a},
            {"row_b", v.row_b},
            {"shared", v.shared},
            {"message", v.describe()},
        });
    }
    Json cols = Json::array();
    for (const auto &r : k.placement.ones) {
        cols.push_back(r);
    }
    Json out{{"d", k.d}, {"b", k.b}, {"columns", cols}, {"valid", k.valid()}, {"violations", violations}};
    if (diag) {
        out["diagonal"] = {
            {"c", diag->c.c},
            {"unit_diagonals", diag->unit_diagonals},
            {"vanishing", diag->vanishing},
            {"pass", diag->pass},
        };
    }
    return out;
}

Json to_json(const KnightCount &count) {
    Json matrices = Json::array();
    for (const auto &m : count.matrices) {
        matrices.push_back(*m.as_permutation());
    }
    return Json{
        {"d", count.d},
        {"count", count.count()},
        {"expected", count.expected},
        {"count_matches", count.count_matches},
        {"set_matches", count.set_matches},
        {"matrices", matrices},
    };
}

Json to_json(const ClassificationReport &r, const OperatorBasis &basis) {
    Json matches = Json::array();
    for (const auto &m : r.matches) {
        Json e{
            {"source", m.source},
            {"source_label", to_json(basis.element(m.source).label, basis.dims())},
            {"match_fidelity", m.match_fidelity},
        };
        if (m.target) {
            e["target"] = *m.target;
            e["target_label"] = to_json(basis.element(*m.target).label, basis.dims());
            e["phase"] = {m.phase.real(), m.phase.imag()};
            e["phase_exp"] = m.snapped ? Json(m.snapped->k()) : Json(nullptr);
        } else {
            e["target"] = nullptr;
        }
        matches.push_back(e);
    }
    Json out{{"dims", basis.dims()}, {"characterizable", r.characterizable}, {"matches", matches}};
    if (r.cycles) {
        Json cycles = Json::array();
        for (const auto &c : r.cycles->cycles) {
            Json steps = Json::array();
            for (const auto &s : c) {
                steps.push_back(s.index);
            }
            cycles.push_back(steps);
        }
        Json hist = Json::object();
        for (auto [deg, cnt] : cycle_degree_histogram(r)) {
            hist[std::to_string(deg)] = cnt;
        }
        out["cycles"] = cycles;
        out["degrees"] = r.cycles->degrees;
        out["degree_histogram"] = hist;
    } else {
        out["cycles"] = nullptr;
    }
    out["mub_preserving"] = r.mub_preserving ? Json(*r.mub_preserving) : Json(nullptr);
    return out;
}

Json to_json(const FidelityEstimate &e) {
    return Json{
        {"mean", e.mean},
        {"raw_mean", e.raw_mean},
        {"stderr", e.std_error},
        {"n_samples", e.n_samples},
        {"seed", e.seed},
        {"exact_reference", e.exact_reference ? Json(*e.exact_reference) : Json(nullptr)},
        {"minimal_support", e.minimal_support},
        {"shots", e.shots},
    };
}

Json to_json(const UnitaryGate &u) {
    return Json{{"dims", u.dims()}, {"matrix", matrix_to_json(u.matrix())}};
}

UnitaryGate gate_from_json(const Json &j) {
    return UnitaryGate(int_list(j, "dims"), matrix_from_json(field(j, "matrix")));
}

Json to_json(const QuantumChannel &ch) {
    Json kraus = Json::array();
    for (const auto &k : ch.kraus()) {
        kraus.push_back(matrix_to_json(k));
    }
    return Json{{"dims", ch.dims()}, {"kraus", kraus}};
}

QuantumChannel channel_from_json(const Json &j) {
    const Json &kj = field(j, "kraus");
    if (!kj.is_array()) {
        throw bad("'kraus' must be an array of matrices");
    }
    std::vector<Matrix> kraus;
    for (const auto &k : kj) {
        kraus.push_back(matrix_from_json(k));
    }
    return QuantumChannel(int_list(j, "dims"), std::move(kraus));
}

static bool is_scalar_array(const Json &j) {
    for (const auto &x : j) {
        if (x.is_structured()) {
            return false;
        }
    }
    return true;
}

static void render(const Json &j, const std::string &indent, std::ostringstream &out) {
    for (const auto &[key, v] : j.items()) {
        if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
            out << indent << key << ":\n";
            if (v.is_object()) {
                render(v, indent + "  ", out);
            } else {
                for (size_t k = 0; k < v.size(); k++) {
                    if (v[k].is_object()) {
                        out << indent << "  [" << k << "]\n";
                        render(v[k], indent + "    ", out);
                    } else {
                        out << indent << "  " << v[k].dump() << "\n";
                    }
                }
            }
        } else {
            out << indent << key << ": " << v.dump() << "\n";
        }
    }
}

std::string render_text(const Json &j) {
    std::ostringstream out;
    if (j.is_object()) {
        render(j, "", out);
    } else {
        out << j.dump(2) << "\n";
    }
    return out.str();
}

}  // namespace qmub

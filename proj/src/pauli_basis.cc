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

#include "qudit_mub/pauli_basis.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>

#include "qudit_mub/errors.h"
#include "qudit_mub/parallel.h"

namespace qmub {

bool PauliLabel::is_identity() const {
    return std::all_of(factors.begin(), factors.end(), [](const FactorLabel &f) {
        return f.a == 0 && f.b == 0;
    });
}

int PauliLabel::total_dim() const {
    int D = 1;
    for (const auto &f : factors) {
        D *= f.d;
    }
    return D;
}

std::string PauliLabel::str() const {
    std::stringstream ss;
    for (size_t k = 0; k < factors.size(); k++) {
        ss << (k ? "," : "") << "(" << factors[k].a << "," << factors[k].b << ")";
    }
    return ss.str();
}

MonomialOperator make_X(Dimension d) {
    return make_pauli(d, 1, 0);
}

MonomialOperator make_Z(Dimension d) {
    return make_pauli(d, 0, 1);
}

MonomialOperator make_pauli(Dimension dim, int a, int b) {
    int d = dim.value();
    // X^a Z^b |n> = omega^{b n} |n + a>
    std::vector<int> perm(d);
    std::vector<int> phase(d);
    for (int n = 0; n < d; n++) {
        perm[n] = (int)mod((int64_t)n + a, d);
        phase[n] = (int)mod((int64_t)b * n, d);
    }
    return MonomialOperator(d, std::move(perm), std::move(phase));
}

MonomialOperator make_pauli(const PauliLabel &label) {
    if (label.factors.empty()) {
        throw std::invalid_argument("make_pauli: empty label");
    }
    MonomialOperator out = make_pauli(label.factors[0].d, label.factors[0].a, label.factors[0].b);
    for (size_t k = 1; k < label.factors.size(); k++) {
        const auto &f = label.factors[k];
        out = tensor_product(out, make_pauli(f.d, f.a, f.b));
    }
    return out;
}

PhaseExp commutation_phase(const PauliLabel &l1, const PauliLabel &l2) {
    if (l1.factors.size() != l2.factors.size()) {
        throw DimensionMismatch("commutation_phase: labels have different factor counts");
    }
    int D = l1.total_dim();
    int64_t t = 0;
    for (size_t k = 0; k < l1.factors.size(); k++) {
        const auto &f1 = l1.factors[k];
        const auto &f2 = l2.factors[k];
        if (f1.d != f2.d) {
            throw DimensionMismatch("commutation_phase: factor dimensions differ");
        }
        // Z^b X^a = omega^{ab} X^a Z^b
        int64_t ti = mod((int64_t)f2.a * f1.b - (int64_t)f1.a * f2.b, f1.d);
        t += ti * (D / f1.d);
    }
    return PhaseExp(t, D);
}

namespace {

// perm followed by the phase vector shifted so that phase[0] == 0.
std::vector<int> shape_key(const MonomialOperator &op) {
    std::vector<int> key = op.perm();
    int p0 = op.phase()[0];
    for (int p : op.phase()) {
        key.push_back((int)mod((int64_t)p - p0, op.dim()));
    }
    return key;
}

}  // namespace

OperatorBasis::OperatorBasis(std::vector<int> dims, std::vector<BasisElement> elements)
    : dims_(std::move(dims)), total_dim_(1), elements_(std::move(elements)) {
    if (dims_.empty()) {
        throw std::invalid_argument("OperatorBasis: no factors");
    }
    for (int d : dims_) {
        if (d < 2) {
            throw std::invalid_argument("OperatorBasis: factor dimension must be >= 2");
        }
        total_dim_ *= d;
    }
    for (size_t i = 0; i < elements_.size(); i++) {
        const auto &e = elements_[i];
        if (e.op.dim() != total_dim_) {
            throw DimensionMismatch("OperatorBasis: element " + std::to_string(i) + " has wrong dimension");
        }
        if (e.label.factors.size() != dims_.size()) {
            throw std::invalid_argument("OperatorBasis: element " + std::to_string(i) + " has wrong label arity");
        }
        if (!by_label_.emplace(e.label, i).second) {
            throw std::invalid_argument("OperatorBasis: duplicate label " + e.label.str());
        }
        by_shape_.emplace(shape_key(e.op), i);
    }
}

int OperatorBasis::phase_order() const {
    int64_t l = 1;
    for (int d : dims_) {
        l = lcm(l, d);
    }
    return (int)l;
}

std::optional<size_t> OperatorBasis::index_of(const PauliLabel &label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<ScaledElement> OperatorBasis::find_scaled(const MonomialOperator &op) const {
    if (op.dim() != total_dim_) {
        throw DimensionMismatch("find_scaled: operator dimension differs from basis");
    }
    auto it = by_shape_.find(shape_key(op));
    if (it == by_shape_.end()) {
        return std::nullopt;
    }
    const auto &e = elements_[it->second];
    return ScaledElement{it->second, PhaseExp((int64_t)op.phase()[0] - e.op.phase()[0], total_dim_)};
}

OperatorBasis build_basis(Dimension d) {
    if (!d.is_prime()) {
        throw std::invalid_argument(
            "build_basis: d=" + std::to_string(d.value()) +
            " is not prime; use build_composite_basis for a prime-factor tensor basis");
    }
    return build_tensor_basis({d.value()});
}

OperatorBasis build_tensor_basis(const std::vector<int> &dims) {
    if (dims.empty()) {
        throw std::invalid_argument("build_tensor_basis: no factors");
    }
    for (int d : dims) {
        if (!is_prime(d)) {
            throw std::invalid_argument(
                "build_tensor_basis: factor dimension " + std::to_string(d) + " is not prime");
        }
    }
    // Odometer over ((a_0, b_0), (a_1, b_1), ...) yields lexicographic label order.
    std::vector<BasisElement> elements;
    std::vector<FactorLabel> cur;
    for (int d : dims) {
        cur.push_back({0, 0, d});
    }
    while (true) {
        PauliLabel label(cur);
        elements.push_back({label, make_pauli(label)});
        int k = (int)cur.size() - 1;
        for (; k >= 0; k--) {
            auto &f = cur[k];
            if (++f.b < f.d) {
                break;
            }
            f.b = 0;
            if (++f.a < f.d) {
                break;
            }
            f.a = 0;
        }
        if (k < 0) {
            break;
        }
    }
    return OperatorBasis(dims, std::move(elements));
}

OperatorBasis build_composite_basis(int D) {
    if (D < 2) {
        throw std::invalid_argument("build_composite_basis: D must be >= 2");
    }
    return build_tensor_basis(prime_factors(D));
}

BasisAudit audit_basis(const OperatorBasis &basis) {
    BasisAudit audit;
    int D = basis.total_dim();
    audit.expected_size = (size_t)D * D;
    audit.size = basis.size();
    audit.size_ok = audit.size == audit.expected_size;
    if (!audit.size_ok) {
        audit.failures.push_back(
            "basis has " + std::to_string(audit.size) + " elements, expected " + std::to_string(audit.expected_size));
    }

    const auto &elems = basis.elements();
    size_t n = elems.size();
    std::mutex mu;
    std::atomic<bool> ortho{true};
    parallel_for(n, [&](size_t i) {
        for (size_t j = i; j < n; j++) {
            HsInner ip = hs_inner(elems[i].op, elems[j].op);
            bool ok = i == j ? ip.is_one() : ip.is_zero();
            if (!ok) {
                ortho = false;
                std::lock_guard<std::mutex> lock(mu);
                audit.failures.push_back(
                    "inner product <" + elems[i].label.str() + ", " + elems[j].label.str() + "> is not " +
                    (i == j ? "1" : "0"));
            }
        }
    });
    audit.orthonormal = ortho;

    audit.traceless = true;
    audit.dnary_spectra = true;
    audit.labels_consistent = true;
    for (const auto &e : elems) {
        if (e.label.is_identity()) {
            if (!e.op.is_identity()) {
                audit.labels_consistent = false;
                audit.failures.push_back("identity label carries a non-identity operator");
            }
            continue;
        }
        if (!trace(e.op).is_zero()) {
            audit.traceless = false;
            audit.failures.push_back("element " + e.label.str() + " has nonzero trace");
        }
        bool label_dims_ok = e.label.factors.size() == basis.dims().size();
        for (size_t k = 0; label_dims_ok && k < e.label.factors.size(); k++) {
            const auto &f = e.label.factors[k];
            label_dims_ok = f.d == basis.dims()[k] && f.a >= 0 && f.a < f.d && f.b >= 0 && f.b < f.d;
        }

        SpectrumReport s = spectrum(e.op);
        bool dnary = true;
        if (basis.dims().size() == 1) {
            dnary = s.is_dnary;
        } else if (!label_dims_ok) {
            dnary = false;
        } else {
            // Tensor elements: every non-identity factor d-nary, and the element carries the
            // product spectrum of its label.
            for (const auto &f : e.label.factors) {
                if ((f.a != 0 || f.b != 0) && !spectrum(make_pauli(f.d, f.a, f.b)).is_dnary) {
                    dnary = false;
                }
            }
            dnary = dnary && s.eigenvalues == spectrum(make_pauli(e.label)).eigenvalues;
        }
        if (!dnary) {
            audit.dnary_spectra = false;
            audit.failures.push_back("element " + e.label.str() + " does not have a d-nary spectrum");
        }

        if (!label_dims_ok || !(make_pauli(e.label) == e.op)) {
            audit.labels_consistent = false;
            audit.failures.push_back("element " + e.label.str() + " does not match X^a Z^b for its label");
        }
    }
    std::sort(audit.failures.begin(), audit.failures.end());
    return audit;
}

}  // namespace qmub

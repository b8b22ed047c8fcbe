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

#ifndef QUDIT_MUB_PAULI_BASIS_H
#define QUDIT_MUB_PAULI_BASIS_H

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qudit_mub/monomial_op.h"

namespace qmub {

/// Exponents of X^a Z^b on one prime factor of dimension d.
struct FactorLabel {
    int a = 0;
    int b = 0;
    int d = 2;

    auto operator<=>(const FactorLabel &other) const = default;
};

/// Label of a (tensor) generalized Pauli: one FactorLabel per factor, ordered as the
/// Kronecker product. All-zero exponents label the identity.
struct PauliLabel {
    std::vector<FactorLabel> factors;

    PauliLabel() = default;
    explicit PauliLabel(std::vector<FactorLabel> f) : factors(std::move(f)) {
    }
    /// Single-factor label.
    PauliLabel(int a, int b, int d) : factors{{a, b, d}} {
    }

    bool is_identity() const;
    int total_dim() const;
    std::string str() const;

    auto operator<=>(const PauliLabel &other) const = default;
};

/// Cyclic shift X|n> = |n+1>.
MonomialOperator make_X(Dimension d);
/// Clock Z|n> = omega^n |n>.
MonomialOperator make_Z(Dimension d);
/// X^a Z^b.
MonomialOperator make_pauli(Dimension d, int a, int b);
/// Kronecker product of the per-factor X^{a_i} Z^{b_i}.
MonomialOperator make_pauli(const PauliLabel &label);

/// t with M1 M2 = omega_D^t M2 M1, D the total dimension.
/// Per factor t_i = a2 b1 - a1 b2 (mod d_i), combined as sum t_i D / d_i.
PhaseExp commutation_phase(const PauliLabel &l1, const PauliLabel &l2);

struct BasisElement {
    PauliLabel label;
    MonomialOperator op;
};

/// A basis element index plus the root of unity relating it to a queried operator:
/// queried = omega_D^phase * element.
struct ScaledElement {
    size_t index;
    PhaseExp phase;
};

/// D^2 labeled monomial operators, D = product of the factor dimensions, sorted by label.
/// Element 0 is the identity.
class OperatorBasis {
   public:
    OperatorBasis(std::vector<int> dims, std::vector<BasisElement> elements);

    const std::vector<int> &dims() const {
        return dims_;
    }
    int total_dim() const {
        return total_dim_;
    }
    /// Least common multiple of the factor dimensions; conjugation phases of Clifford
    /// gates are powers of exp(2 pi i / phase_order()).
    int phase_order() const;
    size_t size() const {
        return elements_.size();
    }
    const std::vector<BasisElement> &elements() const {
        return elements_;
    }
    const BasisElement &element(size_t i) const {
        return elements_.at(i);
    }
    std::optional<size_t> index_of(const PauliLabel &label) const;
    /// Finds j and t with op = omega_D^t M_j, if any.
    std::optional<ScaledElement> find_scaled(const MonomialOperator &op) const;

   private:
    std::vector<int> dims_;
    int total_dim_;
    std::vector<BasisElement> elements_;
    std::map<PauliLabel, size_t> by_label_;
    std::map<std::vector<int>, size_t> by_shape_;
};

/// Generalized Pauli basis {X^a Z^b} for prime d. Non-prime d is rejected; use
/// build_composite_basis.
OperatorBasis build_basis(Dimension d);
OperatorBasis build_tensor_basis(const std::vector<int> &dims);
/// Routes D through its prime factorization.
OperatorBasis build_composite_basis(int D);

/// Structural audit of a basis: size, exact orthonormality, tracelessness, per-factor
/// d-nary spectra and label consistency.
struct BasisAudit {
    size_t expected_size = 0;
    size_t size = 0;
    bool size_ok = false;
    bool orthonormal = false;
    bool traceless = false;
    bool dnary_spectra = false;
    bool labels_consistent = false;
    std::vector<std::string> failures;

    bool pass() const {
        return size_ok && orthonormal && traceless && dnary_spectra && labels_consistent;
    }
};

BasisAudit audit_basis(const OperatorBasis &basis);

}  // namespace qmub

#endif

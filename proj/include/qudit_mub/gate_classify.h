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

#ifndef QUDIT_MUB_GATE_CLASSIFY_H
#define QUDIT_MUB_GATE_CLASSIFY_H

#include <map>
#include <optional>
#include <vector>

#include "qudit_mub/mub_partition.h"
#include "qudit_mub/pauli_basis.h"

namespace qmub {

inline constexpr double kUnitaryTol = 1e-9;
/// |<M_j, U M_i U^dagger>| > 1 - kMatchTol declares a match; phases within kMatchTol of
/// a root of unity are snapped.
inline constexpr double kMatchTol = 1e-7;

/// A D x D unitary acting on the tensor product of `dims`.
class UnitaryGate {
   public:
    /// Throws NonUnitaryError if max |U U^dagger - 1| >= tol, DimensionMismatch if the
    /// matrix size differs from the product of dims.
    UnitaryGate(std::vector<int> dims, Matrix matrix, double tol = kUnitaryTol);

    const std::vector<int> &dims() const {
        return dims_;
    }
    int dim() const {
        return (int)matrix_.rows();
    }
    const Matrix &matrix() const {
        return matrix_;
    }

   private:
    std::vector<int> dims_;
    Matrix matrix_;
};

/// One row of the conjugation-action table: U M_source U^dagger = phase * M_target.
struct ConjugationMatch {
    size_t source = 0;
    std::optional<size_t> target;
    std::complex<double> phase = 1;
    /// `phase` snapped onto a root of unity of order basis.phase_order(), when close enough.
    std::optional<PhaseExp> snapped;
    /// max_j |<M_j, U M_source U^dagger>|.
    double match_fidelity = 0;
};

struct CycleStep {
    size_t index;
    std::complex<double> phase;
};

struct CycleDecomposition {
    std::vector<std::vector<CycleStep>> cycles;
    std::vector<int> degrees;
};

struct ClassificationReport {
    bool characterizable = false;
    std::vector<ConjugationMatch> matches;
    std::optional<CycleDecomposition> cycles;
    std::optional<bool> mub_preserving;
};

/// Coefficients <M_j, U M_i U^dagger> = (1/D) Tr[M_j^dagger U M_i U^dagger] for every j.
Vector conjugation_coefficients(const UnitaryGate &u, size_t i, const OperatorBasis &basis);

ConjugationMatch conjugation_image(
    const UnitaryGate &u, size_t i, const OperatorBasis &basis, double tol = kMatchTol);

/// Full classification. For single-prime-factor bases the MUB-preservation verdict is
/// computed as well.
ClassificationReport classify(const UnitaryGate &u, const OperatorBasis &basis, double tol = kMatchTol);

/// k with |phase - exp(2 pi i k / order)| <= tol, if any.
std::optional<PhaseExp> phase_is_dnary(std::complex<double> phase, int order, double tol = kMatchTol);
std::optional<PhaseExp> phase_is_dnary(const ConjugationMatch &m, int order, double tol = kMatchTol);

/// True iff U maps every collection eigenbasis onto some collection eigenbasis (up to
/// per-vector phases and reordering) while staying unbiased to all the others, and the
/// induced map on families is a permutation.
bool is_mub_preserving(const UnitaryGate &u, const MubCollection &c, double tol = kMatchTol);

/// Cycle length -> number of cycles. Throws std::invalid_argument for a
/// non-characterizable report.
std::map<int, int> cycle_degree_histogram(const ClassificationReport &r);

}  // namespace qmub

#endif

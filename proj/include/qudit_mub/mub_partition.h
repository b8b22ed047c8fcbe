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

#ifndef QUDIT_MUB_MUB_PARTITION_H
#define QUDIT_MUB_MUB_PARTITION_H

#include <optional>
#include <string>
#include <vector>

#include "qudit_mub/pauli_basis.h"

namespace qmub {

/// The powers g, g^2, ..., g^{d-1} of a generator with d-nary spectrum, together with
/// their shared eigenbasis (the generator's, ordered by eigenvalue phase).
struct AbelianFamily {
    PauliLabel generator;
    MonomialOperator generator_op;
    /// members[b-1] == g^b exactly.
    std::vector<MonomialOperator> members;
    /// g^d == omega^closure_phase * 1. Zero for odd d; for d = 2 XZ squares to -1.
    PhaseExp closure_phase;
    OrderedEigenbasis eigenbasis;
    /// Filled by partition_basis: members[b-1] == omega_D^scalars[b-1] * basis[basis_indices[b-1]].
    std::vector<size_t> basis_indices;
    std::vector<PhaseExp> scalars;
};

/// Builds the family of powers of `generator`. Requires prime d and a d-nary spectrum
/// (NotDnaryError otherwise). The labels of the members are left empty.
AbelianFamily family_powers(const MonomialOperator &generator, const PauliLabel &label = {});

struct MubCollection {
    int d = 0;
    std::vector<AbelianFamily> families;
};

/// Splits the traceless part of a single-prime-factor basis into d+1 commuting families
/// generated by Z and X Z^m, m = 0..d-1.
MubCollection partition_basis(const OperatorBasis &basis);

struct MubReport {
    double max_cross_dev = 0;
    double max_gram_dev = 0;
    bool pass = false;
};

inline constexpr double kMubCrossTol = 1e-10;
inline constexpr double kMubGramTol = 1e-12;

/// Cross-family overlaps |<psi_n^a|psi_m^b>|^2 against 1/d, and each eigenbasis Gram
/// matrix against the identity.
MubReport verify_mub(const MubCollection &c);

/// |psi_n><psi_n| for the family eigenbasis. Also evaluates the power-sum form
/// (1/d) sum_u conj(lambda_n)^u g^u and throws std::logic_error if the two disagree.
Matrix projector_from_family(const AbelianFamily &f, int n);
Matrix projector_power_sum(const AbelianFamily &f, int n);

/// A d x d 0/1 matrix, stored 0-based. `ones[i]` lists the columns holding a 1 in row i.
struct BasisChangeMatrix {
    int d = 0;
    /// Knight step b for matrices produced by knight_move_unitary; 0 otherwise.
    int b = 0;
    std::vector<std::vector<int>> ones;

    static BasisChangeMatrix identity(int d);
    static BasisChangeMatrix from_permutation(const std::vector<int> &column_of_row, int b = 0);

    int at(int row, int col) const;
    /// Column of the single 1 in each row, if the matrix is a permutation matrix.
    std::optional<std::vector<int>> as_permutation() const;
    Eigen::MatrixXi dense() const;
};

struct KnightViolation {
    enum class Kind { kColumnCollision, kDiagonalCollision };
    Kind kind;
    /// Colliding rows (0-based) and the shared column or cyclic diagonal index.
    int row_a;
    int row_b;
    int shared;

    std::string describe() const;
};

/// Either a valid knight matrix or the collisions that prevent one.
struct KnightResult {
    int d = 0;
    int b = 0;
    /// The matrix obtained by placing one 1 per row, (row i -> column i*b mod d),
    /// whether or not it is valid.
    BasisChangeMatrix placement;
    std::vector<KnightViolation> violations;

    bool valid() const {
        return violations.empty();
    }
};

/// 0-based form of the rule: row i holds its 1 in column (i * b) mod d. Requires
/// 2 <= b <= d - 1 (std::out_of_range otherwise). For non-prime d the result may carry
/// column or diagonal collisions instead of a valid matrix.
KnightResult knight_move_unitary(Dimension d, int b);

/// m shifted cyclically down by s rows: result(i, j) = m(i - s, j). Its main diagonal is the
/// s-th cyclic upper diagonal of m.
BasisChangeMatrix shift_compose(int s, const BasisChangeMatrix &m);

struct DiagonalReport {
    CsVector c;
    /// Every c_s == 1.
    bool unit_diagonals = false;
    /// sum_s c_s omega^s == 0, decided exactly.
    bool vanishing = false;
    bool pass = false;
};

/// c_s = sum of squared entries on the s-th cyclic upper diagonal.
DiagonalReport verify_diagonal_property(const BasisChangeMatrix &m);

inline constexpr int kMaxKnightSearchDimension = 7;

struct KnightCount {
    int d = 0;
    /// All permutation matrices with (0,0) = 1 and a single 1 on every cyclic diagonal.
    std::vector<BasisChangeMatrix> matrices;
    int expected = 0;  // d - 2
    bool count_matches = false;
    /// Every knight_move_unitary(d, b) is among `matrices` and vice versa.
    bool set_matches = false;

    int count() const {
        return (int)matrices.size();
    }
};

/// Exhaustive search over permutations fixing 0. Prime d <= 7 only.
KnightCount count_knight_unitaries(Dimension d);

}  // namespace qmub

#endif

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

#ifndef QUDIT_MUB_GATES_H
#define QUDIT_MUB_GATES_H

#include <cstdint>
#include <string>
#include <vector>

#include "qudit_mub/gate_classify.h"

namespace qmub {

/// F_{jk} = omega^{jk} / sqrt(d).
Matrix fourier_matrix(int d);
/// diag(1, i) for d = 2, diag(omega^{n(n-1)/2}) for odd d.
Matrix phase_gate_matrix(int d);
/// diag(exp(i pi n / (2 d))); not in the Clifford group.
Matrix t_gate_matrix(int d);
/// |i, j> -> |i, i + j> on d x d.
Matrix csum_matrix(int d);
Matrix kron(const Matrix &a, const Matrix &b);

/// Ginibre matrix orthonormalized by QR with the R-diagonal phases removed.
Matrix random_unitary_matrix(int D, uint64_t seed);
/// exp(i H) for H the Hermitian part of a seeded Ginibre matrix.
Matrix random_hermitian_exp_matrix(int D, uint64_t seed);

/// Parses a named gate on `dims`:
///   I, X, Z, F, S, T      single-qudit gate applied to every factor
///   CSUM                  dims must be [d, d]
///   pauli:a,b[;a,b...]    one exponent pair per factor
///   random:SEED, hermitian:SEED
///   tensor:G1+G2+...      one single-factor gate name per factor
/// Throws std::invalid_argument for unknown or malformed names.
UnitaryGate gate_from_name(const std::string &name, const std::vector<int> &dims);

}  // namespace qmub

#endif

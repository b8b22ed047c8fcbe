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

#ifndef QUDIT_MUB_MONOMIAL_OP_H
#define QUDIT_MUB_MONOMIAL_OP_H

#include <Eigen/Dense>
#include <compare>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qudit_mub/zd_arith.h"

namespace qmub {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default tolerance for recognizing structure (monomiality, unit modulus, root phases)
/// in floating-point matrices. Exact paths never use it.
inline constexpr double kStructuralTol = 1e-9;

/// A point on the unit circle as an exact fraction of a full turn: exp(2 pi i num / den).
/// Always reduced with 0 <= num < den.
struct Turn {
    int64_t num = 0;
    int64_t den = 1;

    static Turn make(int64_t num, int64_t den);

    Turn operator+(const Turn &other) const;
    Turn operator-(const Turn &other) const;
    std::complex<double> to_complex() const;
    bool operator==(const Turn &other) const = default;
    std::strong_ordering operator<=>(const Turn &other) const;
};

/// A generalized permutation matrix  M = sum_n omega^{phase[n]} |perm[n]><n|,
/// omega = exp(2 pi i / d).
///
/// Column n holds exactly one nonzero entry, at row perm[n]. Unitarity holds by
/// construction.
class MonomialOperator {
   public:
    MonomialOperator(int d, std::vector<int> perm, std::vector<int> phase);

    static MonomialOperator identity(int d);

    int dim() const {
        return d_;
    }
    const std::vector<int> &perm() const {
        return perm_;
    }
    const std::vector<int> &phase() const {
        return phase_;
    }
    bool is_identity() const;

    bool operator==(const MonomialOperator &other) const = default;

   private:
    int d_;
    std::vector<int> perm_;
    std::vector<int> phase_;
};

/// Exact product A*B.
MonomialOperator multiply(const MonomialOperator &a, const MonomialOperator &b);
MonomialOperator adjoint(const MonomialOperator &a);
MonomialOperator power(const MonomialOperator &a, int exponent);
/// omega^k * a.
MonomialOperator scale(const MonomialOperator &a, PhaseExp k);

/// Kronecker product a (x) b on dimension d_a * d_b, index n = n_a * d_b + n_b.
/// Phases are re-expressed as (d_a d_b)-th roots of unity.
MonomialOperator tensor_product(const MonomialOperator &a, const MonomialOperator &b);

/// Exact trace as an element of Z[omega].
CyclotomicInteger trace(const MonomialOperator &a);

/// The normalized Hilbert-Schmidt inner product (1/d) Tr[A B^dagger], kept exact as the
/// integer trace over the roots of unity.
struct HsInner {
    CyclotomicInteger trace;

    bool is_zero() const {
        return trace.is_zero();
    }
    bool is_one() const {
        return trace.equals_integer(trace.d());
    }
    std::complex<double> value() const {
        return trace.to_complex() / (double)trace.d();
    }
};

HsInner hs_inner(const MonomialOperator &a, const MonomialOperator &b);

/// One cycle of the permutation, started at its smallest index.
struct PermutationCycle {
    std::vector<int> positions;
    /// Sum of phase exponents along the cycle, mod d.
    int accumulated_phase;
};

std::vector<PermutationCycle> cycle_decomposition(const MonomialOperator &a);

struct SpectrumReport {
    /// Eigenvalues, exact and sorted by turn.
    std::vector<Turn> eigenvalues;
    std::vector<std::pair<Turn, int>> multiplicities;
    /// True iff the eigenvalues are exactly exp(i phi0) * {omega^0, ..., omega^{d-1}}, each once.
    bool is_dnary = false;
    /// phi0 in [0, 1/d) of a turn. Zero for every generalized Pauli with odd d.
    Turn global_phase;
    /// When d-nary: the exponent k of each sorted eigenvalue relative to the global phase.
    std::vector<PhaseExp> dnary_exponents;

    std::vector<std::complex<double>> complex_eigenvalues() const;
};

/// Spectrum from the cycle structure: a cycle of length L and accumulated phase P
/// contributes the L solutions of lambda^L = omega^P.
SpectrumReport spectrum(const MonomialOperator &a);

/// Eigenvectors in the columns of `vectors`; column k has eigenvalue exp(i phi0) omega^k.
/// Gauge: the first nonzero component of each column is real and positive.
struct OrderedEigenbasis {
    int d = 0;
    Turn global_phase;
    Matrix vectors;

    std::complex<double> eigenvalue(int k) const;
    Vector vector(int k) const {
        return vectors.col(k);
    }
};

/// Analytic eigenbasis. Throws NotDnaryError unless `spectrum(a).is_dnary`.
OrderedEigenbasis eigenbasis(const MonomialOperator &a);

Matrix to_dense(const MonomialOperator &a);

enum class MonomialRejection {
    kAccepted,
    kNotSquare,
    kNotMonomial,
    kNotUnitModulus,
    kNotDnaryPhase,
};

struct FromDenseResult {
    std::optional<MonomialOperator> op;
    MonomialRejection reason = MonomialRejection::kAccepted;
    std::string detail;
    /// Phase exponent removed from every column so that phase[0] = 0; op scaled by it is the input.
    std::optional<PhaseExp> global_phase;

    explicit operator bool() const {
        return op.has_value();
    }
};

/// Recognizes a dense matrix as a monomial operator with d-th-root phases, d = rows.
FromDenseResult from_dense(const Matrix &m, double tol = kStructuralTol);

std::string rejection_name(MonomialRejection r);

}  // namespace qmub

#endif

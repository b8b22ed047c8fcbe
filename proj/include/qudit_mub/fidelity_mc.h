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

#ifndef QUDIT_MUB_FIDELITY_MC_H
#define QUDIT_MUB_FIDELITY_MC_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qudit_mub/gate_classify.h"
#include "qudit_mub/mub_partition.h"

namespace qmub {

inline constexpr double kTraceTol = 1e-9;

/// A completely positive map in Kraus form on the tensor product of `dims`.
class QuantumChannel {
   public:
    /// Throws NotTracePreservingError if max |sum K^dagger K - 1| >= tol.
    QuantumChannel(std::vector<int> dims, std::vector<Matrix> kraus, double tol = kTraceTol);

    const std::vector<int> &dims() const {
        return dims_;
    }
    int dim() const {
        return dim_;
    }
    const std::vector<Matrix> &kraus() const {
        return kraus_;
    }

   private:
    std::vector<int> dims_;
    int dim_;
    std::vector<Matrix> kraus_;
};

QuantumChannel identity_channel(const std::vector<int> &dims);
/// rho -> (1 - p) rho + p Tr[rho] 1/D, as sqrt(1-p) 1 plus D^2 Weyl terms sqrt(p)/D W_ab.
QuantumChannel depolarizing(const std::vector<int> &dims, double p);
/// Independent depolarizing(p) on every factor.
QuantumChannel local_depolarizing(const std::vector<int> &dims, double p);
/// rho -> (1 - gamma) rho + gamma diag(rho) in the computational basis.
QuantumChannel dephasing(const std::vector<int> &dims, double gamma);
QuantumChannel unitary_error(const UnitaryGate &v);
/// noise o U: Kraus operators K_k U.
QuantumChannel after_gate(const QuantumChannel &noise, const UnitaryGate &u);

Matrix apply_channel(const QuantumChannel &ch, const Matrix &rho);

/// (1/D^2) sum_k |Tr[U^dagger K_k]|^2.
double entanglement_fidelity(const UnitaryGate &u, const QuantumChannel &ch);
/// (D F_e + 1) / (D + 1).
double exact_average_fidelity(const UnitaryGate &u, const QuantumChannel &ch);

struct RelevanceEntry {
    size_t i;
    size_t j;
    /// <M_j, U M_i U^dagger>.
    std::complex<double> coefficient;
    double weight;
};

/// Sampling weights |<M_j, U M_i U^dagger>|^2 / D^2 over index pairs.
struct RelevanceDistribution {
    int dim = 0;
    std::vector<RelevanceEntry> entries;
    /// Exactly D^2 entries, one per source index.
    bool minimal = false;
    /// Set to D^2 when every weight equals exactly 1/D^2.
    std::optional<int64_t> uniform_denominator;

    size_t support() const {
        return entries.size();
    }
};

inline constexpr double kSupportTol = 1e-12;

/// Entries with |coefficient| <= kSupportTol are dropped. Characterizable gates get
/// the uniform minimal distribution with each coefficient's phase retained.
RelevanceDistribution relevance_distribution(const UnitaryGate &u, const OperatorBasis &basis);

struct McOptions {
    /// 0 evaluates expectations exactly; otherwise each eigenstate input is measured
    /// this many times.
    int shots = 0;
};

struct FidelityEstimate {
    /// raw_mean clamped to [0, 1].
    double mean = 0;
    double raw_mean = 0;
    /// Sample standard deviation / sqrt(n).
    double std_error = 0;
    uint64_t n_samples = 0;
    uint64_t seed = 0;
    std::optional<double> exact_reference;
    bool minimal_support = false;
    int shots = 0;
};

/// Monte Carlo estimate of the average gate fidelity of `ch` against `u`. Sample s draws
/// a pair (i, j) from the relevance distribution and scores Re(y_ij / c_ij) with
/// y_ij = (1/D) Tr[M_j^dagger ch(M_i)], converted to the average-fidelity scale.
/// Throws std::invalid_argument for n = 0, DimensionMismatch for incompatible inputs.
FidelityEstimate mc_estimate(
    const UnitaryGate &u,
    const QuantumChannel &ch,
    const OperatorBasis &basis,
    uint64_t n,
    uint64_t seed,
    McOptions options = {});

/// Columns of the family eigenbasis, as preparation states.
std::vector<Vector> eigenstate_inputs(const AbelianFamily &f);
/// Kronecker products of per-factor family eigenstates, first factor most significant.
std::vector<Vector> eigenstate_inputs(const std::vector<AbelianFamily> &per_factor);

/// Product eigenbasis of a labelled tensor Pauli element: columns are eigenvectors,
/// `eigenvalues[k]` belongs to column k. Identity factors use the computational basis.
std::pair<Matrix, Vector> product_eigenbasis(const PauliLabel &label);

}  // namespace qmub

#endif

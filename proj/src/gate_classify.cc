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

#include "qudit_mub/gate_classify.h"

#include <cmath>
#include <numbers>

#include "qudit_mub/errors.h"
#include "qudit_mub/parallel.h"

namespace qmub {

UnitaryGate::UnitaryGate(std::vector<int> dims, Matrix matrix, double tol)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    int D = 1;
    for (int d : dims_) {
        if (d < 2) {
            throw std::invalid_argument("UnitaryGate: factor dimension must be >= 2");
        }
        D *= d;
    }
    if (matrix_.rows() != D || matrix_.cols() != D) {
        throw DimensionMismatch(
            "UnitaryGate: matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
            " but dims multiply to " + std::to_string(D));
    }
    if (!matrix_.allFinite()) {
        throw NonUnitaryError("UnitaryGate: matrix has non-finite entries");
    }
    double dev = (matrix_ * matrix_.adjoint() - Matrix::Identity(D, D)).cwiseAbs().maxCoeff();
    if (dev >= tol) {
        throw NonUnitaryError("UnitaryGate: max |U U^dagger - 1| = " + std::to_string(dev));
    }
}

static void require_compatible(const UnitaryGate &u, const OperatorBasis &basis) {
    if (u.dim() != basis.total_dim()) {
        throw DimensionMismatch("gate dimension differs from basis dimension");
    }
}

Vector conjugation_coefficients(const UnitaryGate &u, size_t i, const OperatorBasis &basis) {
    require_compatible(u, basis);
    int D = basis.total_dim();
    const Matrix &U = u.matrix();
    const MonomialOperator &m = basis.element(i).op;
    std::vector<std::complex<double>> roots(D);
    for (int k = 0; k < D; k++) {
        roots[k] = root_of_unity(k, D);
    }
    // (U M) column n = omega^{phase(n)} U column perm(n)
    Matrix um(D, D);
    for (int n = 0; n < D; n++) {
        um.col(n) = roots[m.phase()[n]] * U.col(m.perm()[n]);
    }
    Matrix c = um * U.adjoint();

    Vector coef(basis.size());
    for (size_t j = 0; j < basis.size(); j++) {
        const MonomialOperator &mj = basis.element(j).op;
        std::complex<double> t = 0;
        for (int n = 0; n < D; n++) {
            t += std::conj(roots[mj.phase()[n]]) * c(mj.perm()[n], n);
        }
        coef[(Eigen::Index)j] = t / (double)D;
    }
    return coef;
}

std::optional<PhaseExp> phase_is_dnary(std::complex<double> phase, int order, double tol) {
    double turns = std::arg(phase) / (2 * std::numbers::pi) * order;
    int64_t k = std::llround(turns);
    if (std::abs(phase - root_of_unity(k, order)) <= tol) {
        return PhaseExp(k, order);
    }
    return std::nullopt;
}

std::optional<PhaseExp> phase_is_dnary(const ConjugationMatch &m, int order, double tol) {
    if (!m.target) {
        return std::nullopt;
    }
    return phase_is_dnary(m.phase, order, tol);
}

ConjugationMatch conjugation_image(const UnitaryGate &u, size_t i, const OperatorBasis &basis, double tol) {
    Vector coef = conjugation_coefficients(u, i, basis);
    ConjugationMatch m;
    m.source = i;
    Eigen::Index best = 0;
    m.match_fidelity = coef.cwiseAbs().maxCoeff(&best);
    int above = 0;
    for (Eigen::Index j = 0; j < coef.size(); j++) {
        if (std::abs(coef[j]) > 1 - tol) {
            above++;
        }
    }
    if (above > 1) {
        throw std::logic_error("conjugation_image: several basis elements match; basis is not orthonormal");
    }
    if (above == 1) {
        m.target = (size_t)best;
        m.phase = coef[best] / std::abs(coef[best]);
        m.snapped = phase_is_dnary(m.phase, basis.phase_order(), tol);
    }
    return m;
}

ClassificationReport classify(const UnitaryGate &u, const OperatorBasis &basis, double tol) {
    require_compatible(u, basis);
    ClassificationReport r;
    r.matches.resize(basis.size());
    parallel_for(basis.size(), [&](size_t i) {
        r.matches[i] = conjugation_image(u, i, basis, tol);
    });
    r.characterizable = std::all_of(r.matches.begin(), r.matches.end(), [](const ConjugationMatch &m) {
        return m.target.has_value();
    });

    if (r.characterizable) {
        size_t n = basis.size();
        std::vector<bool> hit(n, false);
        for (const auto &m : r.matches) {
            if (hit[*m.target]) {
                throw std::logic_error("classify: conjugation map is not injective");
            }
            hit[*m.target] = true;
        }
        CycleDecomposition cd;
        std::vector<bool> visited(n, false);
        visited[0] = true;
        for (size_t start = 1; start < n; start++) {
            if (visited[start]) {
                continue;
            }
            std::vector<CycleStep> cycle;
            size_t cur = start;
            while (!visited[cur]) {
                visited[cur] = true;
                cycle.push_back({cur, r.matches[cur].phase});
                cur = *r.matches[cur].target;
            }
            if (cur != start) {
                throw std::logic_error("classify: orbit does not close on its start");
            }
            cd.degrees.push_back((int)cycle.size());
            cd.cycles.push_back(std::move(cycle));
        }
        int total = 0;
        for (int deg : cd.degrees) {
            total += deg;
        }
        if ((size_t)total != n - 1) {
            throw std::logic_error("classify: cycle degrees do not sum to D^2 - 1");
        }
        r.cycles = std::move(cd);
    }

    if (basis.dims().size() == 1 && is_prime(basis.dims()[0])) {
        r.mub_preserving = is_mub_preserving(u, partition_basis(basis), tol);
    }
    return r;
}

bool is_mub_preserving(const UnitaryGate &u, const MubCollection &c, double tol) {
    if (u.dim() != c.d) {
        throw DimensionMismatch("is_mub_preserving: gate dimension differs from collection");
    }
    size_t nf = c.families.size();
    double inv_d = 1.0 / c.d;
    std::vector<int> image(nf, -1);
    std::vector<bool> ok(nf, true);
    parallel_for(nf, [&](size_t a) {
        Matrix moved = u.matrix() * c.families[a].eigenbasis.vectors;
        for (size_t b = 0; b < nf; b++) {
            Eigen::MatrixXd o = (c.families[b].eigenbasis.vectors.adjoint() * moved).cwiseAbs2();
            bool same = true;
            for (Eigen::Index i = 0; i < o.size() && same; i++) {
                double x = o.data()[i];
                same = x < tol || x > 1 - tol;
            }
            bool unbiased = (o.array() - inv_d).abs().maxCoeff() < tol;
            if (same) {
                if (image[a] >= 0) {
                    ok[a] = false;
                }
                image[a] = (int)b;
            } else if (!unbiased) {
                ok[a] = false;
            }
        }
    });
    std::vector<bool> used(nf, false);
    for (size_t a = 0; a < nf; a++) {
        if (!ok[a] || image[a] < 0 || used[image[a]]) {
            return false;
        }
        used[image[a]] = true;
    }
    return true;
}

std::map<int, int> cycle_degree_histogram(const ClassificationReport &r) {
    if (!r.characterizable || !r.cycles) {
        throw std::invalid_argument("cycle_degree_histogram: gate is not characterizable");
    }
    std::map<int, int> h;
    for (int deg : r.cycles->degrees) {
        h[deg]++;
    }
    return h;
}

}  // namespace qmub

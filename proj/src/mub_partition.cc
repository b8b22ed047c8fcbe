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

#include "qudit_mub/mub_partition.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "qudit_mub/errors.h"
#include "qudit_mub/parallel.h"

namespace qmub {

AbelianFamily family_powers(const MonomialOperator &generator, const PauliLabel &label) {
    int d = generator.dim();
    if (!is_prime(d)) {
        throw std::invalid_argument("family_powers: dimension " + std::to_string(d) + " is not prime");
    }
    if (!spectrum(generator).is_dnary) {
        throw NotDnaryError("family_powers: generator spectrum is not d-nary");
    }

    std::vector<MonomialOperator> members;
    members.push_back(generator);
    for (int b = 2; b < d; b++) {
        members.push_back(multiply(members.back(), generator));
    }
    MonomialOperator full = multiply(members.back(), generator);
    auto ident = MonomialOperator::identity(d);
    if (full.perm() != ident.perm() ||
        std::adjacent_find(full.phase().begin(), full.phase().end(), std::not_equal_to<>()) != full.phase().end()) {
        throw std::logic_error("family_powers: g^d is not a multiple of the identity");
    }

    for (size_t i = 0; i < members.size(); i++) {
        if (!hs_inner(members[i], ident).is_zero()) {
            throw std::logic_error("family_powers: power is not orthogonal to the identity");
        }
        for (size_t j = i; j < members.size(); j++) {
            HsInner ip = hs_inner(members[i], members[j]);
            if (i == j ? !ip.is_one() : !ip.is_zero()) {
                throw std::logic_error("family_powers: powers are not orthonormal");
            }
            if (!(multiply(members[i], members[j]) == multiply(members[j], members[i]))) {
                throw std::logic_error("family_powers: powers do not commute");
            }
        }
    }

    return AbelianFamily{
        label,
        generator,
        std::move(members),
        PhaseExp(full.phase()[0], d),
        eigenbasis(generator),
        {},
        {},
    };
}

MubCollection partition_basis(const OperatorBasis &basis) {
    if (basis.dims().size() != 1 || !is_prime(basis.dims()[0])) {
        throw std::invalid_argument(
            "partition_basis: needs a single prime factor; tensor bases are partitioned per factor");
    }
    int d = basis.dims()[0];
    std::vector<PauliLabel> generators;
    generators.emplace_back(0, 1, d);
    for (int m = 0; m < d; m++) {
        generators.emplace_back(1, m, d);
    }

    MubCollection out;
    out.d = d;
    std::vector<bool> covered(basis.size(), false);
    size_t cover_count = 0;
    for (const auto &g : generators) {
        auto gi = basis.index_of(g);
        if (!gi) {
            throw std::logic_error("partition_basis: generator " + g.str() + " missing from basis");
        }
        AbelianFamily f = family_powers(basis.element(*gi).op, g);
        for (const auto &m : f.members) {
            auto hit = basis.find_scaled(m);
            if (!hit || hit->index == 0 || covered[hit->index]) {
                throw std::logic_error("partition_basis: families do not form a disjoint cover");
            }
            covered[hit->index] = true;
            cover_count++;
            f.basis_indices.push_back(hit->index);
            f.scalars.push_back(hit->phase);
        }
        out.families.push_back(std::move(f));
    }
    if (cover_count != basis.size() - 1) {
        throw std::logic_error("partition_basis: families do not cover the traceless basis");
    }
    return out;
}

MubReport verify_mub(const MubCollection &c) {
    size_t nf = c.families.size();
    double inv_d = 1.0 / c.d;
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < nf; a++) {
        for (size_t b = a; b < nf; b++) {
            pairs.emplace_back(a, b);
        }
    }
    std::vector<double> dev(pairs.size(), 0.0);
    parallel_for(pairs.size(), [&](size_t k) {
        auto [a, b] = pairs[k];
        const Matrix &va = c.families[a].eigenbasis.vectors;
        const Matrix &vb = c.families[b].eigenbasis.vectors;
        Matrix overlap = va.adjoint() * vb;
        if (a == b) {
            dev[k] = (overlap - Matrix::Identity(c.d, c.d)).cwiseAbs().maxCoeff();
        } else {
            dev[k] = (overlap.cwiseAbs2().array() - inv_d).abs().maxCoeff();
        }
    });
    MubReport r;
    for (size_t k = 0; k < pairs.size(); k++) {
        double &slot = pairs[k].first == pairs[k].second ? r.max_gram_dev : r.max_cross_dev;
        slot = std::max(slot, dev[k]);
    }
    r.pass = nf == (size_t)c.d + 1 && r.max_cross_dev < kMubCrossTol && r.max_gram_dev < kMubGramTol;
    return r;
}

Matrix projector_power_sum(const AbelianFamily &f, int n) {
    int d = f.eigenbasis.d;
    if (n < 0 || n >= d) {
        throw std::out_of_range("projector: eigenvector index out of range");
    }
    std::complex<double> lam_conj = std::conj(f.eigenbasis.eigenvalue(n));
    Matrix p = Matrix::Identity(d, d);
    std::complex<double> coef = 1;
    for (int u = 1; u < d; u++) {
        coef *= lam_conj;
        p += coef * to_dense(f.members[u - 1]);
    }
    return p / (double)d;
}

Matrix projector_from_family(const AbelianFamily &f, int n) {
    int d = f.eigenbasis.d;
    if (n < 0 || n >= d) {
        throw std::out_of_range("projector: eigenvector index out of range");
    }
    Vector v = f.eigenbasis.vector(n);
    Matrix outer = v * v.adjoint();
    double gap = (outer - projector_power_sum(f, n)).cwiseAbs().maxCoeff();
    if (gap > 1e-12) {
        throw std::logic_error("projector: outer-product and power-sum forms disagree");
    }
    return outer;
}

BasisChangeMatrix BasisChangeMatrix::identity(int d) {
    std::vector<int> cols(d);
    std::iota(cols.begin(), cols.end(), 0);
    return from_permutation(cols);
}

BasisChangeMatrix BasisChangeMatrix::from_permutation(const std::vector<int> &column_of_row, int b) {
    BasisChangeMatrix m;
    m.d = (int)column_of_row.size();
    m.b = b;
    for (int c : column_of_row) {
        m.ones.push_back({c});
    }
    return m;
}

int BasisChangeMatrix::at(int row, int col) const {
    const auto &r = ones.at(row);
    return (int)std::count(r.begin(), r.end(), col);
}

std::optional<std::vector<int>> BasisChangeMatrix::as_permutation() const {
    std::vector<int> cols;
    std::vector<bool> used(d, false);
    for (const auto &r : ones) {
        if (r.size() != 1 || used[r[0]]) {
            return std::nullopt;
        }
        used[r[0]] = true;
        cols.push_back(r[0]);
    }
    return cols;
}

Eigen::MatrixXi BasisChangeMatrix::dense() const {
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(d, d);
    for (int i = 0; i < d; i++) {
        for (int c : ones[i]) {
            m(i, c) += 1;
        }
    }
    return m;
}

std::string KnightViolation::describe() const {
    std::string what = kind == Kind::kColumnCollision ? "column " : "cyclic diagonal ";
    return "rows " + std::to_string(row_a) + " and " + std::to_string(row_b) + " both hit " + what +
           std::to_string(shared);
}

KnightResult knight_move_unitary(Dimension dim, int b) {
    int d = dim.value();
    if (b < 2 || b > d - 1) {
        throw std::out_of_range(
            "knight_move_unitary: b=" + std::to_string(b) + " outside [2, " + std::to_string(d - 1) + "]");
    }
    KnightResult r;
    r.d = d;
    r.b = b;
    std::vector<int> cols(d);
    for (int i = 0; i < d; i++) {
        cols[i] = (int)mod((int64_t)i * b, d);
    }
    r.placement = BasisChangeMatrix::from_permutation(cols, b);

    std::vector<int> first_in_col(d, -1);
    std::vector<int> first_in_diag(d, -1);
    for (int i = 0; i < d; i++) {
        int c = cols[i];
        if (first_in_col[c] >= 0) {
            r.violations.push_back({KnightViolation::Kind::kColumnCollision, first_in_col[c], i, c});
        } else {
            first_in_col[c] = i;
        }
        int t = (int)mod((int64_t)c - i, d);
        if (first_in_diag[t] >= 0) {
            r.violations.push_back({KnightViolation::Kind::kDiagonalCollision, first_in_diag[t], i, t});
        } else {
            first_in_diag[t] = i;
        }
    }
    return r;
}

BasisChangeMatrix shift_compose(int s, const BasisChangeMatrix &m) {
    BasisChangeMatrix out = m;
    for (int i = 0; i < m.d; i++) {
        out.ones[i] = m.ones[(size_t)mod((int64_t)i - s, m.d)];
    }
    return out;
}

DiagonalReport verify_diagonal_property(const BasisChangeMatrix &m) {
    std::vector<int64_t> c(m.d, 0);
    for (int s = 0; s < m.d; s++) {
        BasisChangeMatrix p = shift_compose(s, m);
        for (int i = 0; i < m.d; i++) {
            int entry = p.at(i, i);
            c[s] += (int64_t)entry * entry;
        }
    }
    DiagonalReport r{CsVector(m.d, c)};
    r.unit_diagonals = std::all_of(c.begin(), c.end(), [](int64_t x) {
        return x == 1;
    });
    r.vanishing = vanishing_sum_check(r.c);
    r.pass = r.unit_diagonals;
    return r;
}

KnightCount count_knight_unitaries(Dimension dim) {
    int d = dim.value();
    if (!dim.is_prime()) {
        throw std::invalid_argument("count_knight_unitaries: d must be prime");
    }
    if (d > kMaxKnightSearchDimension) {
        throw ResourceLimitError(
            "count_knight_unitaries: exhaustive search limited to d <= " +
            std::to_string(kMaxKnightSearchDimension));
    }
    KnightCount out;
    out.d = d;
    out.expected = d - 2;

    std::vector<int> cols(d);
    std::iota(cols.begin(), cols.end(), 0);
    std::set<std::vector<int>> found;
    do {
        std::vector<bool> diag(d, false);
        bool ok = true;
        for (int i = 0; i < d && ok; i++) {
            int t = (int)mod((int64_t)cols[i] - i, d);
            ok = !diag[t];
            diag[t] = true;
        }
        if (ok) {
            out.matrices.push_back(BasisChangeMatrix::from_permutation(cols));
            found.insert(cols);
        }
    } while (std::next_permutation(cols.begin() + 1, cols.end()));

    std::set<std::vector<int>> constructed;
    for (int b = 2; b < d; b++) {
        auto k = knight_move_unitary(d, b);
        if (auto p = k.placement.as_permutation(); k.valid() && p) {
            constructed.insert(*p);
        }
    }
    out.count_matches = out.count() == out.expected;
    out.set_matches = found == constructed;
    return out;
}

}  // namespace qmub

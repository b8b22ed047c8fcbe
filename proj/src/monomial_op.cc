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

#include "qudit_mub/monomial_op.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "qudit_mub/errors.h"

namespace qmub {

Turn Turn::make(int64_t num, int64_t den) {
    if (den <= 0) {
        throw std::invalid_argument("Turn: denominator must be positive");
    }
    num = mod(num, den);
    int64_t g = gcd(num, den);
    if (g == 0) {
        g = den;
    }
    return Turn{num / g, den / g};
}

Turn Turn::operator+(const Turn &other) const {
    return make(num * other.den + other.num * den, den * other.den);
}

Turn Turn::operator-(const Turn &other) const {
    return make(num * other.den - other.num * den, den * other.den);
}

std::complex<double> Turn::to_complex() const {
    return root_of_unity(num, den);
}

std::strong_ordering Turn::operator<=>(const Turn &other) const {
    // Both are reduced fractions in [0, 1).
    return num * other.den <=> other.num * den;
}

MonomialOperator::MonomialOperator(int d, std::vector<int> perm, std::vector<int> phase)
    : d_(d), perm_(std::move(perm)), phase_(std::move(phase)) {
    if (d < 1) {
        throw std::invalid_argument("MonomialOperator: dimension must be positive");
    }
    if ((int)perm_.size() != d || (int)phase_.size() != d) {
        throw std::invalid_argument("MonomialOperator: perm and phase must have length d");
    }
    std::vector<bool> seen(d, false);
    for (int n = 0; n < d; n++) {
        int p = perm_[n];
        if (p < 0 || p >= d || seen[p]) {
            throw std::invalid_argument("MonomialOperator: perm is not a bijection on {0..d-1}");
        }
        seen[p] = true;
        phase_[n] = (int)mod(phase_[n], d);
    }
}

MonomialOperator MonomialOperator::identity(int d) {
    std::vector<int> perm(d);
    for (int n = 0; n < d; n++) {
        perm[n] = n;
    }
    return MonomialOperator(d, std::move(perm), std::vector<int>(d, 0));
}

bool MonomialOperator::is_identity() const {
    for (int n = 0; n < d_; n++) {
        if (perm_[n] != n || phase_[n] != 0) {
            return false;
        }
    }
    return true;
}

static void require_same_dim(const MonomialOperator &a, const MonomialOperator &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(
            std::string(what) + ": dimension mismatch " + std::to_string(a.dim()) + " vs " +
            std::to_string(b.dim()));
    }
}

MonomialOperator multiply(const MonomialOperator &a, const MonomialOperator &b) {
    require_same_dim(a, b, "multiply");
    int d = a.dim();
    std::vector<int> perm(d);
    std::vector<int> phase(d);
    for (int n = 0; n < d; n++) {
        int mid = b.perm()[n];
        perm[n] = a.perm()[mid];
        phase[n] = b.phase()[n] + a.phase()[mid];
    }
    return MonomialOperator(d, std::move(perm), std::move(phase));
}

MonomialOperator adjoint(const MonomialOperator &a) {
    int d = a.dim();
    std::vector<int> perm(d);
    std::vector<int> phase(d);
    for (int n = 0; n < d; n++) {
        int m = a.perm()[n];
        perm[m] = n;
        phase[m] = -a.phase()[n];
    }
    return MonomialOperator(d, std::move(perm), std::move(phase));
}

MonomialOperator power(const MonomialOperator &a, int exponent) {
    if (exponent < 0) {
        return power(adjoint(a), -exponent);
    }
    MonomialOperator result = MonomialOperator::identity(a.dim());
    MonomialOperator base = a;
    while (exponent > 0) {
        if (exponent & 1) {
            result = multiply(result, base);
        }
        base = multiply(base, base);
        exponent >>= 1;
    }
    return result;
}

MonomialOperator scale(const MonomialOperator &a, PhaseExp k) {
    if (k.d() != a.dim()) {
        throw DimensionMismatch("scale: phase modulus differs from operator dimension");
    }
    std::vector<int> phase = a.phase();
    for (int &p : phase) {
        p += k.k();
    }
    return MonomialOperator(a.dim(), a.perm(), std::move(phase));
}

MonomialOperator tensor_product(const MonomialOperator &a, const MonomialOperator &b) {
    int da = a.dim();
    int db = b.dim();
    int d = da * db;
    std::vector<int> perm(d);
    std::vector<int> phase(d);
    for (int na = 0; na < da; na++) {
        for (int nb = 0; nb < db; nb++) {
            int n = na * db + nb;
            perm[n] = a.perm()[na] * db + b.perm()[nb];
            // omega_a^p * omega_b^q = omega_{ab}^{p*db + q*da}
            phase[n] = (int)mod((int64_t)a.phase()[na] * db + (int64_t)b.phase()[nb] * da, d);
        }
    }
    return MonomialOperator(d, std::move(perm), std::move(phase));
}

CyclotomicInteger trace(const MonomialOperator &a) {
    CyclotomicInteger t(a.dim());
    for (int n = 0; n < a.dim(); n++) {
        if (a.perm()[n] == n) {
            t.add_root(a.phase()[n]);
        }
    }
    return t;
}

HsInner hs_inner(const MonomialOperator &a, const MonomialOperator &b) {
    require_same_dim(a, b, "hs_inner");
    // Tr[A B^dagger] = sum over n with perm_A(n) == perm_B(n) of omega^{phase_A(n) - phase_B(n)}.
    CyclotomicInteger t(a.dim());
    for (int n = 0; n < a.dim(); n++) {
        if (a.perm()[n] == b.perm()[n]) {
            t.add_root((int64_t)a.phase()[n] - b.phase()[n]);
        }
    }
    return HsInner{std::move(t)};
}

std::vector<PermutationCycle> cycle_decomposition(const MonomialOperator &a) {
    int d = a.dim();
    std::vector<bool> visited(d, false);
    std::vector<PermutationCycle> out;
    for (int start = 0; start < d; start++) {
        if (visited[start]) {
            continue;
        }
        PermutationCycle c{{}, 0};
        int64_t acc = 0;
        int n = start;
        while (!visited[n]) {
            visited[n] = true;
            c.positions.push_back(n);
            acc += a.phase()[n];
            n = a.perm()[n];
        }
        c.accumulated_phase = (int)mod(acc, d);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::complex<double>> SpectrumReport::complex_eigenvalues() const {
    std::vector<std::complex<double>> out;
    out.reserve(eigenvalues.size());
    for (const auto &t : eigenvalues) {
        out.push_back(t.to_complex());
    }
    return out;
}

namespace {

// Eigenvalue turn (P + j d) / (d L) of the j-th solution of lambda^L = omega^P.
Turn cycle_eigen_turn(int d, int64_t length, int64_t accumulated, int64_t j) {
    return Turn::make(accumulated + j * d, (int64_t)d * length);
}

// Splits t = g + k/d with g in [0, 1/d); returns {g, k}.
std::pair<Turn, int> split_by_dnary_grid(const Turn &t, int d) {
    int64_t k = (t.num * d) / t.den;
    return {Turn::make(t.num * d - k * t.den, t.den * d), (int)k};
}

}  // namespace

SpectrumReport spectrum(const MonomialOperator &a) {
    int d = a.dim();
    SpectrumReport r;
    for (const auto &c : cycle_decomposition(a)) {
        int64_t len = (int64_t)c.positions.size();
        for (int64_t j = 0; j < len; j++) {
            r.eigenvalues.push_back(cycle_eigen_turn(d, len, c.accumulated_phase, j));
        }
    }
    std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
    for (const auto &t : r.eigenvalues) {
        if (!r.multiplicities.empty() && r.multiplicities.back().first == t) {
            r.multiplicities.back().second++;
        } else {
            r.multiplicities.emplace_back(t, 1);
        }
    }

    auto [g, k0] = split_by_dnary_grid(r.eigenvalues[0], d);
    std::vector<bool> hit(d, false);
    bool dnary = true;
    std::vector<PhaseExp> exps;
    for (const auto &t : r.eigenvalues) {
        auto [gt, k] = split_by_dnary_grid(t, d);
        if (!(gt == g) || hit[k]) {
            dnary = false;
            break;
        }
        hit[k] = true;
        exps.emplace_back(k, d);
    }
    r.is_dnary = dnary;
    if (dnary) {
        r.global_phase = g;
        r.dnary_exponents = std::move(exps);
    }
    return r;
}

std::complex<double> OrderedEigenbasis::eigenvalue(int k) const {
    return (global_phase + Turn::make(k, d)).to_complex();
}

OrderedEigenbasis eigenbasis(const MonomialOperator &a) {
    int d = a.dim();
    SpectrumReport spec = spectrum(a);
    if (!spec.is_dnary) {
        throw NotDnaryError("eigenbasis: operator spectrum is not d-nary, eigenbasis ordering is undefined");
    }
    OrderedEigenbasis out;
    out.d = d;
    out.global_phase = spec.global_phase;
    out.vectors = Matrix::Zero(d, d);
    for (const auto &c : cycle_decomposition(a)) {
        int64_t len = (int64_t)c.positions.size();
        double norm = 1.0 / std::sqrt((double)len);
        for (int64_t j = 0; j < len; j++) {
            int64_t lam_num = c.accumulated_phase + j * d;  // lambda = exp(2 pi i lam_num / (d len))
            Turn lam = Turn::make(lam_num, (int64_t)d * len);
            int k = split_by_dnary_grid(lam, d).second;
            int64_t acc = 0;
            for (int64_t t = 0; t < len; t++) {
                int n = c.positions[t];
                // component_t = lambda^{-t} * omega^{acc_t} / sqrt(len)
                Turn comp = Turn::make(acc * len - t * lam_num, (int64_t)d * len);
                out.vectors(n, k) = norm * comp.to_complex();
                acc += a.phase()[n];
            }
        }
    }
    return out;
}

Matrix to_dense(const MonomialOperator &a) {
    int d = a.dim();
    Matrix m = Matrix::Zero(d, d);
    for (int n = 0; n < d; n++) {
        m(a.perm()[n], n) = root_of_unity(a.phase()[n], d);
    }
    return m;
}

FromDenseResult from_dense(const Matrix &m, double tol) {
    FromDenseResult res;
    if (m.rows() != m.cols() || m.rows() < 1) {
        res.reason = MonomialRejection::kNotSquare;
        res.detail = "matrix is not square";
        return res;
    }
    int d = (int)m.rows();
    std::vector<int> perm(d, -1);
    std::vector<int> phase(d, 0);
    std::vector<int> row_count(d, 0);
    for (int n = 0; n < d; n++) {
        int nonzero = 0;
        for (int r = 0; r < d; r++) {
            if (std::abs(m(r, n)) > tol) {
                nonzero++;
                perm[n] = r;
                row_count[r]++;
            }
        }
        if (nonzero != 1) {
            res.reason = MonomialRejection::kNotMonomial;
            res.detail = "column " + std::to_string(n) + " has " + std::to_string(nonzero) + " nonzero entries";
            return res;
        }
    }
    for (int r = 0; r < d; r++) {
        if (row_count[r] != 1) {
            res.reason = MonomialRejection::kNotMonomial;
            res.detail = "row " + std::to_string(r) + " has " + std::to_string(row_count[r]) + " nonzero entries";
            return res;
        }
    }
    for (int n = 0; n < d; n++) {
        std::complex<double> x = m(perm[n], n);
        if (std::abs(std::abs(x) - 1.0) > tol) {
            res.reason = MonomialRejection::kNotUnitModulus;
            res.detail = "entry in column " + std::to_string(n) + " has modulus " + std::to_string(std::abs(x));
            return res;
        }
        double turns = std::arg(x) / (2 * std::numbers::pi) * d;
        int64_t k = (int64_t)std::llround(turns);
        if (std::abs(x - root_of_unity(k, d)) > tol) {
            res.reason = MonomialRejection::kNotDnaryPhase;
            res.detail = "entry in column " + std::to_string(n) + " is not a d-th root of unity";
            return res;
        }
        phase[n] = (int)mod(k, d);
    }
    int g = phase[0];
    for (auto &p : phase) {
        p = (int)mod((int64_t)p - g, d);
    }
    res.op = MonomialOperator(d, std::move(perm), std::move(phase));
    res.global_phase = PhaseExp(g, d);
    return res;
}

std::string rejection_name(MonomialRejection r) {
    switch (r) {
        case MonomialRejection::kAccepted:
            return "accepted";
        case MonomialRejection::kNotSquare:
            return "not-square";
        case MonomialRejection::kNotMonomial:
            return "not-monomial";
        case MonomialRejection::kNotUnitModulus:
            return "not-unit-modulus";
        case MonomialRejection::kNotDnaryPhase:
            return "not-d-nary-phase";
    }
    return "unknown";
}

}  // namespace qmub

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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

#include "gtest/gtest.h"
#include "qudit_mub/errors.h"
#include "qudit_mub/random.h"

using namespace qmub;

namespace {

MonomialOperator random_monomial(int d, CounterRng &rng, uint64_t &ctr) {
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = d - 1; k > 0; k--) {
        std::swap(perm[k], perm[rng.bits(0, ctr++) % (k + 1)]);
    }
    std::vector<int> phase(d);
    for (auto &p : phase) {
        p = (int)(rng.bits(1, ctr++) % d);
    }
    return MonomialOperator(d, perm, phase);
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); i++) {
        for (int j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double max_abs(const Matrix &m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace

TEST(monomial_op, constructor_validates) {
    EXPECT_THROW(MonomialOperator(3, {0, 0, 1}, {0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(MonomialOperator(3, {0, 1}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(MonomialOperator(3, {0, 1, 3}, {0, 0, 0}), std::invalid_argument);
    MonomialOperator m(3, {1, 2, 0}, {-1, 4, 3});
    EXPECT_EQ(m.phase(), (std::vector<int>{2, 1, 0}));
}

TEST(monomial_op, algebra_matches_dense) {
    CounterRng rng(3);
    uint64_t ctr = 0;
    for (int d = 2; d <= 8; d++) {
        for (int t = 0; t < 20; t++) {
            auto a = random_monomial(d, rng, ctr);
            auto b = random_monomial(d, rng, ctr);
            Matrix da = to_dense(a);
            Matrix db = to_dense(b);
            EXPECT_LT(max_abs(to_dense(multiply(a, b)) - da * db), 1e-12);
            EXPECT_LT(max_abs(to_dense(adjoint(a)) - da.adjoint()), 1e-12);
            EXPECT_LT(max_abs(to_dense(power(a, 3)) - da * da * da), 1e-12);
            EXPECT_LT(max_abs(to_dense(power(a, -2)) - (da * da).adjoint()), 1e-12);
            EXPECT_TRUE(power(a, 0).is_identity());
            EXPECT_LT(max_abs(to_dense(scale(a, PhaseExp(1, d))) - root_of_unity(1, d) * da), 1e-12);
            EXPECT_LT(std::abs(trace(a).to_complex() - da.trace()), 1e-12);
            std::complex<double> hs = (da * db.adjoint()).trace() / (double)d;
            EXPECT_LT(std::abs(hs_inner(a, b).value() - hs), 1e-12);
            EXPECT_EQ(hs_inner(a, b).is_zero(), std::abs(hs) < 1e-9);
            EXPECT_TRUE(hs_inner(a, a).is_one());
        }
    }
}

TEST(monomial_op, tensor_product_matches_kron) {
    CounterRng rng(5);
    uint64_t ctr = 0;
    for (auto [da, db] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 2}, {5, 2}}) {
        auto a = random_monomial(da, rng, ctr);
        auto b = random_monomial(db, rng, ctr);
        auto t = tensor_product(a, b);
        EXPECT_EQ(t.dim(), da * db);
        EXPECT_LT(max_abs(to_dense(t) - kron(to_dense(a), to_dense(b))), 1e-12);
    }
}

TEST(monomial_op, spectrum_matches_eigen_solver) {
    CounterRng rng(7);
    uint64_t ctr = 0;
    for (int d = 2; d <= 8; d++) {
        for (int t = 0; t < 20; t++) {
            auto a = random_monomial(d, rng, ctr);
            Eigen::ComplexEigenSolver<Matrix> es(to_dense(a));
            std::vector<std::complex<double>> got = spectrum(a).complex_eigenvalues();
            std::vector<std::complex<double>> want(es.eigenvalues().data(), es.eigenvalues().data() + d);
            ASSERT_EQ(got.size(), want.size());
            for (const auto &w : want) {
                auto it = std::min_element(got.begin(), got.end(), [&](auto x, auto y) {
                    return std::abs(x - w) < std::abs(y - w);
                });
                EXPECT_LT(std::abs(*it - w), 1e-9);
                got.erase(it);
            }
        }
    }
}

TEST(monomial_op, spectrum_multiplicities) {
    auto r = spectrum(MonomialOperator::identity(3));
    EXPECT_EQ(r.eigenvalues.size(), 3u);
    ASSERT_EQ(r.multiplicities.size(), 1u);
    EXPECT_EQ(r.multiplicities[0].first, Turn::make(0, 1));
    EXPECT_EQ(r.multiplicities[0].second, 3);
    EXPECT_FALSE(r.is_dnary);
}

TEST(monomial_op, dnary_up_to_global_phase) {
    // X Z for d = 2 has eigenvalues +-i
    MonomialOperator xz(2, {1, 0}, {0, 1});
    auto r = spectrum(xz);
    EXPECT_TRUE(r.is_dnary);
    EXPECT_EQ(r.global_phase, Turn::make(1, 4));
    MonomialOperator x3(3, {1, 2, 0}, {0, 0, 0});
    EXPECT_TRUE(spectrum(x3).is_dnary);
    EXPECT_EQ(spectrum(x3).global_phase, Turn::make(0, 1));
    MonomialOperator swap3(3, {1, 0, 2}, {0, 0, 0});
    EXPECT_FALSE(spectrum(swap3).is_dnary);
}

TEST(monomial_op, eigenbasis_is_orthonormal_and_diagonalizes) {
    std::vector<MonomialOperator> ops{
        MonomialOperator(2, {1, 0}, {0, 1}),
        MonomialOperator(3, {1, 2, 0}, {0, 1, 2}),
        MonomialOperator(5, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}),
        MonomialOperator(5, {2, 3, 4, 0, 1}, {0, 2, 4, 1, 3}),
        MonomialOperator(7, {1, 2, 3, 4, 5, 6, 0}, {0, 3, 6, 2, 5, 1, 4}),
    };
    for (const auto &op : ops) {
        auto eb = eigenbasis(op);
        int d = op.dim();
        Matrix dense = to_dense(op);
        EXPECT_LT(max_abs(eb.vectors.adjoint() * eb.vectors - Matrix::Identity(d, d)), 1e-12);
        for (int k = 0; k < d; k++) {
            Vector v = eb.vector(k);
            EXPECT_LT(max_abs(dense * v - eb.eigenvalue(k) * v), 1e-12);
            int first = 0;
            while (std::abs(v[first]) < 1e-12) {
                first++;
            }
            EXPECT_NEAR(v[first].imag(), 0, 1e-12);
            EXPECT_GT(v[first].real(), 0);
        }
    }
    EXPECT_THROW(eigenbasis(MonomialOperator::identity(3)), NotDnaryError);
}

TEST(monomial_op, cycle_decomposition_accumulates_phase) {
    MonomialOperator m(4, {1, 0, 3, 2}, {1, 2, 0, 3});
    auto cycles = cycle_decomposition(m);
    ASSERT_EQ(cycles.size(), 2u);
    EXPECT_EQ(cycles[0].positions, (std::vector<int>{0, 1}));
    EXPECT_EQ(cycles[0].accumulated_phase, 3);
    EXPECT_EQ(cycles[1].positions, (std::vector<int>{2, 3}));
    EXPECT_EQ(cycles[1].accumulated_phase, 3);
}

TEST(monomial_op, from_dense_round_trip) {
    CounterRng rng(9);
    uint64_t ctr = 0;
    for (int d = 2; d <= 7; d++) {
        auto a = random_monomial(d, rng, ctr);
        auto r = from_dense(to_dense(a));
        ASSERT_TRUE(r) << r.detail;
        EXPECT_EQ(r.op->phase()[0], 0);
        EXPECT_EQ(*r.global_phase, PhaseExp(a.phase()[0], d));
        EXPECT_EQ(scale(*r.op, *r.global_phase), a);
    }
}

TEST(monomial_op, from_dense_rejections) {
    EXPECT_EQ(from_dense(Matrix::Zero(2, 3)).reason, MonomialRejection::kNotSquare);
    Matrix full = Matrix::Ones(3, 3) / std::sqrt(3.0);
    EXPECT_EQ(from_dense(full).reason, MonomialRejection::kNotMonomial);
    Matrix half = Matrix::Identity(3, 3) * 0.5;
    EXPECT_EQ(from_dense(half).reason, MonomialRejection::kNotUnitModulus);
    Matrix tilted = Matrix::Identity(3, 3);
    tilted(1, 1) = std::polar(1.0, 0.1);
    auto r = from_dense(tilted);
    EXPECT_EQ(r.reason, MonomialRejection::kNotDnaryPhase);
    EXPECT_EQ(rejection_name(r.reason), "not-d-nary-phase");
    EXPECT_EQ(rejection_name(MonomialRejection::kNotMonomial), "not-monomial");
}

TEST(monomial_op, turn_reduces) {
    EXPECT_EQ(Turn::make(2, 4), Turn::make(1, 2));
    EXPECT_EQ(Turn::make(5, 4), Turn::make(1, 4));
    EXPECT_EQ(Turn::make(-1, 4), Turn::make(3, 4));
    EXPECT_LT(Turn::make(1, 4), Turn::make(1, 2));
}

TEST(monomial_op, dimension_mismatch) {
    EXPECT_THROW(multiply(MonomialOperator::identity(2), MonomialOperator::identity(3)), DimensionMismatch);
    EXPECT_THROW(hs_inner(MonomialOperator::identity(2), MonomialOperator::identity(3)), DimensionMismatch);
}

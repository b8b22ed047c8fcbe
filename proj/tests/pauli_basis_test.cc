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

#include "qudit_mub/pauli_basis.h"

#include "gtest/gtest.h"
#include "qudit_mub/errors.h"

using namespace qmub;

namespace {

double max_abs(const Matrix &m) {
    return m.cwiseAbs().maxCoeff();
}

std::vector<BasisElement> elements_of(const OperatorBasis &b) {
    return b.elements();
}

}  // namespace

TEST(pauli_basis, x_and_z_act_as_shift_and_clock) {
    for (int d : {2, 3, 5}) {
        Matrix x = to_dense(make_X(d));
        Matrix z = to_dense(make_Z(d));
        for (int n = 0; n < d; n++) {
            EXPECT_EQ(x((n + 1) % d, n), std::complex<double>(1, 0));
            EXPECT_LT(std::abs(z(n, n) - root_of_unity(n, d)), 1e-15);
        }
        for (int a = 0; a < d; a++) {
            for (int b = 0; b < d; b++) {
                Matrix want = Matrix::Identity(d, d);
                for (int k = 0; k < a; k++) {
                    want = x * want;
                }
                for (int k = 0; k < b; k++) {
                    want = want * z;
                }
                EXPECT_LT(max_abs(to_dense(make_pauli(d, a, b)) - want), 1e-12);
            }
        }
    }
}

TEST(pauli_basis, prime_bases_pass_audit) {
    for (int d : {2, 3, 5, 7}) {
        auto basis = build_basis(d);
        EXPECT_EQ(basis.size(), (size_t)d * d);
        EXPECT_TRUE(basis.element(0).op.is_identity());
        EXPECT_TRUE(basis.element(0).label.is_identity());
        auto audit = audit_basis(basis);
        EXPECT_TRUE(audit.pass()) << d;
        EXPECT_TRUE(audit.failures.empty());
    }
}

TEST(pauli_basis, gram_matches_dense_oracle) {
    for (auto dims : std::vector<std::vector<int>>{{3}, {2, 3}, {2, 2}}) {
        auto basis = build_tensor_basis(dims);
        int D = basis.total_dim();
        for (size_t i = 0; i < basis.size(); i++) {
            Matrix mi = to_dense(basis.element(i).op);
            EXPECT_NEAR(std::abs(mi.trace()), i == 0 ? D : 0.0, 1e-12);
            for (size_t j = 0; j < basis.size(); j++) {
                Matrix mj = to_dense(basis.element(j).op);
                std::complex<double> g = (mi * mj.adjoint()).trace() / (double)D;
                EXPECT_LT(std::abs(g - (i == j ? 1.0 : 0.0)), 1e-12);
                EXPECT_EQ(hs_inner(basis.element(i).op, basis.element(j).op).is_zero(), i != j);
            }
        }
    }
}

TEST(pauli_basis, non_prime_rejected) {
    EXPECT_THROW(build_basis(4), std::invalid_argument);
    EXPECT_THROW(build_basis(6), std::invalid_argument);
    EXPECT_THROW(build_tensor_basis({}), std::invalid_argument);
}

TEST(pauli_basis, composite_routes_through_factors) {
    auto b6 = build_composite_basis(6);
    EXPECT_EQ(b6.dims(), (std::vector<int>{2, 3}));
    EXPECT_EQ(b6.size(), 36u);
    EXPECT_TRUE(audit_basis(b6).pass());
    auto b4 = build_composite_basis(4);
    EXPECT_EQ(b4.dims(), (std::vector<int>{2, 2}));
    EXPECT_TRUE(audit_basis(b4).pass());
    EXPECT_EQ(b6.phase_order(), 6);
    EXPECT_EQ(build_tensor_basis({3, 3}).phase_order(), 3);
}

TEST(pauli_basis, tensor_basis_labels_are_sorted) {
    auto basis = build_tensor_basis({2, 3});
    for (size_t i = 1; i < basis.size(); i++) {
        EXPECT_LT(basis.element(i - 1).label, basis.element(i).label);
    }
    for (size_t i = 0; i < basis.size(); i++) {
        EXPECT_EQ(basis.element(i).op, make_pauli(basis.element(i).label));
        EXPECT_EQ(basis.index_of(basis.element(i).label), i);
    }
}

TEST(pauli_basis, commutation_phase_matches_direct_product) {
    for (auto dims : std::vector<std::vector<int>>{{2}, {3}, {5}, {2, 3}, {3, 3}}) {
        auto basis = build_tensor_basis(dims);
        int D = basis.total_dim();
        for (const auto &e1 : basis.elements()) {
            for (const auto &e2 : basis.elements()) {
                PhaseExp t = commutation_phase(e1.label, e2.label);
                EXPECT_EQ(t.d(), D);
                auto lhs = multiply(e1.op, e2.op);
                auto rhs = scale(multiply(e2.op, e1.op), t);
                EXPECT_EQ(lhs, rhs) << e1.label.str() << " " << e2.label.str();
            }
        }
    }
}

TEST(pauli_basis, commutation_phase_x_z) {
    EXPECT_EQ(commutation_phase(PauliLabel(1, 0, 3), PauliLabel(0, 1, 3)), PhaseExp(2, 3));
    EXPECT_EQ(commutation_phase(PauliLabel(1, 0, 2), PauliLabel(0, 1, 2)), PhaseExp(1, 2));
    EXPECT_EQ(commutation_phase(PauliLabel(1, 1, 5), PauliLabel(2, 2, 5)), PhaseExp(0, 5));
}

TEST(pauli_basis, label_str) {
    PauliLabel l({{1, 0, 2}, {0, 1, 3}});
    EXPECT_EQ(l.str(), "(1,0),(0,1)");
    EXPECT_EQ(l.total_dim(), 6);
    EXPECT_FALSE(l.is_identity());
}

TEST(pauli_basis, find_scaled) {
    auto basis = build_basis(3);
    auto x = make_X(3);
    auto hit = basis.find_scaled(scale(x, PhaseExp(2, 3)));
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(basis.element(hit->index).label, PauliLabel(1, 0, 3));
    EXPECT_EQ(hit->phase, PhaseExp(2, 3));
    MonomialOperator swap(3, {1, 0, 2}, {0, 0, 0});
    EXPECT_FALSE(basis.find_scaled(swap).has_value());
}

TEST(pauli_basis, audit_reports_defects) {
    auto good = build_basis(3);
    auto elems = elements_of(good);
    elems[2].op = elems[1].op;
    auto dup = audit_basis(OperatorBasis({3}, elems));
    EXPECT_FALSE(dup.orthonormal);
    EXPECT_FALSE(dup.pass());
    EXPECT_FALSE(dup.failures.empty());

    auto short_elems = elements_of(good);
    short_elems.pop_back();
    auto small = audit_basis(OperatorBasis({3}, short_elems));
    EXPECT_FALSE(small.size_ok);
    EXPECT_FALSE(small.pass());

    auto swapped = elements_of(good);
    std::swap(swapped[1].op, swapped[3].op);
    auto mislabeled = audit_basis(OperatorBasis({3}, swapped));
    EXPECT_TRUE(mislabeled.orthonormal);
    EXPECT_FALSE(mislabeled.labels_consistent);

    auto nontraceless = elements_of(good);
    nontraceless[4].op = MonomialOperator(3, {0, 2, 1}, {0, 0, 0});
    auto bad = audit_basis(OperatorBasis({3}, nontraceless));
    EXPECT_FALSE(bad.traceless);
    EXPECT_FALSE(bad.dnary_spectra);
}

TEST(pauli_basis, basis_constructor_validates) {
    auto elems = elements_of(build_basis(3));
    elems[1].label = elems[2].label;
    EXPECT_THROW(OperatorBasis({3}, elems), std::invalid_argument);
    auto wrong = elements_of(build_basis(2));
    EXPECT_THROW(OperatorBasis({3}, wrong), DimensionMismatch);
}

TEST(pauli_basis, dense_matrix_reconstructs_from_coefficients) {
    for (auto dims : std::vector<std::vector<int>>{{2}, {3}, {5}, {2, 3}, {2, 2}}) {
        auto basis = build_tensor_basis(dims);
        int D = basis.total_dim();
        std::srand(7);
        Matrix a = Matrix::Random(D, D);
        Matrix rebuilt = Matrix::Zero(D, D);
        for (const auto &e : basis.elements()) {
            Matrix m = to_dense(e.op);
            std::complex<double> c = (m.adjoint() * a).trace() / (double)D;
            rebuilt += c * m;
        }
        EXPECT_LT(max_abs(rebuilt - a), 1e-10);
    }
}

TEST(pauli_basis, products_close_on_the_basis) {
    for (int d : {2, 3, 5}) {
        auto basis = build_basis(d);
        for (const auto &e1 : basis.elements()) {
            for (const auto &e2 : basis.elements()) {
                auto hit = basis.find_scaled(multiply(e1.op, e2.op));
                ASSERT_TRUE(hit.has_value());
                Matrix want = to_dense(e1.op) * to_dense(e2.op);
                Matrix got = to_dense(basis.element(hit->index).op) * root_of_unity(hit->phase);
                EXPECT_LT(max_abs(want - got), 1e-12);
            }
        }
    }
}

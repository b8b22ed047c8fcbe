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

#include "qudit_mub/zd_arith.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qudit_mub/errors.h"
#include "qudit_mub/random.h"

using namespace qmub;

namespace {

bool trial_division_prime(int64_t n) {
    if (n < 2) {
        return false;
    }
    for (int64_t k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

std::complex<double> float_sum(const std::vector<int64_t> &c) {
    int d = (int)c.size();
    std::complex<double> s = 0;
    for (int k = 0; k < d; k++) {
        s += (double)c[k] * std::polar(1.0, 2 * std::numbers::pi * k / d);
    }
    return s;
}

void compositions(int parts, int total, std::vector<int64_t> &cur, std::vector<std::vector<int64_t>> &out) {
    if ((int)cur.size() == parts - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; x++) {
        cur.push_back(x);
        compositions(parts, total - x, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST(zd_arith, is_prime_matches_trial_division) {
    for (int64_t n = -3; n < 600; n++) {
        EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
    }
}

TEST(zd_arith, prime_factors_multiply_back) {
    for (int64_t n = 2; n < 400; n++) {
        int64_t prod = 1;
        for (int p : prime_factors(n)) {
            EXPECT_TRUE(trial_division_prime(p));
            prod *= p;
        }
        EXPECT_EQ(prod, n);
    }
    EXPECT_EQ(prime_factors(12), (std::vector<int>{2, 2, 3}));
}

TEST(zd_arith, gcd_lcm_mod) {
    EXPECT_EQ(gcd(12, 18), 6);
    EXPECT_EQ(lcm(4, 6), 12);
    EXPECT_EQ(mod(-1, 3), 2);
    EXPECT_EQ(mod(7, 3), 1);
}

TEST(zd_arith, dimension_rejects_small) {
    EXPECT_THROW(Dimension(1), std::invalid_argument);
    EXPECT_THROW(Dimension(0), std::invalid_argument);
    EXPECT_TRUE(Dimension(7).is_prime());
    EXPECT_FALSE(Dimension(9).is_prime());
}

TEST(zd_arith, phase_exp_arithmetic) {
    EXPECT_EQ(PhaseExp(2, 3) + PhaseExp(2, 3), PhaseExp(1, 3));
    EXPECT_EQ(PhaseExp(-1, 5).k(), 4);
    EXPECT_EQ(-PhaseExp(1, 3), PhaseExp(2, 3));
    EXPECT_EQ(PhaseExp(1, 3) - PhaseExp(2, 3), PhaseExp(2, 3));
    EXPECT_EQ(PhaseExp(2, 7) * 4, PhaseExp(1, 7));
}

TEST(zd_arith, root_of_unity_quarter_turns_exact) {
    EXPECT_EQ(root_of_unity(1, 4), std::complex<double>(0, 1));
    EXPECT_EQ(root_of_unity(1, 2), std::complex<double>(-1, 0));
    EXPECT_EQ(root_of_unity(3, 4), std::complex<double>(0, -1));
    EXPECT_EQ(root_of_unity(PhaseExp(0, 5)), std::complex<double>(1, 0));
    auto w = root_of_unity(1, 3);
    EXPECT_NEAR(w.real(), -0.5, 1e-15);
    EXPECT_NEAR(w.imag(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(zd_arith, cyclotomic_polynomial_degree_and_root) {
    for (int n = 1; n <= 36; n++) {
        auto phi = cyclotomic_polynomial(n);
        int totient = 0;
        for (int k = 1; k <= n; k++) {
            totient += gcd(k, n) == 1;
        }
        EXPECT_EQ((int)phi.size() - 1, totient) << n;
        std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / n);
        std::complex<double> v = 0;
        for (size_t k = phi.size(); k-- > 0;) {
            v = v * z + (double)phi[k];
        }
        EXPECT_LT(std::abs(v), 1e-9) << n;
    }
    EXPECT_EQ(cyclotomic_polynomial(5), (std::vector<int64_t>{1, 1, 1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<int64_t>{1, 0, -1, 0, 1}));
}

TEST(zd_arith, cyclotomic_integer_zero_test_matches_float) {
    CounterRng rng(11);
    uint64_t ctr = 0;
    for (int d = 2; d <= 16; d++) {
        for (int trial = 0; trial < 300; trial++) {
            std::vector<int64_t> c(d);
            for (auto &x : c) {
                x = (int64_t)(rng.bits(d, ctr++) % 3);
            }
            bool expect = std::abs(float_sum(c)) < 1e-9;
            EXPECT_EQ(CyclotomicInteger(d, c).is_zero(), expect) << CsVector(d, c).str();
            EXPECT_EQ(vanishing_sum_check(CsVector(d, c)), expect);
        }
    }
}

TEST(zd_arith, cyclotomic_integer_algebra) {
    CyclotomicInteger a(6);
    a.add_root(1);
    a.add_root(4);
    EXPECT_TRUE(a.is_zero());
    CyclotomicInteger b(4, {3, 0, 0, 0});
    EXPECT_TRUE(b.equals_integer(3));
    CyclotomicInteger c(4, {3, 1, 0, 1});
    EXPECT_TRUE(c.equals_integer(3));
    EXPECT_FALSE(c.equals_integer(2));
    EXPECT_TRUE((b - c).is_zero());
    EXPECT_EQ(b, c);
    CyclotomicInteger e(3, {1, 2, 0});
    auto z = e.to_complex();
    EXPECT_NEAR(z.real(), 0.0, 1e-12);
    EXPECT_NEAR(z.imag(), std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(std::abs((e + e).to_complex()), 2 * std::sqrt(3.0), 1e-12);
}

TEST(zd_arith, vanishing_sum_examples) {
    EXPECT_TRUE(vanishing_sum_check(CsVector(3, {1, 1, 1})));
    EXPECT_FALSE(vanishing_sum_check(CsVector(3, {3, 0, 0})));
    EXPECT_TRUE(vanishing_sum_check(CsVector(4, {2, 0, 2, 0})));
    EXPECT_TRUE(vanishing_sum_check(CsVector(4, {0, 2, 0, 2})));
    // 2 + i - i = 2
    EXPECT_FALSE(vanishing_sum_check(CsVector(4, {2, 1, 0, 1})));
    EXPECT_THROW(CsVector(3, {1, 1}), std::invalid_argument);
}

TEST(zd_arith, enumeration_matches_float_brute_force) {
    for (int d = 2; d <= 11; d++) {
        std::vector<std::vector<int64_t>> all;
        std::vector<int64_t> cur;
        compositions(d, d, cur, all);
        std::vector<CsVector> expect;
        for (const auto &c : all) {
            if (std::abs(float_sum(c)) < 1e-9) {
                expect.emplace_back(d, c);
            }
        }
        std::sort(expect.begin(), expect.end(), [](const CsVector &a, const CsVector &b) {
            return a.c > b.c;
        });
        EXPECT_EQ(enumerate_vanishing_sums(d), expect) << d;
    }
}

TEST(zd_arith, primes_have_only_the_all_ones_solution) {
    for (int d : {2, 3, 5, 7, 11, 13}) {
        auto sols = enumerate_vanishing_sums(d);
        ASSERT_EQ(sols.size(), 1u) << d;
        EXPECT_EQ(sols[0], CsVector(d, std::vector<int64_t>(d, 1)));
    }
    for (int d : {4, 6, 8, 9, 10, 12}) {
        EXPECT_GT(enumerate_vanishing_sums(d).size(), 1u) << d;
    }
}

TEST(zd_arith, enumeration_d4) {
    auto sols = enumerate_vanishing_sums(4);
    std::vector<CsVector> expect{
        CsVector(4, {2, 0, 2, 0}),
        CsVector(4, {1, 1, 1, 1}),
        CsVector(4, {0, 2, 0, 2}),
    };
    EXPECT_EQ(sols, expect);
}

TEST(zd_arith, enumeration_guard) {
    EXPECT_THROW(enumerate_vanishing_sums(14), ResourceLimitError);
}

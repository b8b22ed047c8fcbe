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

#ifndef QUDIT_MUB_ZD_ARITH_H
#define QUDIT_MUB_ZD_ARITH_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qmub {

/// Exact arithmetic over Z_d and the d-th roots of unity.
///
/// Everything here is integer-valued. Complex numbers only appear when a value is
/// explicitly rendered with `to_complex` / `root_of_unity`.

bool is_prime(int64_t n);

/// Prime factorization with multiplicity, ascending. `prime_factors(12) == {2, 2, 3}`.
std::vector<int> prime_factors(int64_t n);

int64_t gcd(int64_t a, int64_t b);
int64_t lcm(int64_t a, int64_t b);

/// Non-negative remainder.
inline int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// A Hilbert-space dimension d >= 2 with its primality cached.
///
/// Implicitly constructible from an int so call sites read `make_X(3)`; the
/// constructor rejects d < 2.
class Dimension {
   public:
    Dimension(int d);  // NOLINT(google-explicit-constructor)

    int value() const {
        return d_;
    }
    bool is_prime() const {
        return prime_;
    }
    bool operator==(const Dimension &other) const {
        return d_ == other.d_;
    }

   private:
    int d_;
    bool prime_;
};

/// The root of unity omega^k with omega = exp(2 pi i / d), stored as the exponent k in [0, d).
class PhaseExp {
   public:
    PhaseExp(int64_t k, int d);

    int k() const {
        return k_;
    }
    int d() const {
        return d_;
    }

    PhaseExp operator+(const PhaseExp &other) const;
    PhaseExp operator-(const PhaseExp &other) const;
    PhaseExp operator-() const;
    PhaseExp operator*(int64_t factor) const;
    bool operator==(const PhaseExp &other) const = default;

   private:
    int k_;
    int d_;
};

std::complex<double> root_of_unity(PhaseExp p);

/// exp(2 pi i k / d). Quarter turns are returned exactly.
std::complex<double> root_of_unity(int64_t k, int64_t d);

/// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
std::vector<int64_t> cyclotomic_polynomial(int n);

/// An element sum_s c_s omega^s of Z[omega], omega a primitive d-th root of unity.
///
/// Equality is decided exactly by reducing modulo the d-th cyclotomic polynomial.
class CyclotomicInteger {
   public:
    explicit CyclotomicInteger(int d);
    CyclotomicInteger(int d, std::vector<int64_t> coeffs);

    int d() const {
        return d_;
    }
    const std::vector<int64_t> &coeffs() const {
        return coeffs_;
    }

    /// Adds `count` copies of omega^k.
    void add_root(int64_t k, int64_t count = 1);

    CyclotomicInteger operator+(const CyclotomicInteger &other) const;
    CyclotomicInteger operator-(const CyclotomicInteger &other) const;

    bool is_zero() const;
    /// True iff the value equals the rational integer n.
    bool equals_integer(int64_t n) const;
    bool operator==(const CyclotomicInteger &other) const;

    std::complex<double> to_complex() const;

   private:
    int d_;
    std::vector<int64_t> coeffs_;
};

/// Multiplicities c_s attached to the roots omega^s, s = 0..d-1.
struct CsVector {
    CsVector(int d, std::vector<int64_t> c);

    int d;
    std::vector<int64_t> c;

    int64_t total() const;
    std::string str() const;
    bool operator==(const CsVector &other) const = default;
};

/// Exact decision of sum_s c_s omega^s == 0.
bool vanishing_sum_check(const CsVector &v);

/// Largest d accepted by `enumerate_vanishing_sums`.
inline constexpr int kMaxVanishingSumDimension = 13;

/// Every non-negative c with sum c_s = d and sum c_s omega^s = 0, in descending
/// lexicographic order. Throws ResourceLimitError for d > 13.
std::vector<CsVector> enumerate_vanishing_sums(Dimension d);

}  // namespace qmub

#endif

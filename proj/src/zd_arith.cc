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

#include <algorithm>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qudit_mub/errors.h"

namespace qmub {

bool is_prime(int64_t n) {
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

std::vector<int> prime_factors(int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("prime_factors: n must be positive");
    }
    std::vector<int> out;
    for (int64_t p = 2; p * p <= n; p++) {
        while (n % p == 0) {
            out.push_back((int)p);
            n /= p;
        }
    }
    if (n > 1) {
        out.push_back((int)n);
    }
    return out;
}

int64_t gcd(int64_t a, int64_t b) {
    return std::gcd(a, b);
}

int64_t lcm(int64_t a, int64_t b) {
    return std::lcm(a, b);
}

Dimension::Dimension(int d) : d_(d), prime_(false) {
    if (d < 2) {
        throw std::invalid_argument("Dimension must be >= 2, got " + std::to_string(d));
    }
    prime_ = qmub::is_prime(d);
}

PhaseExp::PhaseExp(int64_t k, int d) : k_(0), d_(d) {
    if (d < 1) {
        throw std::invalid_argument("PhaseExp: modulus must be positive");
    }
    k_ = (int)mod(k, d);
}

PhaseExp PhaseExp::operator+(const PhaseExp &other) const {
    if (d_ != other.d_) {
        throw DimensionMismatch("PhaseExp: adding exponents of different moduli");
    }
    return PhaseExp((int64_t)k_ + other.k_, d_);
}

PhaseExp PhaseExp::operator-(const PhaseExp &other) const {
    return *this + (-other);
}

PhaseExp PhaseExp::operator-() const {
    return PhaseExp(-(int64_t)k_, d_);
}

PhaseExp PhaseExp::operator*(int64_t factor) const {
    return PhaseExp(mod(factor, d_) * k_, d_);
}

std::complex<double> root_of_unity(int64_t k, int64_t d) {
    if (d < 1) {
        throw std::invalid_argument("root_of_unity: modulus must be positive");
    }
    k = mod(k, d);
    if ((4 * k) % d == 0) {
        switch ((4 * k) / d) {
            case 0:
                return {1, 0};
            case 1:
                return {0, 1};
            case 2:
                return {-1, 0};
            default:
                return {0, -1};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * (double)k / (double)d);
}

std::complex<double> root_of_unity(PhaseExp p) {
    return root_of_unity(p.k(), p.d());
}

namespace {

// Exact division of integer polynomials by a monic divisor. Lowest degree first.
std::vector<int64_t> poly_divide_exact(std::vector<int64_t> num, const std::vector<int64_t> &den) {
    size_t dn = den.size() - 1;
    if (num.size() < den.size()) {
        return {0};
    }
    std::vector<int64_t> quot(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        int64_t q = num[i];
        quot[i - dn] = q;
        if (q != 0) {
            for (size_t j = 0; j <= dn; j++) {
                num[i - dn + j] -= q * den[j];
            }
        }
    }
    return quot;
}

// Remainder of `poly` modulo the monic `divisor`.
std::vector<int64_t> poly_remainder(std::vector<int64_t> poly, const std::vector<int64_t> &divisor) {
    size_t dn = divisor.size() - 1;
    for (size_t i = poly.size(); i-- > dn;) {
        int64_t q = poly[i];
        if (q != 0) {
            for (size_t j = 0; j <= dn; j++) {
                poly[i - dn + j] -= q * divisor[j];
            }
        }
    }
    poly.resize(std::min(poly.size(), dn));
    return poly;
}

bool is_zero_mod_cyclotomic(int d, const std::vector<int64_t> &coeffs) {
    if (is_prime(d)) {
        // omega^{d-1} = -(1 + omega + ... + omega^{d-2}) leaves coefficients c_s - c_{d-1}.
        return std::all_of(coeffs.begin(), coeffs.end(), [&](int64_t c) {
            return c == coeffs[0];
        });
    }
    auto rem = poly_remainder(coeffs, cyclotomic_polynomial(d));
    return std::all_of(rem.begin(), rem.end(), [](int64_t c) {
        return c == 0;
    });
}

}  // namespace

std::vector<int64_t> cyclotomic_polynomial(int n) {
    if (n < 1) {
        throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    }
    // x^n - 1 divided by Phi_e for every proper divisor e of n.
    std::vector<int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (int e = 1; e < n; e++) {
        if (n % e == 0) {
            poly = poly_divide_exact(poly, cyclotomic_polynomial(e));
        }
    }
    return poly;
}

CyclotomicInteger::CyclotomicInteger(int d) : d_(d), coeffs_(d, 0) {
    if (d < 1) {
        throw std::invalid_argument("CyclotomicInteger: order must be positive");
    }
}

CyclotomicInteger::CyclotomicInteger(int d, std::vector<int64_t> coeffs) : d_(d), coeffs_(std::move(coeffs)) {
    if (d < 1 || (int)coeffs_.size() != d) {
        throw std::invalid_argument("CyclotomicInteger: need exactly d coefficients");
    }
}

void CyclotomicInteger::add_root(int64_t k, int64_t count) {
    coeffs_[mod(k, d_)] += count;
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger &other) const {
    if (d_ != other.d_) {
        throw DimensionMismatch("CyclotomicInteger: different orders");
    }
    CyclotomicInteger out = *this;
    for (int s = 0; s < d_; s++) {
        out.coeffs_[s] += other.coeffs_[s];
    }
    return out;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger &other) const {
    if (d_ != other.d_) {
        throw DimensionMismatch("CyclotomicInteger: different orders");
    }
    CyclotomicInteger out = *this;
    for (int s = 0; s < d_; s++) {
        out.coeffs_[s] -= other.coeffs_[s];
    }
    return out;
}

bool CyclotomicInteger::is_zero() const {
    if (d_ == 1) {
        return coeffs_[0] == 0;
    }
    return is_zero_mod_cyclotomic(d_, coeffs_);
}

bool CyclotomicInteger::equals_integer(int64_t n) const {
    CyclotomicInteger shifted = *this;
    shifted.coeffs_[0] -= n;
    return shifted.is_zero();
}

bool CyclotomicInteger::operator==(const CyclotomicInteger &other) const {
    return (*this - other).is_zero();
}

std::complex<double> CyclotomicInteger::to_complex() const {
    std::complex<double> total = 0;
    for (int s = 0; s < d_; s++) {
        if (coeffs_[s] != 0) {
            total += (double)coeffs_[s] * root_of_unity(s, d_);
        }
    }
    return total;
}

CsVector::CsVector(int d_, std::vector<int64_t> c_) : d(d_), c(std::move(c_)) {
    if ((int)c.size() != d) {
        throw std::invalid_argument("CsVector: need exactly d entries");
    }
    for (int64_t x : c) {
        if (x < 0) {
            throw std::invalid_argument("CsVector: entries must be non-negative");
        }
    }
}

int64_t CsVector::total() const {
    return std::accumulate(c.begin(), c.end(), (int64_t)0);
}

std::string CsVector::str() const {
    std::stringstream ss;
    ss << "(";
    for (size_t k = 0; k < c.size(); k++) {
        ss << (k ? "," : "") << c[k];
    }
    ss << ")";
    return ss.str();
}

bool vanishing_sum_check(const CsVector &v) {
    return CyclotomicInteger(v.d, v.c).is_zero();
}

namespace {

void enumerate_compositions(
    int d, int pos, int64_t remaining, std::vector<int64_t> &cur, std::vector<CsVector> &out) {
    if (pos == d - 1) {
        cur[pos] = remaining;
        if (is_zero_mod_cyclotomic(d, cur)) {
            out.emplace_back(d, cur);
        }
        return;
    }
    for (int64_t v = remaining; v >= 0; v--) {
        cur[pos] = v;
        enumerate_compositions(d, pos + 1, remaining - v, cur, out);
    }
}

}  // namespace

std::vector<CsVector> enumerate_vanishing_sums(Dimension d) {
    if (d.value() > kMaxVanishingSumDimension) {
        throw ResourceLimitError(
            "enumerate_vanishing_sums: d=" + std::to_string(d.value()) + " exceeds the guard d <= " +
            std::to_string(kMaxVanishingSumDimension));
    }
    std::vector<CsVector> out;
    std::vector<int64_t> cur(d.value(), 0);
    enumerate_compositions(d.value(), 0, d.value(), cur, out);
    return out;
}

}  // namespace qmub

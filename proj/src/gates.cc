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

#include "qudit_mub/gates.h"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <numbers>

#include "qudit_mub/errors.h"
#include "qudit_mub/random.h"

namespace qmub {

Matrix fourier_matrix(int d) {
    Matrix f(d, d);
    double norm = 1.0 / std::sqrt((double)d);
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            f(j, k) = norm * root_of_unity((int64_t)j * k, d);
        }
    }
    return f;
}

Matrix phase_gate_matrix(int d) {
    Matrix s = Matrix::Zero(d, d);
    if (d == 2) {
        s(0, 0) = 1;
        s(1, 1) = std::complex<double>(0, 1);
        return s;
    }
    if (d % 2 == 0) {
        throw std::invalid_argument("phase gate defined for d = 2 and odd d only");
    }
    for (int n = 0; n < d; n++) {
        s(n, n) = root_of_unity((int64_t)n * (n - 1) / 2, d);
    }
    return s;
}

Matrix t_gate_matrix(int d) {
    Matrix t = Matrix::Zero(d, d);
    for (int n = 0; n < d; n++) {
        t(n, n) = std::polar(1.0, std::numbers::pi * n / (2.0 * d));
    }
    return t;
}

Matrix csum_matrix(int d) {
    Matrix c = Matrix::Zero(d * d, d * d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            c(i * d + (i + j) % d, i * d + j) = 1;
        }
    }
    return c;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

static Matrix ginibre(int D, uint64_t seed) {
    CounterRng rng(seed);
    Matrix g(D, D);
    for (int i = 0; i < D; i++) {
        for (int j = 0; j < D; j++) {
            uint64_t c = (uint64_t)i * D + j;
            g(i, j) = std::complex<double>(rng.normal(0, c), rng.normal(1, c));
        }
    }
    return g;
}

Matrix random_unitary_matrix(int D, uint64_t seed) {
    Eigen::HouseholderQR<Matrix> qr(ginibre(D, seed));
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < D; k++) {
        std::complex<double> x = r(k, k);
        q.col(k) *= std::abs(x) > 0 ? x / std::abs(x) : 1.0;
    }
    return q;
}

Matrix random_hermitian_exp_matrix(int D, uint64_t seed) {
    Matrix g = ginibre(D, seed);
    Matrix h = (g + g.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(D);
    for (int k = 0; k < D; k++) {
        phases[k] = std::polar(1.0, es.eigenvalues()[k]);
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

static std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t p = s.find(sep, start);
        out.push_back(s.substr(start, p - start));
        if (p == std::string::npos) {
            return out;
        }
        start = p + 1;
    }
}

static int parse_int(const std::string &s, const std::string &context) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw std::invalid_argument("gate '" + context + "': expected an integer, got '" + s + "'");
    }
    return v;
}

static uint64_t parse_seed(const std::string &s, const std::string &context) {
    size_t used = 0;
    uint64_t v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size() || s[0] == '-') {
        throw std::invalid_argument("gate '" + context + "': bad seed '" + s + "'");
    }
    return v;
}

static Matrix single_factor(const std::string &name, int d) {
    if (name == "I") {
        return Matrix::Identity(d, d);
    }
    if (name == "X") {
        return to_dense(make_X(d));
    }
    if (name == "Z") {
        return to_dense(make_Z(d));
    }
    if (name == "F") {
        return fourier_matrix(d);
    }
    if (name == "S") {
        return phase_gate_matrix(d);
    }
    if (name == "T") {
        return t_gate_matrix(d);
    }
    if (name.starts_with("pauli:")) {
        auto ab = split(name.substr(6), ',');
        if (ab.size() != 2) {
            throw std::invalid_argument("gate '" + name + "': expected pauli:a,b");
        }
        return to_dense(make_pauli(d, parse_int(ab[0], name), parse_int(ab[1], name)));
    }
    throw std::invalid_argument("unknown gate '" + name + "'");
}

static Matrix kron_all(const std::vector<Matrix> &parts) {
    Matrix out = parts[0];
    for (size_t k = 1; k < parts.size(); k++) {
        out = kron(out, parts[k]);
    }
    return out;
}

UnitaryGate gate_from_name(const std::string &name, const std::vector<int> &dims) {
    if (dims.empty()) {
        throw std::invalid_argument("gate_from_name: empty dims");
    }
    int D = 1;
    for (int d : dims) {
        if (d < 2) {
            throw std::invalid_argument("gate_from_name: factor dimension must be >= 2");
        }
        D *= d;
    }
    std::vector<Matrix> parts;
    if (name == "CSUM") {
        if (dims.size() != 2 || dims[0] != dims[1]) {
            throw DimensionMismatch("CSUM needs dims d,d");
        }
        return UnitaryGate(dims, csum_matrix(dims[0]));
    }
    if (name.starts_with("random:")) {
        return UnitaryGate(dims, random_unitary_matrix(D, parse_seed(name.substr(7), name)));
    }
    if (name.starts_with("hermitian:")) {
        return UnitaryGate(dims, random_hermitian_exp_matrix(D, parse_seed(name.substr(10), name)));
    }
    if (name.starts_with("tensor:")) {
        auto names = split(name.substr(7), '+');
        if (names.size() != dims.size()) {
            throw DimensionMismatch("gate '" + name + "': one factor gate per dimension expected");
        }
        for (size_t k = 0; k < dims.size(); k++) {
            parts.push_back(single_factor(names[k], dims[k]));
        }
        return UnitaryGate(dims, kron_all(parts));
    }
    if (name.starts_with("pauli:")) {
        auto pairs = split(name.substr(6), ';');
        if (pairs.size() != dims.size()) {
            throw DimensionMismatch("gate '" + name + "': one exponent pair per dimension expected");
        }
        for (size_t k = 0; k < dims.size(); k++) {
            parts.push_back(single_factor("pauli:" + pairs[k], dims[k]));
        }
        return UnitaryGate(dims, kron_all(parts));
    }
    for (int d : dims) {
        parts.push_back(single_factor(name, d));
    }
    return UnitaryGate(dims, kron_all(parts));
}

}  // namespace qmub

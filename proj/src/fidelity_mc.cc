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

#include "qudit_mub/fidelity_mc.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "qudit_mub/errors.h"
#include "qudit_mub/gates.h"
#include "qudit_mub/parallel.h"
#include "qudit_mub/random.h"

namespace qmub {

static int product(const std::vector<int> &dims) {
    if (dims.empty()) {
        throw std::invalid_argument("channel: empty dims");
    }
    int D = 1;
    for (int d : dims) {
        if (d < 2) {
            throw std::invalid_argument("channel: factor dimension must be >= 2");
        }
        D *= d;
    }
    return D;
}

QuantumChannel::QuantumChannel(std::vector<int> dims, std::vector<Matrix> kraus, double tol)
    : dims_(std::move(dims)), dim_(product(dims_)), kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw NotTracePreservingError("channel: no Kraus operators");
    }
    Matrix sum = Matrix::Zero(dim_, dim_);
    for (const auto &k : kraus_) {
        if (k.rows() != dim_ || k.cols() != dim_) {
            throw DimensionMismatch("channel: Kraus operator size differs from product of dims");
        }
        sum += k.adjoint() * k;
    }
    double dev = (sum - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
    if (!(dev < tol)) {
        throw NotTracePreservingError("channel: max |sum K^dagger K - 1| = " + std::to_string(dev));
    }
}

static void check_probability(double p, const char *what) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(what) + " parameter must lie in [0, 1]");
    }
}

QuantumChannel identity_channel(const std::vector<int> &dims) {
    int D = product(dims);
    return QuantumChannel(dims, {Matrix::Identity(D, D)});
}

QuantumChannel depolarizing(const std::vector<int> &dims, double p) {
    check_probability(p, "depolarizing");
    int D = product(dims);
    std::vector<Matrix> kraus{std::sqrt(1 - p) * Matrix::Identity(D, D)};
    if (p > 0) {
        double w = std::sqrt(p) / D;
        for (int a = 0; a < D; a++) {
            for (int b = 0; b < D; b++) {
                kraus.push_back(w * to_dense(make_pauli(D, a, b)));
            }
        }
    }
    return QuantumChannel(dims, std::move(kraus));
}

QuantumChannel local_depolarizing(const std::vector<int> &dims, double p) {
    check_probability(p, "local depolarizing");
    std::vector<Matrix> kraus{Matrix::Identity(1, 1)};
    for (int d : dims) {
        auto factor = depolarizing({d}, p);
        std::vector<Matrix> next;
        for (const auto &a : kraus) {
            for (const auto &b : factor.kraus()) {
                next.push_back(kron(a, b));
            }
        }
        kraus = std::move(next);
    }
    return QuantumChannel(dims, std::move(kraus));
}

QuantumChannel dephasing(const std::vector<int> &dims, double gamma) {
    check_probability(gamma, "dephasing");
    int D = product(dims);
    std::vector<Matrix> kraus{std::sqrt(1 - gamma) * Matrix::Identity(D, D)};
    if (gamma > 0) {
        for (int n = 0; n < D; n++) {
            Matrix k = Matrix::Zero(D, D);
            k(n, n) = std::sqrt(gamma);
            kraus.push_back(k);
        }
    }
    return QuantumChannel(dims, std::move(kraus));
}

QuantumChannel unitary_error(const UnitaryGate &v) {
    return QuantumChannel(v.dims(), {v.matrix()});
}

QuantumChannel after_gate(const QuantumChannel &noise, const UnitaryGate &u) {
    if (noise.dim() != u.dim()) {
        throw DimensionMismatch("after_gate: channel and gate dimensions differ");
    }
    std::vector<Matrix> kraus;
    for (const auto &k : noise.kraus()) {
        kraus.push_back(k * u.matrix());
    }
    return QuantumChannel(noise.dims(), std::move(kraus));
}

Matrix apply_channel(const QuantumChannel &ch, const Matrix &rho) {
    if (rho.rows() != ch.dim() || rho.cols() != ch.dim()) {
        throw DimensionMismatch("apply_channel: operator size differs from channel dimension");
    }
    Matrix out = Matrix::Zero(ch.dim(), ch.dim());
    for (const auto &k : ch.kraus()) {
        out += k * rho * k.adjoint();
    }
    return out;
}

double entanglement_fidelity(const UnitaryGate &u, const QuantumChannel &ch) {
    if (u.dim() != ch.dim()) {
        throw DimensionMismatch("fidelity: gate and channel dimensions differ");
    }
    double D = u.dim();
    double s = 0;
    for (const auto &k : ch.kraus()) {
        s += std::norm((u.matrix().adjoint() * k).trace());
    }
    return s / (D * D);
}

double exact_average_fidelity(const UnitaryGate &u, const QuantumChannel &ch) {
    double D = u.dim();
    return (D * entanglement_fidelity(u, ch) + 1) / (D + 1);
}

RelevanceDistribution relevance_distribution(const UnitaryGate &u, const OperatorBasis &basis) {
    ClassificationReport r = classify(u, basis);
    RelevanceDistribution out;
    int D = basis.total_dim();
    out.dim = D;
    double D2 = (double)D * D;
    if (r.characterizable) {
        for (const auto &m : r.matches) {
            out.entries.push_back({m.source, *m.target, m.phase, 1.0 / D2});
        }
        out.minimal = true;
        out.uniform_denominator = (int64_t)D * D;
        return out;
    }
    std::vector<Vector> coef(basis.size());
    parallel_for(basis.size(), [&](size_t i) {
        coef[i] = conjugation_coefficients(u, i, basis);
    });
    for (size_t i = 0; i < basis.size(); i++) {
        for (size_t j = 0; j < basis.size(); j++) {
            std::complex<double> c = coef[i][(Eigen::Index)j];
            if (std::abs(c) > kSupportTol) {
                out.entries.push_back({i, j, c, std::norm(c) / D2});
            }
        }
    }
    out.minimal = out.entries.size() == basis.size();
    return out;
}

std::pair<Matrix, Vector> product_eigenbasis(const PauliLabel &label) {
    Matrix vecs = Matrix::Identity(1, 1);
    Vector vals = Vector::Ones(1);
    for (const auto &f : label.factors) {
        Matrix fv;
        Vector fl(f.d);
        if (f.a == 0 && f.b == 0) {
            fv = Matrix::Identity(f.d, f.d);
            fl.setOnes();
        } else {
            OrderedEigenbasis eb = eigenbasis(make_pauli(f.d, f.a, f.b));
            fv = eb.vectors;
            for (int k = 0; k < f.d; k++) {
                fl[k] = eb.eigenvalue(k);
            }
        }
        vecs = kron(vecs, fv);
        Vector nv(vals.size() * f.d);
        for (Eigen::Index x = 0; x < vals.size(); x++) {
            for (int k = 0; k < f.d; k++) {
                nv[x * f.d + k] = vals[x] * fl[k];
            }
        }
        vals = nv;
    }
    return {vecs, vals};
}

namespace {

struct Measurement {
    Matrix vectors;
    Vector eigenvalues;
};

Measurement measurement_for(const OperatorBasis &basis, size_t index) {
    const BasisElement &e = basis.element(index);
    if (e.label.factors.empty()) {
        throw std::invalid_argument("shot simulation needs a labelled Pauli basis");
    }
    auto [v, l] = product_eigenbasis(e.label);
    Matrix rebuilt = v * l.asDiagonal() * v.adjoint();
    if ((rebuilt - to_dense(e.op)).cwiseAbs().maxCoeff() > kStructuralTol) {
        throw std::invalid_argument("shot simulation: basis element differs from its label's Pauli operator");
    }
    return {v, l};
}

/// (1/D) sum_k lambda_k sum_l conj(mu_l) f(l|k), f the observed outcome frequencies.
std::complex<double> shot_overlap(
    const QuantumChannel &ch,
    const Measurement &in,
    const Measurement &out,
    int shots,
    const CounterRng &rng,
    uint64_t stream) {
    int D = ch.dim();
    std::complex<double> total = 0;
    std::vector<double> cdf(D);
    for (int k = 0; k < D; k++) {
        Vector psi = in.vectors.col(k);
        Matrix rho = apply_channel(ch, psi * psi.adjoint());
        double acc = 0;
        for (int l = 0; l < D; l++) {
            Vector phi = out.vectors.col(l);
            acc += std::max(0.0, (phi.adjoint() * rho * phi)(0, 0).real());
            cdf[l] = acc;
        }
        std::complex<double> obs = 0;
        for (int t = 0; t < shots; t++) {
            double x = rng.uniform(stream, (uint64_t)k * shots + t) * acc;
            int l = (int)(std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
            l = std::min(l, D - 1);
            obs += std::conj(out.eigenvalues[l]);
        }
        total += in.eigenvalues[k] * obs / (double)shots;
    }
    return total / (double)D;
}

}  // namespace

FidelityEstimate mc_estimate(
    const UnitaryGate &u,
    const QuantumChannel &ch,
    const OperatorBasis &basis,
    uint64_t n,
    uint64_t seed,
    McOptions options) {
    if (n == 0) {
        throw std::invalid_argument("mc_estimate: need at least one sample");
    }
    if (options.shots < 0) {
        throw std::invalid_argument("mc_estimate: shots must be non-negative");
    }
    if (u.dim() != ch.dim() || u.dim() != basis.total_dim()) {
        throw DimensionMismatch("mc_estimate: gate, channel and basis dimensions differ");
    }
    int D = u.dim();
    RelevanceDistribution rel = relevance_distribution(u, basis);
    std::vector<double> cdf;
    double acc = 0;
    for (const auto &e : rel.entries) {
        acc += e.weight;
        cdf.push_back(acc);
    }

    CounterRng rng(seed);
    std::vector<size_t> draws(n);
    for (uint64_t s = 0; s < n; s++) {
        double x = rng.uniform(0, s) * acc;
        size_t k = (size_t)(std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
        draws[s] = std::min(k, rel.entries.size() - 1);
    }

    std::vector<double> score(n);
    if (options.shots == 0) {
        std::vector<size_t> distinct(draws);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::map<size_t, std::vector<size_t>> by_source;
        for (size_t k : distinct) {
            by_source[rel.entries[k].i].push_back(k);
        }
        std::vector<std::pair<size_t, std::vector<size_t>>> groups(by_source.begin(), by_source.end());
        std::vector<double> value(rel.entries.size(), 0.0);
        parallel_for(groups.size(), [&](size_t g) {
            Matrix image = apply_channel(ch, to_dense(basis.element(groups[g].first).op));
            for (size_t k : groups[g].second) {
                const RelevanceEntry &e = rel.entries[k];
                const MonomialOperator &mj = basis.element(e.j).op;
                std::complex<double> y = 0;
                for (int c = 0; c < D; c++) {
                    y += std::conj(root_of_unity(mj.phase()[c], D)) * image(mj.perm()[c], c);
                }
                y /= (double)D;
                value[k] = (y / e.coefficient).real();
            }
        });
        for (uint64_t s = 0; s < n; s++) {
            score[s] = value[draws[s]];
        }
    } else {
        parallel_for(n, [&](size_t s) {
            const RelevanceEntry &e = rel.entries[draws[s]];
            std::complex<double> y = shot_overlap(
                ch, measurement_for(basis, e.i), measurement_for(basis, e.j), options.shots, rng, 1 + s);
            score[s] = (y / e.coefficient).real();
        });
    }

    double sum = 0;
    for (double &x : score) {
        x = (D * x + 1) / (D + 1);
        sum += x;
    }
    double mean = sum / (double)n;
    double ss = 0;
    for (double x : score) {
        ss += (x - mean) * (x - mean);
    }
    FidelityEstimate est;
    est.raw_mean = mean;
    est.mean = std::clamp(mean, 0.0, 1.0);
    est.std_error = n > 1 ? std::sqrt(ss / (double)(n - 1)) / std::sqrt((double)n) : 0.0;
    est.n_samples = n;
    est.seed = seed;
    est.exact_reference = exact_average_fidelity(u, ch);
    est.minimal_support = rel.minimal;
    est.shots = options.shots;
    return est;
}

std::vector<Vector> eigenstate_inputs(const AbelianFamily &f) {
    std::vector<Vector> out;
    for (int k = 0; k < f.eigenbasis.d; k++) {
        out.push_back(f.eigenbasis.vector(k));
    }
    return out;
}

std::vector<Vector> eigenstate_inputs(const std::vector<AbelianFamily> &per_factor) {
    std::vector<Vector> out{Vector::Ones(1)};
    for (const auto &f : per_factor) {
        std::vector<Vector> next;
        for (const auto &v : out) {
            for (const auto &w : eigenstate_inputs(f)) {
                Vector k(v.size() * w.size());
                for (Eigen::Index a = 0; a < v.size(); a++) {
                    k.segment(a * w.size(), w.size()) = v[a] * w;
                }
                next.push_back(k);
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace qmub

// Copyright 2026 The stabgs Authors
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

#include "stabgs/exact.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

namespace stabgs {

namespace {

bool in_sector(DickeSector s, int k) {
    switch (s) {
        case DickeSector::EvenUp: return k % 2 == 0;
        case DickeSector::OddUp: return k % 2 == 1;
        case DickeSector::Mixed: return true;
    }
    return false;
}

void check_spins(int n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("Dicke vector: N must lie in [1, 64]");
}

}  // namespace

const char* sector_name(DickeSector s) {
    switch (s) {
        case DickeSector::EvenUp: return "even";
        case DickeSector::OddUp: return "odd";
        case DickeSector::Mixed: return "mixed";
    }
    return "?";
}

std::vector<int> sector_levels(int n, DickeSector s) {
    std::vector<int> out;
    for (int k = 0; k <= n; ++k)
        if (in_sector(s, k)) out.push_back(k);
    return out;
}

DickeVector::DickeVector(int n, DickeSector sector, Eigen::VectorXd amps)
    : n_(n), sector_(sector), amps_(std::move(amps)) {
    check_spins(n);
    if (amps_.size() != n + 1) throw std::invalid_argument("DickeVector: need N+1 amplitudes");
    for (int k = 0; k <= n; ++k) {
        if (!in_sector(sector, k) && amps_[k] != 0.0) {
            throw std::invalid_argument("DickeVector: weight on k=" + std::to_string(k) + " outside the " +
                                        sector_name(sector) + " sector");
        }
    }
    if (std::abs(amps_.norm() - 1.0) > 1e-10) throw std::invalid_argument("DickeVector: amplitudes are not normalized");
}

DickeVector DickeVector::normalized(int n, DickeSector sector, Eigen::VectorXd amps) {
    const double norm = amps.norm();
    if (!(norm > 1e-14)) throw std::domain_error("DickeVector::normalized: zero vector");
    return DickeVector(n, sector, amps / norm);
}

DickeVector DickeVector::level(int n, int k) {
    check_spins(n);
    if (k < 0 || k > n) throw std::out_of_range("DickeVector::level: k out of range");
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n + 1);
    a[k] = 1.0;
    return DickeVector(n, k % 2 == 0 ? DickeSector::EvenUp : DickeSector::OddUp, a);
}

double fidelity(const DickeVector& a, const DickeVector& b) {
    if (a.num_spins() != b.num_spins()) throw std::invalid_argument("fidelity: Dicke vectors for different N");
    if (a.sector() != b.sector() && a.sector() != DickeSector::Mixed && b.sector() != DickeSector::Mixed) {
        throw std::invalid_argument(std::string("fidelity: Dicke vectors in different sectors (") +
                                    sector_name(a.sector()) + " vs " + sector_name(b.sector()) + ")");
    }
    return std::abs(a.amplitudes().dot(b.amplitudes()));
}

Eigen::MatrixXd dicke_hamiltonian_full(const LmgParams& p) {
    p.validate();
    const int n = p.n;
    const double j = n / 2.0;
    const double v = p.vbar / (n - 1);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        const double m = k - j;
        h(k, k) = m - v * (1 + p.chi) / 2 * (j * (j + 1) - m * m) + v * n * (1 + p.chi) / 4;
        if (k + 2 <= n) {
            const double ladder = std::sqrt((j - m) * (j + m + 1) * (j - m - 1) * (j + m + 2));
            h(k, k + 2) = h(k + 2, k) = -v * (1 - p.chi) / 4 * ladder;
        }
    }
    return h;
}

Eigen::MatrixXd dicke_hamiltonian(const LmgParams& p, DickeSector sector) {
    Eigen::MatrixXd full = dicke_hamiltonian_full(p);
    auto ks = sector_levels(p.n, sector);
    const auto d = static_cast<Eigen::Index>(ks.size());
    Eigen::MatrixXd h(d, d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) h(a, b) = full(ks[static_cast<size_t>(a)], ks[static_cast<size_t>(b)]);
    return h;
}

double dicke_energy(const LmgParams& p, const DickeVector& d) {
    if (d.num_spins() != p.n) throw std::invalid_argument("dicke_energy: N mismatch");
    return d.amplitudes().dot(dicke_hamiltonian_full(p) * d.amplitudes());
}

DickeGroundState ground_state(const LmgParams& p) { return ground_state(p, DickeSector::EvenUp); }

DickeGroundState ground_state(const LmgParams& p, DickeSector sector) {
    if (sector == DickeSector::Mixed) throw std::invalid_argument("ground_state: choose the even or odd sector");
    Eigen::MatrixXd h = dicke_hamiltonian(p, sector);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("ground_state: eigensolver failed for N=" + std::to_string(p.n) +
                                 " vbar=" + std::to_string(p.vbar) + " chi=" + std::to_string(p.chi) +
                                 " (block dimension " + std::to_string(h.rows()) + ")");
    }
    Eigen::VectorXd v = es.eigenvectors().col(0);
    // Sign: lowest-k amplitude positive (k = 0 in the even sector).
    Eigen::Index first = 0;
    while (first + 1 < v.size() && std::abs(v[first]) < 1e-300) ++first;
    if (v[first] < 0) v = -v;
    auto ks = sector_levels(p.n, sector);
    Eigen::VectorXd full = Eigen::VectorXd::Zero(p.n + 1);
    for (size_t a = 0; a < ks.size(); ++a) full[ks[a]] = v[static_cast<Eigen::Index>(a)];
    return {es.eigenvalues()[0], DickeVector::normalized(p.n, sector, full)};
}

DenseGroundState dense_ground_state(const LmgParams& p) {
    p.validate();
    check_dense_qubits(p.n, kMaxDenseGroundStateQubits, "dense_ground_state");
    const int n = p.n;
    const uint64_t dim = uint64_t{1} << n;
    std::vector<int> pos(dim, -1);
    std::vector<uint64_t> states;
    for (uint64_t b = 0; b < dim; ++b) {
        if (std::popcount(b) % 2 == n % 2) {
            pos[b] = static_cast<int>(states.size());
            states.push_back(b);
        }
    }
    Eigen::SparseMatrix<double> full = real_sparse_matrix(build_lmg(p));
    const auto d = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (int c = 0; c < full.outerSize(); ++c) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(full, c); it; ++it) {
            const int r = pos[static_cast<size_t>(it.row())], cc = pos[static_cast<size_t>(it.col())];
            if ((r < 0) != (cc < 0) && it.value() != 0.0) {
                throw std::logic_error("dense_ground_state: Hamiltonian breaks parity");
            }
            if (r < 0 || cc < 0) continue;
            h(r, cc) += it.value();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("dense_ground_state: eigensolver failed");
    Amplitudes amps = Amplitudes::Zero(static_cast<Eigen::Index>(dim));
    for (Eigen::Index a = 0; a < d; ++a) amps[static_cast<Eigen::Index>(states[static_cast<size_t>(a)])] = es.eigenvectors()(a, 0);
    // Same sign convention as the Dicke solver: |1...1> amplitude positive.
    if (amps[static_cast<Eigen::Index>(dim - 1)].real() < 0) amps = -amps;
    return {es.eigenvalues()[0], StateVector::normalized(n, std::move(amps))};
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

StateVector dicke_to_statevector(const DickeVector& d) {
    const int n = d.num_spins();
    check_dense_qubits(n, kMaxStateQubits, "dicke_to_statevector");
    const uint64_t dim = uint64_t{1} << n;
    Amplitudes amps(static_cast<Eigen::Index>(dim));
    std::vector<double> scale(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) scale[static_cast<size_t>(k)] = d[k] / std::sqrt(binomial(n, k));
    for (uint64_t b = 0; b < dim; ++b) {
        const int k = n - std::popcount(b);  // spins up are zeros
        amps[static_cast<Eigen::Index>(b)] = scale[static_cast<size_t>(k)];
    }
    return StateVector::normalized(n, std::move(amps));
}

DickeVector statevector_to_dicke(const StateVector& psi) {
    const int n = psi.num_qubits();
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
    for (uint64_t b = 0; b < psi.dimension(); ++b) c[n - std::popcount(b)] += psi[b];
    // Fix the global phase on the largest component, then require real amplitudes.
    Eigen::Index big = 0;
    c.cwiseAbs().maxCoeff(&big);
    if (std::abs(c[big]) < 1e-14) throw std::domain_error("statevector_to_dicke: no symmetric component");
    const std::complex<double> rot = std::conj(c[big]) / std::abs(c[big]);
    Eigen::VectorXd amps(n + 1);
    bool even = false, odd = false;
    for (int k = 0; k <= n; ++k) {
        std::complex<double> a = c[k] * rot / std::sqrt(binomial(n, k));
        if (std::abs(a.imag()) > 1e-9) throw std::domain_error("statevector_to_dicke: complex relative phases");
        amps[k] = std::abs(a.real()) < 1e-15 ? 0.0 : a.real();
        if (amps[k] != 0.0) (k % 2 == 0 ? even : odd) = true;
    }
    const DickeSector s = even && odd ? DickeSector::Mixed : odd ? DickeSector::OddUp : DickeSector::EvenUp;
    return DickeVector::normalized(n, s, amps);
}

DickeVector stab_state_dicke_amplitudes(int n, Family family) {
    check_spins(n);
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n + 1);
    switch (family) {
        case Family::S1: a[0] = 1.0; break;
        case Family::S2:
            for (int k = 0; k <= n; k += 2) a[k] = std::sqrt(binomial(n, k) / std::ldexp(1.0, n - 1));
            break;
        default: throw std::invalid_argument("stab_state_dicke_amplitudes: only s1 and s2 have collective forms");
    }
    return DickeVector::normalized(n, DickeSector::EvenUp, a);
}

double dicke_parity(const DickeVector& d) {
    double s = 0;
    for (int k = 0; k <= d.num_spins(); ++k) s += d[k] * d[k] * (((d.num_spins() - k) % 2) ? -1.0 : 1.0);
    return s;
}

}  // namespace stabgs

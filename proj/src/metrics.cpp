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

#include "stabgs/metrics.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace stabgs {

namespace {

using C = std::complex<double>;

// In-place unnormalized Walsh-Hadamard transform: out[z] = sum_b (-1)^{z.b} in[b].
void walsh_hadamard(std::vector<C>& v) {
    const size_t n = v.size();
    for (size_t h = 1; h < n; h <<= 1) {
        for (size_t i = 0; i < n; i += h << 1) {
            for (size_t j = i; j < i + h; ++j) {
                const C a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

double entropy_bits(double p) {
    double s = 0;
    for (double q : {p, 1 - p})
        if (q > 0) s -= q * std::log2(q);
    return s;
}

}  // namespace

double sre(const StateVector& psi, double alpha) {
    const int n = psi.num_qubits();
    check_dense_qubits(n, kMaxSreQubits, "sre");
    if (!(alpha > 0) || alpha == 1) throw std::invalid_argument("sre: alpha must be positive and different from 1");
    if (std::abs(psi.amplitudes().norm() - 1) > 1e-10) throw std::invalid_argument("sre: state is not normalized");
    const uint64_t d = psi.dimension();
    static const C kPhase[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
    std::vector<C> v(d);
    double sum = 0;  // sum_P Xi_P^alpha
    for (uint64_t x = 0; x < d; ++x) {
        // <psi| X^x Z^z |psi> = sum_b conj(psi[b^x]) (-1)^{z.b} psi[b]
        for (uint64_t b = 0; b < d; ++b) v[b] = std::conj(psi[b ^ x]) * psi[b];
        walsh_hadamard(v);
        for (uint64_t z = 0; z < d; ++z) {
            // sigma(x, z) = i^{|x&z|} X^x Z^z
            const double e = (kPhase[std::popcount(x & z) & 3] * v[z]).real();
            const double xi = e * e / static_cast<double>(d);
            if (xi > 0) sum += alpha == 2.0 ? xi * xi : std::pow(xi, alpha);
        }
    }
    double m = -std::log2(static_cast<double>(d)) + std::log2(sum) / (1 - alpha);
    if (m < 0 && m > -1e-12) m = 0;
    return m;
}

Eigen::Matrix2cd one_qubit_rdm(const StateVector& psi, int qubit0) {
    const int n = psi.num_qubits();
    if (qubit0 < 0 || qubit0 >= n) throw std::out_of_range("one_qubit_rdm: qubit out of range");
    const uint64_t m = basis_bit(n, qubit0);
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (uint64_t b = 0; b < psi.dimension(); ++b) {
        if (b & m) continue;
        const C a0 = psi[b], a1 = psi[b | m];
        rho(0, 0) += a0 * std::conj(a0);
        rho(0, 1) += a0 * std::conj(a1);
        rho(1, 0) += a1 * std::conj(a0);
        rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
}

double von_neumann_entropy(const Eigen::Matrix2cd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    double s = 0;
    for (int i = 0; i < 2; ++i) {
        const double l = es.eigenvalues()[i];
        if (l > 0) s -= l * std::log2(l);
    }
    return s;
}

double one_spin_entropy(const StateVector& psi) {
    const int n = psi.num_qubits();
    if ((one_qubit_rdm(psi, 0) - one_qubit_rdm(psi, n - 1)).cwiseAbs().maxCoeff() > 1e-8) {
        throw std::invalid_argument("one_spin_entropy: state is not permutation symmetric (qubit 1 and N differ)");
    }
    double jz = 0;
    for (uint64_t b = 0; b < psi.dimension(); ++b) jz += std::norm(psi[b]) * (n - 2.0 * std::popcount(b)) / 2;
    const double n_up = n / 2.0 + jz;
    return entropy_bits(n_up / n);
}

double one_spin_entropy(const DickeVector& d) {
    double n_up = 0;
    for (int k = 0; k <= d.num_spins(); ++k) n_up += k * d[k] * d[k];
    return entropy_bits(n_up / d.num_spins());
}

double n_tangle(const StateVector& psi, int n) {
    const int total = psi.num_qubits();
    if (n < 1 || n > total) throw std::invalid_argument("n_tangle: n must lie in [1, N]");
    const uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    const PauliString y = PauliString::from_bits(total, mask, mask);
    Amplitudes conj = psi.amplitudes().conjugate();
    return std::norm(psi.amplitudes().dot(apply_pauli(y, conj)));
}

double full_tangle(const DickeVector& d) {
    const int n = d.num_spins();
    static const C kPhase[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
    C s = 0;
    for (int k = 0; k <= n; ++k) s += d[n - k] * kPhase[(((2 * k - n) % 4) + 4) % 4] * d[k];
    return std::norm(s);
}

double parity_expectation(const StateVector& psi) {
    double s = 0;
    for (uint64_t b = 0; b < psi.dimension(); ++b) s += std::norm(psi[b]) * ((std::popcount(b) & 1) ? -1 : 1);
    return s;
}

MetricsReport metrics_report(const StateVector& psi) {
    MetricsReport r;
    r.m2 = psi.num_qubits() <= kMaxSreQubits ? sre(psi) : std::numeric_limits<double>::quiet_NaN();
    r.s1 = one_spin_entropy(psi);
    for (int k = 2; k <= psi.num_qubits(); ++k) r.tangles[k] = n_tangle(psi, k);
    r.parity = parity_expectation(psi);
    return r;
}

}  // namespace stabgs

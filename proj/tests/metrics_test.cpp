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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "stabgs/clifford.hpp"
#include "stabgs/exact.hpp"
#include "stabgs/lmg.hpp"

using namespace stabgs;
using C = std::complex<double>;

namespace {

// Direct 4^n sum with explicit Pauli application.
double sre_oracle(const StateVector& psi) {
    const int n = psi.num_qubits();
    const uint64_t d = psi.dimension();
    double sum = 0;
    for (uint64_t x = 0; x < d; ++x)
        for (uint64_t z = 0; z < d; ++z) {
            const double e = expectation(psi, PauliString::from_bits(n, x, z));
            sum += std::pow(e, 4);
        }
    return std::log2(static_cast<double>(d)) - std::log2(sum);
}

StateVector random_state(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    Amplitudes v(Eigen::Index{1} << n);
    for (auto& a : v) a = C(g(rng), g(rng));
    return StateVector::normalized(n, v);
}

CliffordGate random_gate(std::mt19937_64& rng, int n) {
    const int q = static_cast<int>(rng() % static_cast<uint64_t>(n));
    const int r = (q + 1 + static_cast<int>(rng() % static_cast<uint64_t>(n - 1))) % n;
    switch (rng() % 5) {
        case 0: return CliffordGate::h(q);
        case 1: return CliffordGate::s(q);
        case 2: return CliffordGate::cx(q, r);
        case 3: return CliffordGate::cz(q, r);
        default: return CliffordGate::y(q);
    }
}

// exp(-i a J_y) as a product of single-qubit rotations.
StateVector rotate_y(const StateVector& psi, double a) {
    const int n = psi.num_qubits();
    Amplitudes v = psi.amplitudes();
    const double c = std::cos(a / 2), s = std::sin(a / 2);
    for (int q = 0; q < n; ++q) {
        const uint64_t m = basis_bit(n, q);
        for (uint64_t b = 0; b < psi.dimension(); ++b) {
            if (b & m) continue;
            const C a0 = v[static_cast<Eigen::Index>(b)], a1 = v[static_cast<Eigen::Index>(b | m)];
            v[static_cast<Eigen::Index>(b)] = c * a0 - s * a1;
            v[static_cast<Eigen::Index>(b | m)] = s * a0 + c * a1;
        }
    }
    return StateVector::normalized(n, v);
}

StateVector t_state() {
    Amplitudes v(2);
    v << 1, std::polar(1.0, std::numbers::pi / 4);
    return StateVector::normalized(1, v);
}

}  // namespace

TEST(Sre, TState) { EXPECT_NEAR(sre(t_state()), 2 - std::log2(3.0), 1e-12); }

TEST(Sre, MatchesDirectSum) {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 4; ++n) {
        StateVector psi = random_state(rng, n);
        EXPECT_NEAR(sre(psi), sre_oracle(psi), 1e-10);
    }
}

TEST(Sre, StabilizerStatesHaveNoMagic) {
    for (int n = 2; n <= 10; ++n) EXPECT_NEAR(sre(to_statevector(s2_group(n))), 0.0, 1e-10);
    std::mt19937_64 rng(2);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            Circuit c;
            for (int i = 0; i < 10 * n; ++i) c.push_back(random_gate(rng, n));
            EXPECT_NEAR(sre(simulate(c, n)), 0.0, 1e-10);
        }
}

TEST(Sre, TDopedStatesHaveMagic) {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 6; ++n) {
        Circuit c;
        for (int i = 0; i < 10 * n; ++i) c.push_back(random_gate(rng, n));
        // One T gate on qubit 1 after a Hadamard, then more Cliffords.
        StateVector psi = simulate({CliffordGate::h(0)}, n);
        Amplitudes v = psi.amplitudes();
        for (uint64_t b = 0; b < psi.dimension(); ++b)
            if (b & basis_bit(n, 0)) v[static_cast<Eigen::Index>(b)] *= std::polar(1.0, std::numbers::pi / 4);
        StateVector doped = apply_circuit(c, StateVector(n, v));
        EXPECT_GT(sre(doped), 0.1);
    }
}

TEST(Sre, CliffordInvariance) {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 6; ++n) {
        StateVector psi = random_state(rng, n);
        const double m = sre(psi);
        for (int i = 0; i < 5; ++i) EXPECT_NEAR(sre(apply_gate(random_gate(rng, n), psi)), m, 1e-9);
    }
}

TEST(Sre, Guard) {
    EXPECT_THROW(sre(StateVector::basis(11, 0)), ResourceError);
    EXPECT_THROW(sre(t_state(), 1.0), std::invalid_argument);
}

TEST(OneSpinEntropy, Examples) {
    EXPECT_NEAR(one_spin_entropy(StateVector::from_bits("1111")), 0.0, 1e-15);
    for (int n = 2; n <= 10; ++n) {
        EXPECT_NEAR(one_spin_entropy(to_statevector(s2_group(n))), 1.0, 1e-12);
        EXPECT_NEAR(one_spin_entropy(stab_state_dicke_amplitudes(n, Family::S2)), 1.0, 1e-12);
    }
    EXPECT_THROW(one_spin_entropy(StateVector::from_bits("10")), std::invalid_argument);
}

TEST(OneSpinEntropy, MatchesPartialTrace) {
    for (int n = 2; n <= 8; ++n)
        for (double v : {0.5, 1.0, 3.0}) {
            auto gs = dense_ground_state({n, v, -1.0});
            const double direct = von_neumann_entropy(one_qubit_rdm(gs.state, 0));
            EXPECT_NEAR(one_spin_entropy(gs.state), direct, 1e-10);
            EXPECT_NEAR(one_spin_entropy(ground_state({n, v, -1.0}).state), direct, 1e-10);
        }
    // Random real amplitudes over even k.
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int n = 2; n <= 8; ++n) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(n + 1);
        for (int k = 0; k <= n; k += 2) a[k] = g(rng);
        StateVector psi = dicke_to_statevector(DickeVector::normalized(n, DickeSector::EvenUp, a));
        EXPECT_NEAR(one_spin_entropy(psi), von_neumann_entropy(one_qubit_rdm(psi, n - 1)), 1e-10);
    }
}

TEST(OneSpinEntropy, TwoSpinGroundState) {
    // Ground state cos(t/2)|11> + sin(t/2)|00>, tan t = v: each spin is up with p = sin^2(t/2).
    const double v = 1.0;
    const double p = std::pow(std::sin(std::atan(v) / 2), 2);
    const double want = -p * std::log2(p) - (1 - p) * std::log2(1 - p);
    EXPECT_NEAR(one_spin_entropy(dense_ground_state({2, v, -1.0}).state), want, 1e-12);
}

TEST(Tangle, Examples) {
    Amplitudes bell = Amplitudes::Zero(4);
    bell[0] = bell[3] = 1 / std::sqrt(2.0);
    EXPECT_NEAR(n_tangle(StateVector(2, bell), 2), 1.0, 1e-15);
    for (int n = 2; n <= 10; ++n) {
        StateVector s2 = to_statevector(s2_group(n));
        // Y on every qubit flips the parity of an odd register, so tau_N vanishes there.
        const double want = n % 2 == 0 ? 1.0 : 0.0;
        EXPECT_NEAR(n_tangle(s2, n), want, 1e-12) << n;
        for (int k = 1; k < n; ++k) EXPECT_NEAR(n_tangle(s2, k), 0.0, 1e-12);
        EXPECT_NEAR(full_tangle(stab_state_dicke_amplitudes(n, Family::S2)), want, 1e-12) << n;
        EXPECT_NEAR(n_tangle(StateVector::basis(n, (uint64_t{1} << n) - 1), n), 0.0, 1e-15);
    }
    EXPECT_THROW(n_tangle(StateVector(2, bell), 3), std::invalid_argument);
}

TEST(Tangle, DickeMatchesDense) {
    for (int n = 2; n <= 9; ++n)
        for (double v : {0.5, 2.0, 8.0}) {
            auto gs = ground_state({n, v, -0.5});
            EXPECT_NEAR(full_tangle(gs.state), n_tangle(dicke_to_statevector(gs.state), n), 1e-12);
        }
}

TEST(Tangle, SubsetAndRotationInvariance) {
    for (int n = 3; n <= 6; ++n) {
        StateVector psi = dense_ground_state({n, 3.0, -1.0}).state;
        for (int k = 2; k <= n; ++k) {
            const double tau = n_tangle(psi, k);
            // Same tangle on the last k qubits: reverse the qubit order.
            Amplitudes rev(psi.dimension());
            for (uint64_t b = 0; b < psi.dimension(); ++b) {
                uint64_t r = 0;
                for (int q = 0; q < n; ++q)
                    if (b & (uint64_t{1} << q)) r |= uint64_t{1} << (n - 1 - q);
                rev[static_cast<Eigen::Index>(r)] = psi[b];
            }
            EXPECT_NEAR(n_tangle(StateVector(n, rev), k), tau, 1e-9);
            EXPECT_NEAR(n_tangle(rotate_y(psi, 0.37), k), tau, 1e-9);
        }
    }
}

TEST(Parity, Examples) {
    EXPECT_NEAR(parity_expectation(StateVector::from_bits("11")), 1.0, 1e-15);
    EXPECT_NEAR(parity_expectation(to_statevector(s2_group(3))), -1.0, 1e-15);
    Amplitudes plus = Amplitudes::Constant(2, 1 / std::sqrt(2.0));
    EXPECT_NEAR(parity_expectation(StateVector(1, plus)), 0.0, 1e-15);
}

TEST(Report, CollectsEverything) {
    MetricsReport r = metrics_report(to_statevector(s2_group(4)));
    EXPECT_NEAR(r.m2, 0.0, 1e-10);
    EXPECT_NEAR(r.s1, 1.0, 1e-12);
    EXPECT_NEAR(r.tangles.at(4), 1.0, 1e-12);
    EXPECT_NEAR(r.tangles.at(2), 0.0, 1e-12);
    EXPECT_NEAR(r.parity, 1.0, 1e-12);
}

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

#pragma once

#include <map>

#include <Eigen/Dense>

#include "stabgs/exact.hpp"
#include "stabgs/state.hpp"

namespace stabgs {

/// Largest qubit count accepted by the 4^n Pauli sum.
inline constexpr int kMaxSreQubits = 10;

/// Stabilizer Renyi entropy in bits,
///   M_alpha = -log2 d + 1/(1-alpha) log2 sum_P (<P>^2 / d)^alpha,
/// summed over all 4^n unsigned Pauli strings. All expectations sharing an X
/// pattern come out of one Walsh-Hadamard transform, so the cost is O(n 4^n).
/// Values within 1e-12 below zero are clamped to 0.
double sre(const StateVector& psi, double alpha = 2.0);

/// Single-qubit reduced density matrix by explicit partial trace (0-based qubit).
Eigen::Matrix2cd one_qubit_rdm(const StateVector& psi, int qubit0);

/// -tr rho log2 rho.
double von_neumann_entropy(const Eigen::Matrix2cd& rho);

/// Entropy of rho_1 = diag(1 - <N+>/N, <N+>/N), <N+> = N/2 + <J_z>.
/// Throws std::invalid_argument unless the RDMs of qubits 1 and N agree within 1e-8.
double one_spin_entropy(const StateVector& psi);
double one_spin_entropy(const DickeVector& d);

/// |<psi| Y^(x)n |psi*>|^2 with Y on qubits 1..n and conjugation in the computational basis.
double n_tangle(const StateVector& psi, int n);

/// tau_N of a collective state: Y^(x)N |k> = i^(2k-N) |N-k>.
double full_tangle(const DickeVector& d);

/// <prod_i Z_i>.
double parity_expectation(const StateVector& psi);

struct MetricsReport {
    double m2 = 0;  // only for n <= kMaxSreQubits, NaN otherwise
    double s1 = 0;
    std::map<int, double> tangles;  // n -> tau_n for n = 2..N
    double parity = 0;
};

MetricsReport metrics_report(const StateVector& psi);

}  // namespace stabgs

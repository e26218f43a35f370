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

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabgs/hamiltonian.hpp"
#include "stabgs/state.hpp"

namespace stabgs {

/// Largest register for ADAPT runs (dense state per layer, ~100 layers).
inline constexpr int kMaxAdaptQubits = 10;

/// T_ij^sign = X_i Y_j + sign Y_i X_j on qubits i < j (0-based). K = iT is real
/// antisymmetric, so e^{i theta T} = e^{theta K} is a real rotation.
struct PoolOperator {
    int i = 0;
    int j = 1;
    int sign = 1;
    std::string label;    // "X1Y2+Y1X2"
    PauliHamiltonian op;  // the Hermitian sum
};

PoolOperator pool_operator(int num_qubits, int i, int j, int sign);

/// N(N-1) operators ordered by (i, j) and then + before -.
std::vector<PoolOperator> pool(int num_qubits);

/// X_i Z_j and Y_i Z_j for all ordered pairs i != j. Each flips parity.
std::vector<PauliHamiltonian> symmetry_breaking_pool(int num_qubits);

/// dE/dtheta at theta = 0 for e^{i theta T}: -i<psi|[T, H]|psi> = 2 Im<T psi|H psi>.
double gradient(const StateVector& psi, const PauliHamiltonian& t, const PauliHamiltonian& h);

/// 4 x 4 matrix of e^{theta K} on |q_i q_j>, q_i the more significant bit:
/// I + sin(2 theta)/2 K + (1 - cos(2 theta))/4 K^2, using K^3 = -4K.
Eigen::Matrix4d pool_rotation(int sign, double theta);

/// Applies e^{theta K_t} to a real vector in place.
void apply_pool_rotation(const PoolOperator& t, double theta, Eigen::VectorXd& v, int num_qubits);

struct AdaptConfig {
    int max_layers = 120;
    double grad_threshold = 1e-6;  // stop when every |gradient| is below this
    double vqe_tol = 1e-8;         // per-layer energy convergence
    bool check_symmetry_breaking = true;
};

struct AdaptLayer {
    int layer = 0;  // 0 is the reference
    std::string op_label;
    double gradient = 0;  // at selection, theta_new = 0
    double energy = 0;
    double rel_energy_error = 0;  // |(E - E_exact)/E_exact|
    double fidelity = 0;
    std::vector<double> angles;
    double parity = 0;                  // <prod Z_i>
    double max_imag = 0;                // largest imaginary amplitude after phase fixing
    double max_breaking_gradient = 0;   // over symmetry_breaking_pool
};

struct AdaptTrace {
    double exact_energy = 0;
    std::vector<AdaptLayer> layers;  // layers[0] is the reference
    std::vector<int> selected;       // pool indices per layer
    bool converged = false;          // stopped on grad_threshold rather than max_layers
};

/// Raised when a per-layer optimization fails; carries the layers completed so far.
struct AdaptError : std::runtime_error {
    AdaptError(const std::string& what, AdaptTrace partial) : std::runtime_error(what), trace(std::move(partial)) {}
    AdaptTrace trace;
};

/// ADAPT-VQE from `reference` with pool(N). Each layer appends the operator with the
/// largest |gradient| (earliest pool index on ties within 1e-10) and re-optimizes all
/// angles with L-BFGS. H must be real and the reference real up to a global phase.
AdaptTrace run_adapt(const PauliHamiltonian& h, const StateVector& reference, const AdaptConfig& config = {});

/// State of the ansatz for the given selections and angles.
StateVector adapt_state(const StateVector& reference, const std::vector<PoolOperator>& ops,
                        const std::vector<int>& selected, const std::vector<double>& angles);

}  // namespace stabgs

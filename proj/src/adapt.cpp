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

#include "stabgs/adapt.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include <ceres/ceres.h>

#include "stabgs/evolve.hpp"
#include "stabgs/metrics.hpp"

namespace stabgs {

namespace {

using C = std::complex<double>;

// Real generator K = i(X1Y2 + sign Y1X2) on two qubits.
Eigen::Matrix4d generator(int sign) {
    const Eigen::MatrixXcd t = dense_matrix(PauliString::parse("X1Y2", 2)) +
                               static_cast<double>(sign) * dense_matrix(PauliString::parse("Y1X2", 2));
    return (C(0, 1) * t).real();
}

const Eigen::Matrix4d& cached_generator(int sign) {
    static const Eigen::Matrix4d plus = generator(1), minus = generator(-1);
    return sign > 0 ? plus : minus;
}

void apply_local(const Eigen::Matrix4d& m, int qi, int qj, Eigen::VectorXd& v, int n) {
    const uint64_t bi = basis_bit(n, qi), bj = basis_bit(n, qj);
    const uint64_t dim = uint64_t{1} << n;
    for (uint64_t b = 0; b < dim; ++b) {
        if (b & (bi | bj)) continue;
        const Eigen::Index idx[4] = {static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b | bj),
                                     static_cast<Eigen::Index>(b | bi), static_cast<Eigen::Index>(b | bi | bj)};
        Eigen::Vector4d in(v[idx[0]], v[idx[1]], v[idx[2]], v[idx[3]]);
        const Eigen::Vector4d out = m * in;
        for (int r = 0; r < 4; ++r) v[idx[r]] = out[r];
    }
}

// K_t v for a pool operator.
Eigen::VectorXd apply_generator(const PoolOperator& t, const Eigen::VectorXd& v, int n) {
    Eigen::VectorXd out = v;
    apply_local(cached_generator(t.sign), t.i, t.j, out, n);
    return out;
}

Eigen::VectorXd real_reference(const StateVector& psi) {
    const StateVector c = psi.canonical_phase();
    if (c.amplitudes().imag().cwiseAbs().maxCoeff() > 1e-10) {
        throw std::invalid_argument("run_adapt: reference is not real up to a global phase");
    }
    return c.amplitudes().real();
}

class AnsatzEnergy final : public ceres::FirstOrderFunction {
  public:
    AnsatzEnergy(const Eigen::SparseMatrix<double>& h, const Eigen::VectorXd& ref, const std::vector<PoolOperator>& pool,
                 const std::vector<int>& selected, int n)
        : h_(h), ref_(ref), pool_(pool), selected_(selected), n_(n) {}

    bool Evaluate(const double* const theta, double* cost, double* grad) const override {
        const int layers = static_cast<int>(selected_.size());
        Eigen::VectorXd psi = ref_;
        for (int l = 0; l < layers; ++l) apply_pool_rotation(pool_[selected_[l]], theta[l], psi, n_);
        Eigen::VectorXd lambda = h_ * psi;
        *cost = psi.dot(lambda);
        if (grad == nullptr) return true;
        // Reverse sweep: dE/dtheta_l = 2 lambda_l . K_l psi_l.
        for (int l = layers - 1; l >= 0; --l) {
            const PoolOperator& t = pool_[selected_[l]];
            grad[l] = 2 * lambda.dot(apply_generator(t, psi, n_));
            apply_pool_rotation(t, -theta[l], psi, n_);
            apply_pool_rotation(t, -theta[l], lambda, n_);
        }
        return true;
    }

    int NumParameters() const override { return static_cast<int>(selected_.size()); }

  private:
    const Eigen::SparseMatrix<double>& h_;
    const Eigen::VectorXd& ref_;
    const std::vector<PoolOperator>& pool_;
    const std::vector<int>& selected_;
    int n_;
};

}  // namespace

PoolOperator pool_operator(int num_qubits, int i, int j, int sign) {
    if (!(0 <= i && i < j && j < num_qubits)) throw std::invalid_argument("pool_operator: need 0 <= i < j < N");
    if (sign != 1 && sign != -1) throw std::invalid_argument("pool_operator: sign must be +1 or -1");
    const std::string a = std::to_string(i + 1), b = std::to_string(j + 1);
    PauliHamiltonian op(num_qubits);
    op.add(1.0, PauliString::parse("X" + a + "Y" + b, num_qubits));
    op.add(sign, PauliString::parse("Y" + a + "X" + b, num_qubits));
    return {i, j, sign, "X" + a + "Y" + b + (sign > 0 ? "+" : "-") + "Y" + a + "X" + b, std::move(op)};
}

std::vector<PoolOperator> pool(int num_qubits) {
    if (num_qubits < 2) throw std::invalid_argument("pool: need at least two qubits");
    std::vector<PoolOperator> out;
    for (int i = 0; i < num_qubits; ++i)
        for (int j = i + 1; j < num_qubits; ++j)
            for (int sign : {1, -1}) out.push_back(pool_operator(num_qubits, i, j, sign));
    return out;
}

std::vector<PauliHamiltonian> symmetry_breaking_pool(int num_qubits) {
    std::vector<PauliHamiltonian> out;
    for (int i = 0; i < num_qubits; ++i)
        for (int j = 0; j < num_qubits; ++j) {
            if (i == j) continue;
            for (char p : {'X', 'Y'}) {
                PauliHamiltonian op(num_qubits);
                op.add(1.0, PauliString::single(num_qubits, i + 1, p) * PauliString::single(num_qubits, j + 1, 'Z'));
                out.push_back(std::move(op));
            }
        }
    return out;
}

double gradient(const StateVector& psi, const PauliHamiltonian& t, const PauliHamiltonian& h) {
    if (t.num_qubits() != psi.num_qubits() || h.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("gradient: qubit-count mismatch");
    }
    const Amplitudes tpsi = apply_hamiltonian(t, psi.amplitudes());
    const Amplitudes hpsi = apply_hamiltonian(h, psi.amplitudes());
    return 2 * tpsi.dot(hpsi).imag();
}

Eigen::Matrix4d pool_rotation(int sign, double theta) {
    const Eigen::Matrix4d& k = cached_generator(sign);
    return Eigen::Matrix4d::Identity() + std::sin(2 * theta) / 2 * k + (1 - std::cos(2 * theta)) / 4 * (k * k);
}

void apply_pool_rotation(const PoolOperator& t, double theta, Eigen::VectorXd& v, int num_qubits) {
    apply_local(pool_rotation(t.sign, theta), t.i, t.j, v, num_qubits);
}

StateVector adapt_state(const StateVector& reference, const std::vector<PoolOperator>& ops,
                        const std::vector<int>& selected, const std::vector<double>& angles) {
    if (selected.size() != angles.size()) throw std::invalid_argument("adapt_state: one angle per layer");
    const int n = reference.num_qubits();
    Eigen::VectorXd v = real_reference(reference);
    for (size_t l = 0; l < selected.size(); ++l) apply_pool_rotation(ops.at(static_cast<size_t>(selected[l])), angles[l], v, n);
    return StateVector::normalized(n, v.cast<C>());
}

AdaptTrace run_adapt(const PauliHamiltonian& h, const StateVector& reference, const AdaptConfig& config) {
    const int n = reference.num_qubits();
    check_dense_qubits(n, kMaxAdaptQubits, "run_adapt");
    if (h.num_qubits() != n) throw std::invalid_argument("run_adapt: Hamiltonian and reference differ in size");
    if (!(config.grad_threshold > 0) || !(config.vqe_tol > 0) || config.max_layers < 0) {
        throw std::invalid_argument("run_adapt: thresholds must be positive");
    }
    const Eigen::SparseMatrix<double> hm = real_sparse_matrix(h);
    const Eigen::VectorXd ref = real_reference(reference);
    const std::vector<PoolOperator> ops = pool(n);
    const std::vector<PauliHamiltonian> breaking =
        config.check_symmetry_breaking ? symmetry_breaking_pool(n) : std::vector<PauliHamiltonian>{};

    const Spectrum spectrum = Spectrum::dense(h);
    const Eigen::VectorXd exact = spectrum.vectors().col(0);

    AdaptTrace trace;
    trace.exact_energy = spectrum.ground_energy();
    std::vector<double> angles;

    auto record = [&](const Eigen::VectorXd& psi, const std::string& label, double grad) {
        AdaptLayer layer;
        layer.layer = static_cast<int>(trace.layers.size());
        layer.op_label = label;
        layer.gradient = grad;
        layer.energy = psi.dot(hm * psi);
        layer.rel_energy_error = std::abs((layer.energy - trace.exact_energy) / trace.exact_energy);
        layer.fidelity = std::abs(exact.dot(psi));
        layer.angles = angles;
        const StateVector state = StateVector::normalized(n, psi.cast<C>());
        layer.parity = parity_expectation(state);
        layer.max_imag = state.canonical_phase().amplitudes().imag().cwiseAbs().maxCoeff();
        for (const PauliHamiltonian& b : breaking)
            layer.max_breaking_gradient = std::max(layer.max_breaking_gradient, std::abs(gradient(state, b, h)));
        trace.layers.push_back(std::move(layer));
    };

    Eigen::VectorXd psi = ref;
    record(psi, "", 0.0);
    for (int layer = 1; layer <= config.max_layers; ++layer) {
        // Pool gradients 2 (H psi) . (K psi).
        const Eigen::VectorXd hpsi = hm * psi;
        std::vector<double> grads(ops.size());
        double best = 0;
        for (size_t a = 0; a < ops.size(); ++a) {
            grads[a] = 2 * hpsi.dot(apply_generator(ops[a], psi, n));
            best = std::max(best, std::abs(grads[a]));
        }
        if (best < config.grad_threshold) {
            trace.converged = true;
            break;
        }
        size_t pick = 0;
        while (std::abs(grads[pick]) < best - 1e-10 * std::max(1.0, best)) ++pick;
        trace.selected.push_back(static_cast<int>(pick));
        angles.push_back(0.0);

        ceres::GradientProblemSolver::Options options;
        options.line_search_direction_type = ceres::LBFGS;
        options.logging_type = ceres::SILENT;
        options.max_num_iterations = 2000;
        options.function_tolerance = 1e-3 * config.vqe_tol / (1 + std::abs(trace.layers.back().energy));
        options.gradient_tolerance = 1e-3 * config.vqe_tol;
        options.parameter_tolerance = 1e-14;
        ceres::GradientProblem problem(new AnsatzEnergy(hm, ref, ops, trace.selected, n));
        ceres::GradientProblemSolver::Summary summary;
        ceres::Solve(options, problem, angles.data(), &summary);
        if (summary.termination_type == ceres::FAILURE) {
            trace.selected.pop_back();
            angles.pop_back();
            throw AdaptError("run_adapt: layer " + std::to_string(layer) + " optimization failed: " + summary.message,
                             trace);
        }
        psi = ref;
        for (size_t l = 0; l < angles.size(); ++l) apply_pool_rotation(ops[static_cast<size_t>(trace.selected[l])], angles[l], psi, n);
        record(psi, ops[pick].label, grads[pick]);
    }
    return trace;
}

}  // namespace stabgs

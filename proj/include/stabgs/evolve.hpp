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

#include <functional>

#include <Eigen/Dense>

#include "stabgs/exact.hpp"
#include "stabgs/hamiltonian.hpp"
#include "stabgs/lmg.hpp"
#include "stabgs/state.hpp"

namespace stabgs {

/// Largest register for dense matrix functions of H.
inline constexpr int kMaxEvolveQubits = 10;

/// Eigendecomposition of a real symmetric H, reused across tau grids.
class Spectrum {
  public:
    explicit Spectrum(const Eigen::MatrixXd& h);
    /// Dense 2^n matrix of a real Hamiltonian; ResourceError above kMaxEvolveQubits.
    static Spectrum dense(const PauliHamiltonian& h);
    /// Full (N+1)-dimensional Dicke matrix.
    static Spectrum dicke(const LmgParams& p);

    Eigen::Index dimension() const { return values_.size(); }
    const Eigen::VectorXd& values() const { return values_; }
    const Eigen::MatrixXd& vectors() const { return vectors_; }
    double ground_energy() const { return values_[0]; }
    /// E1 - E0 with E1 the first level more than 1e-9 above E0 (0 for a flat spectrum).
    double gap() const;

    /// V f(D) V^T.
    Eigen::MatrixXd function(const std::function<double(double)>& f) const;
    /// f(H) v without forming f(H).
    Eigen::VectorXcd apply(const std::function<double(double)>& f, const Eigen::VectorXcd& v) const;
    /// Squared weight of v on the eigenspace of the lowest level.
    double ground_weight(const Eigen::VectorXcd& v) const;

  private:
    Eigen::VectorXd values_;
    Eigen::MatrixXd vectors_;
};

/// Default energy shift: the selected stabilizer energy, a variational upper bound.
double default_e0_bar(const LmgParams& p);

/// Normalized e^{-(H - e0_bar) tau}|eta>. The shift cancels in the state and only
/// enters log_norm = log ||e^{-(H - e0_bar) tau}|eta>||. `ground_overlap` is false
/// when |eta> has no weight (below 1e-24) on the lowest level; the evolution then
/// converges to the first level it does overlap.
struct IteState {
    StateVector state;
    double energy;
    double log_norm;
    bool ground_overlap;
};

struct DickeIteState {
    DickeVector state;
    double energy;
    double log_norm;
    bool ground_overlap;
};

IteState ite_evolve(const Spectrum& s, const StateVector& initial, double tau, double e0_bar);
IteState ite_evolve(const PauliHamiltonian& h, const StateVector& initial, double tau, double e0_bar);
DickeIteState ite_evolve(const LmgParams& p, const DickeVector& initial, double tau, double e0_bar);

/// A = (1 + e^{-2(H - e0_bar) tau})^{-1/2} and Q = (1 + e^{2(H - e0_bar) tau})^{-1/2}.
struct QitpOperators {
    Eigen::MatrixXd a;
    Eigen::MatrixXd q;
};

QitpOperators qitp_operators(const Spectrum& s, double tau, double e0_bar);
QitpOperators qitp_operators(const PauliHamiltonian& h, double tau, double e0_bar);

/// [[Q, A], [A, -Q]] on ancilla (x) system, the ancilla being the most significant index bit.
Eigen::MatrixXd qitp_unitary(const QitpOperators& ops);

/// Q|eta> / ||Q|eta>|| with success probability ||Q|eta>||^2.
struct QitpResult {
    Eigen::VectorXcd state;
    double success_probability;
};

/// Applies the ancilla unitary to |0>|eta>, keeps the ancilla-|0> half and
/// renormalizes. Throws std::domain_error when the probability is below 1e-14.
QitpResult qitp_postselect(const Spectrum& s, const Eigen::VectorXcd& initial, double tau, double e0_bar);
/// Same result from Q alone, without the ancilla.
QitpResult qitp_direct(const Spectrum& s, const Eigen::VectorXcd& initial, double tau, double e0_bar);

struct VariationalResult {
    double theta_opt = 0;   // theta_1
    double theta2_opt = 0;  // 0 at first order
    double energy = 0;
    DickeVector state;
    double fidelity = 0;  // against the exact ground state
};

/// Normalized e^{-theta2 Jz^2} e^{-theta1 Jz}|d>; Jz is diagonal with M = k - N/2.
DickeVector apply_exp_jz(const DickeVector& d, double theta1, double theta2 = 0);

/// Minimizes the energy of e^{-theta Jz}|ref> (order 1) or e^{-theta2 Jz^2} e^{-theta1 Jz}|ref>
/// (order 2). theta1 is scanned on [0, 4] with 81 nodes, theta2 on [-1, 1] with 41 nodes,
/// each followed by golden-section refinement to 1e-10. The default reference is the
/// entangled stabilizer state.
VariationalResult variational_jz(const LmgParams& p, int order = 1);
VariationalResult variational_jz(const LmgParams& p, int order, const DickeVector& reference);

/// First-order variant with e^{-theta Jz} replaced by the QITP operator
/// Q(theta) = (1 + e^{2 theta (Jz + N/2)})^{-1/2}, i.e. H -> Jz with the shift
/// at the lowest Jz eigenvalue -N/2.
VariationalResult variational_qitp_jz(const LmgParams& p);

/// Product state e^{-i alpha Jy}|1...1>: every spin is -sin(alpha/2)|0> + cos(alpha/2)|1>.
DickeVector hf_state(int n, double alpha);

struct HartreeFock {
    double alpha = 0;
    double energy = 0;
    DickeVector state;
};

/// Minimizes <HF(alpha)|H|HF(alpha)> over alpha in [0, pi]. alpha = 0 is kept
/// unless another angle is lower by more than 1e-12, so the normal phase returns
/// |1...1> exactly.
HartreeFock deformed_hf(const LmgParams& p);

/// (-1)^N, the eigenvalue of prod Z_i on |1...1>.
int natural_parity(int n);

/// (1 + parity prod Z_i)/2 followed by renormalization; throws std::domain_error
/// when the projected norm is below 1e-14.
DickeVector parity_project(const DickeVector& d, int parity);
StateVector parity_project(const StateVector& psi, int parity);

}  // namespace stabgs

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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stabgs/lmg.hpp"
#include "stabgs/state.hpp"

namespace stabgs {

// Collective basis |J = N/2, M> labelled by k = M + N/2, the number of spins up
// (qubits in |0>). |1...1> is k = 0.

/// Which k values a Dicke vector may populate. The LMG interaction changes k by
/// 0 or 2, and the ground state lives with |1...1> in the even-k block.
enum class DickeSector { EvenUp, OddUp, Mixed };

const char* sector_name(DickeSector s);

/// k values of the sector for N spins, ascending.
std::vector<int> sector_levels(int n, DickeSector s);

/// Real unit vector over k = 0..N. Entries outside the sector are zero.
class DickeVector {
  public:
    /// Requires unit norm within 1e-10 and zero weight outside the sector.
    DickeVector(int n, DickeSector sector, Eigen::VectorXd amps);

    static DickeVector normalized(int n, DickeSector sector, Eigen::VectorXd amps);
    /// Pure |J, M> with k = M + N/2.
    static DickeVector level(int n, int k);

    int num_spins() const { return n_; }
    DickeSector sector() const { return sector_; }
    /// Length N+1, indexed by k.
    const Eigen::VectorXd& amplitudes() const { return amps_; }
    double operator[](int k) const { return amps_[k]; }

  private:
    int n_;
    DickeSector sector_;
    Eigen::VectorXd amps_;
};

/// |<a|b>|. Throws std::invalid_argument for different N or for one even and one odd sector.
double fidelity(const DickeVector& a, const DickeVector& b);

/// (N+1) x (N+1) LMG matrix over k. Diagonal
///   M - vbar/(N-1) (1+chi)/2 (J(J+1) - M^2) + vbar N (1+chi) / (4(N-1)),
/// the last term making it equal to the Pauli-sum Hamiltonian on the symmetric
/// subspace; off-diagonal dM = +-2 entries -vbar/(N-1) (1-chi)/4 <M+2|J+^2|M>.
Eigen::MatrixXd dicke_hamiltonian_full(const LmgParams& p);

/// Block of dicke_hamiltonian_full on sector_levels(N, sector).
Eigen::MatrixXd dicke_hamiltonian(const LmgParams& p, DickeSector sector = DickeSector::EvenUp);

/// <d|H|d> with the full Dicke matrix.
double dicke_energy(const LmgParams& p, const DickeVector& d);

struct DickeGroundState {
    double energy;
    DickeVector state;
};

/// Lowest eigenpair of the even-k block, sign fixed so the k = 0 amplitude is positive.
/// Throws std::runtime_error if the eigensolver fails.
DickeGroundState ground_state(const LmgParams& p);

/// Lowest eigenpair of the given sector's block.
DickeGroundState ground_state(const LmgParams& p, DickeSector sector);

inline constexpr int kMaxDenseGroundStateQubits = 12;

struct DenseGroundState {
    double energy;
    StateVector state;
};

/// Independent oracle: diagonalizes the Pauli-sum Hamiltonian on the 2^(N-1)
/// computational states whose number of ones has the parity of N (the block of
/// |1...1> under prod Z). N <= kMaxDenseGroundStateQubits.
DenseGroundState dense_ground_state(const LmgParams& p);

/// Expands each |J, M> into the uniform superposition of its C(N, k) basis states.
StateVector dicke_to_statevector(const DickeVector& d);

/// Projection onto the symmetric subspace, renormalized. Throws std::domain_error
/// when the state has no symmetric component.
DickeVector statevector_to_dicke(const StateVector& psi);

/// Collective amplitudes of the reference stabilizer states: S1 is pure k = 0,
/// S2 has sqrt(C(N,k) / 2^(N-1)) on every even k. Only S1 and S2 are supported.
DickeVector stab_state_dicke_amplitudes(int n, Family family);

/// <prod_i Z_i> = sum_k |d_k|^2 (-1)^(N-k).
double dicke_parity(const DickeVector& d);

/// Binomial coefficient as a double (exact up to N = 64 for the sizes used here).
double binomial(int n, int k);

}  // namespace stabgs

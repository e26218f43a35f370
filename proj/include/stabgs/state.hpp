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

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "stabgs/pauli.hpp"

namespace stabgs {

using Amplitudes = Eigen::VectorXcd;

/// Largest qubit count for dense statevectors.
inline constexpr int kMaxStateQubits = 14;

// Basis convention for every dense vector in this library: qubit q (1-based)
// is bit n-q of the basis index, so qubit 1 is the most significant bit and the
// index written in binary reads as the ket |q1 q2 ... qn>.

inline uint64_t basis_bit(int num_qubits, int qubit0) { return uint64_t{1} << (num_qubits - 1 - qubit0); }

/// Converts a PauliString bit mask (qubit q at bit q-1) into a basis-index mask.
uint64_t to_basis_mask(int num_qubits, uint64_t pauli_bits);

void check_dense_qubits(int num_qubits, int limit, const char* what);

/// Applies p to a raw amplitude vector of length 2^n.
Amplitudes apply_pauli(const PauliString& p, const Amplitudes& v);

/// Unit-norm dense state of n qubits.
class StateVector {
  public:
    /// Requires |amps| = 1 within 1e-10.
    StateVector(int num_qubits, Amplitudes amps);

    /// Normalizes `amps`; throws std::domain_error if its norm is below 1e-14.
    static StateVector normalized(int num_qubits, Amplitudes amps);
    static StateVector basis(int num_qubits, uint64_t index);
    /// Basis state from a bit string such as "0110" (qubit 1 first).
    static StateVector from_bits(const std::string& bits);

    int num_qubits() const { return n_; }
    uint64_t dimension() const { return uint64_t{1} << n_; }
    const Amplitudes& amplitudes() const { return amps_; }
    std::complex<double> operator[](uint64_t index) const { return amps_[static_cast<Eigen::Index>(index)]; }

    /// Global phase fixed so that the first amplitude above `cutoff` in basis order is real positive.
    StateVector canonical_phase(double cutoff = 1e-12) const;

    /// Terms like "+0.5|111> +0.5|100>", omitting amplitudes below `cutoff`.
    std::string str(double cutoff = 1e-12) const;

  private:
    int n_;
    Amplitudes amps_;
};

std::string basis_label(int num_qubits, uint64_t index);

/// <a|b>.
std::complex<double> inner(const StateVector& a, const StateVector& b);

/// |<a|b>|; throws std::invalid_argument on qubit-count mismatch.
double fidelity(const StateVector& a, const StateVector& b);

/// <psi|p|psi> for Hermitian p (imaginary part discarded).
double expectation(const StateVector& psi, const PauliString& p);

}  // namespace stabgs

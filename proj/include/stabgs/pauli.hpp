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
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace stabgs {

/// Thrown when a dense representation would exceed the size guard of an operation.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest qubit count a PauliString can hold (single 64-bit word per part).
inline constexpr int kMaxQubits = 64;

/// Largest qubit count for which dense 2^n x 2^n matrices are produced.
inline constexpr int kMaxDenseMatrixQubits = 14;

/// A Pauli operator phase * sigma_1 (x) ... (x) sigma_n in symplectic form.
///
/// Qubit q (1-based in every text interface) is stored at bit q-1 of
/// `x_bits()` / `z_bits()`. A set x bit alone is X, a set z bit alone is Z and
/// both together is Y; `phase_exponent()` k gives the visible phase i^k in front
/// of the tensor product of the named single-qubit matrices. So "+Y1" has
/// x=z=1 and k=0, and is Hermitian. Only the first 64 qubits are addressable.
class PauliString {
  public:
    explicit PauliString(int num_qubits = 1);

    static PauliString from_bits(int num_qubits, uint64_t x_bits, uint64_t z_bits, int phase_exponent = 0);

    /// Single-qubit operator `op` in {I, X, Y, Z} on 1-based `qubit`.
    static PauliString single(int num_qubits, int qubit, char op);

    /// Parses "+X1X2", "-Z1Z2Z3", "+iY2", "-iX1", "+I". A missing sign means '+'.
    /// Qubits absent from the text carry the identity.
    static PauliString parse(std::string_view text, int num_qubits);

    /// Same as parse() but takes the qubit count from the largest index in the text.
    static PauliString parse(std::string_view text);

    int num_qubits() const { return num_qubits_; }
    uint64_t x_bits() const { return x_; }
    uint64_t z_bits() const { return z_; }
    uint64_t support() const { return x_ | z_; }
    int weight() const;
    int phase_exponent() const { return phase_; }

    /// Operator on 0-based qubit index: one of 'I', 'X', 'Y', 'Z'.
    char op(int qubit0) const;

    bool is_hermitian() const { return (phase_ & 1) == 0; }
    bool is_identity() const { return support() == 0; }

    /// +1 or -1 for Hermitian strings.
    int sign() const;

    /// Same operator string with the phase replaced by i^k.
    PauliString with_phase(int phase_exponent) const;
    PauliString negated() const { return with_phase(phase_ + 2); }
    PauliString unsigned_part() const { return with_phase(0); }

    std::string str() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

  private:
    int num_qubits_;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
    int phase_ = 0;
};

/// Exact product p*q; the phase is tracked as an integer exponent of i.
PauliString multiply(const PauliString& p, const PauliString& q);

inline PauliString operator*(const PauliString& p, const PauliString& q) { return multiply(p, q); }

/// True iff p and q commute (even number of anticommuting sites).
bool commutes(const PauliString& p, const PauliString& q);

/// Exponent e in {0,1,2,3} with sigma(x1,z1) sigma(x2,z2) = i^e sigma(x1^x2, z1^z2) for
/// single-qubit Paulis written in the unphased I/X/Y/Z basis.
int product_phase_exponent(bool x1, bool z1, bool x2, bool z2);

/// Dense matrix kron(sigma_1, ..., sigma_n) times the phase; qubit 1 is the most
/// significant tensor factor. Throws ResourceError above kMaxDenseMatrixQubits.
Eigen::MatrixXcd dense_matrix(const PauliString& p);

}  // namespace stabgs

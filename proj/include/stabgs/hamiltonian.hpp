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
#include <Eigen/Sparse>

#include "stabgs/pauli.hpp"
#include "stabgs/state.hpp"

namespace stabgs {

struct PauliTerm {
    double coefficient;
    PauliString op;  // phase +1
};

/// H = sum_P a_P P with real coefficients and Hermitian strings normalized to phase +1.
class PauliHamiltonian {
  public:
    explicit PauliHamiltonian(int num_qubits);

    /// Adds a*p. A "-P" string folds its sign into the coefficient; strings
    /// already present have their coefficients merged. Non-Hermitian strings
    /// (phase +-i) are rejected with std::invalid_argument.
    void add(double coefficient, const PauliString& p);

    /// Parses lines "<coefficient> <pauli>", e.g. "0.5 Z1" or "-0.25 X1X3".
    static PauliHamiltonian parse(const std::string& text, int num_qubits);

    int num_qubits() const { return n_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    /// True when every term has an even number of Y factors (real matrix).
    bool is_real() const;

    /// One term per line, "%.17g <pauli>".
    std::string str() const;

  private:
    int n_;
    std::vector<PauliTerm> terms_;
};

/// H|v> on a raw vector.
Amplitudes apply_hamiltonian(const PauliHamiltonian& h, const Amplitudes& v);

double energy(const PauliHamiltonian& h, const StateVector& psi);

/// Dense complex matrix; throws ResourceError beyond kMaxDenseMatrixQubits.
Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h);

/// Real sparse matrix for real Hamiltonians (is_real()); throws otherwise.
Eigen::SparseMatrix<double> real_sparse_matrix(const PauliHamiltonian& h);

/// Real dense matrix for real Hamiltonians.
Eigen::MatrixXd real_dense_matrix(const PauliHamiltonian& h);

}  // namespace stabgs

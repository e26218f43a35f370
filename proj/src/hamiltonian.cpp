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

#include "stabgs/hamiltonian.hpp"

#include <bit>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace stabgs {

PauliHamiltonian::PauliHamiltonian(int num_qubits) : n_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) throw std::invalid_argument("PauliHamiltonian: bad qubit count");
}

void PauliHamiltonian::add(double coefficient, const PauliString& p) {
    if (p.num_qubits() != n_) throw std::invalid_argument("PauliHamiltonian::add: qubit count mismatch");
    if (!p.is_hermitian()) {
        throw std::invalid_argument("PauliHamiltonian::add: non-Hermitian term " + p.str());
    }
    const double a = coefficient * p.sign();
    const PauliString op = p.unsigned_part();
    for (auto& t : terms_) {
        if (t.op == op) {
            t.coefficient += a;
            return;
        }
    }
    terms_.push_back({a, op});
}

PauliHamiltonian PauliHamiltonian::parse(const std::string& text, int num_qubits) {
    PauliHamiltonian h(num_qubits);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        std::istringstream ls(line);
        double a = 0;
        std::string op;
        if (!(ls >> a >> op)) throw std::invalid_argument("bad Hamiltonian line '" + line + "'");
        h.add(a, PauliString::parse(op, num_qubits));
    }
    return h;
}

bool PauliHamiltonian::is_real() const {
    for (const auto& t : terms_) {
        if (std::popcount(t.op.x_bits() & t.op.z_bits()) & 1) return false;
    }
    return true;
}

std::string PauliHamiltonian::str() const {
    std::string out;
    char buf[64];
    for (const auto& t : terms_) {
        std::snprintf(buf, sizeof buf, "%.17g ", t.coefficient);
        out += buf + t.op.str() + "\n";
    }
    return out;
}

Amplitudes apply_hamiltonian(const PauliHamiltonian& h, const Amplitudes& v) {
    Amplitudes out = Amplitudes::Zero(v.size());
    for (const auto& t : h.terms()) out += t.coefficient * apply_pauli(t.op, v);
    return out;
}

double energy(const PauliHamiltonian& h, const StateVector& psi) {
    if (h.num_qubits() != psi.num_qubits()) throw std::invalid_argument("energy: qubit counts differ");
    return psi.amplitudes().dot(apply_hamiltonian(h, psi.amplitudes())).real();
}

Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h) {
    check_dense_qubits(h.num_qubits(), kMaxDenseMatrixQubits, "dense_matrix");
    const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        Amplitudes e = Amplitudes::Zero(dim);
        e[c] = 1.0;
        m.col(c) = apply_hamiltonian(h, e);
    }
    return m;
}

namespace {

template <typename Emit>
void for_each_real_entry(const PauliHamiltonian& h, Emit&& emit) {
    if (!h.is_real()) throw std::invalid_argument("real matrix requested for a complex Hamiltonian");
    const int n = h.num_qubits();
    const uint64_t dim = uint64_t{1} << n;
    for (const auto& t : h.terms()) {
        const uint64_t xm = to_basis_mask(n, t.op.x_bits());
        const uint64_t zm = to_basis_mask(n, t.op.z_bits());
        // i^{#Y} is real (+-1) here.
        const int ny = std::popcount(t.op.x_bits() & t.op.z_bits());
        const double base = (ny % 4 == 0) ? t.coefficient : -t.coefficient;
        for (uint64_t b = 0; b < dim; ++b) {
            double a = (std::popcount(b & zm) & 1) ? -base : base;
            emit(b ^ xm, b, a);
        }
    }
}

}  // namespace

Eigen::SparseMatrix<double> real_sparse_matrix(const PauliHamiltonian& h) {
    check_dense_qubits(h.num_qubits(), 20, "real_sparse_matrix");
    std::vector<Eigen::Triplet<double>> trips;
    for_each_real_entry(h, [&](uint64_t r, uint64_t c, double a) {
        trips.emplace_back(static_cast<int>(r), static_cast<int>(c), a);
    });
    const int dim = 1 << h.num_qubits();
    Eigen::SparseMatrix<double> m(dim, dim);
    m.setFromTriplets(trips.begin(), trips.end());
    m.prune(0.0);
    return m;
}

Eigen::MatrixXd real_dense_matrix(const PauliHamiltonian& h) {
    check_dense_qubits(h.num_qubits(), kMaxDenseMatrixQubits, "real_dense_matrix");
    const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for_each_real_entry(h, [&](uint64_t r, uint64_t c, double a) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += a;
    });
    return m;
}

}  // namespace stabgs

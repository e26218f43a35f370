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

#include "stabgs/state.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace stabgs {

uint64_t to_basis_mask(int num_qubits, uint64_t pauli_bits) {
    uint64_t out = 0;
    while (pauli_bits) {
        int q = std::countr_zero(pauli_bits);
        pauli_bits &= pauli_bits - 1;
        out |= basis_bit(num_qubits, q);
    }
    return out;
}

void check_dense_qubits(int num_qubits, int limit, const char* what) {
    if (num_qubits < 1) throw std::invalid_argument(std::string(what) + ": qubit count must be positive");
    if (num_qubits > limit) {
        throw ResourceError(std::string(what) + ": " + std::to_string(num_qubits) + " qubits exceeds limit of " +
                            std::to_string(limit));
    }
}

Amplitudes apply_pauli(const PauliString& p, const Amplitudes& v) {
    const int n = p.num_qubits();
    if (v.size() != (Eigen::Index{1} << n)) throw std::invalid_argument("apply_pauli: vector length mismatch");
    using C = std::complex<double>;
    static const C kPhase[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
    // sigma = i^{|x&z|} X^x Z^z, since Y = iXZ.
    const C phase = kPhase[(p.phase_exponent() + std::popcount(p.x_bits() & p.z_bits())) & 3];
    const uint64_t xm = to_basis_mask(n, p.x_bits());
    const uint64_t zm = to_basis_mask(n, p.z_bits());
    Amplitudes out(v.size());
    for (uint64_t b = 0; b < static_cast<uint64_t>(v.size()); ++b) {
        C a = v[static_cast<Eigen::Index>(b)] * phase;
        if (std::popcount(b & zm) & 1) a = -a;
        out[static_cast<Eigen::Index>(b ^ xm)] = a;
    }
    return out;
}

StateVector::StateVector(int num_qubits, Amplitudes amps) : n_(num_qubits), amps_(std::move(amps)) {
    check_dense_qubits(num_qubits, kMaxStateQubits, "StateVector");
    if (amps_.size() != (Eigen::Index{1} << num_qubits)) throw std::invalid_argument("StateVector: length is not 2^n");
    if (std::abs(amps_.norm() - 1.0) > 1e-10) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized (norm " + std::to_string(amps_.norm()) +
                                    ")");
    }
}

StateVector StateVector::normalized(int num_qubits, Amplitudes amps) {
    double norm = amps.norm();
    if (!(norm > 1e-14)) throw std::domain_error("StateVector::normalized: vector has zero norm");
    amps /= norm;
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::basis(int num_qubits, uint64_t index) {
    check_dense_qubits(num_qubits, kMaxStateQubits, "StateVector::basis");
    Amplitudes a = Amplitudes::Zero(Eigen::Index{1} << num_qubits);
    if (index >= static_cast<uint64_t>(a.size())) throw std::out_of_range("basis index out of range");
    a[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(num_qubits, std::move(a));
}

StateVector StateVector::from_bits(const std::string& bits) {
    uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("from_bits: expected 0/1 string, got '" + bits + "'");
        index = (index << 1) | uint64_t(c == '1');
    }
    return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::canonical_phase(double cutoff) const {
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        if (std::abs(amps_[i]) > cutoff) {
            std::complex<double> rot = std::conj(amps_[i]) / std::abs(amps_[i]);
            return StateVector(n_, amps_ * rot);
        }
    }
    return *this;
}

std::string basis_label(int num_qubits, uint64_t index) {
    std::string s(static_cast<size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; ++q) {
        if (index & basis_bit(num_qubits, q)) s[static_cast<size_t>(q)] = '1';
    }
    return s;
}

std::string StateVector::str(double cutoff) const {
    std::string out;
    char buf[96];
    for (Eigen::Index i = 0; i < amps_.size(); ++i) {
        std::complex<double> a = amps_[i];
        if (std::abs(a) <= cutoff) continue;
        if (std::abs(a.imag()) <= cutoff) {
            std::snprintf(buf, sizeof buf, "%+.6g", a.real());
        } else {
            std::snprintf(buf, sizeof buf, "+(%.6g%+.6gi)", a.real(), a.imag());
        }
        if (!out.empty()) out += ' ';
        out += buf;
        out += "|" + basis_label(n_, static_cast<uint64_t>(i)) + ">";
    }
    return out.empty() ? "0" : out;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("inner: qubit counts differ");
    return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::abs(inner(a, b)); }

double expectation(const StateVector& psi, const PauliString& p) {
    if (p.num_qubits() != psi.num_qubits()) throw std::invalid_argument("expectation: qubit counts differ");
    return psi.amplitudes().dot(apply_pauli(p, psi.amplitudes())).real();
}

}  // namespace stabgs

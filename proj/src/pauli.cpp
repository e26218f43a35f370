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

#include "stabgs/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace stabgs {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must lie in [1, 64], got " + std::to_string(n));
    }
}

uint64_t low_mask(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

struct ParsedPauli {
    int phase = 0;
    uint64_t x = 0;
    uint64_t z = 0;
    int max_qubit = 0;
};

ParsedPauli parse_parts(std::string_view text) {
    ParsedPauli out;
    size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') out.phase = 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        out.phase += 1;
        ++pos;
    }
    bool saw_op = false;
    while (true) {
        skip_space();
        if (pos >= text.size()) break;
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("bad Pauli string '" + std::string(text) + "'");
        }
        ++pos;
        saw_op = true;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) {
            // A bare "I" denotes the identity on all qubits.
            if (c == 'I') continue;
            throw std::invalid_argument("missing qubit index in Pauli string '" + std::string(text) + "'");
        }
        int q = std::stoi(std::string(text.substr(start, pos - start)));
        if (q < 1 || q > kMaxQubits) {
            throw std::invalid_argument("qubit index out of range in '" + std::string(text) + "'");
        }
        out.max_qubit = std::max(out.max_qubit, q);
        uint64_t bit = uint64_t{1} << (q - 1);
        if ((out.x | out.z) & bit) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " repeated in '" + std::string(text) + "'");
        }
        if (c == 'X' || c == 'Y') out.x |= bit;
        if (c == 'Z' || c == 'Y') out.z |= bit;
    }
    if (!saw_op) throw std::invalid_argument("empty Pauli string");
    return out;
}

}  // namespace

PauliString::PauliString(int num_qubits) : num_qubits_(num_qubits) { check_qubit_count(num_qubits); }

PauliString PauliString::from_bits(int num_qubits, uint64_t x_bits, uint64_t z_bits, int phase_exponent) {
    PauliString p(num_qubits);
    uint64_t mask = low_mask(num_qubits);
    if ((x_bits | z_bits) & ~mask) throw std::invalid_argument("Pauli bits exceed qubit count");
    p.x_ = x_bits;
    p.z_ = z_bits;
    p.phase_ = ((phase_exponent % 4) + 4) % 4;
    return p;
}

PauliString PauliString::single(int num_qubits, int qubit, char op) {
    if (qubit < 1 || qubit > num_qubits) throw std::out_of_range("qubit index out of range");
    uint64_t bit = uint64_t{1} << (qubit - 1);
    switch (op) {
        case 'I': return from_bits(num_qubits, 0, 0);
        case 'X': return from_bits(num_qubits, bit, 0);
        case 'Y': return from_bits(num_qubits, bit, bit);
        case 'Z': return from_bits(num_qubits, 0, bit);
        default: throw std::invalid_argument(std::string("unknown Pauli '") + op + "'");
    }
}

PauliString PauliString::parse(std::string_view text, int num_qubits) {
    ParsedPauli parts = parse_parts(text);
    if (parts.max_qubit > num_qubits) {
        throw std::invalid_argument("Pauli string '" + std::string(text) + "' addresses qubit beyond " +
                                    std::to_string(num_qubits));
    }
    return from_bits(num_qubits, parts.x, parts.z, parts.phase);
}

PauliString PauliString::parse(std::string_view text) {
    ParsedPauli parts = parse_parts(text);
    return from_bits(std::max(parts.max_qubit, 1), parts.x, parts.z, parts.phase);
}

int PauliString::weight() const { return std::popcount(support()); }

char PauliString::op(int qubit0) const {
    bool x = (x_ >> qubit0) & 1;
    bool z = (z_ >> qubit0) & 1;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

int PauliString::sign() const {
    if (!is_hermitian()) throw std::logic_error("sign() of non-Hermitian Pauli string " + str());
    return phase_ == 0 ? 1 : -1;
}

PauliString PauliString::with_phase(int phase_exponent) const {
    PauliString p = *this;
    p.phase_ = ((phase_exponent % 4) + 4) % 4;
    return p;
}

std::string PauliString::str() const {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    if (is_identity()) return out + "I";
    for (int q = 0; q < num_qubits_; ++q) {
        char c = op(q);
        if (c == 'I') continue;
        out += c;
        out += std::to_string(q + 1);
    }
    return out;
}

int product_phase_exponent(bool x1, bool z1, bool x2, bool z2) {
    // Aaronson-Gottesman g function, mapped from {-1,0,1} onto exponents of i.
    int g = 0;
    if (x1 && z1) {
        g = int(z2) - int(x2);
    } else if (x1) {
        g = int(z2) * (2 * int(x2) - 1);
    } else if (z1) {
        g = int(x2) * (1 - 2 * int(z2));
    }
    return (g + 4) % 4;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("multiply: qubit counts differ (" + std::to_string(p.num_qubits()) + " vs " +
                                    std::to_string(q.num_qubits()) + ")");
    }
    int phase = p.phase_exponent() + q.phase_exponent();
    uint64_t overlap = p.support() & q.support();
    while (overlap) {
        int j = std::countr_zero(overlap);
        overlap &= overlap - 1;
        phase += product_phase_exponent((p.x_bits() >> j) & 1, (p.z_bits() >> j) & 1, (q.x_bits() >> j) & 1,
                                        (q.z_bits() >> j) & 1);
    }
    return PauliString::from_bits(p.num_qubits(), p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(), phase);
}

bool commutes(const PauliString& p, const PauliString& q) {
    if (p.num_qubits() != q.num_qubits()) throw std::invalid_argument("commutes: qubit counts differ");
    uint64_t anti = (p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits());
    return (std::popcount(anti) & 1) == 0;
}

Eigen::MatrixXcd dense_matrix(const PauliString& p) {
    const int n = p.num_qubits();
    if (n > kMaxDenseMatrixQubits) {
        throw ResourceError("dense_matrix: " + std::to_string(n) + " qubits exceeds limit of " +
                            std::to_string(kMaxDenseMatrixQubits));
    }
    using C = std::complex<double>;
    const C I(0, 1);
    Eigen::Matrix2cd sx, sy, sz;
    sx << 0, 1, 1, 0;
    sy << 0, -I, I, 0;
    sz << 1, 0, 0, -1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        Eigen::Matrix2cd s = Eigen::Matrix2cd::Identity();
        switch (p.op(q)) {
            case 'X': s = sx; break;
            case 'Y': s = sy; break;
            case 'Z': s = sz; break;
            default: break;
        }
        // kron(out, s) puts the new qubit in the least significant position.
        Eigen::MatrixXcd k(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c) k.block(2 * r, 2 * c, 2, 2) = out(r, c) * s;
        out = std::move(k);
    }
    static const C kPhase[4] = {C(1, 0), C(0, 1), C(-1, 0), C(0, -1)};
    return out * kPhase[p.phase_exponent()];
}

}  // namespace stabgs

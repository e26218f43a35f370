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

#include "stabgs/clifford.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stabgs {

namespace {

struct GateName {
    GateKind kind;
    const char* name;
};

constexpr GateName kNames[] = {{GateKind::H, "H"},   {GateKind::S, "S"}, {GateKind::S_DAG, "S_DAG"},
                               {GateKind::X, "X"},   {GateKind::Y, "Y"}, {GateKind::Z, "Z"},
                               {GateKind::CX, "CX"}, {GateKind::CZ, "CZ"}};

const char* name_of(GateKind k) {
    for (const auto& e : kNames)
        if (e.kind == k) return e.name;
    return "?";
}

// Images of X_q and Z_q under conjugation by a single-qubit gate on q.
void single_images(GateKind k, int n, int q, PauliString& img_x, PauliString& img_z) {
    const int qq = q + 1;
    PauliString X = PauliString::single(n, qq, 'X');
    PauliString Y = PauliString::single(n, qq, 'Y');
    PauliString Z = PauliString::single(n, qq, 'Z');
    switch (k) {
        case GateKind::H: img_x = Z; img_z = X; break;
        case GateKind::S: img_x = Y; img_z = Z; break;
        case GateKind::S_DAG: img_x = Y.negated(); img_z = Z; break;
        case GateKind::X: img_x = X; img_z = Z.negated(); break;
        case GateKind::Y: img_x = X.negated(); img_z = Z.negated(); break;
        case GateKind::Z: img_x = X.negated(); img_z = Z; break;
        default: throw std::logic_error("single_images: two-qubit gate");
    }
}

}  // namespace

CliffordGate CliffordGate::inverse() const {
    switch (kind) {
        case GateKind::S: return {GateKind::S_DAG, q0, q1};
        case GateKind::S_DAG: return {GateKind::S, q0, q1};
        default: return *this;
    }
}

std::string CliffordGate::str() const {
    std::string out = name_of(kind);
    out += ' ' + std::to_string(q0 + 1);
    if (is_two_qubit()) out += ' ' + std::to_string(q1 + 1);
    return out;
}

CliffordGate CliffordGate::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string name;
    in >> name;
    for (const auto& e : kNames) {
        if (name != e.name) continue;
        CliffordGate g{e.kind, -1, -1};
        int a = 0, b = 0;
        if (!(in >> a)) throw std::invalid_argument("gate '" + std::string(text) + "' lacks a qubit");
        g.q0 = a - 1;
        if (g.is_two_qubit()) {
            if (!(in >> b)) throw std::invalid_argument("gate '" + std::string(text) + "' lacks a second qubit");
            g.q1 = b - 1;
        }
        return g;
    }
    throw std::invalid_argument("unknown gate '" + std::string(text) + "'");
}

std::string circuit_str(const Circuit& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += "; ";
        out += c[i].str();
    }
    return out;
}

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view part = text.substr(start, end - start);
        if (part.find_first_not_of(" \t\n") != std::string_view::npos) c.push_back(CliffordGate::parse(part));
        start = end + 1;
    }
    return c;
}

Circuit inverse(const Circuit& c) {
    Circuit out;
    out.reserve(c.size());
    for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(it->inverse());
    return out;
}

void check_gate(const CliffordGate& g, int num_qubits) {
    auto bad = [&](int q) { return q < 0 || q >= num_qubits; };
    if (bad(g.q0) || (g.is_two_qubit() && (bad(g.q1) || g.q1 == g.q0))) {
        throw std::out_of_range("gate '" + g.str() + "' addresses qubits outside 1.." + std::to_string(num_qubits));
    }
}

PauliString conjugate(const PauliString& p, const CliffordGate& g) {
    const int n = p.num_qubits();
    check_gate(g, n);
    // Decompose p = i^k * prod_q sigma_q and map each factor; images on distinct
    // qubits commute, so the order of the product does not matter.
    PauliString out = PauliString(n).with_phase(p.phase_exponent());
    auto image = [&](int q, char op) -> PauliString {
        PauliString ix(n), iz(n);
        if (g.is_two_qubit()) {
            const int a = g.q0, b = g.q1;
            auto X = [&](int k) { return PauliString::single(n, k + 1, 'X'); };
            auto Z = [&](int k) { return PauliString::single(n, k + 1, 'Z'); };
            ix = X(q);
            iz = Z(q);
            if (g.kind == GateKind::CX) {
                if (q == a) ix = X(a) * X(b);
                if (q == b) iz = Z(a) * Z(b);
            } else {
                if (q == a) ix = X(a) * Z(b);
                if (q == b) ix = Z(a) * X(b);
            }
        } else if (q == g.q0) {
            single_images(g.kind, n, q, ix, iz);
        } else {
            ix = PauliString::single(n, q + 1, 'X');
            iz = PauliString::single(n, q + 1, 'Z');
        }
        switch (op) {
            case 'X': return ix;
            case 'Z': return iz;
            case 'Y': return (ix * iz).with_phase((ix * iz).phase_exponent() + 1);
            default: return PauliString(n);
        }
    };
    uint64_t sup = p.support();
    while (sup) {
        int q = std::countr_zero(sup);
        sup &= sup - 1;
        out = out * image(q, p.op(q));
    }
    return out;
}

void apply_gate(const CliffordGate& g, Amplitudes& v, int n) {
    check_gate(g, n);
    using C = std::complex<double>;
    const C I(0, 1);
    const uint64_t dim = uint64_t{1} << n;
    const uint64_t m0 = basis_bit(n, g.q0);
    const uint64_t m1 = g.is_two_qubit() ? basis_bit(n, g.q1) : 0;
    auto at = [&](uint64_t b) -> C& { return v[static_cast<Eigen::Index>(b)]; };
    const double r = 1.0 / std::sqrt(2.0);
    for (uint64_t b = 0; b < dim; ++b) {
        switch (g.kind) {
            case GateKind::H:
                if (!(b & m0)) {
                    C a0 = at(b), a1 = at(b | m0);
                    at(b) = r * (a0 + a1);
                    at(b | m0) = r * (a0 - a1);
                }
                break;
            case GateKind::S:
                if (b & m0) at(b) *= I;
                break;
            case GateKind::S_DAG:
                if (b & m0) at(b) *= -I;
                break;
            case GateKind::X:
                if (!(b & m0)) std::swap(at(b), at(b | m0));
                break;
            case GateKind::Y:
                if (!(b & m0)) {
                    C a0 = at(b), a1 = at(b | m0);
                    at(b) = -I * a1;
                    at(b | m0) = I * a0;
                }
                break;
            case GateKind::Z:
                if (b & m0) at(b) = -at(b);
                break;
            case GateKind::CX:
                if ((b & m0) && !(b & m1)) std::swap(at(b), at(b | m1));
                break;
            case GateKind::CZ:
                if ((b & m0) && (b & m1)) at(b) = -at(b);
                break;
        }
    }
}

StateVector apply_gate(const CliffordGate& g, const StateVector& psi) {
    Amplitudes v = psi.amplitudes();
    apply_gate(g, v, psi.num_qubits());
    return StateVector::normalized(psi.num_qubits(), std::move(v));
}

StateVector apply_circuit(const Circuit& c, const StateVector& psi) {
    Amplitudes v = psi.amplitudes();
    for (const auto& g : c) apply_gate(g, v, psi.num_qubits());
    return StateVector::normalized(psi.num_qubits(), std::move(v));
}

StateVector simulate(const Circuit& c, int num_qubits) { return apply_circuit(c, StateVector::basis(num_qubits, 0)); }

}  // namespace stabgs

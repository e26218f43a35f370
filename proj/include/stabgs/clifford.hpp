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
#include <string_view>
#include <vector>

#include "stabgs/pauli.hpp"
#include "stabgs/state.hpp"

namespace stabgs {

enum class GateKind { H, S, S_DAG, X, Y, Z, CX, CZ };

/// A Clifford gate on 0-based qubits. For CX, `q0` is the control and `q1` the target.
struct CliffordGate {
    GateKind kind;
    int q0;
    int q1 = -1;

    static CliffordGate h(int q) { return {GateKind::H, q}; }
    static CliffordGate s(int q) { return {GateKind::S, q}; }
    static CliffordGate s_dag(int q) { return {GateKind::S_DAG, q}; }
    static CliffordGate x(int q) { return {GateKind::X, q}; }
    static CliffordGate y(int q) { return {GateKind::Y, q}; }
    static CliffordGate z(int q) { return {GateKind::Z, q}; }
    static CliffordGate cx(int control, int target) { return {GateKind::CX, control, target}; }
    static CliffordGate cz(int a, int b) { return {GateKind::CZ, a, b}; }

    bool is_two_qubit() const { return kind == GateKind::CX || kind == GateKind::CZ; }
    CliffordGate inverse() const;

    /// Text form with 1-based qubits, e.g. "H 8", "CZ 1 8", "CX 2 1".
    std::string str() const;
    static CliffordGate parse(std::string_view text);

    friend bool operator==(const CliffordGate&, const CliffordGate&) = default;
};

using Circuit = std::vector<CliffordGate>;

/// "H 1; H 2; CZ 1 2".
std::string circuit_str(const Circuit& c);
Circuit parse_circuit(std::string_view text);
Circuit inverse(const Circuit& c);

void check_gate(const CliffordGate& g, int num_qubits);

/// U p U^dagger, exact in the phase.
PauliString conjugate(const PauliString& p, const CliffordGate& g);

/// Applies g in place to a raw amplitude vector of n qubits.
void apply_gate(const CliffordGate& g, Amplitudes& v, int num_qubits);

StateVector apply_gate(const CliffordGate& g, const StateVector& psi);
StateVector apply_circuit(const Circuit& c, const StateVector& psi);

/// Runs `c` on |0...0>.
StateVector simulate(const Circuit& c, int num_qubits);

}  // namespace stabgs

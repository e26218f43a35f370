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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabgs/clifford.hpp"
#include "stabgs/hamiltonian.hpp"
#include "stabgs/pauli.hpp"
#include "stabgs/state.hpp"

namespace stabgs {

/// n independent, pairwise commuting, Hermitian generators; the generated group
/// has 2^n elements and excludes -I, so it fixes a unique state.
class StabilizerGroup {
  public:
    /// Validates every invariant; throws std::invalid_argument on violation.
    explicit StabilizerGroup(std::vector<PauliString> generators);

    /// One generator per line in PauliString text form.
    static StabilizerGroup parse(const std::string& text, int num_qubits);

    int num_qubits() const { return n_; }
    const std::vector<PauliString>& generators() const { return gens_; }

    /// +1 if p is in the group, -1 if -p is, nullopt otherwise.
    std::optional<int> membership_sign(const PauliString& p) const;

    /// Same set of 2^n elements (generators may differ).
    bool same_group(const StabilizerGroup& other) const;

    std::string str() const;

  private:
    int n_;
    std::vector<PauliString> gens_;
};

/// Binary (X|Z) tableau of a group; row i is generator i, signs kept alongside.
struct GeneratorMatrix {
    int num_qubits;
    std::vector<uint64_t> x_rows;
    std::vector<uint64_t> z_rows;
    std::vector<int> signs;

    static GeneratorMatrix of(const StabilizerGroup& g);
    /// Rows like "+ 1001|0000" with qubit 1 leftmost.
    std::string str() const;
};

/// <psi|p|psi> on the stabilizer state of `group`: +1, -1 or 0.
/// Throws std::invalid_argument for non-Hermitian p or mismatched sizes.
int expectation(const StabilizerGroup& group, const PauliString& p);

/// sum_P a_P <P>; evaluated on the group alone, no state is built.
double stabilizer_energy(const StabilizerGroup& group, const PauliHamiltonian& h);

StabilizerGroup conjugate(const StabilizerGroup& group, const CliffordGate& gate);
StabilizerGroup conjugate(const StabilizerGroup& group, const Circuit& circuit);

/// Dense state fixed by the group, global phase canonical. n <= kMaxStateQubits.
StateVector to_statevector(const StabilizerGroup& group);

/// Graph state plus the local Cliffords that map it to a target stabilizer state.
struct GraphStateForm {
    int num_qubits;
    /// Row i, bit j set iff qubits i+1 and j+1 share an edge (symmetric, zero diagonal).
    std::vector<uint64_t> adjacency;
    /// Per-qubit operator product, rightmost factor applied first ("HZ" = Z then H, "I" = none).
    std::vector<std::string> local_cliffords;
    /// Same Cliffords as a gate list to run after the graph state is built.
    Circuit local_circuit;

    std::vector<std::pair<int, int>> edges() const;  // 1-based, i < j
    bool has_edge(int i, int j) const;               // 1-based

    /// "graph 3\nedge 1 3\n...\nlocal 3 H\n".
    std::string str() const;
    static GraphStateForm parse(const std::string& text);
};

/// Reduces the generator matrix to (1|Gamma) with local Cliffords: eliminate the
/// X block (lowest-index pivot columns), Hadamard the non-pivot columns, reduce
/// X to identity, clear the Z diagonal with phase gates and repair signs with
/// Pauli gates.
GraphStateForm to_graph_state(const StabilizerGroup& group);

/// Generators X_i prod_{j in n(i)} Z_j of the graph state.
StabilizerGroup graph_state_group(int num_qubits, const std::vector<uint64_t>& adjacency);

/// prod_edges CZ_e |+>^n.
StateVector prepare_graph_state(int num_qubits, const std::vector<uint64_t>& adjacency);

/// H on every qubit, CZ on every edge, then the local Cliffords; runs from |0...0>.
Circuit preparation_circuit(const GraphStateForm& form);

}  // namespace stabgs

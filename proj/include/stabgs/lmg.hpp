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

#include "stabgs/clifford.hpp"
#include "stabgs/hamiltonian.hpp"
#include "stabgs/state.hpp"
#include "stabgs/tableau.hpp"

namespace stabgs {

/// Lipkin-Meshkov-Glick model parameters: N spins, rescaled coupling vbar and anisotropy chi.
struct LmgParams {
    int n = 2;
    double vbar = 0.0;
    double chi = -1.0;

    /// Throws std::invalid_argument unless 2 <= n <= 64, vbar >= 0 and chi in [-1, 1].
    void validate() const;
};

/// 1/2 sum_i Z_i - vbar/(2(N-1)) sum_{i<j} (X_i X_j + chi Y_i Y_j). YY terms are dropped at chi = 0.
PauliHamiltonian build_lmg(const LmgParams& p);

/// Permutation-symmetric generator families.
///   S1: <s_i Z_i>
///   S2: <s_i X_i X_N (i < N), c Z_1...Z_N>
///   S3: <s_i Y_i Y_N (i < N), c Z_1...Z_N>
enum class Family { S1, S2, S3 };

const char* family_name(Family f);  // "s1", "s2", "s3"
Family parse_family(const std::string& name);

/// Family generators with the given signs; `signs` has n entries (+1/-1), the
/// last one being c for S2/S3.
StabilizerGroup family_group(Family f, int n, const std::vector<int>& signs);

/// <-Z_1, ..., -Z_N>.
StabilizerGroup s1_group(int n);
/// <X_i X_N, (-1)^N Z_1...Z_N>.
StabilizerGroup s2_group(int n);

struct Candidate {
    Family family;
    StabilizerGroup group;
    double energy;
};

/// Distinct candidate groups with their stabilizer energies, in the order
/// S1, S2, S3. For n <= kExhaustiveSignQubits every sign assignment of every
/// family is evaluated (duplicated groups dropped, first occurrence kept, the
/// family's reference signs first). Beyond that only the optimal sign choice of
/// each family is listed.
std::vector<Candidate> candidate_groups(const PauliHamiltonian& h, const LmgParams& p);

inline constexpr int kExhaustiveSignQubits = 6;

/// H = stab_part + magic_part with stab_part the terms that are (up to sign)
/// elements of `group`.
struct HamiltonianSplit {
    LmgParams params;
    Family family;
    StabilizerGroup group;
    double stab_energy;
    PauliHamiltonian stab_part;
    PauliHamiltonian magic_part;
};

/// Lowest-energy candidate; ties within 1e-12 relative go to the earlier candidate
/// (S1 before S2 before S3). Also checks that the symmetry-breaking pair grouping
/// never beats the selection, throwing std::logic_error otherwise.
HamiltonianSplit select_split(const PauliHamiltonian& h, const LmgParams& p);

/// Closed-form stabilizer energies of the reference groups.
double s1_energy(const LmgParams& p);  // -N/2
double s2_energy(const LmgParams& p);  // -N vbar/4 for N > 2, -vbar (1-chi)/2 for N = 2

/// Energy of <X_1X_2, -Y_1Y_2, -Z_3, ..., -Z_N>: -(N-2)/2 - vbar(1-chi)/(2(N-1)).
double pair_grouping_energy(const LmgParams& p);
StabilizerGroup pair_grouping_group(int n);

/// X_1^{N mod 2} on |0>, H on qubits 2..N, then CX from every j > i onto i.
Circuit cx_ladder_circuit(int n);

/// X_1^{N mod 2} H_N prod_i CZ_{i,N} |+>^N.
Circuit star_graph_circuit(int n);

/// Clifford circuit from |0...0> to the stabilizer state of the split.
/// S1 uses X gates, the reference S2 group the CX ladder, anything else the
/// graph-state reduction.
Circuit preparation_circuit(const HamiltonianSplit& split);

/// Dense stabilizer state of the split (n <= kMaxStateQubits). Cross-checks the
/// circuit route against the projector route and, for S2, the star-graph route;
/// throws std::logic_error if they disagree by more than 1e-12 in overlap.
StateVector prepare_stab_state(const HamiltonianSplit& split);

}  // namespace stabgs

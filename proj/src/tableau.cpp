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

#include "stabgs/tableau.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace stabgs {

namespace {

// Row of a GF(2) echelon basis over the 2n-bit symplectic vector (x | z).
struct EchelonRow {
    uint64_t x;
    uint64_t z;
    uint64_t combo;  // generators whose product gives this row
    int pivot;       // < 64: x bit, else z bit (pivot - 64)
};

bool has_bit(uint64_t x, uint64_t z, int pivot) {
    return pivot < 64 ? ((x >> pivot) & 1) : ((z >> (pivot - 64)) & 1);
}

int lowest_bit(uint64_t x, uint64_t z) {
    if (x) return std::countr_zero(x);
    if (z) return 64 + std::countr_zero(z);
    return -1;
}

std::vector<EchelonRow> echelon(const std::vector<PauliString>& gens, int& rank) {
    std::vector<EchelonRow> rows;
    rank = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        uint64_t x = gens[i].x_bits(), z = gens[i].z_bits(), combo = uint64_t{1} << i;
        for (const auto& r : rows) {
            if (has_bit(x, z, r.pivot)) {
                x ^= r.x;
                z ^= r.z;
                combo ^= r.combo;
            }
        }
        int p = lowest_bit(x, z);
        if (p < 0) continue;
        rows.push_back({x, z, combo, p});
        ++rank;
    }
    return rows;
}

PauliString product_of(const std::vector<PauliString>& gens, uint64_t combo, int n) {
    PauliString acc(n);
    while (combo) {
        int i = std::countr_zero(combo);
        combo &= combo - 1;
        acc = acc * gens[static_cast<size_t>(i)];
    }
    return acc;
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::vector<PauliString> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("StabilizerGroup: no generators");
    n_ = gens_.front().num_qubits();
    if (static_cast<int>(gens_.size()) != n_) {
        throw std::invalid_argument("StabilizerGroup: need exactly " + std::to_string(n_) + " generators, got " +
                                    std::to_string(gens_.size()));
    }
    for (size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        if (g.num_qubits() != n_) throw std::invalid_argument("StabilizerGroup: generator qubit counts differ");
        if (!g.is_hermitian()) throw std::invalid_argument("StabilizerGroup: generator " + g.str() + " is not Hermitian");
        if (g.is_identity()) throw std::invalid_argument("StabilizerGroup: identity generator " + g.str());
        for (size_t j = 0; j < i; ++j) {
            if (!commutes(g, gens_[j])) {
                throw std::invalid_argument("StabilizerGroup: generators " + gens_[j].str() + " and " + g.str() +
                                            " anticommute");
            }
        }
    }
    int rank = 0;
    echelon(gens_, rank);
    if (rank != n_) throw std::invalid_argument("StabilizerGroup: generators are not independent");
}

StabilizerGroup StabilizerGroup::parse(const std::string& text, int num_qubits) {
    std::vector<PauliString> gens;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        gens.push_back(PauliString::parse(line, num_qubits));
    }
    return StabilizerGroup(std::move(gens));
}

std::optional<int> StabilizerGroup::membership_sign(const PauliString& p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("membership_sign: qubit counts differ");
    int rank = 0;
    auto rows = echelon(gens_, rank);
    uint64_t x = p.x_bits(), z = p.z_bits(), combo = 0;
    for (const auto& r : rows) {
        if (has_bit(x, z, r.pivot)) {
            x ^= r.x;
            z ^= r.z;
            combo ^= r.combo;
        }
    }
    if (x || z) return std::nullopt;
    PauliString prod = product_of(gens_, combo, n_);
    // prod equals +-p up to the phase of p itself.
    int rel = ((prod.phase_exponent() - p.phase_exponent()) % 4 + 4) % 4;
    if (rel == 0) return 1;
    if (rel == 2) return -1;
    return std::nullopt;  // only reachable for non-Hermitian p
}

bool StabilizerGroup::same_group(const StabilizerGroup& other) const {
    if (other.n_ != n_) return false;
    for (const auto& g : other.gens_) {
        auto s = membership_sign(g);
        if (!s || *s != 1) return false;
    }
    return true;
}

std::string StabilizerGroup::str() const {
    std::string out;
    for (const auto& g : gens_) out += g.str() + "\n";
    return out;
}

GeneratorMatrix GeneratorMatrix::of(const StabilizerGroup& g) {
    GeneratorMatrix m{g.num_qubits(), {}, {}, {}};
    for (const auto& p : g.generators()) {
        m.x_rows.push_back(p.x_bits());
        m.z_rows.push_back(p.z_bits());
        m.signs.push_back(p.sign());
    }
    return m;
}

std::string GeneratorMatrix::str() const {
    std::string out;
    for (size_t i = 0; i < x_rows.size(); ++i) {
        out += signs[i] > 0 ? "+ " : "- ";
        for (int q = 0; q < num_qubits; ++q) out += ((x_rows[i] >> q) & 1) ? '1' : '0';
        out += '|';
        for (int q = 0; q < num_qubits; ++q) out += ((z_rows[i] >> q) & 1) ? '1' : '0';
        out += '\n';
    }
    return out;
}

int expectation(const StabilizerGroup& group, const PauliString& p) {
    if (!p.is_hermitian()) throw std::invalid_argument("expectation: non-Hermitian Pauli string " + p.str());
    if (p.num_qubits() != group.num_qubits()) throw std::invalid_argument("expectation: qubit counts differ");
    for (const auto& g : group.generators()) {
        if (!commutes(g, p)) return 0;
    }
    auto s = group.membership_sign(p);
    return s ? *s : 0;
}

double stabilizer_energy(const StabilizerGroup& group, const PauliHamiltonian& h) {
    if (h.num_qubits() != group.num_qubits()) throw std::invalid_argument("stabilizer_energy: qubit counts differ");
    double e = 0.0;
    for (const auto& t : h.terms()) e += t.coefficient * expectation(group, t.op);
    return e;
}

StabilizerGroup conjugate(const StabilizerGroup& group, const CliffordGate& gate) {
    std::vector<PauliString> out;
    out.reserve(group.generators().size());
    for (const auto& g : group.generators()) out.push_back(conjugate(g, gate));
    return StabilizerGroup(std::move(out));
}

StabilizerGroup conjugate(const StabilizerGroup& group, const Circuit& circuit) {
    std::vector<PauliString> gens = group.generators();
    for (const auto& gate : circuit) {
        for (auto& g : gens) g = conjugate(g, gate);
    }
    return StabilizerGroup(std::move(gens));
}

StateVector to_statevector(const StabilizerGroup& group) {
    const int n = group.num_qubits();
    check_dense_qubits(n, kMaxStateQubits, "to_statevector");
    // Eliminate the X block; rows left with no X part are pure Z constraints
    // s * (-1)^{z.b} = 1 on the support of the state.
    std::vector<PauliString> rows = group.generators();
    size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        const uint64_t bit = uint64_t{1} << col;
        auto it = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                               [&](const PauliString& r) { return r.x_bits() & bit; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<long>(rank), it);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && (rows[i].x_bits() & bit)) rows[i] = rows[i] * rows[rank];
        }
        ++rank;
    }
    // Solve z.b = (sign == -1) over GF(2) for a support element b.
    struct Eq {
        uint64_t z;
        bool rhs;
    };
    std::vector<Eq> eqs;
    for (size_t i = rank; i < rows.size(); ++i) eqs.push_back({rows[i].z_bits(), rows[i].sign() < 0});
    std::vector<int> pivots;
    size_t er = 0;
    for (int col = 0; col < n && er < eqs.size(); ++col) {
        const uint64_t bit = uint64_t{1} << col;
        auto it = std::find_if(eqs.begin() + static_cast<long>(er), eqs.end(), [&](const Eq& e) { return e.z & bit; });
        if (it == eqs.end()) continue;
        std::iter_swap(eqs.begin() + static_cast<long>(er), it);
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (i != er && (eqs[i].z & bit)) {
                eqs[i].z ^= eqs[er].z;
                eqs[i].rhs ^= eqs[er].rhs;
            }
        }
        pivots.push_back(col);
        ++er;
    }
    for (size_t i = er; i < eqs.size(); ++i) {
        if (eqs[i].rhs) throw std::invalid_argument("to_statevector: inconsistent group (contains -I)");
    }
    uint64_t b = 0;  // free variables zero
    for (size_t i = 0; i < er; ++i) {
        if (eqs[i].rhs) b |= uint64_t{1} << pivots[i];
    }
    Amplitudes v = Amplitudes::Zero(Eigen::Index{1} << n);
    v[static_cast<Eigen::Index>(to_basis_mask(n, b))] = 1.0;
    for (const auto& g : group.generators()) v = 0.5 * (v + apply_pauli(g, v));
    return StateVector::normalized(n, std::move(v)).canonical_phase();
}

std::vector<std::pair<int, int>> GraphStateForm::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < num_qubits; ++i)
        for (int j = i + 1; j < num_qubits; ++j)
            if ((adjacency[static_cast<size_t>(i)] >> j) & 1) out.emplace_back(i + 1, j + 1);
    return out;
}

bool GraphStateForm::has_edge(int i, int j) const { return (adjacency.at(static_cast<size_t>(i - 1)) >> (j - 1)) & 1; }

std::string GraphStateForm::str() const {
    std::string out = "graph " + std::to_string(num_qubits) + "\n";
    for (auto [i, j] : edges()) out += "edge " + std::to_string(i) + " " + std::to_string(j) + "\n";
    for (int q = 0; q < num_qubits; ++q) {
        const auto& c = local_cliffords[static_cast<size_t>(q)];
        if (c != "I") out += "local " + std::to_string(q + 1) + " " + c + "\n";
    }
    return out;
}

namespace {

// Gate list (in application order) realising a label such as "HZ" on qubit q.
Circuit label_to_gates(const std::string& label, int q) {
    Circuit c;
    if (label == "I") return c;
    for (auto it = label.rbegin(); it != label.rend(); ++it) {
        switch (*it) {
            case 'H': c.push_back(CliffordGate::h(q)); break;
            case 'S': c.push_back(CliffordGate::s(q)); break;
            case 'X': c.push_back(CliffordGate::x(q)); break;
            case 'Y': c.push_back(CliffordGate::y(q)); break;
            case 'Z': c.push_back(CliffordGate::z(q)); break;
            default: throw std::invalid_argument("bad local Clifford label '" + label + "'");
        }
    }
    return c;
}

}  // namespace

GraphStateForm GraphStateForm::parse(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    GraphStateForm f{0, {}, {}, {}};
    if (!(in >> word) || word != "graph" || !(in >> f.num_qubits) || f.num_qubits < 1 || f.num_qubits > kMaxQubits) {
        throw std::invalid_argument("GraphStateForm::parse: expected 'graph <n>' header");
    }
    f.adjacency.assign(static_cast<size_t>(f.num_qubits), 0);
    f.local_cliffords.assign(static_cast<size_t>(f.num_qubits), "I");
    while (in >> word) {
        if (word == "edge") {
            int i = 0, j = 0;
            in >> i >> j;
            if (i < 1 || j < 1 || i > f.num_qubits || j > f.num_qubits || i == j) {
                throw std::invalid_argument("GraphStateForm::parse: bad edge");
            }
            f.adjacency[static_cast<size_t>(i - 1)] |= uint64_t{1} << (j - 1);
            f.adjacency[static_cast<size_t>(j - 1)] |= uint64_t{1} << (i - 1);
        } else if (word == "local") {
            int q = 0;
            std::string label;
            in >> q >> label;
            if (q < 1 || q > f.num_qubits) throw std::invalid_argument("GraphStateForm::parse: bad local qubit");
            f.local_cliffords[static_cast<size_t>(q - 1)] = label;
        } else {
            throw std::invalid_argument("GraphStateForm::parse: unexpected token '" + word + "'");
        }
    }
    for (int q = 0; q < f.num_qubits; ++q) {
        Circuit c = label_to_gates(f.local_cliffords[static_cast<size_t>(q)], q);
        f.local_circuit.insert(f.local_circuit.end(), c.begin(), c.end());
    }
    return f;
}

GraphStateForm to_graph_state(const StabilizerGroup& group) {
    const int n = group.num_qubits();
    std::vector<PauliString> rows = group.generators();
    Circuit applied;  // U with U|psi> = |G>, in application order
    auto apply = [&](const CliffordGate& g) {
        applied.push_back(g);
        for (auto& r : rows) r = conjugate(r, g);
    };

    // Echelon form of the X block, lowest-index pivot columns first.
    auto eliminate_x = [&](bool full) {
        size_t rank = 0;
        uint64_t pivot_cols = 0;
        for (int col = 0; col < n && rank < rows.size(); ++col) {
            const uint64_t bit = uint64_t{1} << col;
            auto it = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                                   [&](const PauliString& r) { return r.x_bits() & bit; });
            if (it == rows.end()) {
                if (full) throw std::logic_error("to_graph_state: X block is singular after Hadamards");
                continue;
            }
            std::iter_swap(rows.begin() + static_cast<long>(rank), it);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i != rank && (rows[i].x_bits() & bit)) rows[i] = rows[i] * rows[rank];
            }
            pivot_cols |= bit;
            ++rank;
        }
        return pivot_cols;
    };

    const uint64_t pivots = eliminate_x(false);
    for (int q = 0; q < n; ++q) {
        if (!((pivots >> q) & 1)) apply(CliffordGate::h(q));
    }
    eliminate_x(true);  // now row i has X part e_i

    for (int q = 0; q < n; ++q) {
        if ((rows[static_cast<size_t>(q)].z_bits() >> q) & 1) apply(CliffordGate::s_dag(q));
    }

    // Sign repair: a Pauli conjugation flips exactly the rows it anticommutes with.
    uint64_t negative = 0;
    for (int i = 0; i < n; ++i)
        if (rows[static_cast<size_t>(i)].sign() < 0) negative |= uint64_t{1} << i;
    if (negative) {
        std::optional<CliffordGate> fix;
        for (int q = 0; q < n && !fix; ++q) {
            for (char op : {'X', 'Y', 'Z'}) {
                PauliString p = PauliString::single(n, q + 1, op);
                uint64_t flips = 0;
                for (int i = 0; i < n; ++i)
                    if (!commutes(p, rows[static_cast<size_t>(i)])) flips |= uint64_t{1} << i;
                if (flips == negative) {
                    fix = CliffordGate{op == 'X' ? GateKind::X : op == 'Y' ? GateKind::Y : GateKind::Z, q};
                    break;
                }
            }
        }
        if (fix) {
            apply(*fix);
        } else {
            for (int i = 0; i < n; ++i)
                if ((negative >> i) & 1) apply(CliffordGate::z(i));
        }
    }

    GraphStateForm f{n, std::vector<uint64_t>(static_cast<size_t>(n), 0), {}, inverse(applied)};
    for (int i = 0; i < n; ++i) {
        const auto& r = rows[static_cast<size_t>(i)];
        if (r.x_bits() != (uint64_t{1} << i) || r.sign() != 1 || ((r.z_bits() >> i) & 1)) {
            throw std::logic_error("to_graph_state: reduction did not reach graph form");
        }
        f.adjacency[static_cast<size_t>(i)] = r.z_bits();
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (((f.adjacency[static_cast<size_t>(i)] >> j) & 1) != ((f.adjacency[static_cast<size_t>(j)] >> i) & 1)) {
                throw std::logic_error("to_graph_state: adjacency is not symmetric");
            }
    // Per-qubit label: gates on q in application order, written right to left.
    f.local_cliffords.assign(static_cast<size_t>(n), "");
    for (const auto& g : f.local_circuit) {
        std::string name = g.kind == GateKind::H ? "H" : g.kind == GateKind::S ? "S" : g.kind == GateKind::X ? "X"
                           : g.kind == GateKind::Y ? "Y" : "Z";
        auto& label = f.local_cliffords[static_cast<size_t>(g.q0)];
        label = name + label;
    }
    for (auto& l : f.local_cliffords)
        if (l.empty()) l = "I";
    return f;
}

StabilizerGroup graph_state_group(int num_qubits, const std::vector<uint64_t>& adjacency) {
    if (static_cast<int>(adjacency.size()) != num_qubits) throw std::invalid_argument("graph_state_group: bad adjacency");
    std::vector<PauliString> gens;
    for (int i = 0; i < num_qubits; ++i) {
        uint64_t nb = adjacency[static_cast<size_t>(i)];
        if ((nb >> i) & 1) throw std::invalid_argument("graph_state_group: self loop");
        gens.push_back(PauliString::from_bits(num_qubits, uint64_t{1} << i, nb));
    }
    return StabilizerGroup(std::move(gens));
}

StateVector prepare_graph_state(int num_qubits, const std::vector<uint64_t>& adjacency) {
    check_dense_qubits(num_qubits, kMaxStateQubits, "prepare_graph_state");
    if (static_cast<int>(adjacency.size()) != num_qubits) throw std::invalid_argument("prepare_graph_state: bad adjacency");
    Circuit c;
    for (int q = 0; q < num_qubits; ++q) c.push_back(CliffordGate::h(q));
    for (int i = 0; i < num_qubits; ++i)
        for (int j = i + 1; j < num_qubits; ++j)
            if ((adjacency[static_cast<size_t>(i)] >> j) & 1) c.push_back(CliffordGate::cz(i, j));
    return simulate(c, num_qubits);
}

Circuit preparation_circuit(const GraphStateForm& form) {
    Circuit c;
    for (int q = 0; q < form.num_qubits; ++q) c.push_back(CliffordGate::h(q));
    for (auto [i, j] : form.edges()) c.push_back(CliffordGate::cz(i - 1, j - 1));
    c.insert(c.end(), form.local_circuit.begin(), form.local_circuit.end());
    return c;
}

}  // namespace stabgs

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

#include "stabgs/lmg.hpp"

#include <cmath>
#include <stdexcept>

namespace stabgs {

void LmgParams::validate() const {
    if (n < 2 || n > kMaxQubits) throw std::invalid_argument("LMG: N must lie in [2, 64], got " + std::to_string(n));
    if (!(vbar >= 0) || !std::isfinite(vbar)) throw std::invalid_argument("LMG: vbar must be finite and >= 0");
    if (!(chi >= -1 && chi <= 1)) throw std::invalid_argument("LMG: chi must lie in [-1, 1]");
}

PauliHamiltonian build_lmg(const LmgParams& p) {
    p.validate();
    const int n = p.n;
    PauliHamiltonian h(n);
    for (int i = 1; i <= n; ++i) h.add(0.5, PauliString::single(n, i, 'Z'));
    const double g = -p.vbar / (2.0 * (n - 1));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const uint64_t pair = (uint64_t{1} << (i - 1)) | (uint64_t{1} << (j - 1));
            if (p.vbar != 0) h.add(g, PauliString::from_bits(n, pair, 0));
            if (p.vbar != 0 && p.chi != 0) h.add(g * p.chi, PauliString::from_bits(n, pair, pair));
        }
    }
    return h;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::S1: return "s1";
        case Family::S2: return "s2";
        case Family::S3: return "s3";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "s1") return Family::S1;
    if (name == "s2") return Family::S2;
    if (name == "s3") return Family::S3;
    throw std::invalid_argument("unknown family '" + name + "' (expected s1, s2 or s3)");
}

StabilizerGroup family_group(Family f, int n, const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != n) throw std::invalid_argument("family_group: need one sign per generator");
    if (n < 2) throw std::invalid_argument("family_group: need at least 2 qubits");
    std::vector<PauliString> gens;
    const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    const uint64_t last = uint64_t{1} << (n - 1);
    for (int i = 0; i < n; ++i) {
        PauliString g(n);
        const uint64_t bit = uint64_t{1} << i;
        if (f == Family::S1) {
            g = PauliString::from_bits(n, 0, bit);
        } else if (i == n - 1) {
            g = PauliString::from_bits(n, 0, all);
        } else if (f == Family::S2) {
            g = PauliString::from_bits(n, bit | last, 0);
        } else {
            g = PauliString::from_bits(n, bit | last, bit | last);
        }
        gens.push_back(signs[static_cast<size_t>(i)] < 0 ? g.negated() : g);
    }
    return StabilizerGroup(std::move(gens));
}

namespace {

std::vector<int> reference_signs(Family f, int n) {
    std::vector<int> s(static_cast<size_t>(n), f == Family::S1 ? -1 : 1);
    if (f != Family::S1) s.back() = (n % 2 == 0) ? 1 : -1;
    return s;
}

// Sign choice minimizing the S3 energy without enumeration. For chi < 0 the
// Y_iY_j expectations should cancel as far as possible: with sigma_i the sign
// pattern (s_i = sigma_i sigma_N), flip the first floor(N/2) spins.
std::vector<int> s3_optimal_signs(int n, double chi) {
    std::vector<int> s = reference_signs(Family::S3, n);
    if (chi < 0) {
        for (int i = 0; i < n / 2; ++i) s[static_cast<size_t>(i)] = -1;
    }
    return s;
}

}  // namespace

StabilizerGroup s1_group(int n) { return family_group(Family::S1, n, reference_signs(Family::S1, n)); }
StabilizerGroup s2_group(int n) { return family_group(Family::S2, n, reference_signs(Family::S2, n)); }

std::vector<Candidate> candidate_groups(const PauliHamiltonian& h, const LmgParams& p) {
    p.validate();
    if (h.num_qubits() != p.n) throw std::invalid_argument("candidate_groups: Hamiltonian size differs from N");
    const int n = p.n;
    std::vector<Candidate> out;
    auto consider = [&](Family f, const std::vector<int>& signs) {
        StabilizerGroup g = family_group(f, n, signs);
        for (const auto& c : out) {
            if (c.group.same_group(g)) return;
        }
        out.push_back({f, g, stabilizer_energy(g, h)});
    };
    for (Family f : {Family::S1, Family::S2, Family::S3}) {
        consider(f, reference_signs(f, n));
        if (n <= kExhaustiveSignQubits) {
            for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
                std::vector<int> s(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] = ((mask >> i) & 1) ? -1 : 1;
                consider(f, s);
            }
        } else if (f == Family::S3) {
            consider(f, s3_optimal_signs(n, p.chi));
        }
    }
    return out;
}

double s1_energy(const LmgParams& p) { return -p.n / 2.0; }

double s2_energy(const LmgParams& p) {
    if (p.n == 2) return -p.vbar * (1 - p.chi) / 2;
    return -p.n * p.vbar / 4;
}

StabilizerGroup pair_grouping_group(int n) {
    std::vector<PauliString> gens{PauliString::parse("X1X2", n), PauliString::parse("-Y1Y2", n)};
    for (int q = 3; q <= n; ++q) gens.push_back(PauliString::single(n, q, 'Z').negated());
    return StabilizerGroup(std::move(gens));
}

double pair_grouping_energy(const LmgParams& p) { return -(p.n - 2) / 2.0 - p.vbar * (1 - p.chi) / (2.0 * (p.n - 1)); }

HamiltonianSplit select_split(const PauliHamiltonian& h, const LmgParams& p) {
    auto cands = candidate_groups(h, p);
    if (cands.empty()) throw std::logic_error("select_split: no candidates");
    size_t best = 0;
    for (size_t i = 1; i < cands.size(); ++i) {
        const double e = cands[best].energy;
        if (cands[i].energy < e - 1e-12 * (1 + std::abs(e))) best = i;
    }
    const Candidate& c = cands[best];
    if (p.n >= 3) {
        const double guard = stabilizer_energy(pair_grouping_group(p.n), h);
        if (std::abs(guard - pair_grouping_energy(p)) > 1e-9 * (1 + std::abs(guard))) {
            throw std::logic_error("select_split: pair-grouping energy disagrees with its closed form");
        }
        if (guard < c.energy - 1e-12 * (1 + std::abs(c.energy))) {
            throw std::logic_error("select_split: a symmetry-breaking grouping beats the symmetric families");
        }
    }
    HamiltonianSplit split{p, c.family, c.group, c.energy, PauliHamiltonian(p.n), PauliHamiltonian(p.n)};
    for (const auto& t : h.terms()) {
        if (c.group.membership_sign(t.op)) {
            split.stab_part.add(t.coefficient, t.op);
        } else {
            split.magic_part.add(t.coefficient, t.op);
        }
    }
    return split;
}

Circuit cx_ladder_circuit(int n) {
    if (n < 2) throw std::invalid_argument("cx_ladder_circuit: need at least 2 qubits");
    Circuit c;
    if (n % 2 == 1) c.push_back(CliffordGate::x(0));
    for (int q = 1; q < n; ++q) c.push_back(CliffordGate::h(q));
    for (int i = n - 2; i >= 0; --i)
        for (int j = i + 1; j < n; ++j) c.push_back(CliffordGate::cx(j, i));
    return c;
}

Circuit star_graph_circuit(int n) {
    if (n < 2) throw std::invalid_argument("star_graph_circuit: need at least 2 qubits");
    Circuit c;
    for (int q = 0; q < n; ++q) c.push_back(CliffordGate::h(q));
    for (int i = 0; i < n - 1; ++i) c.push_back(CliffordGate::cz(i, n - 1));
    c.push_back(CliffordGate::h(n - 1));
    if (n % 2 == 1) c.push_back(CliffordGate::x(0));
    return c;
}

Circuit preparation_circuit(const HamiltonianSplit& split) {
    const int n = split.params.n;
    if (split.group.same_group(s1_group(n))) {
        Circuit c;
        for (int q = 0; q < n; ++q) c.push_back(CliffordGate::x(q));
        return c;
    }
    if (split.group.same_group(s2_group(n))) return cx_ladder_circuit(n);
    return preparation_circuit(to_graph_state(split.group));
}

StateVector prepare_stab_state(const HamiltonianSplit& split) {
    const int n = split.params.n;
    check_dense_qubits(n, kMaxStateQubits, "prepare_stab_state");
    StateVector projector = to_statevector(split.group);
    auto check = [&](const StateVector& other, const char* route) {
        if (fidelity(projector, other) < 1 - 1e-12) {
            throw std::logic_error(std::string("prepare_stab_state: ") + route + " route disagrees with the projector route");
        }
    };
    check(simulate(preparation_circuit(split), n), "circuit");
    if (split.group.same_group(s2_group(n))) check(simulate(star_graph_circuit(n), n), "star-graph");
    return projector;
}

}  // namespace stabgs

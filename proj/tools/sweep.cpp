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

#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "stabgs/evolve.hpp"
#include "stabgs/exact.hpp"
#include "stabgs/lmg.hpp"
#include "stabgs/metrics.hpp"

namespace stabgs {

namespace {

const std::vector<std::string> kObservableNames = {"energies", "fidelities", "entropy", "tangles", "magic", "varjz", "hf"};

const std::vector<std::string> kColumns = {
    "N",       "chi",      "vbar",       "E_exact",  "E_s1",      "E_s2",      "E_stab_sel",
    "fid_s1",  "fid_s2",   "S1_exact",   "S1_s2",    "tauN_exact", "tauN_s2",  "M2_exact",
    "E_varjz", "fid_varjz", "E_hf",      "fid_hf",   "E_hfproj",  "fid_hfproj"};

constexpr size_t kKeyColumns = 3;

size_t slot(const std::string& name) {
    auto it = std::find(kColumns.begin(), kColumns.end(), name);
    if (it == kColumns.end() || it - kColumns.begin() < static_cast<long>(kKeyColumns)) {
        throw std::invalid_argument("unknown sweep column " + name);
    }
    return static_cast<size_t>(it - kColumns.begin()) - kKeyColumns;
}

}  // namespace

Observable parse_observable(const std::string& name) {
    for (size_t i = 0; i < kObservableNames.size(); ++i)
        if (kObservableNames[i] == name) return static_cast<Observable>(i);
    throw std::invalid_argument("unknown observable '" + name + "'");
}

const std::vector<std::string>& observable_names() { return kObservableNames; }

const std::vector<std::string>& sweep_columns() { return kColumns; }

std::vector<double> vbar_grid(double min, double max, int points, bool linear) {
    if (points < 1) throw std::invalid_argument("vbar grid needs at least one point");
    if (max < min) throw std::invalid_argument("vbar grid: max < min");
    if (!linear && !(min > 0)) throw std::invalid_argument("log vbar grid needs vbar-min > 0 (use --linear)");
    if (min < 0) throw std::invalid_argument("vbar must be non-negative");
    std::vector<double> out(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        out[static_cast<size_t>(i)] =
            linear ? min + t * (max - min) : std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
    }
    // Pin the endpoints against rounding in exp/log.
    out.front() = min;
    if (points > 1) out.back() = max;
    return out;
}

std::set<Observable> SweepSpec::default_observables(const std::vector<int>& n) {
    std::set<Observable> obs;
    for (size_t i = 0; i < kObservableNames.size(); ++i) obs.insert(static_cast<Observable>(i));
    if (std::any_of(n.begin(), n.end(), [](int k) { return k > kMaxSreQubits; })) obs.erase(Observable::Magic);
    return obs;
}

void SweepSpec::validate() const {
    if (n.empty() || chi.empty() || vbar.empty()) throw std::invalid_argument("sweep: empty N, chi or vbar list");
    for (int k : n)
        if (k < 2) throw std::invalid_argument("sweep: N must be at least 2");
    for (double c : chi)
        if (c < -1 || c > 1) throw std::invalid_argument("sweep: chi must lie in [-1, 1]");
    for (double v : vbar)
        if (!(v >= 0)) throw std::invalid_argument("sweep: vbar must be non-negative");
    if (observables.count(Observable::Magic)) {
        for (int k : n)
            if (k > kMaxSreQubits)
                throw std::invalid_argument("sweep: magic needs N <= " + std::to_string(kMaxSreQubits));
    }
    if (jobs < 1) throw std::invalid_argument("sweep: --jobs must be positive");
}

SweepRecord sweep_point(int n, double chi, double vbar, const std::set<Observable>& obs) {
    SweepRecord r{n, chi, vbar, std::vector<std::optional<double>>(kColumns.size() - kKeyColumns), {}};
    auto set = [&](const char* name, double v) { r.values[slot(name)] = v; };
    const LmgParams p{n, vbar, chi};
    p.validate();
    const DickeGroundState gs = ground_state(p);
    const DickeVector s1 = stab_state_dicke_amplitudes(n, Family::S1);
    const DickeVector s2 = stab_state_dicke_amplitudes(n, Family::S2);

    if (obs.count(Observable::Energies)) {
        set("E_exact", gs.energy);
        set("E_s1", s1_energy(p));
        set("E_s2", s2_energy(p));
        set("E_stab_sel", select_split(build_lmg(p), p).stab_energy);
    }
    if (obs.count(Observable::Fidelities)) {
        set("fid_s1", fidelity(gs.state, s1));
        set("fid_s2", fidelity(gs.state, s2));
    }
    if (obs.count(Observable::Entropy)) {
        set("S1_exact", one_spin_entropy(gs.state));
        set("S1_s2", one_spin_entropy(s2));
    }
    if (obs.count(Observable::Tangles)) {
        set("tauN_exact", full_tangle(gs.state));
        set("tauN_s2", full_tangle(s2));
    }
    if (obs.count(Observable::Magic)) set("M2_exact", sre(dicke_to_statevector(gs.state)));
    if (obs.count(Observable::Varjz)) {
        const VariationalResult v = variational_jz(p);
        set("E_varjz", v.energy);
        set("fid_varjz", v.fidelity);
    }
    if (obs.count(Observable::Hf)) {
        const HartreeFock hf = deformed_hf(p);
        set("E_hf", hf.energy);
        set("fid_hf", fidelity(gs.state, hf.state));
        const DickeVector proj = parity_project(hf.state, natural_parity(n));
        set("E_hfproj", dicke_energy(p, proj));
        set("fid_hfproj", fidelity(gs.state, proj));
    }
    return r;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<int> ns = spec.n;
    std::vector<double> chis = spec.chi, vbars = spec.vbar;
    std::sort(ns.begin(), ns.end());
    std::sort(chis.begin(), chis.end());
    std::sort(vbars.begin(), vbars.end());

    std::vector<SweepRecord> rows;
    for (int n : ns)
        for (double c : chis)
            for (double v : vbars) rows.push_back({n, c, v, {}, {}});

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < rows.size(); i = next++) {
            SweepRecord& row = rows[i];
            try {
                row = sweep_point(row.n, row.chi, row.vbar, spec.observables);
            } catch (const std::exception& e) {
                row.values.assign(kColumns.size() - kKeyColumns, std::nullopt);
                row.error = e.what();
            }
        }
    };
    const int threads = std::min<int>(spec.jobs, static_cast<int>(rows.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

std::optional<double> column(const SweepRecord& r, const std::string& name) {
    if (name == "N") return r.n;
    if (name == "chi") return r.chi;
    if (name == "vbar") return r.vbar;
    return r.values.at(slot(name));
}

std::string format_number(double x) {
    if (x == 0) x = 0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
    for (size_t c = 0; c < kColumns.size(); ++c) out << (c ? "," : "") << kColumns[c];
    out << "\n";
    for (const auto& r : rows) {
        out << r.n << "," << format_number(r.chi) << "," << format_number(r.vbar);
        for (const auto& v : r.values) {
            out << ",";
            if (!r.error.empty()) out << "ERROR";
            else if (v) out << format_number(*v);
        }
        out << "\n";
    }
}

void write_json(std::ostream& out, const std::vector<SweepRecord>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json obj;
        obj["N"] = r.n;
        obj["chi"] = r.chi;
        obj["vbar"] = r.vbar;
        for (size_t c = kKeyColumns; c < kColumns.size(); ++c) {
            const auto& v = r.values[c - kKeyColumns];
            obj[kColumns[c]] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
        }
        if (!r.error.empty()) obj["error"] = r.error;
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << "\n";
}

}  // namespace stabgs

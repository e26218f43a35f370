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

// stabgs command-line driver: sweep, decompose, prepare, qitp, adapt.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabgs/adapt.hpp"
#include "stabgs/evolve.hpp"
#include "stabgs/exact.hpp"
#include "stabgs/lmg.hpp"
#include "stabgs/tableau.hpp"
#include "sweep.hpp"

using namespace stabgs;

namespace {

constexpr int kUsageError = 2;
constexpr int kComputeError = 1;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Splices key=value lines from --config into argv. Keys already given on the
// command line are skipped so flags win. "key=true" becomes a bare flag.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::vector<std::string> extra;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--config", "expected key=value, got '" + line + "'");
        const std::string flag = "--" + trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const bool given = std::any_of(args.begin(), args.end(),
                                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
        if (given) continue;
        if (value == "true") extra.push_back(flag);
        else if (value != "false") extra.insert(extra.end(), {flag, value});
    }
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

// Writes to --out when given, else stdout.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

  private:
    std::ofstream file_;
};

struct Common {
    std::string out;
    std::string config;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    long seed = 0;  // reserved; every algorithm here is deterministic
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--out", c.out, "Output path (default stdout)");
    app->add_option("--config", c.config, "key=value file mirroring the flags; flags win");
    app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "Reserved");
}

struct PointOpts {
    int n = 8;
    double vbar = 5;
    double chi = -1;
};

void add_point(CLI::App* app, PointOpts& o) {
    app->add_option("--n", o.n, "Number of spins")->check(CLI::Range(2, 30));
    app->add_option("--vbar", o.vbar, "Interaction strength")->check(CLI::NonNegativeNumber);
    app->add_option("--chi", o.chi, "Anisotropy in [-1, 1]")->check(CLI::Range(-1.0, 1.0));
}

HamiltonianSplit split_for(const LmgParams& p, const std::string& family) {
    const PauliHamiltonian h = build_lmg(p);
    HamiltonianSplit split = select_split(h, p);
    if (family == "selected") return split;
    const Family f = parse_family(family);
    for (const Candidate& c : candidate_groups(h, p)) {
        if (c.family != f) continue;
        split.family = c.family;
        split.group = c.group;
        split.stab_energy = c.energy;
        split.stab_part = PauliHamiltonian(p.n);
        split.magic_part = PauliHamiltonian(p.n);
        for (const auto& t : h.terms())
            (c.group.membership_sign(t.op) ? split.stab_part : split.magic_part).add(t.coefficient, t.op);
        return split;
    }
    throw std::invalid_argument("no candidate for family " + family);
}

Circuit graph_route_circuit(const StabilizerGroup& g) {
    if (g.same_group(s2_group(g.num_qubits()))) return star_graph_circuit(g.num_qubits());
    return preparation_circuit(to_graph_state(g));
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (!l.empty()) out.push_back(l);
    return out;
}

int cmd_sweep(const Common& c, std::vector<int> ns, std::vector<double> chis, std::vector<double> vbars, double vmin,
              double vmax, int vpoints, bool linear, const std::vector<std::string>& obs_names,
              const std::string& json_path) {
    SweepSpec spec;
    spec.n = std::move(ns);
    spec.chi = std::move(chis);
    spec.vbar = vbars.empty() ? vbar_grid(vmin, vmax, vpoints, linear) : std::move(vbars);
    if (obs_names.empty()) {
        spec.observables = SweepSpec::default_observables(spec.n);
    } else {
        for (const auto& o : obs_names) spec.observables.insert(parse_observable(o));
    }
    spec.jobs = c.jobs;
    spec.validate();

    const std::vector<SweepRecord> rows = run_sweep(spec);
    Output out(c.out);
    write_csv(out.stream(), rows);
    if (!json_path.empty()) {
        std::ofstream js(json_path);
        if (!js) throw std::runtime_error("cannot write " + json_path);
        write_json(js, rows);
    }
    int status = 0;
    for (const auto& r : rows) {
        if (r.error.empty()) continue;
        std::cerr << "sweep: N=" << r.n << " chi=" << format_number(r.chi) << " vbar=" << format_number(r.vbar)
                  << ": " << r.error << "\n";
        status = kComputeError;
    }
    return status;
}

int cmd_decompose(const Common& c, const PointOpts& o, const std::string& family, bool json) {
    const LmgParams p{o.n, o.vbar, o.chi};
    const HamiltonianSplit split = split_for(p, family);
    const Circuit circuit = graph_route_circuit(split.group);
    const GraphStateForm graph = to_graph_state(split.group);
    Output out(c.out);
    if (json) {
        nlohmann::ordered_json j;
        j["N"] = o.n;
        j["chi"] = o.chi;
        j["vbar"] = o.vbar;
        j["family"] = family_name(split.family);
        j["generators"] = lines(split.group.str());
        j["energy"] = split.stab_energy;
        j["magic_terms"] = lines(split.magic_part.str());
        j["circuit"] = circuit_str(circuit);
        j["cx_circuit"] = circuit_str(preparation_circuit(split));
        j["graph"] = lines(graph.str());
        out.stream() << j.dump(2) << "\n";
        return 0;
    }
    std::ostream& os = out.stream();
    os << "family: " << family_name(split.family) << "\n";
    os << "generators:\n";
    for (const auto& g : lines(split.group.str())) os << "  " << g << "\n";
    os << "energy: " << format_number(split.stab_energy) << "\n";
    os << "magic terms:\n";
    for (const auto& t : lines(split.magic_part.str())) os << "  " << t << "\n";
    os << "circuit: " << circuit_str(circuit) << "\n";
    os << "cx circuit: " << circuit_str(preparation_circuit(split)) << "\n";
    return 0;
}

int cmd_prepare(const Common& c, const PointOpts& o, const std::string& family, bool emit_state) {
    const LmgParams p{o.n, o.vbar, o.chi};
    const HamiltonianSplit split = split_for(p, family);
    Output out(c.out);
    std::ostream& os = out.stream();
    os << "family: " << family_name(split.family) << "\n";
    os << "circuit: " << circuit_str(preparation_circuit(split)) << "\n";
    if (emit_state) {
        const StateVector psi = prepare_stab_state(split).canonical_phase();
        const uint64_t dim = uint64_t{1} << o.n;
        for (uint64_t b = 0; b < dim; ++b) {
            const auto a = psi.amplitudes()[static_cast<Eigen::Index>(b)];
            if (std::abs(a) < 1e-12) continue;
            os << basis_label(o.n, b) << " " << format_number(a.real());
            if (std::abs(a.imag()) > 1e-12) os << " " << format_number(a.imag()) << "i";
            os << "\n";
        }
    }
    return 0;
}

int cmd_qitp(const Common& c, const PointOpts& o, double tau_max, int tau_points, std::optional<double> e0_bar) {
    const LmgParams p{o.n, o.vbar, o.chi};
    p.validate();
    const Spectrum s = Spectrum::dicke(p);
    const Eigen::MatrixXd h = dicke_hamiltonian_full(p);
    const Eigen::VectorXcd exact = ground_state(p).state.amplitudes().cast<std::complex<double>>();
    const Eigen::VectorXcd init[2] = {stab_state_dicke_amplitudes(o.n, Family::S1).amplitudes().cast<std::complex<double>>(),
                                      stab_state_dicke_amplitudes(o.n, Family::S2).amplitudes().cast<std::complex<double>>()};
    const double shift = e0_bar.value_or(default_e0_bar(p));

    Output out(c.out);
    std::ostream& os = out.stream();
    os << "tau,fidelity_s1_init,fidelity_s2_init,energy_s1_init,energy_s2_init,success_prob_s1,success_prob_s2\n";
    for (int i = 0; i < tau_points; ++i) {
        const double tau = tau_points == 1 ? 0.0 : tau_max * i / (tau_points - 1);
        double fid[2], en[2], prob[2];
        for (int r = 0; r < 2; ++r) {
            const QitpResult q = qitp_postselect(s, init[r], tau, shift);
            fid[r] = std::abs(exact.dot(q.state));
            en[r] = q.state.dot(h.cast<std::complex<double>>() * q.state).real();
            prob[r] = q.success_probability;
        }
        os << format_number(tau) << "," << format_number(fid[0]) << "," << format_number(fid[1]) << ","
           << format_number(en[0]) << "," << format_number(en[1]) << "," << format_number(prob[0]) << ","
           << format_number(prob[1]) << "\n";
    }
    return 0;
}

void write_adapt_csv(std::ostream& os, const AdaptTrace& t) {
    os << "layer,operator_label,gradient,energy,rel_energy_error,fidelity\n";
    for (const auto& l : t.layers)
        os << l.layer << "," << l.op_label << "," << format_number(l.gradient) << "," << format_number(l.energy) << ","
           << format_number(l.rel_energy_error) << "," << format_number(l.fidelity) << "\n";
}

int cmd_adapt(const Common& c, const PointOpts& o, const std::string& reference, const AdaptConfig& cfg) {
    const LmgParams p{o.n, o.vbar, o.chi};
    const StateVector ref = reference == "selected" ? prepare_stab_state(split_for(p, "selected"))
                                                    : dicke_to_statevector(stab_state_dicke_amplitudes(o.n, parse_family(reference)));
    Output out(c.out);
    try {
        const AdaptTrace t = run_adapt(build_lmg(p), ref, cfg);
        write_adapt_csv(out.stream(), t);
    } catch (const AdaptError& e) {
        write_adapt_csv(out.stream(), e.trace);
        throw;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stabilizer ground states of the LMG model"};
    app.require_subcommand(1);

    Common common;
    PointOpts point;

    auto* sweep = app.add_subcommand("sweep", "Observables over an (N, chi, vbar) grid as CSV");
    std::vector<int> ns{8};
    std::vector<double> chis{-1.0}, vbars;
    double vmin = 0.1, vmax = 100;
    int vpoints = 50;
    bool linear = false;
    std::vector<std::string> obs;
    std::string json_path;
    add_common(sweep, common);
    sweep->add_option("--n", ns, "Spin counts")->delimiter(',')->check(CLI::Range(2, 30));
    sweep->add_option("--chi", chis, "Anisotropies")->delimiter(',')->check(CLI::Range(-1.0, 1.0));
    sweep->add_option("--vbar", vbars, "Explicit vbar values (overrides the grid)")->delimiter(',');
    sweep->add_option("--vbar-min", vmin, "Grid start");
    sweep->add_option("--vbar-max", vmax, "Grid end");
    sweep->add_option("--vbar-points", vpoints, "Grid size")->check(CLI::PositiveNumber);
    sweep->add_flag("--linear", linear, "Linear instead of log grid");
    sweep->add_option("--observables", obs, "Subset of energies,fidelities,entropy,tangles,magic,varjz,hf")
        ->delimiter(',')
        ->check(CLI::IsMember(observable_names()));
    sweep->add_option("--json", json_path, "Also write the rows as JSON");

    auto* decompose = app.add_subcommand("decompose", "Stabilizer group, energy, magic terms and circuit");
    std::string family = "selected";
    bool json = false;
    add_common(decompose, common);
    add_point(decompose, point);
    decompose->add_option("--family", family, "selected, s1, s2 or s3")
        ->check(CLI::IsMember({"selected", "s1", "s2", "s3"}));
    decompose->add_flag("--json", json, "JSON instead of text");

    auto* prepare = app.add_subcommand("prepare", "Preparation circuit and state of a stabilizer family");
    bool emit_state = false;
    add_common(prepare, common);
    add_point(prepare, point);
    prepare->add_option("--family", family, "selected, s1, s2 or s3")->check(CLI::IsMember({"selected", "s1", "s2", "s3"}));
    prepare->add_flag("--emit-state", emit_state, "Print nonzero amplitudes");

    auto* qitp = app.add_subcommand("qitp", "Probabilistic imaginary-time evolution from both stabilizer states");
    double tau_max = 20;
    int tau_points = 81;
    std::optional<double> e0_bar;
    add_common(qitp, common);
    add_point(qitp, point);
    qitp->add_option("--tau-max", tau_max, "Largest tau")->check(CLI::NonNegativeNumber);
    qitp->add_option("--tau-points", tau_points, "Number of tau values")->check(CLI::PositiveNumber);
    qitp->add_option("--e0-bar", e0_bar, "Energy shift (default: selected stabilizer energy)");

    auto* adapt = app.add_subcommand("adapt", "ADAPT-VQE trace from a stabilizer reference");
    std::string reference = "s2";
    AdaptConfig cfg;
    add_common(adapt, common);
    add_point(adapt, point);
    adapt->add_option("--reference", reference, "s1, s2 or selected")->check(CLI::IsMember({"selected", "s1", "s2"}));
    adapt->add_option("--max-layers", cfg.max_layers, "Layer cap")->check(CLI::NonNegativeNumber);
    adapt->add_option("--grad-threshold", cfg.grad_threshold, "Stop when all gradients are below this")
        ->check(CLI::PositiveNumber);
    adapt->add_option("--vqe-tol", cfg.vqe_tol, "Per-layer energy tolerance")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*sweep) return cmd_sweep(common, ns, chis, vbars, vmin, vmax, vpoints, linear, obs, json_path);
        if (*decompose) return cmd_decompose(common, point, family, json);
        if (*prepare) return cmd_prepare(common, point, family, emit_state);
        if (*qitp) return cmd_qitp(common, point, tau_max, tau_points, e0_bar);
        if (*adapt) return cmd_adapt(common, point, reference, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputeError;
    }
    return kUsageError;
}

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

#include "stabgs/evolve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "stabgs/optimize.hpp"

namespace stabgs {

namespace {

using C = std::complex<double>;

constexpr double kDegenerate = 1e-9;

// log(1 + e^y) without overflow.
double softplus(double y) { return std::max(y, 0.0) + std::log1p(std::exp(-std::abs(y))); }

DickeVector to_dicke(int n, DickeSector sector, const Eigen::VectorXcd& v) {
    Eigen::VectorXd a = v.real();
    for (int k = 0; k <= n; ++k) {
        const bool even = k % 2 == 0;
        if ((sector == DickeSector::EvenUp && !even) || (sector == DickeSector::OddUp && even)) a[k] = 0;
    }
    return DickeVector::normalized(n, sector, a);
}

struct Evolved {
    Eigen::VectorXcd state;
    double energy;
    double log_norm;
    bool ground_overlap;
};

Evolved evolve(const Spectrum& s, const Eigen::VectorXcd& v, double tau, double e0_bar) {
    if (!(tau >= 0) || !std::isfinite(tau)) throw std::invalid_argument("ite_evolve: tau must be finite and >= 0");
    if (v.size() != s.dimension()) throw std::invalid_argument("ite_evolve: dimension mismatch");
    const Eigen::VectorXcd c = s.vectors().transpose().cast<C>() * v;
    // Shift by the lowest populated level so the weights cannot overflow.
    Eigen::Index ref = 0;
    while (ref + 1 < c.size() && c[ref] == C(0)) ++ref;
    const double e_ref = s.values()[ref];
    Eigen::VectorXcd w(c.size());
    for (Eigen::Index i = 0; i < c.size(); ++i) w[i] = c[i] * std::exp(-(s.values()[i] - e_ref) * tau);
    const double norm = w.norm();
    if (!(norm > 0)) throw std::domain_error("ite_evolve: evolved state vanished");
    double e = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i) e += std::norm(w[i]) * s.values()[i];
    return {s.vectors().cast<C>() * (w / norm), e / (norm * norm), std::log(norm) - (e_ref - e0_bar) * tau,
            s.ground_weight(v) > 1e-24};
}

Eigen::VectorXd dicke_weights(const DickeVector& d, const std::function<double(double)>& log_weight) {
    const int n = d.num_spins();
    Eigen::VectorXd logw = Eigen::VectorXd::Constant(n + 1, -std::numeric_limits<double>::infinity());
    double top = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= n; ++k) {
        if (d[k] == 0.0) continue;
        logw[k] = log_weight(k - n / 2.0);
        top = std::max(top, logw[k]);
    }
    Eigen::VectorXd a = Eigen::VectorXd::Zero(n + 1);
    for (int k = 0; k <= n; ++k)
        if (d[k] != 0.0) a[k] = d[k] * std::exp(logw[k] - top);
    return a;
}

VariationalResult finish(const LmgParams& p, const Eigen::MatrixXd& h, double t1, double t2, DickeVector state) {
    const double e = state.amplitudes().dot(h * state.amplitudes());
    const double fid = fidelity(state, ground_state(p).state);
    return {t1, t2, e, std::move(state), fid};
}

}  // namespace

Spectrum::Spectrum(const Eigen::MatrixXd& h) {
    if (h.rows() != h.cols() || h.rows() == 0) throw std::invalid_argument("Spectrum: need a square matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("Spectrum: eigensolver failed (dimension " + std::to_string(h.rows()) + ")");
    }
    values_ = es.eigenvalues();
    vectors_ = es.eigenvectors();
}

Spectrum Spectrum::dense(const PauliHamiltonian& h) {
    check_dense_qubits(h.num_qubits(), kMaxEvolveQubits, "Spectrum::dense");
    return Spectrum(real_dense_matrix(h));
}

Spectrum Spectrum::dicke(const LmgParams& p) { return Spectrum(dicke_hamiltonian_full(p)); }

double Spectrum::gap() const {
    for (Eigen::Index i = 1; i < values_.size(); ++i)
        if (values_[i] > values_[0] + kDegenerate) return values_[i] - values_[0];
    return 0.0;
}

Eigen::MatrixXd Spectrum::function(const std::function<double(double)>& f) const {
    Eigen::VectorXd d(values_.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = f(values_[i]);
    return vectors_ * d.asDiagonal() * vectors_.transpose();
}

Eigen::VectorXcd Spectrum::apply(const std::function<double(double)>& f, const Eigen::VectorXcd& v) const {
    if (v.size() != dimension()) throw std::invalid_argument("Spectrum::apply: dimension mismatch");
    Eigen::VectorXcd c = vectors_.transpose().cast<C>() * v;
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] *= f(values_[i]);
    return vectors_.cast<C>() * c;
}

double Spectrum::ground_weight(const Eigen::VectorXcd& v) const {
    const Eigen::VectorXcd c = vectors_.transpose().cast<C>() * v;
    double w = 0;
    for (Eigen::Index i = 0; i < c.size() && values_[i] <= values_[0] + kDegenerate; ++i) w += std::norm(c[i]);
    return w;
}

double default_e0_bar(const LmgParams& p) { return select_split(build_lmg(p), p).stab_energy; }

IteState ite_evolve(const Spectrum& s, const StateVector& initial, double tau, double e0_bar) {
    Evolved r = evolve(s, initial.amplitudes(), tau, e0_bar);
    return {StateVector::normalized(initial.num_qubits(), std::move(r.state)), r.energy, r.log_norm, r.ground_overlap};
}

IteState ite_evolve(const PauliHamiltonian& h, const StateVector& initial, double tau, double e0_bar) {
    return ite_evolve(Spectrum::dense(h), initial, tau, e0_bar);
}

DickeIteState ite_evolve(const LmgParams& p, const DickeVector& initial, double tau, double e0_bar) {
    if (initial.num_spins() != p.n) throw std::invalid_argument("ite_evolve: N mismatch");
    Evolved r = evolve(Spectrum::dicke(p), initial.amplitudes().cast<C>(), tau, e0_bar);
    return {to_dicke(p.n, initial.sector(), r.state), r.energy, r.log_norm, r.ground_overlap};
}

QitpOperators qitp_operators(const Spectrum& s, double tau, double e0_bar) {
    if (!(tau >= 0) || !std::isfinite(tau)) throw std::invalid_argument("qitp_operators: tau must be finite and >= 0");
    auto a = [&](double e) { return std::exp(-0.5 * softplus(-2 * (e - e0_bar) * tau)); };
    auto q = [&](double e) { return std::exp(-0.5 * softplus(2 * (e - e0_bar) * tau)); };
    return {s.function(a), s.function(q)};
}

QitpOperators qitp_operators(const PauliHamiltonian& h, double tau, double e0_bar) {
    return qitp_operators(Spectrum::dense(h), tau, e0_bar);
}

Eigen::MatrixXd qitp_unitary(const QitpOperators& ops) {
    const Eigen::Index d = ops.q.rows();
    Eigen::MatrixXd u(2 * d, 2 * d);
    u << ops.q, ops.a, ops.a, -ops.q;
    return u;
}

QitpResult qitp_postselect(const Spectrum& s, const Eigen::VectorXcd& initial, double tau, double e0_bar) {
    const Eigen::Index d = s.dimension();
    if (initial.size() != d) throw std::invalid_argument("qitp_postselect: dimension mismatch");
    const Eigen::MatrixXd u = qitp_unitary(qitp_operators(s, tau, e0_bar));
    Eigen::VectorXcd in = Eigen::VectorXcd::Zero(2 * d);
    in.head(d) = initial;
    const Eigen::VectorXcd out = u.cast<C>() * in;
    const Eigen::VectorXcd kept = out.head(d);  // ancilla measured in |0>
    const double prob = kept.squaredNorm();
    if (prob < 1e-14) throw std::domain_error("qitp_postselect: post-selection probability vanishes");
    return {kept / std::sqrt(prob), prob};
}

QitpResult qitp_direct(const Spectrum& s, const Eigen::VectorXcd& initial, double tau, double e0_bar) {
    const Eigen::VectorXcd kept =
        s.apply([&](double e) { return std::exp(-0.5 * softplus(2 * (e - e0_bar) * tau)); }, initial);
    const double prob = kept.squaredNorm();
    if (prob < 1e-14) throw std::domain_error("qitp_direct: post-selection probability vanishes");
    return {kept / std::sqrt(prob), prob};
}

DickeVector apply_exp_jz(const DickeVector& d, double theta1, double theta2) {
    Eigen::VectorXd a = dicke_weights(d, [&](double m) { return -theta2 * m * m - theta1 * m; });
    return DickeVector::normalized(d.num_spins(), d.sector(), a);
}

VariationalResult variational_jz(const LmgParams& p, int order) {
    p.validate();
    return variational_jz(p, order, stab_state_dicke_amplitudes(p.n, Family::S2));
}

VariationalResult variational_jz(const LmgParams& p, int order, const DickeVector& reference) {
    p.validate();
    if (order != 1 && order != 2) throw std::invalid_argument("variational_jz: order must be 1 or 2");
    if (reference.num_spins() != p.n) throw std::invalid_argument("variational_jz: reference has the wrong N");
    const Eigen::MatrixXd h = dicke_hamiltonian_full(p);
    auto energy = [&](double t1, double t2) {
        const Eigen::VectorXd a = apply_exp_jz(reference, t1, t2).amplitudes();
        return a.dot(h * a);
    };
    auto best_theta1 = [&](double t2) { return scan_refine([&](double t1) { return energy(t1, t2); }, 0.0, 4.0, 81); };
    if (order == 1) {
        const Minimum m = best_theta1(0.0);
        return finish(p, h, m.x, 0.0, apply_exp_jz(reference, m.x));
    }
    const Minimum m2 = scan_refine([&](double t2) { return best_theta1(t2).f; }, -1.0, 1.0, 41);
    const Minimum m1 = best_theta1(m2.x);
    return finish(p, h, m1.x, m2.x, apply_exp_jz(reference, m1.x, m2.x));
}

VariationalResult variational_qitp_jz(const LmgParams& p) {
    p.validate();
    const DickeVector ref = stab_state_dicke_amplitudes(p.n, Family::S2);
    const Eigen::MatrixXd h = dicke_hamiltonian_full(p);
    auto state = [&](double t) {
        return DickeVector::normalized(p.n, ref.sector(),
                                       dicke_weights(ref, [&](double m) { return -0.5 * softplus(2 * t * (m + p.n / 2.0)); }));
    };
    auto energy = [&](double t) {
        const Eigen::VectorXd a = state(t).amplitudes();
        return a.dot(h * a);
    };
    const Minimum m = scan_refine(energy, 0.0, 4.0, 81);
    return finish(p, h, m.x, 0.0, state(m.x));
}

DickeVector hf_state(int n, double alpha) {
    const double s = -std::sin(alpha / 2), c = std::cos(alpha / 2);
    Eigen::VectorXd a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = std::sqrt(binomial(n, k)) * std::pow(s, k) * std::pow(c, n - k);
    return DickeVector::normalized(n, DickeSector::Mixed, a);
}

HartreeFock deformed_hf(const LmgParams& p) {
    p.validate();
    const Eigen::MatrixXd h = dicke_hamiltonian_full(p);
    auto energy = [&](double alpha) {
        const Eigen::VectorXd a = hf_state(p.n, alpha).amplitudes();
        return a.dot(h * a);
    };
    Minimum m = scan_refine(energy, 0.0, std::numbers::pi, 65);
    const double e_zero = energy(0.0);
    if (e_zero <= m.f + 1e-12) m = {0.0, e_zero};
    return {m.x, m.f, hf_state(p.n, m.x)};
}

int natural_parity(int n) { return n % 2 == 0 ? 1 : -1; }

DickeVector parity_project(const DickeVector& d, int parity) {
    if (parity != 1 && parity != -1) throw std::invalid_argument("parity_project: parity must be +1 or -1");
    const int n = d.num_spins();
    Eigen::VectorXd a = d.amplitudes();
    for (int k = 0; k <= n; ++k)
        if (((n - k) % 2 == 0 ? 1 : -1) != parity) a[k] = 0;
    if (a.norm() < 1e-14) throw std::domain_error("parity_project: nothing left in the requested sector");
    const bool even_k = parity == natural_parity(n);
    return DickeVector::normalized(n, even_k ? DickeSector::EvenUp : DickeSector::OddUp, a);
}

StateVector parity_project(const StateVector& psi, int parity) {
    if (parity != 1 && parity != -1) throw std::invalid_argument("parity_project: parity must be +1 or -1");
    Amplitudes a = psi.amplitudes();
    for (uint64_t b = 0; b < psi.dimension(); ++b)
        if (((std::popcount(b) % 2) ? -1 : 1) != parity) a[static_cast<Eigen::Index>(b)] = 0;
    if (a.norm() < 1e-14) throw std::domain_error("parity_project: nothing left in the requested sector");
    return StateVector::normalized(psi.num_qubits(), std::move(a));
}

}  // namespace stabgs

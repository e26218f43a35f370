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

#include "stabgs/adapt.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "stabgs/exact.hpp"
#include "stabgs/lmg.hpp"

using namespace stabgs;
using C = std::complex<double>;

namespace {

Eigen::MatrixXcd parity_matrix(int n) {
    const uint64_t d = uint64_t{1} << n;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (uint64_t b = 0; b < d; ++b) p(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = (std::popcount(b) % 2) ? -1 : 1;
    return p;
}

// e^{i theta T} by diagonalizing T.
Eigen::MatrixXcd exp_i(const Eigen::MatrixXcd& t, double theta) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t);
    Eigen::VectorXcd phases = (C(0, theta) * es.eigenvalues().cast<C>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

StateVector random_state(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    Amplitudes v(Eigen::Index{1} << n);
    for (auto& a : v) a = C(g(rng), g(rng));
    return StateVector::normalized(n, v);
}

}  // namespace

TEST(Pool, TwoQubitPool) {
    auto ops = pool(2);
    ASSERT_EQ(ops.size(), 2u);
    EXPECT_EQ(ops[0].label, "X1Y2+Y1X2");
    EXPECT_EQ(ops[1].label, "X1Y2-Y1X2");
    EXPECT_EQ(ops[0].op.str(), PauliHamiltonian::parse("1 X1Y2\n1 Y1X2", 2).str());
    EXPECT_EQ(ops[1].op.str(), PauliHamiltonian::parse("1 X1Y2\n-1 Y1X2", 2).str());
}

TEST(Pool, SizeHermiticityParity) {
    for (int n = 2; n <= 4; ++n) {
        auto ops = pool(n);
        EXPECT_EQ(ops.size(), static_cast<size_t>(n * (n - 1)));
        const Eigen::MatrixXcd par = parity_matrix(n);
        for (const auto& t : ops) {
            const Eigen::MatrixXcd m = dense_matrix(t.op);
            EXPECT_LE((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
            EXPECT_LE((m * par - par * m).cwiseAbs().maxCoeff(), 1e-15) << t.label;
        }
        for (const auto& b : symmetry_breaking_pool(n)) {
            const Eigen::MatrixXcd m = dense_matrix(b);
            EXPECT_LE((m * par + par * m).cwiseAbs().maxCoeff(), 1e-15);  // anticommutes
        }
    }
    EXPECT_THROW(pool(1), std::invalid_argument);
}

TEST(Pool, RotationIsRealOrthogonalExponential) {
    for (int sign : {1, -1})
        for (double theta : {0.0, 0.3, -1.2, 2.5}) {
            const Eigen::Matrix4d r = pool_rotation(sign, theta);
            EXPECT_LE((r.transpose() * r - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-14);
            const Eigen::MatrixXcd want = exp_i(dense_matrix(pool_operator(2, 0, 1, sign).op), theta);
            EXPECT_LE(want.imag().cwiseAbs().maxCoeff(), 1e-14);
            EXPECT_LE((want.real() - r).cwiseAbs().maxCoeff(), 1e-14);
        }
}

TEST(Pool, KernelMatchesDenseExponential) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    const int n = 4;
    Eigen::VectorXd v(16);
    for (auto& a : v) a = g(rng);
    v.normalize();
    for (const auto& t : pool(n)) {
        Eigen::VectorXd w = v;
        apply_pool_rotation(t, 0.7, w, n);
        const Eigen::VectorXcd want = exp_i(dense_matrix(t.op), 0.7) * v.cast<C>();
        EXPECT_LE((want - w.cast<C>()).cwiseAbs().maxCoeff(), 1e-13) << t.label;
    }
}

TEST(Gradient, VanishesOnEigenstates) {
    LmgParams p{6, 3.0, -1.0};
    PauliHamiltonian h = build_lmg(p);
    StateVector gs = dense_ground_state(p).state;
    for (const auto& t : pool(6)) EXPECT_NEAR(gradient(gs, t.op, h), 0.0, 1e-10);
}

TEST(Gradient, MatchesFiniteDifference) {
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 6; ++n) {
        PauliHamiltonian h = build_lmg({n, 2.7, -0.4});
        const Eigen::MatrixXcd hm = dense_matrix(h);
        StateVector psi = random_state(rng, n);
        auto ops = pool(n);
        for (size_t a = 0; a < ops.size(); a += 3) {
            const Eigen::MatrixXcd t = dense_matrix(ops[a].op);
            auto e = [&](double theta) {
                const Eigen::VectorXcd v = exp_i(t, theta) * psi.amplitudes();
                return v.dot(hm * v).real();
            };
            const double delta = 1e-5;
            EXPECT_NEAR(gradient(psi, ops[a].op, h), (e(delta) - e(-delta)) / (2 * delta), 1e-6);
        }
    }
}

TEST(Gradient, SymmetryBreakingOperatorsAreInert) {
    LmgParams p{6, 5.0, -1.0};
    PauliHamiltonian h = build_lmg(p);
    for (Family f : {Family::S1, Family::S2}) {
        StateVector psi = dicke_to_statevector(stab_state_dicke_amplitudes(6, f));
        for (const auto& b : symmetry_breaking_pool(6)) EXPECT_LT(std::abs(gradient(psi, b, h)), 1e-10);
    }
}

TEST(Adapt, ExactReferenceStopsImmediately) {
    LmgParams p{6, 3.0, -1.0};
    AdaptTrace t = run_adapt(build_lmg(p), dense_ground_state(p).state);
    EXPECT_TRUE(t.converged);
    ASSERT_EQ(t.layers.size(), 1u);
    EXPECT_NEAR(t.layers[0].fidelity, 1.0, 1e-10);
}

TEST(Adapt, InvariantsAlongTheRun) {
    LmgParams p{6, 4.0, -1.0};
    PauliHamiltonian h = build_lmg(p);
    AdaptConfig cfg;
    cfg.max_layers = 40;
    for (Family f : {Family::S1, Family::S2}) {
        StateVector ref = dicke_to_statevector(stab_state_dicke_amplitudes(6, f));
        AdaptTrace t = run_adapt(h, ref, cfg);
        EXPECT_NEAR(t.exact_energy, ground_state(p).energy, 1e-9);
        ASSERT_GE(t.layers.size(), 2u);
        for (size_t l = 1; l < t.layers.size(); ++l) {
            const AdaptLayer& layer = t.layers[l];
            EXPECT_LE(layer.energy, t.layers[l - 1].energy + cfg.vqe_tol);
            EXPECT_NEAR(layer.parity, 1.0, 1e-10);
            EXPECT_LE(layer.max_imag, 1e-10);
            EXPECT_LT(layer.max_breaking_gradient, 1e-10);
            EXPECT_EQ(layer.angles.size(), l);
            EXPECT_GE(layer.energy, t.exact_energy - 1e-9);
            // The recorded state is reproducible from the selections and angles.
            std::vector<int> sel(t.selected.begin(), t.selected.begin() + static_cast<long>(l));
            StateVector s = adapt_state(ref, pool(6), sel, layer.angles);
            EXPECT_NEAR(energy(h, s), layer.energy, 1e-10);
        }
        EXPECT_LT(t.layers.back().rel_energy_error, 1e-3);
    }
}

TEST(Adapt, TieBreakPicksEarliestOperator) {
    // All pairs are equivalent on a symmetric reference, so layer 1 is the first pool entry.
    LmgParams p{5, 4.0, -1.0};
    AdaptConfig cfg;
    cfg.max_layers = 1;
    AdaptTrace t = run_adapt(build_lmg(p), dicke_to_statevector(stab_state_dicke_amplitudes(5, Family::S1)), cfg);
    ASSERT_EQ(t.selected.size(), 1u);
    EXPECT_EQ(t.selected[0], 0);
    EXPECT_EQ(t.layers[1].op_label, "X1Y2+Y1X2");
}

TEST(Adapt, PlateauGradientsAreSmall) {
    LmgParams p{8, 5.0, -1.0};
    PauliHamiltonian h = build_lmg(p);
    AdaptConfig cfg;
    cfg.max_layers = 25;
    AdaptTrace s1 = run_adapt(h, StateVector::from_bits("11111111"), {.max_layers = 1});
    AdaptTrace s2 = run_adapt(h, dicke_to_statevector(stab_state_dicke_amplitudes(8, Family::S2)), cfg);
    const double reference_gradient = std::abs(s1.layers[1].gradient);
    for (size_t l = 6; l < s2.layers.size(); ++l) EXPECT_LT(std::abs(s2.layers[l].gradient), 0.1 * reference_gradient) << l;
    EXPECT_LT(s2.layers[1].rel_energy_error / s2.layers[20].rel_energy_error, 10.0);
}

TEST(Adapt, Guards) {
    EXPECT_THROW(run_adapt(build_lmg({11, 1.0, -1.0}), StateVector::basis(11, 0)), ResourceError);
    Amplitudes v(4);
    v << 1, C(0, 1), 0, 0;
    EXPECT_THROW(run_adapt(build_lmg({2, 1.0, -1.0}), StateVector::normalized(2, v)), std::invalid_argument);
    AdaptConfig bad;
    bad.grad_threshold = 0;
    EXPECT_THROW(run_adapt(build_lmg({2, 1.0, -1.0}), StateVector::from_bits("11"), bad), std::invalid_argument);
}

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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "stabgs/metrics.hpp"
#include "stabgs/optimize.hpp"

using namespace stabgs;
using C = std::complex<double>;

namespace {

Eigen::VectorXcd complex_of(const DickeVector& d) { return d.amplitudes().cast<C>(); }

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Optimize, GoldenSectionAndScan) {
    Minimum m = golden_section([](double x) { return (x - 0.3) * (x - 0.3); }, 0, 1);
    EXPECT_NEAR(m.x, 0.3, 1e-9);
    Minimum s = scan_refine([](double x) { return std::cos(x); }, 0, 6, 13);
    EXPECT_NEAR(s.x, std::numbers::pi, 1e-9);
    EXPECT_THROW(golden_section([](double x) { return x; }, 0, 1, 1e-10, 3), OptimizationError);
    try {
        golden_section([](double x) { return x; }, 0, 1, 1e-10, 3);
    } catch (const OptimizationError& e) {
        EXPECT_EQ(e.best.x, 0.0);
    }
}

TEST(Ite, ZeroTimeIsIdentity) {
    LmgParams p{6, 3.0, -1.0};
    StateVector s2 = to_statevector(s2_group(6));
    IteState r = ite_evolve(build_lmg(p), s2, 0.0, -4.5);
    EXPECT_NEAR(fidelity(r.state, s2), 1.0, 1e-12);
    EXPECT_NEAR(r.energy, energy(build_lmg(p), s2), 1e-12);
    EXPECT_NEAR(r.log_norm, 0.0, 1e-12);
}

TEST(Ite, ConvergesAfterLongTime) {
    for (int n : {4, 6, 8})
        for (double v : {0.5, 2.0, 5.0}) {
            LmgParams p{n, v, -1.0};
            Spectrum s = Spectrum::dense(build_lmg(p));
            const double tau = 50 / s.gap();
            for (Family f : {Family::S1, Family::S2}) {
                StateVector init = dicke_to_statevector(stab_state_dicke_amplitudes(n, f));
                IteState r = ite_evolve(s, init, tau, default_e0_bar(p));
                EXPECT_GE(fidelity(r.state, dense_ground_state(p).state), 1 - 1e-8) << n << " " << v;
                EXPECT_TRUE(r.ground_overlap);
            }
        }
}

TEST(Ite, DickeMatchesDense) {
    LmgParams p{6, 2.5, -0.5};
    Spectrum s = Spectrum::dense(build_lmg(p));
    DickeVector init = stab_state_dicke_amplitudes(6, Family::S2);
    for (double tau : {0.1, 0.7, 3.0}) {
        DickeIteState a = ite_evolve(p, init, tau, -3.0);
        IteState b = ite_evolve(s, dicke_to_statevector(init), tau, -3.0);
        EXPECT_NEAR(fidelity(dicke_to_statevector(a.state), b.state), 1.0, 1e-10);
        EXPECT_NEAR(a.energy, b.energy, 1e-10);
        EXPECT_NEAR(a.log_norm, b.log_norm, 1e-10);
    }
}

TEST(Ite, LogNormTracksShift) {
    LmgParams p{4, 2.0, -1.0};
    DickeVector init = stab_state_dicke_amplitudes(4, Family::S2);
    DickeIteState a = ite_evolve(p, init, 1.5, 0.0);
    DickeIteState b = ite_evolve(p, init, 1.5, -2.0);
    EXPECT_NEAR(a.log_norm - b.log_norm, 2.0 * 1.5, 1e-12);
}

TEST(Ite, EnergyNonIncreasing) {
    for (double v : {1.1, 5.0}) {
        LmgParams p{8, v, -1.0};
        Spectrum s = Spectrum::dense(build_lmg(p));
        StateVector init = to_statevector(s2_group(8));
        double prev = 1e300;
        for (double tau = 0; tau <= 6; tau += 0.05) {
            const double e = ite_evolve(s, init, tau, default_e0_bar(p)).energy;
            EXPECT_LE(e, prev + 1e-10);
            prev = e;
        }
    }
}

TEST(Ite, EntangledStartWinsInDeformedPhase) {
    LmgParams p{8, 5.0, -1.0};
    Spectrum s = Spectrum::dense(build_lmg(p));
    const StateVector exact = dense_ground_state(p).state;
    const StateVector s1 = StateVector::from_bits("11111111");
    const StateVector s2 = to_statevector(s2_group(8));
    double prev = 0;
    for (double tau = 0; tau <= 3; tau += 0.1) {
        const double f2 = fidelity(ite_evolve(s, s2, tau, -10).state, exact);
        const double f1 = fidelity(ite_evolve(s, s1, tau, -10).state, exact);
        if (f2 < 1 - 1e-12) EXPECT_GT(f2, prev) << tau;
        EXPECT_GT(f2, f1 - 1e-15) << tau;
        prev = f2;
    }
}

TEST(Ite, FlagsMissingGroundOverlap) {
    // The odd-k Dicke level has no weight on the even-sector ground state.
    LmgParams p{4, 3.0, -1.0};
    DickeIteState r = ite_evolve(p, DickeVector::level(4, 1), 10.0, 0.0);
    EXPECT_FALSE(r.ground_overlap);
    EXPECT_NEAR(r.energy, ground_state(p, DickeSector::OddUp).energy, 1e-9);
}

TEST(Qitp, OperatorIdentities) {
    LmgParams p{6, 5.0, -1.0};
    Spectrum s = Spectrum::dense(build_lmg(p));
    const Eigen::Index d = s.dimension();
    for (double tau : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        QitpOperators ops = qitp_operators(s, tau, default_e0_bar(p));
        EXPECT_LE(max_abs(ops.a * ops.a + ops.q * ops.q - Eigen::MatrixXd::Identity(d, d)), 1e-10);
        Eigen::MatrixXd u = qitp_unitary(ops);
        EXPECT_LE(max_abs(u.transpose() * u - Eigen::MatrixXd::Identity(2 * d, 2 * d)), 1e-10);
    }
    QitpOperators zero = qitp_operators(s, 0.0, -3.0);
    const Eigen::MatrixXd half = Eigen::MatrixXd::Identity(d, d) / std::sqrt(2.0);
    EXPECT_LE(max_abs(zero.a - half), 1e-12);
    EXPECT_LE(max_abs(zero.q - half), 1e-12);
    EXPECT_THROW(qitp_operators(build_lmg({11, 1.0, -1.0}), 1.0, 0.0), ResourceError);
}

TEST(Qitp, PostselectionMatchesDirectQ) {
    LmgParams p{8, 5.0, -1.0};
    Spectrum s = Spectrum::dense(build_lmg(p));
    const Eigen::VectorXcd init = to_statevector(s2_group(8)).amplitudes();
    for (double tau : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        QitpResult a = qitp_postselect(s, init, tau, default_e0_bar(p));
        QitpResult b = qitp_direct(s, init, tau, default_e0_bar(p));
        EXPECT_GE(std::abs(a.state.dot(b.state)), 1 - 1e-10);
        EXPECT_NEAR(a.success_probability, b.success_probability, 1e-12);
    }
    QitpResult start = qitp_postselect(s, init, 0.0, -10.0);
    EXPECT_NEAR(start.success_probability, 0.5, 1e-12);
    EXPECT_GE(std::abs(start.state.dot(init)), 1 - 1e-12);
}

TEST(Qitp, MatchesImaginaryTimeWhenShiftIsFarBelow) {
    LmgParams p{8, 5.0, -1.0};
    Spectrum s = Spectrum::dense(build_lmg(p));
    const StateVector init = to_statevector(s2_group(8));
    for (double tau : {0.5, 1.0, 2.0}) {
        // Every level sits at least 8/tau above the shift, so Q ~ e^{-(H - e0_bar) tau}
        // while the success probability stays far above the 1e-14 floor.
        const double e0_bar = s.ground_energy() - 8 / tau;
        QitpResult q = qitp_postselect(s, init.amplitudes(), tau, e0_bar);
        IteState ite = ite_evolve(s, init, tau, e0_bar);
        EXPECT_GE(std::abs(q.state.dot(ite.state.amplitudes())), 1 - 1e-10) << tau;
    }
}

TEST(Qitp, LongTimeNormReachesGroundOverlap) {
    LmgParams p{8, 5.0, -1.0};
    Spectrum s = Spectrum::dense(build_lmg(p));
    const StateVector init = to_statevector(s2_group(8));
    const double overlap = fidelity(init, dense_ground_state(p).state);
    QitpResult r = qitp_direct(s, init.amplitudes(), 200.0, s.ground_energy());
    EXPECT_NEAR(std::sqrt(r.success_probability), overlap / std::sqrt(2.0), 1e-8);
}

TEST(Qitp, FigureOrderings) {
    for (double v : {1.1, 5.0, 10.0}) {
        LmgParams p{8, v, -1.0};
        Spectrum s = Spectrum::dicke(p);
        const Eigen::VectorXcd exact = complex_of(ground_state(p).state);
        const Eigen::VectorXcd s1 = complex_of(stab_state_dicke_amplitudes(8, Family::S1));
        const Eigen::VectorXcd s2 = complex_of(stab_state_dicke_amplitudes(8, Family::S2));
        double prev1 = 0, prev2 = 0;
        for (double tau = 0; tau <= 20; tau += 0.25) {
            const double f1 = std::abs(exact.dot(qitp_direct(s, s1, tau, default_e0_bar(p)).state));
            const double f2 = std::abs(exact.dot(qitp_direct(s, s2, tau, default_e0_bar(p)).state));
            EXPECT_GE(f1, prev1 - 1e-12);
            EXPECT_GE(f2, prev2 - 1e-12);
            if (v > 2) EXPECT_GE(f2, f1 - 1e-12) << v << " " << tau;
            if (tau == 0 && v < 2) EXPECT_GT(f1, f2);
            prev1 = f1;
            prev2 = f2;
        }
        EXPECT_GE(prev1, 0.999);
        EXPECT_GE(prev2, 0.999);
    }
}

TEST(VariationalJz, ThetaZeroIsReference) {
    DickeVector ref = stab_state_dicke_amplitudes(7, Family::S2);
    EXPECT_NEAR(fidelity(apply_exp_jz(ref, 0.0), ref), 1.0, 1e-15);
}

TEST(VariationalJz, ExactForTwoAndThreeSpins) {
    for (double v : {2.0, 3.0, 5.0, 10.0}) {
        VariationalResult two = variational_jz({2, v, -1.0});
        EXPECT_NEAR(two.fidelity, 1.0, 1e-8);
        EXPECT_NEAR(two.energy, -std::sqrt(1 + v * v), 1e-8);
        VariationalResult three = variational_jz({3, v, -1.0});
        EXPECT_NEAR(three.fidelity, 1.0, 1e-8);
        EXPECT_NEAR(three.energy, -0.5 - std::sqrt(1 + 3 * v * v / 4), 1e-8);
    }
    EXPECT_NEAR(variational_jz({3, 3.0, -1.0}).energy, -3.283882, 1e-6);
    EXPECT_NEAR(variational_jz({2, 1.5, -1.0}).fidelity, 1.0, 1e-8);
}

TEST(VariationalJz, BoundsAndParity) {
    for (int n : {4, 8, 12, 30})
        for (double v : {2.5, 5.0, 20.0}) {
            LmgParams p{n, v, -0.5};
            VariationalResult r = variational_jz(p);
            EXPECT_LE(r.energy, s2_energy(p) + 1e-12);
            EXPECT_GE(r.energy, ground_state(p).energy - 1e-9);
            EXPECT_NEAR(dicke_parity(r.state), natural_parity(n), 1e-12);
            VariationalResult r2 = variational_jz(p, 2);
            EXPECT_LE(r2.energy, r.energy + 1e-12);
            EXPECT_GE(r2.energy, ground_state(p).energy - 1e-9);
        }
}

TEST(VariationalJz, NearExactAtWeakAnisotropy) {
    EXPECT_GE(variational_jz({8, 10.0, -0.1}).fidelity, 0.99);
}

TEST(VariationalJz, SecondOrderImprovesTransitionRegion) {
    LmgParams p{8, 2.0, -1.0};
    VariationalResult one = variational_jz(p, 1);
    VariationalResult two = variational_jz(p, 2);
    EXPECT_GT(two.fidelity, one.fidelity);
    EXPECT_THROW(variational_jz(p, 3), std::invalid_argument);
}

TEST(VariationalJz, QitpVersionStaysClose) {
    double gap = 0;
    for (double chi : {-1.0, -0.1})
        for (double v = 2.0; v <= 100; v *= 1.25) {
            LmgParams p{8, v, chi};
            gap = std::max(gap, std::abs(variational_jz(p).fidelity - variational_qitp_jz(p).fidelity));
        }
    EXPECT_LT(gap, 0.05);
}

TEST(HartreeFock, ProductStateForm) {
    for (double alpha : {0.0, 0.4, 1.3, 2.9}) {
        DickeVector hf = hf_state(5, alpha);
        // Tensor product of identical single-spin states.
        Amplitudes one(2);
        one << -std::sin(alpha / 2), std::cos(alpha / 2);
        Amplitudes prod = one;
        for (int q = 1; q < 5; ++q) {
            Amplitudes next(prod.size() * 2);
            for (Eigen::Index i = 0; i < prod.size(); ++i) next.segment(2 * i, 2) = prod[i] * one;
            prod = next;
        }
        EXPECT_NEAR(fidelity(dicke_to_statevector(hf), StateVector(5, prod)), 1.0, 1e-12);
        const double e = dicke_energy({5, 3.0, -1.0}, hf);
        EXPECT_NEAR(e, -2.5 * std::cos(alpha) - 3.0 * 5 / 4 * std::pow(std::sin(alpha), 2), 1e-12);
    }
}

TEST(HartreeFock, NormalPhaseKeepsReference) {
    for (double v : {0.0, 0.3, 0.9}) {
        HartreeFock hf = deformed_hf({8, v, -1.0});
        EXPECT_EQ(hf.alpha, 0.0);
        EXPECT_NEAR(hf.state[0], 1.0, 1e-15);
        EXPECT_NEAR(hf.energy, -4.0, 1e-12);
    }
}

TEST(HartreeFock, DeformedPhaseAngle) {
    for (double v : {2.0, 5.0, 10.0}) {
        HartreeFock hf = deformed_hf({8, v, -1.0});
        EXPECT_NEAR(std::cos(hf.alpha), 1 / v, 1e-8);
        EXPECT_NEAR(hf.energy, -4.0 / v - 2 * v * (1 - 1 / (v * v)), 1e-12);
    }
}

TEST(HartreeFock, UnprojectedTanglesVanish) {
    HartreeFock hf = deformed_hf({8, 5.0, -1.0});
    StateVector psi = dicke_to_statevector(hf.state);
    for (int k = 2; k <= 8; ++k) EXPECT_NEAR(n_tangle(psi, k), 0.0, 1e-12);
}

TEST(HartreeFock, ProjectionHelpsAboveTransition) {
    LmgParams p{8, 10.0, -1.0};
    HartreeFock hf = deformed_hf(p);
    DickeVector exact = ground_state(p).state;
    DickeVector projected = parity_project(hf.state, natural_parity(8));
    EXPECT_GT(fidelity(projected, exact), fidelity(hf.state, exact));
    EXPECT_EQ(projected.sector(), DickeSector::EvenUp);
}

TEST(Parity, ProjectionDickeAndDenseAgree) {
    DickeVector hf = hf_state(5, 1.1);
    for (int parity : {1, -1}) {
        StateVector a = dicke_to_statevector(parity_project(hf, parity));
        StateVector b = parity_project(dicke_to_statevector(hf), parity);
        EXPECT_NEAR(fidelity(a, b), 1.0, 1e-12);
        EXPECT_NEAR(parity_expectation(b), parity, 1e-12);
    }
    EXPECT_THROW(parity_project(DickeVector::level(4, 0), -1), std::domain_error);
    EXPECT_THROW(parity_project(StateVector::from_bits("11"), -1), std::domain_error);
    EXPECT_THROW(parity_project(hf, 0), std::invalid_argument);
}

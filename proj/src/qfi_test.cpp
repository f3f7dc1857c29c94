// Copyright 2026 The noonqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include <Eigen/QR>

#include "noonqfi/checks/oracles.hpp"
#include "noonqfi/errors.hpp"
#include "noonqfi/qfi.hpp"

using namespace noonqfi;
using doctest::Approx;

namespace {

const Basis kFour{Basis::Modes::One, 4, Basis::Frame::Fock};

Eigen::MatrixXcd random_complex(Eigen::Index n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            m(j, k) = Complex(g(rng), g(rng));
        }
    }
    return m;
}

Eigen::MatrixXcd random_unitary(Eigen::Index n, std::mt19937_64 &rng) {
    return Eigen::HouseholderQR<Eigen::MatrixXcd>(random_complex(n, rng)).householderQ();
}

/// Full-rank density matrix X X^dagger / Tr.
Eigen::MatrixXcd random_state(Eigen::Index n, std::mt19937_64 &rng) {
    const Eigen::MatrixXcd x = random_complex(n, rng);
    Eigen::MatrixXcd rho = x * x.adjoint();
    rho /= rho.trace().real();
    return 0.5 * (rho + rho.adjoint()).eval();
}

Eigen::MatrixXcd random_hermitian(Eigen::Index n, std::mt19937_64 &rng) {
    const Eigen::MatrixXcd x = random_complex(n, rng);
    return (x + x.adjoint()).eval();
}

/// Lowered operator back in the Fock frame: V L V^dagger.
Eigen::MatrixXcd to_fock(const Spectrum &s, const HermitianMatrix &l) {
    return s.eigenvectors * l.elements() * s.eigenvectors.adjoint();
}

} // namespace

TEST_SUITE("eigh") {
    TEST_CASE("maximally mixed qubit") {
        const HermitianMatrix half({Basis::Modes::One, 2, Basis::Frame::Fock},
                                   Eigen::MatrixXcd::Identity(2, 2) * 0.5);
        const auto s = eigh(half);
        CHECK(s.eigenvalues(0) == Approx(0.5));
        CHECK(s.eigenvalues(1) == Approx(0.5));
    }

    TEST_CASE("pure projector has spectrum (1, 0, ..., 0)") {
        std::mt19937_64 rng(3);
        Eigen::VectorXcd psi = random_complex(4, rng).col(0);
        psi.normalize();
        const auto s = eigh(HermitianMatrix(kFour, psi * psi.adjoint()));
        CHECK(s.eigenvalues(0) == Approx(1.0).epsilon(1e-14));
        for (int j = 1; j < 4; ++j) {
            CHECK(s.eigenvalues(j) >= 0.0);
            CHECK(s.eigenvalues(j) < 1e-15);
        }
    }

    TEST_CASE("spectrum of a received state sums to its diagonal trace") {
        const auto rho = rob_state_single({Encoding::SingleRail, 1, 0.2}, Squeezing(0.5), 30);
        double diag = 0.0;
        for (int j = 0; j < 30; ++j) {
            diag += rho(j, j).real();
        }
        const auto s = eigh(rho);
        CHECK(std::abs(s.eigenvalues.sum() - diag) < 1e-10);
        for (Eigen::Index j = 1; j < s.eigenvalues.size(); ++j) {
            CHECK(s.eigenvalues(j) <= s.eigenvalues(j - 1));
        }
        const Eigen::MatrixXcd back =
            s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.adjoint();
        CHECK((back - rho.elements()).cwiseAbs().maxCoeff() < 1e-10 * 30);
    }

    TEST_CASE("a genuinely negative eigenvalue is a construction bug") {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
        m.diagonal() << 0.8, 0.3, 0.0, -0.1;
        CHECK_THROWS_AS((void)eigh(HermitianMatrix(kFour, m)), InvalidStateError);
        m(3, 3) = -1e-15; // noise: clamped
        const auto s = eigh(HermitianMatrix(kFour, m));
        CHECK(s.eigenvalues.minCoeff() == 0.0);
    }
}

TEST_SUITE("sld") {
    TEST_CASE("maximally mixed state scales B by d") {
        std::mt19937_64 rng(11);
        const Eigen::MatrixXcd b = random_hermitian(4, rng);
        const auto s = eigh(HermitianMatrix(kFour, Eigen::MatrixXcd::Identity(4, 4) / 4.0));
        const auto l = sld_lower(s, HermitianMatrix(kFour, b));
        CHECK(l.basis().frame == Basis::Frame::Eigen);
        CHECK((to_fock(s, l) - 4.0 * b).cwiseAbs().maxCoeff() < 1e-12);
    }

    TEST_CASE("L(rho) is the identity on the support") {
        std::mt19937_64 rng(5);
        Eigen::MatrixXcd x = random_complex(4, rng);
        x.col(3).setZero(); // rank 3
        Eigen::MatrixXcd rho = x * x.adjoint();
        rho /= rho.trace().real();
        const HermitianMatrix r(kFour, rho);
        const auto s = eigh(r);
        const auto l = sld_lower(s, r);
        for (int j = 0; j < 3; ++j) {
            CHECK(std::abs(l(j, j) - 1.0) < 1e-10);
        }
        CHECK(std::abs(l(3, 3)) == 0.0);
    }

    TEST_CASE("random full-rank 4x4: rho L + L rho = 2 B") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            const Eigen::MatrixXcd rho = random_state(4, rng);
            const Eigen::MatrixXcd b = random_hermitian(4, rng);
            const auto s = eigh(HermitianMatrix(kFour, rho));
            const Eigen::MatrixXcd l = to_fock(s, sld_lower(s, HermitianMatrix(kFour, b)));
            CHECK((rho * l + l * rho - 2.0 * b).cwiseAbs().maxCoeff() < 1e-10);
        }
    }

    TEST_CASE("operands must share the spectrum's Fock basis") {
        const auto s = eigh(HermitianMatrix(kFour, Eigen::MatrixXcd::Identity(4, 4) / 4.0));
        const HermitianMatrix other({Basis::Modes::Two, 2, Basis::Frame::Fock},
                                    Eigen::MatrixXcd::Zero(4, 4));
        CHECK_THROWS_AS((void)sld_lower(s, other), ContractError);
        const auto lowered = sld_lower(s, HermitianMatrix(kFour, Eigen::MatrixXcd::Zero(4, 4)));
        CHECK_THROWS_AS((void)sld_lower(s, lowered), ContractError);
    }
}

TEST_SUITE("qfi at fixed cutoff") {
    TEST_CASE("noiseless single rail, N=3: F = 9") {
        for (const double th : {0.0, 0.5, 2.0}) {
            for (const auto path : {QfiPath::Blocked, QfiPath::Dense}) {
                CHECK(qfi_at_dim({Encoding::SingleRail, 3, th}, Squeezing(0.0), 6, path) ==
                      Approx(9.0).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("noiseless dual rail, N=2: F = 4") {
        for (const auto path : {QfiPath::Blocked, QfiPath::Dense}) {
            CHECK(qfi_at_dim({Encoding::DualRail, 2, 1.0}, Squeezing(0.0), 3, path) ==
                  Approx(4.0).epsilon(1e-12));
        }
    }

    TEST_CASE("N=1, theta=0.9, r=0.6, dim=60 against the SVD Lyapunov oracle") {
        const NoonSpec spec{Encoding::SingleRail, 1, 0.9};
        const auto rho = rob_state(spec, Squeezing(0.6), 60);
        const auto drho = rob_state_derivative(spec, Squeezing(0.6), 60);
        const double oracle = oracles::svd_lyapunov_qfi(rho.elements(), drho.elements());
        CHECK(std::abs(qfi_at_dim(spec, Squeezing(0.6), 60) - oracle) < 1e-8);
        CHECK(std::abs(qfi_from(eigh(rho), drho) - oracle) < 1e-8);
    }

    TEST_CASE("small truncations against the Kronecker Lyapunov solve") {
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int trial = 0; trial < 12; ++trial) {
            const bool dual = trial % 4 == 3;
            const int n = dual ? 1 : 1 + trial % 3;
            const int dim = dual ? 2 : n + 1 + trial % (8 - n);
            const NoonSpec spec{dual ? Encoding::DualRail : Encoding::SingleRail, n,
                                6.0 * u(rng)};
            const Squeezing sq(0.2 + 1.3 * u(rng));
            const auto rho = rob_state(spec, sq, dim);
            const auto drho = rob_state_derivative(spec, sq, dim);
            const double oracle = oracles::lyapunov_qfi(rho.elements(), drho.elements());
            CHECK(std::abs(qfi_at_dim(spec, sq, dim) - oracle) < 1e-8);
        }
    }

    TEST_CASE("blocked and dense paths agree") {
        for (const int n : {1, 2, 3}) {
            for (const double r : {0.3, 1.0}) {
                const NoonSpec spec{Encoding::SingleRail, n, 0.4};
                CHECK(std::abs(qfi_at_dim(spec, Squeezing(r), 45, QfiPath::Blocked) -
                               qfi_at_dim(spec, Squeezing(r), 45, QfiPath::Dense)) < 1e-9);
            }
        }
        const NoonSpec dual{Encoding::DualRail, 2, 0.4};
        CHECK(std::abs(qfi_at_dim(dual, Squeezing(0.8), 14, QfiPath::Blocked) -
                       qfi_at_dim(dual, Squeezing(0.8), 14, QfiPath::Dense)) < 1e-9);
    }

    TEST_CASE("a joint unitary change of basis leaves F unchanged") {
        std::mt19937_64 rng(29);
        const NoonSpec spec{Encoding::SingleRail, 2, 1.2};
        const auto rho = rob_state(spec, Squeezing(0.7), 12);
        const auto drho = rob_state_derivative(spec, Squeezing(0.7), 12);
        const double f = qfi_from(eigh(rho), drho);
        const Eigen::MatrixXcd u = random_unitary(12, rng);
        const Basis b = rho.basis();
        const HermitianMatrix rho_u(b, u * rho.elements() * u.adjoint());
        const HermitianMatrix drho_u(b, u * drho.elements() * u.adjoint());
        CHECK(std::abs(qfi_from(eigh(rho_u), drho_u) - f) < 1e-8);
    }

    TEST_CASE("F is nonnegative") {
        for (const double r : {0.0, 0.5, 2.0, 3.0}) {
            for (const int dim : {3, 10, 40}) {
                CHECK(qfi_at_dim({Encoding::SingleRail, 2, 0.1}, Squeezing(r), dim) >= 0.0);
            }
        }
    }
}

TEST_SUITE("convergence") {
    TEST_CASE("noiseless N=1 settles on 1 immediately") {
        const auto o = qfi_converged({Encoding::SingleRail, 1, 0.4}, Squeezing(0.0));
        CHECK(o.converged);
        CHECK(o.value == Approx(1.0).epsilon(1e-12));
        for (const auto &h : o.history) {
            CHECK(h.qfi == Approx(1.0).epsilon(1e-12));
        }
    }

    TEST_CASE("the last two evaluations agree to the precision") {
        for (const double r : {0.3, 1.0, 1.8}) {
            const auto o = qfi_converged({Encoding::SingleRail, 3, 0.4}, Squeezing(r));
            REQUIRE(o.history.size() >= 2);
            const auto &last = o.history.back();
            const auto &prev = o.history[o.history.size() - 2];
            CHECK(std::abs(last.qfi - prev.qfi) < o.precision);
            CHECK(o.trace_deficit() < 10 * o.precision);
            CHECK(o.value == last.qfi);
            CHECK(o.dim_used == last.dim);
        }
    }

    TEST_CASE("N=5, r=1.0: result does not depend on the starting cutoff") {
        const NoonSpec spec{Encoding::SingleRail, 5, 0.4};
        ConvergenceOptions a;
        ConvergenceOptions b;
        b.start_dim = 6;
        const double fa = qfi_converged(spec, Squeezing(1.0), a).value;
        const double fb = qfi_converged(spec, Squeezing(1.0), b).value;
        CHECK(std::abs(fa - fb) < 2 * a.precision);
    }

    TEST_CASE("unit-step schedule agrees with the accelerated one") {
        const NoonSpec spec{Encoding::SingleRail, 2, 0.4};
        ConvergenceOptions unit;
        unit.schedule = Schedule::UnitStep;
        const auto fast = qfi_converged(spec, Squeezing(0.8));
        const auto slow = qfi_converged(spec, Squeezing(0.8), unit);
        CHECK(std::abs(fast.value - slow.value) < 2 * unit.precision);
        for (std::size_t i = 1; i < slow.history.size(); ++i) {
            CHECK(slow.history[i].dim == slow.history[i - 1].dim + 1);
        }
    }

    TEST_CASE("the cap raises with the history attached") {
        ConvergenceOptions capped;
        capped.dim_cap = 40;
        try {
            (void)qfi_converged({Encoding::SingleRail, 1, 0.4}, Squeezing(3.0), capped);
            FAIL("expected ConvergenceError");
        } catch (const ConvergenceError &e) {
            REQUIRE_FALSE(e.history().empty());
            CHECK(e.history().back().dim == 40);
        }
        ConvergenceOptions bad;
        bad.precision = 0.0;
        CHECK_THROWS_AS((void)qfi_converged({}, Squeezing(0.1), bad), DomainError);
    }

    TEST_CASE("default caps") {
        CHECK(effective_cap(Encoding::SingleRail, {}) == kDefaultSingleRailCap);
        CHECK(effective_cap(Encoding::DualRail, {}) == kDefaultDualRailCap);
        CHECK(default_start_dim(3, Squeezing(0.0)) == 3 + 6);
    }

    TEST_CASE("repeat calls are bitwise reproducible") {
        const NoonSpec spec{Encoding::DualRail, 2, 0.4};
        const auto a = qfi_converged(spec, Squeezing(0.9));
        const auto b = qfi_converged(spec, Squeezing(0.9));
        CHECK(a.value == b.value);
        CHECK(a.dim_used == b.dim_used);
    }
}

TEST_SUITE("theta independence") {
    TEST_CASE("theta and theta + 2 pi / N agree exactly") {
        const double spread = qfi_theta_independence_check(
            {Encoding::SingleRail, 3, 0.0}, Squeezing(0.6), {0.0, 2 * std::numbers::pi / 3});
        CHECK(spread == 0.0);
    }

    TEST_CASE("single rail N=2, r=0.5") {
        CHECK(qfi_theta_independence_check({Encoding::SingleRail, 2, 0.0}, Squeezing(0.5),
                                           {0.0, 0.3, 1.0, 2.5}) < 1e-6);
    }

    TEST_CASE("dual rail N=1, r=0.8") {
        CHECK(qfi_theta_independence_check({Encoding::DualRail, 1, 0.0}, Squeezing(0.8),
                                           {0.1, 1.7}) < 1e-6);
    }

    TEST_CASE("dense path at a fixed cutoff, where theta enters the eigenproblem") {
        std::vector<double> f;
        for (const double th : {0.0, 0.3, 1.0, 2.5}) {
            f.push_back(qfi_at_dim({Encoding::DualRail, 1, th}, Squeezing(0.8), 15, QfiPath::Dense));
        }
        const auto [lo, hi] = std::minmax_element(f.begin(), f.end());
        CHECK(*hi - *lo < 1e-10);
    }

    TEST_CASE("needs two phases") {
        CHECK_THROWS_AS((void)qfi_theta_independence_check({}, Squeezing(0.5), {0.1}),
                        InsufficientDataError);
    }
}

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

// The oracles check the engine, so they get checked against each other and
// against closed forms first.

#include <cmath>

#include <doctest.h>

#include "noonqfi/checks/oracles.hpp"

using namespace noonqfi;

TEST_CASE("Kronecker and SVD Lyapunov solves agree on received states") {
    for (const int n : {1, 2}) {
        const NoonSpec spec{Encoding::SingleRail, n, 0.6};
        const auto rho = rob_state(spec, Squeezing(0.9), 7);
        const auto drho = rob_state_derivative(spec, Squeezing(0.9), 7);
        const double a = oracles::lyapunov_qfi(rho.elements(), drho.elements());
        const double b = oracles::svd_lyapunov_qfi(rho.elements(), drho.elements());
        CHECK(std::abs(a - b) < 1e-10);
        CHECK(oracles::lyapunov_residual(rho.elements(), drho.elements()) < 1e-10);
    }
}

TEST_CASE("pure-state Lyapunov QFI is 4 Var(N theta generator)") {
    // |psi> = (|0> + e^{i N th}|N>)/sqrt 2 has F = N^2.
    const NoonSpec spec{Encoding::SingleRail, 3, 0.2};
    const auto rho = rob_state(spec, Squeezing(0.0), 4);
    const auto drho = rob_state_derivative(spec, Squeezing(0.0), 4);
    CHECK(oracles::svd_lyapunov_qfi(rho.elements(), drho.elements()) ==
          doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("50-digit amplitudes match the closed form where doubles suffice") {
    for (const int p : {0, 1, 5, 20}) {
        const double r = 0.8;
        double binom = 1.0;
        for (int j = 1; j <= p; ++j) {
            binom *= (2.0 + j) / j;
        }
        const double want = std::pow(std::tanh(r), p) / std::pow(std::cosh(r), 3) * std::sqrt(binom);
        CHECK(oracles::amplitude_magnitude(2, r, p) == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("50-digit squeezing") {
    CHECK(oracles::squeezing_for_ratio(1.0) ==
          doctest::Approx(std::atanh(std::exp(-1.0))).epsilon(1e-15));
}

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

/**
 * @file
 * Reference computations that share no code path with the engine they are
 * used to check.
 */

#pragma once

#include <Eigen/Core>

#include "noonqfi/fock.hpp"

namespace noonqfi::oracles {

/// QFI from the symmetric logarithmic derivative obtained by solving
/// rho L + L rho = 2 drho as a dense linear system in vec(L). Intended for
/// dim <= ~12; the system has dim^2 unknowns.
[[nodiscard]] double lyapunov_qfi(const Eigen::MatrixXcd &rho,
                                  const Eigen::MatrixXcd &drho);

/// Same equation solved entrywise in an eigenbasis obtained from a singular
/// value decomposition of rho (valid because rho is positive semidefinite).
/// Usable at a few hundred dimensions.
[[nodiscard]] double svd_lyapunov_qfi(const Eigen::MatrixXcd &rho,
                                      const Eigen::MatrixXcd &drho);

/// Residual max |rho L + L rho - 2 drho| of the linear-solve SLD.
[[nodiscard]] double lyapunov_residual(const Eigen::MatrixXcd &rho,
                                       const Eigen::MatrixXcd &drho);

/// (rho(theta + h) - rho(theta - h)) / 2h built from the dense state
/// builder.
[[nodiscard]] Eigen::MatrixXcd finite_difference_derivative(NoonSpec spec,
                                                            Squeezing sq,
                                                            int dim, double h);

/// |A^M_p| from the closed form evaluated with 50-digit arithmetic and
/// explicit binomial coefficients.
[[nodiscard]] double amplitude_magnitude(int input_n, double r, int p);

/// artanh(exp(-x)) in 50-digit arithmetic.
[[nodiscard]] double squeezing_for_ratio(double omega_pi_over_accel);

} // namespace noonqfi::oracles

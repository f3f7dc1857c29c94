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

// Boost first: the LAPACKE header pulled in by Eigen defines the macro I.
#include <boost/math/special_functions/binomial.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "noonqfi/checks/oracles.hpp"

#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace noonqfi::oracles {

namespace {

using Big = boost::multiprecision::cpp_dec_float_50;

Eigen::MatrixXcd solve_sld(const Eigen::MatrixXcd &rho,
                           const Eigen::MatrixXcd &drho) {
    const Eigen::Index d = rho.rows();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    // Column-major vec: vec(rho L) = (I (x) rho) vec L,
    // vec(L rho) = (rho^T (x) I) vec L.
    Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            system.block(i * d, j * d, d, d) += id(i, j) * rho;
            system.block(i * d, j * d, d, d) += rho(j, i) * id;
        }
    }
    const Eigen::VectorXcd rhs =
        2.0 * Eigen::Map<const Eigen::VectorXcd>(drho.data(), d * d);
    // Minimum-norm solution leaves L zero on the null space of rho.
    const Eigen::VectorXcd vec_l =
        system.completeOrthogonalDecomposition().solve(rhs);
    return Eigen::Map<const Eigen::MatrixXcd>(vec_l.data(), d, d);
}

} // namespace

double lyapunov_qfi(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &drho) {
    const Eigen::MatrixXcd l = solve_sld(rho, drho);
    return (drho * l).trace().real();
}

double lyapunov_residual(const Eigen::MatrixXcd &rho,
                         const Eigen::MatrixXcd &drho) {
    const Eigen::MatrixXcd l = solve_sld(rho, drho);
    return (rho * l + l * rho - 2.0 * drho).cwiseAbs().maxCoeff();
}

double svd_lyapunov_qfi(const Eigen::MatrixXcd &rho,
                        const Eigen::MatrixXcd &drho) {
    const Eigen::BDCSVD<Eigen::MatrixXcd> svd(rho, Eigen::ComputeFullU);
    const Eigen::MatrixXcd &u = svd.matrixU();
    const Eigen::VectorXd &s = svd.singularValues();
    const Eigen::MatrixXcd b = u.adjoint() * drho * u;
    const double tau = 1e-12 * s(0);
    Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(b.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.rows(); ++j) {
        for (Eigen::Index k = 0; k < b.cols(); ++k) {
            if (s(j) + s(k) > tau) {
                l(j, k) = 2.0 * b(j, k) / (s(j) + s(k));
            }
        }
    }
    return (b * l).trace().real();
}

Eigen::MatrixXcd finite_difference_derivative(NoonSpec spec, Squeezing sq,
                                              int dim, double h) {
    const double theta = spec.theta;
    spec.theta = theta + h;
    const Eigen::MatrixXcd plus = rob_state(spec, sq, dim).elements();
    spec.theta = theta - h;
    const Eigen::MatrixXcd minus = rob_state(spec, sq, dim).elements();
    return (plus - minus) / (2.0 * h);
}

double amplitude_magnitude(int input_n, double r, int p) {
    if (r == 0.0) {
        return p == 0 ? 1.0 : 0.0;
    }
    const Big big_r(r);
    const Big binom = boost::math::binomial_coefficient<Big>(
        static_cast<unsigned>(p + input_n), static_cast<unsigned>(p));
    const Big value = pow(tanh(big_r), p) / pow(cosh(big_r), input_n + 1) *
                      sqrt(binom);
    return value.convert_to<double>();
}

double squeezing_for_ratio(double omega_pi_over_accel) {
    const Big x(omega_pi_over_accel);
    return atanh(exp(-x)).convert_to<double>();
}

} // namespace noonqfi::oracles

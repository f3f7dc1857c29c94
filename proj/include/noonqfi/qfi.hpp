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
 * Quantum Fisher information of the received NOON state.
 *
 * F = Tr[rho' L(rho')], where L is the symmetric logarithmic derivative
 * L(B) = sum_jk 2 B_jk / (p_j + p_k) |j><k| in the eigenbasis of rho.
 * Terms with p_j + p_k below a relative null threshold are dropped.
 *
 * qfi_converged grows the Fock cutoff until two successive evaluations
 * agree to an absolute precision.
 */

#pragma once

#include <vector>

#include <Eigen/Core>

#include "noonqfi/errors.hpp"
#include "noonqfi/fock.hpp"

namespace noonqfi {

/// Relative threshold (times the largest eigenvalue) below which negative
/// eigenvalues are clamped to zero and pair sums are treated as null.
inline constexpr double kRelativeNullTolerance = 1e-12;

struct Spectrum {
    Eigen::VectorXd eigenvalues;  ///< descending, clamped to >= 0
    Eigen::MatrixXcd eigenvectors; ///< columns, same order as eigenvalues
    Basis basis;                   ///< basis of the decomposed matrix
    Eigen::Index source_dim = 0;
};

/// Full self-adjoint eigendecomposition. Throws InvalidStateError if an
/// eigenvalue lies below -1e-12 times the largest one.
[[nodiscard]] Spectrum eigh(const HermitianMatrix &m);

/// L_rho(b) expressed in the eigenbasis of rho. b must be in the Fock basis
/// rho was given in.
[[nodiscard]] HermitianMatrix sld_lower(const Spectrum &spec,
                                        const HermitianMatrix &b);

/// Tr[b L_rho(b)] for b in the Fock frame.
[[nodiscard]] double qfi_from(const Spectrum &spec, const HermitianMatrix &b);

enum class QfiPath {
    /// Decompose over the invariant chains of rho (mod-N residues for single
    /// rail, total-number sectors for dual rail).
    Blocked,
    /// One eigendecomposition of the full truncated matrix.
    Dense,
};

[[nodiscard]] double qfi_at_dim(const NoonSpec &spec, Squeezing sq, int dim,
                                QfiPath path = QfiPath::Blocked);

/// QFI and Tr rho at one truncation.
[[nodiscard]] TruncationStep evaluate_truncation(const NoonSpec &spec,
                                                 Squeezing sq, int dim,
                                                 QfiPath path);

enum class Schedule {
    /// Steps of max(8, ceil(dim0 / 4)), confirmed by a final k -> k+1 step.
    Accelerated,
    /// k -> k+1 throughout.
    UnitStep,
};

struct ConvergenceOptions {
    double precision = 1e-5;
    Schedule schedule = Schedule::Accelerated;
    /// 0 selects the per-encoding default (4096 single, 120 per mode dual).
    int dim_cap = 0;
    /// 0 selects N + ceil(6 (sinh^2 r + 1)).
    int start_dim = 0;
    QfiPath path = QfiPath::Blocked;
    /// Converged states must also satisfy 1 - Tr rho < trace_factor *
    /// precision. Zero disables the trace gate.
    double trace_factor = 10.0;
};

inline constexpr int kDefaultSingleRailCap = 4096;
inline constexpr int kDefaultDualRailCap = 120;

[[nodiscard]] int default_start_dim(int n, Squeezing sq);
[[nodiscard]] int effective_cap(Encoding encoding, const ConvergenceOptions &opts);

struct QfiOutcome {
    double value = 0.0;
    int dim_used = 0;
    std::vector<TruncationStep> history;
    bool converged = false;
    double precision = 0.0;

    [[nodiscard]] double trace_deficit() const {
        return history.empty() ? 1.0 : 1.0 - history.back().trace;
    }
};

/// Throws ConvergenceError (carrying the history) if the cap is reached.
[[nodiscard]] QfiOutcome qfi_converged(const NoonSpec &spec, Squeezing sq,
                                       const ConvergenceOptions &opts = {});

/// max - min of the converged QFI over the given phases.
[[nodiscard]] double qfi_theta_independence_check(
    NoonSpec spec, Squeezing sq, const std::vector<double> &thetas,
    const ConvergenceOptions &opts = {});

} // namespace noonqfi

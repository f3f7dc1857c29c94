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
 * Fock-space construction of the state an accelerated receiver holds after
 * a NOON state is sent through the Unruh channel (single wedge mapping).
 *
 * The channel acts on one mode as two-mode squeezing against a partner mode
 * behind the horizon. Tracing that partner out maps |m><m'| to the block
 * K(m, m'), a single shifted diagonal with entries A^m_p conj(A^m'_p) at
 * (m + p, m' + p). All blocks are real because the i^p phases of the
 * amplitudes cancel.
 *
 * Truncation is a hard cutoff of the Fock basis; nothing is renormalised.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace noonqfi {

using Complex = std::complex<double>;

/// Frequency of the field mode and proper acceleration of the receiver.
class ModeSpec {
  public:
    ModeSpec(double omega, double accel);

    /// Mode with a given dimensionless ratio omega * pi / accel.
    static ModeSpec from_ratio(double omega_pi_over_accel);

    [[nodiscard]] double omega() const noexcept { return omega_; }
    [[nodiscard]] double accel() const noexcept { return accel_; }
    [[nodiscard]] double ratio() const noexcept;

  private:
    double omega_;
    double accel_;
};

/// Squeezing parameter r >= 0 of the Unruh channel. r = 0 is the identity.
class Squeezing {
  public:
    constexpr Squeezing() = default;
    explicit Squeezing(double r);

    [[nodiscard]] double r() const noexcept { return r_; }
    [[nodiscard]] bool is_identity() const noexcept { return r_ == 0.0; }

    friend bool operator==(Squeezing, Squeezing) = default;

  private:
    double r_ = 0.0;
};

enum class Encoding { SingleRail, DualRail };

struct NoonSpec {
    Encoding encoding = Encoding::SingleRail;
    int n = 1;
    double theta = 0.0;
};

/// Throws DomainError unless n >= 1.
void validate(const NoonSpec &spec);

/// tanh r = exp(-omega pi / a).
[[nodiscard]] Squeezing squeezing_from_mode(const ModeSpec &mode);

/// Amplitudes of |M + p>_R |p>_anti for p = 0 .. dim-1 when |M> enters the
/// channel.
struct UnruhAmplitudes {
    int input_n = 0;
    int dim = 0;
    std::vector<Complex> amps;

    [[nodiscard]] double norm_squared() const;
};

[[nodiscard]] UnruhAmplitudes unruh_amplitudes(int input_n, Squeezing sq,
                                               int dim);

/// ln |A^M_p|, or -inf when the amplitude is exactly zero (r = 0, p > 0).
[[nodiscard]] double log_amplitude(int input_n, Squeezing sq, int p);

/// K(m, m') = Tr_anti[ T |m><m'| T^dagger ] truncated to dim x dim.
class ChannelBlock {
  public:
    ChannelBlock(int m, int m_prime, Squeezing sq, int dim);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] int m_prime() const noexcept { return m_prime_; }
    [[nodiscard]] int dim() const noexcept { return dim_; }

    /// Value at (m + p, m' + p); zero if that entry falls outside the cutoff.
    [[nodiscard]] double band(int p) const noexcept {
        return p >= 0 && static_cast<std::size_t>(p) < band_.size() ? band_[p]
                                                                    : 0.0;
    }
    [[nodiscard]] const std::vector<double> &band_values() const noexcept {
        return band_;
    }
    [[nodiscard]] double operator()(int row, int col) const noexcept;
    [[nodiscard]] Eigen::MatrixXd dense() const;

  private:
    int m_;
    int m_prime_;
    int dim_;
    std::vector<double> band_;
};

[[nodiscard]] ChannelBlock channel_block(int m, int m_prime, Squeezing sq,
                                         int dim);

/// Layout of a truncated Fock basis. Two-mode states |a, b> sit at index
/// a * cutoff + b.
struct Basis {
    enum class Modes { One, Two };
    enum class Frame { Fock, Eigen };

    Modes modes = Modes::One;
    int cutoff = 0;
    Frame frame = Frame::Fock;

    [[nodiscard]] Eigen::Index dim() const noexcept {
        return modes == Modes::One ? cutoff
                                   : static_cast<Eigen::Index>(cutoff) * cutoff;
    }
    friend bool operator==(const Basis &, const Basis &) = default;
};

/// Dense self-adjoint matrix in a tagged basis. The class does not
/// symmetrise: builders write each off-diagonal pair explicitly.
class HermitianMatrix {
  public:
    HermitianMatrix(Basis basis, Eigen::MatrixXcd elements);

    [[nodiscard]] const Basis &basis() const noexcept { return basis_; }
    [[nodiscard]] const Eigen::MatrixXcd &elements() const noexcept {
        return elements_;
    }
    [[nodiscard]] Eigen::Index dim() const noexcept { return elements_.rows(); }
    [[nodiscard]] Complex operator()(Eigen::Index row,
                                     Eigen::Index col) const {
        return elements_(row, col);
    }
    [[nodiscard]] double trace() const { return elements_.trace().real(); }

    /// max |M - M^dagger|.
    [[nodiscard]] double hermiticity_defect() const;

  private:
    Basis basis_;
    Eigen::MatrixXcd elements_;
};

[[nodiscard]] HermitianMatrix rob_state_single(const NoonSpec &spec,
                                               Squeezing sq, int dim);
[[nodiscard]] HermitianMatrix rob_state_dual(const NoonSpec &spec,
                                             Squeezing sq, int dim_per_mode);
/// Dispatches on spec.encoding; dim is per mode for dual rail.
[[nodiscard]] HermitianMatrix rob_state(const NoonSpec &spec, Squeezing sq,
                                        int dim);
/// Analytic d rho / d theta. Only the coherence terms survive.
[[nodiscard]] HermitianMatrix rob_state_derivative(const NoonSpec &spec,
                                                   Squeezing sq, int dim);

/**
 * Sparse form of rho and rho' shared by the dense builders and the blocked
 * QFI path.
 *
 * The nonzero pattern is a set of disjoint chains. Within a chain each
 * basis state couples only to its neighbours, so rho restricted to a chain
 * is Hermitian tridiagonal. Single rail: chain c holds indices c, c+N,
 * c+2N, ... Dual rail: chains are labelled by the total photon number and
 * the first-mode occupation mod N, ordered by first-mode occupation.
 *
 * For every link t (between chain positions t and t+1) the lower entry is
 * rho(t+1, t) = phase * coupling[t] and rho'(t+1, t) = i * frequency *
 * phase * coupling[t]. phase = exp(i * frequency * theta) is shared by every
 * link of the state; frequency is +N for single rail and -N for dual rail.
 */
struct StateChains {
    struct Chain {
        std::vector<Eigen::Index> indices;
        std::vector<double> diagonal;
        std::vector<double> coupling;
    };

    Basis basis;
    double frequency = 1.0;
    Complex phase{1.0, 0.0};
    std::vector<Chain> chains;

    /// Sum of the diagonal of rho.
    [[nodiscard]] double trace() const;
};

[[nodiscard]] StateChains state_chains(const NoonSpec &spec, Squeezing sq,
                                       int dim);

} // namespace noonqfi

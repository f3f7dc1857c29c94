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

#include "noonqfi/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "noonqfi/errors.hpp"

namespace noonqfi {

namespace {

// glibc's lgamma writes the global signgam; the reentrant form does not.
double log_gamma(double x) {
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

double log_cosh(double r) {
    return r + std::log1p(std::exp(-2.0 * r)) - std::numbers::ln2;
}

Complex i_power(int p) {
    switch (p % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

void require_dim(int dim) {
    if (dim < 1) {
        throw DimensionError("truncation dimension must be >= 1, got " +
                             std::to_string(dim));
    }
}

void require_cutoff_above_n(const NoonSpec &spec, int dim) {
    validate(spec);
    if (dim <= spec.n) {
        throw DimensionError("cutoff " + std::to_string(dim) +
                             " cannot hold N = " + std::to_string(spec.n));
    }
}

} // namespace

ModeSpec::ModeSpec(double omega, double accel) : omega_(omega), accel_(accel) {
    if (!(omega > 0.0) || !(accel > 0.0) || !std::isfinite(omega) ||
        !std::isfinite(accel)) {
        throw DomainError("mode frequency and acceleration must be positive");
    }
}

ModeSpec ModeSpec::from_ratio(double omega_pi_over_accel) {
    return ModeSpec(omega_pi_over_accel / std::numbers::pi, 1.0);
}

double ModeSpec::ratio() const noexcept {
    return omega_ * std::numbers::pi / accel_;
}

Squeezing::Squeezing(double r) : r_(r) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw DomainError("squeezing parameter must be finite and >= 0");
    }
}

void validate(const NoonSpec &spec) {
    if (spec.n < 1) {
        throw DomainError("NOON excitation number must be >= 1, got " +
                          std::to_string(spec.n));
    }
    if (!std::isfinite(spec.theta)) {
        throw DomainError("phase must be finite");
    }
}

Squeezing squeezing_from_mode(const ModeSpec &mode) {
    // artanh(e^-x) = 0.5 ln((1 + e^-x) / (1 - e^-x)); expm1 keeps the
    // denominator accurate when x is small.
    const double x = mode.ratio();
    const double e = std::exp(-x);
    return Squeezing(0.5 * std::log((1.0 + e) / -std::expm1(-x)));
}

double log_amplitude(int input_n, Squeezing sq, int p) {
    if (input_n < 0 || p < 0) {
        throw DomainError("Fock labels must be nonnegative");
    }
    if (sq.is_identity()) {
        return p == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    const double r = sq.r();
    const double m = input_n;
    const double log_binom =
        log_gamma(p + m + 1.0) - log_gamma(p + 1.0) - log_gamma(m + 1.0);
    return p * std::log(std::tanh(r)) - (m + 1.0) * log_cosh(r) +
           0.5 * log_binom;
}

double UnruhAmplitudes::norm_squared() const {
    double sum = 0.0;
    for (const auto &a : amps) {
        sum += std::norm(a);
    }
    return sum;
}

UnruhAmplitudes unruh_amplitudes(int input_n, Squeezing sq, int dim) {
    require_dim(dim);
    UnruhAmplitudes out{input_n, dim, std::vector<Complex>(dim)};
    for (int p = 0; p < dim; ++p) {
        out.amps[p] = i_power(p) * std::exp(log_amplitude(input_n, sq, p));
    }
    return out;
}

ChannelBlock::ChannelBlock(int m, int m_prime, Squeezing sq, int dim)
    : m_(m), m_prime_(m_prime), dim_(dim) {
    require_dim(dim);
    if (m < 0 || m_prime < 0) {
        throw DomainError("Fock labels must be nonnegative");
    }
    const int length = std::max(0, dim - std::max(m, m_prime));
    band_.resize(length);
    for (int p = 0; p < length; ++p) {
        band_[p] = std::exp(log_amplitude(m, sq, p) +
                            log_amplitude(m_prime, sq, p));
    }
}

double ChannelBlock::operator()(int row, int col) const noexcept {
    const int p = row - m_;
    if (p != col - m_prime_) {
        return 0.0;
    }
    return band(p);
}

Eigen::MatrixXd ChannelBlock::dense() const {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_, dim_);
    for (std::size_t p = 0; p < band_.size(); ++p) {
        out(m_ + p, m_prime_ + p) = band_[p];
    }
    return out;
}

ChannelBlock channel_block(int m, int m_prime, Squeezing sq, int dim) {
    return ChannelBlock(m, m_prime, sq, dim);
}

HermitianMatrix::HermitianMatrix(Basis basis, Eigen::MatrixXcd elements)
    : basis_(basis), elements_(std::move(elements)) {
    if (elements_.rows() != elements_.cols() ||
        elements_.rows() != basis_.dim()) {
        throw DimensionError("matrix shape does not match its basis");
    }
}

double HermitianMatrix::hermiticity_defect() const {
    if (elements_.size() == 0) {
        return 0.0;
    }
    return (elements_ - elements_.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

enum class Part { State, Derivative };

// Single rail: rho = 1/2 [K(0,0) + K(N,N) + e^{iN theta} K(N,0) + h.c.].
HermitianMatrix build_single(const NoonSpec &spec, Squeezing sq, int dim,
                             Part part) {
    if (spec.encoding != Encoding::SingleRail) {
        throw ContractError("single-rail builder called with a dual-rail spec");
    }
    require_cutoff_above_n(spec, dim);
    const int n = spec.n;
    const Complex phase = std::polar(1.0, n * spec.theta);
    const Complex factor =
        part == Part::State ? 0.5 * phase : Complex(0.0, 0.5 * n) * phase;

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    if (part == Part::State) {
        const ChannelBlock vac(0, 0, sq, dim);
        const ChannelBlock full(n, n, sq, dim);
        for (int j = 0; j < dim; ++j) {
            rho(j, j) = 0.5 * (vac(j, j) + full(j, j));
        }
    }
    const ChannelBlock coherence(n, 0, sq, dim);
    for (int p = 0; p + n < dim; ++p) {
        const Complex v = factor * coherence(n + p, p);
        rho(n + p, p) = v;
        rho(p, n + p) = std::conj(v);
    }
    return HermitianMatrix(Basis{Basis::Modes::One, dim, Basis::Frame::Fock},
                           std::move(rho));
}

// Dual rail: rho = 1/2 [K(N,N)(x)K(0,0) + K(0,0)(x)K(N,N)
//                       + e^{iN theta} K(0,N)(x)K(N,0) + h.c.].
HermitianMatrix build_dual(const NoonSpec &spec, Squeezing sq, int k,
                           Part part) {
    if (spec.encoding != Encoding::DualRail) {
        throw ContractError("dual-rail builder called with a single-rail spec");
    }
    require_cutoff_above_n(spec, k);
    const int n = spec.n;
    const Complex phase = std::polar(1.0, n * spec.theta);
    const Complex factor =
        part == Part::State ? 0.5 * phase : Complex(0.0, 0.5 * n) * phase;
    const auto index = [k](int a, int b) {
        return static_cast<Eigen::Index>(a) * k + b;
    };

    const Basis basis{Basis::Modes::Two, k, Basis::Frame::Fock};
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(basis.dim(), basis.dim());
    if (part == Part::State) {
        const ChannelBlock vac(0, 0, sq, k);
        const ChannelBlock full(n, n, sq, k);
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                rho(index(a, b), index(a, b)) =
                    0.5 * (full(a, a) * vac(b, b) + vac(a, a) * full(b, b));
            }
        }
    }
    const ChannelBlock lower(0, n, sq, k);
    const ChannelBlock raise(n, 0, sq, k);
    for (int p = 0; p + n < k; ++p) {
        for (int q = 0; q + n < k; ++q) {
            const Complex v = factor * lower(p, n + p) * raise(n + q, q);
            const auto row = index(p, n + q);
            const auto col = index(n + p, q);
            rho(row, col) = v;
            rho(col, row) = std::conj(v);
        }
    }
    return HermitianMatrix(basis, std::move(rho));
}

} // namespace

HermitianMatrix rob_state_single(const NoonSpec &spec, Squeezing sq, int dim) {
    return build_single(spec, sq, dim, Part::State);
}

HermitianMatrix rob_state_dual(const NoonSpec &spec, Squeezing sq,
                               int dim_per_mode) {
    return build_dual(spec, sq, dim_per_mode, Part::State);
}

HermitianMatrix rob_state(const NoonSpec &spec, Squeezing sq, int dim) {
    return spec.encoding == Encoding::SingleRail
               ? rob_state_single(spec, sq, dim)
               : rob_state_dual(spec, sq, dim);
}

HermitianMatrix rob_state_derivative(const NoonSpec &spec, Squeezing sq,
                                     int dim) {
    return spec.encoding == Encoding::SingleRail
               ? build_single(spec, sq, dim, Part::Derivative)
               : build_dual(spec, sq, dim, Part::Derivative);
}

double StateChains::trace() const {
    double sum = 0.0;
    for (const auto &chain : chains) {
        for (double d : chain.diagonal) {
            sum += d;
        }
    }
    return sum;
}

StateChains state_chains(const NoonSpec &spec, Squeezing sq, int dim) {
    require_cutoff_above_n(spec, dim);
    const int n = spec.n;
    const ChannelBlock vac(0, 0, sq, dim);
    const ChannelBlock full(n, n, sq, dim);
    const ChannelBlock coherence(n, 0, sq, dim);

    StateChains out;
    if (spec.encoding == Encoding::SingleRail) {
        out.basis = Basis{Basis::Modes::One, dim, Basis::Frame::Fock};
        out.frequency = n;
        out.phase = std::polar(1.0, n * spec.theta);
        for (int c = 0; c < n; ++c) {
            StateChains::Chain chain;
            for (int j = c; j < dim; j += n) {
                chain.indices.push_back(j);
                chain.diagonal.push_back(0.5 * (vac.band(j) + full.band(j - n)));
                if (j + n < dim) {
                    chain.coupling.push_back(0.5 * coherence.band(j));
                }
            }
            out.chains.push_back(std::move(chain));
        }
        return out;
    }

    // Dual rail: the coherence couples |a, s-a> to |a+N, s-a-N> with the
    // conjugate phase, so rho(t+1, t) carries e^{-iN theta}.
    const int k = dim;
    out.basis = Basis{Basis::Modes::Two, k, Basis::Frame::Fock};
    out.frequency = -n;
    out.phase = std::polar(1.0, -n * spec.theta);
    for (int s = 0; s <= 2 * (k - 1); ++s) {
        const int a_lo = std::max(0, s - (k - 1));
        const int a_hi = std::min(k - 1, s);
        for (int c = 0; c < n; ++c) {
            StateChains::Chain chain;
            // first a >= a_lo with a = c (mod n)
            int a = a_lo + ((c - a_lo % n) % n + n) % n;
            for (; a <= a_hi; a += n) {
                const int b = s - a;
                chain.indices.push_back(static_cast<Eigen::Index>(a) * k + b);
                chain.diagonal.push_back(
                    0.5 * (full.band(a - n) * vac.band(b) +
                           vac.band(a) * full.band(b - n)));
                if (a + n <= a_hi) {
                    chain.coupling.push_back(0.5 * coherence.band(a) *
                                             coherence.band(b - n));
                }
            }
            if (!chain.indices.empty()) {
                out.chains.push_back(std::move(chain));
            }
        }
    }
    return out;
}

} // namespace noonqfi

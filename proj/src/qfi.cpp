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

#include "noonqfi/qfi.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Dense>

#if defined(__SSE2__)
#include <pmmintrin.h>
#include <xmmintrin.h>
#endif

namespace noonqfi {

namespace {

// Eigenvectors of long chains have exponentially small tails; subnormal
// arithmetic on them slows the eigensolver and the products by an order of
// magnitude. Values below 2.2e-308 carry no information here.
class FlushDenormals {
  public:
#if defined(__SSE2__)
    FlushDenormals() : saved_(_mm_getcsr()) {
        _MM_SET_FLUSH_ZERO_MODE(_MM_FLUSH_ZERO_ON);
        _MM_SET_DENORMALS_ZERO_MODE(_MM_DENORMALS_ZERO_ON);
    }
    ~FlushDenormals() { _mm_setcsr(saved_); }

  private:
    unsigned int saved_;
#endif
  public:
    FlushDenormals(const FlushDenormals &) = delete;
    FlushDenormals &operator=(const FlushDenormals &) = delete;
};

double null_threshold(double largest) {
    return kRelativeNullTolerance * std::max(largest, 0.0);
}

void check_positivity(double smallest, double largest) {
    if (smallest < -null_threshold(largest)) {
        throw InvalidStateError("density matrix has eigenvalue " +
                                std::to_string(smallest) +
                                " (largest " + std::to_string(largest) + ")");
    }
}

void require_fock_match(const Spectrum &spec, const HermitianMatrix &b) {
    if (b.basis().frame != Basis::Frame::Fock ||
        spec.basis.frame != Basis::Frame::Fock ||
        b.basis().modes != spec.basis.modes ||
        b.basis().cutoff != spec.basis.cutoff) {
        throw ContractError(
            "operand is not in the Fock basis the spectrum was computed in");
    }
}

// One invariant chain of the blocked path, reduced to real arithmetic. The
// gauge U = diag(phase^t) makes rho real symmetric tridiagonal and rho'
// equal to i * frequency * A with A real antisymmetric bidiagonal.
struct ChainSpectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

ChainSpectrum decompose_chain(const StateChains::Chain &chain) {
    const auto m = static_cast<Eigen::Index>(chain.diagonal.size());
    const Eigen::Map<const Eigen::VectorXd> diag(chain.diagonal.data(), m);
    ChainSpectrum out;
    if (m == 1) {
        out.eigenvalues = diag;
        out.eigenvectors = Eigen::MatrixXd::Identity(1, 1);
        return out;
    }
    const Eigen::Map<const Eigen::VectorXd> sub(chain.coupling.data(), m - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        throw InvalidStateError("tridiagonal eigensolver did not converge");
    }
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();
    return out;
}

// sum_jk 2 C_jk^2 / (p_j + p_k) with C = V^T A V.
double chain_contribution(const StateChains::Chain &chain,
                          const ChainSpectrum &spec, double tau) {
    const Eigen::Index m = spec.eigenvalues.size();
    if (m == 1) {
        return 0.0;
    }
    const Eigen::MatrixXd &v = spec.eigenvectors;
    Eigen::MatrixXd av = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index t = 0; t < m; ++t) {
        if (t > 0) {
            av.row(t) += chain.coupling[t - 1] * v.row(t - 1);
        }
        if (t + 1 < m) {
            av.row(t) -= chain.coupling[t] * v.row(t + 1);
        }
    }
    const Eigen::MatrixXd c = v.transpose() * av;
    const Eigen::VectorXd &p = spec.eigenvalues;
    double sum = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
        for (Eigen::Index j = 0; j < m; ++j) {
            const double s = std::max(p(j), 0.0) + std::max(p(k), 0.0);
            if (s > tau) {
                sum += 2.0 * c(j, k) * c(j, k) / s;
            }
        }
    }
    return sum;
}

TruncationStep evaluate_blocked(const NoonSpec &spec, Squeezing sq, int dim) {
    const FlushDenormals ftz;
    const StateChains chains = state_chains(spec, sq, dim);
    std::vector<ChainSpectrum> spectra;
    spectra.reserve(chains.chains.size());
    double largest = 0.0;
    double smallest = 0.0;
    for (const auto &chain : chains.chains) {
        spectra.push_back(decompose_chain(chain));
        largest = std::max(largest, spectra.back().eigenvalues.maxCoeff());
        smallest = std::min(smallest, spectra.back().eigenvalues.minCoeff());
    }
    check_positivity(smallest, largest);
    const double tau = null_threshold(largest);
    double sum = 0.0;
    for (std::size_t i = 0; i < spectra.size(); ++i) {
        sum += chain_contribution(chains.chains[i], spectra[i], tau);
    }
    return {dim, chains.frequency * chains.frequency * sum, chains.trace()};
}

TruncationStep evaluate_dense(const NoonSpec &spec, Squeezing sq, int dim) {
    const FlushDenormals ftz;
    const HermitianMatrix rho = rob_state(spec, sq, dim);
    const HermitianMatrix drho = rob_state_derivative(spec, sq, dim);
    return {dim, qfi_from(eigh(rho), drho), rho.trace()};
}

} // namespace

Spectrum eigh(const HermitianMatrix &m) {
    Spectrum out;
    out.basis = m.basis();
    out.source_dim = m.dim();
    if (m.dim() == 0) {
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.elements());
    if (solver.info() != Eigen::Success) {
        throw InvalidStateError("eigensolver did not converge");
    }
    // Eigen sorts ascending; reverse into descending order.
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    const double largest = out.eigenvalues(0);
    check_positivity(out.eigenvalues(out.eigenvalues.size() - 1), largest);
    out.eigenvalues = out.eigenvalues.cwiseMax(0.0);
    return out;
}

HermitianMatrix sld_lower(const Spectrum &spec, const HermitianMatrix &b) {
    require_fock_match(spec, b);
    const Eigen::MatrixXcd &v = spec.eigenvectors;
    const Eigen::MatrixXcd rotated = v.adjoint() * b.elements() * v;
    const Eigen::VectorXd &p = spec.eigenvalues;
    const double tau =
        p.size() > 0 ? null_threshold(p.maxCoeff()) : 0.0;
    Eigen::MatrixXcd lowered = Eigen::MatrixXcd::Zero(p.size(), p.size());
    for (Eigen::Index k = 0; k < p.size(); ++k) {
        for (Eigen::Index j = 0; j < p.size(); ++j) {
            const double s = p(j) + p(k);
            if (s > tau) {
                lowered(j, k) = 2.0 * rotated(j, k) / s;
            }
        }
    }
    Basis eigen_frame = spec.basis;
    eigen_frame.frame = Basis::Frame::Eigen;
    return HermitianMatrix(eigen_frame, std::move(lowered));
}

double qfi_from(const Spectrum &spec, const HermitianMatrix &b) {
    const HermitianMatrix lowered = sld_lower(spec, b);
    const Eigen::MatrixXcd rotated =
        spec.eigenvectors.adjoint() * b.elements() * spec.eigenvectors;
    // Tr[B L] without forming the product.
    const Complex trace = (rotated.transpose().cwiseProduct(lowered.elements())).sum();
    return std::max(trace.real(), 0.0);
}

TruncationStep evaluate_truncation(const NoonSpec &spec, Squeezing sq,
                                   int dim, QfiPath path) {
    return path == QfiPath::Blocked ? evaluate_blocked(spec, sq, dim)
                                    : evaluate_dense(spec, sq, dim);
}

double qfi_at_dim(const NoonSpec &spec, Squeezing sq, int dim, QfiPath path) {
    return evaluate_truncation(spec, sq, dim, path).qfi;
}

int default_start_dim(int n, Squeezing sq) {
    const double occupation = std::sinh(sq.r()) * std::sinh(sq.r());
    return n + static_cast<int>(std::ceil(6.0 * (occupation + 1.0)));
}

int effective_cap(Encoding encoding, const ConvergenceOptions &opts) {
    if (opts.dim_cap > 0) {
        return opts.dim_cap;
    }
    return encoding == Encoding::SingleRail ? kDefaultSingleRailCap
                                            : kDefaultDualRailCap;
}

QfiOutcome qfi_converged(const NoonSpec &spec, Squeezing sq,
                         const ConvergenceOptions &opts) {
    validate(spec);
    if (!(opts.precision > 0.0)) {
        throw DomainError("precision must be positive");
    }
    const int cap = effective_cap(spec.encoding, opts);
    if (cap <= spec.n) {
        throw DimensionError("dimension cap " + std::to_string(cap) +
                             " cannot hold N = " + std::to_string(spec.n));
    }
    const int start = std::min(
        cap, opts.start_dim > 0 ? opts.start_dim : default_start_dim(spec.n, sq));
    if (start <= spec.n) {
        throw DimensionError("start dimension must exceed N");
    }
    const int step = opts.schedule == Schedule::UnitStep
                         ? 1
                         : std::max(8, static_cast<int>(std::ceil(0.25 * start)));

    const auto agree = [&](const TruncationStep &a, const TruncationStep &b) {
        const bool stable = std::abs(b.qfi - a.qfi) < opts.precision;
        const bool trace_ok = opts.trace_factor <= 0.0 ||
                              1.0 - b.trace < opts.trace_factor * opts.precision;
        return stable && trace_ok;
    };

    QfiOutcome out;
    out.precision = opts.precision;
    const auto finish = [&]() {
        out.converged = true;
        out.value = out.history.back().qfi;
        out.dim_used = out.history.back().dim;
        return out;
    };

    std::optional<TruncationStep> prev;
    int k = start;
    while (true) {
        const TruncationStep current = evaluate_truncation(spec, sq, k, opts.path);
        out.history.push_back(current);
        if (prev && agree(*prev, current)) {
            if (k - prev->dim == 1) {
                return finish();
            }
            if (k + 1 > cap) {
                break;
            }
            const TruncationStep confirm =
                evaluate_truncation(spec, sq, k + 1, opts.path);
            out.history.push_back(confirm);
            if (agree(current, confirm)) {
                return finish();
            }
            prev = confirm;
            k = k + 1;
        } else {
            prev = current;
        }
        if (k >= cap) {
            break;
        }
        k = std::min(k + step, cap);
    }
    throw ConvergenceError("QFI did not converge to " +
                               std::to_string(opts.precision) +
                               " below dimension cap " + std::to_string(cap),
                           std::move(out.history));
}

double qfi_theta_independence_check(NoonSpec spec, Squeezing sq,
                                    const std::vector<double> &thetas,
                                    const ConvergenceOptions &opts) {
    if (thetas.size() < 2) {
        throw InsufficientDataError("need at least two phases");
    }
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        spec.theta = thetas[i];
        const double f = qfi_converged(spec, sq, opts).value;
        lo = i == 0 ? f : std::min(lo, f);
        hi = i == 0 ? f : std::max(hi, f);
    }
    return hi - lo;
}

} // namespace noonqfi

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
 * Parameter studies over N and r: sweeps, the optimal-N search, the
 * exponential-decay fit F = N^2 exp(-a N + b) and the slope of a(r).
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noonqfi/fock.hpp"
#include "noonqfi/qfi.hpp"

namespace noonqfi {

class ResultCache;

struct SweepPoint {
    Encoding encoding = Encoding::SingleRail;
    int n = 1;
    double r = 0.0;
    double theta = 0.0;
    double precision = 0.0;
    double qfi = 0.0;
    int dim_used = 0;
    bool converged = false;
    double wall_time_s = 0.0;
};

struct StudyConfig {
    ConvergenceOptions convergence;
    double theta = 0.4;
    /// Not owned. Null disables caching.
    ResultCache *cache = nullptr;
    int workers = 1;
};

/// Converged QFI for one (encoding, N, r). Convergence failure is recorded
/// in the point (converged = false, last evaluation as qfi) instead of
/// thrown.
[[nodiscard]] SweepPoint compute_point(Encoding encoding, int n, double r,
                                       const StudyConfig &config);

[[nodiscard]] std::vector<SweepPoint>
sweep_over_n(Encoding encoding, double r, const std::vector<int> &n_list,
             const StudyConfig &config);

[[nodiscard]] std::vector<SweepPoint>
sweep_over_r(Encoding encoding, int n, const std::vector<double> &r_list,
             const StudyConfig &config);

struct OptimalN {
    double r = 0.0;
    int n_star = 1;
    double f_star = 0.0;
    int scan_upper = 0;
    /// QFI for N = 1 .. scan_upper.
    std::vector<double> scanned;
};

inline constexpr int kDefaultOptimalNCap = 200;

/**
 * Scans N = 1, 2, ... and stops once the QFI has fallen for three
 * consecutive N past the running maximum. Ties go to the smallest N.
 * Throws DivergentOptimumError for r = 0, ScanCapError past n_cap and
 * ConvergenceError if any scanned point fails to converge.
 */
[[nodiscard]] OptimalN optimal_n(Encoding encoding, double r,
                                 const StudyConfig &config,
                                 int n_cap = kDefaultOptimalNCap);

struct FitResult {
    double r = 0.0;
    double a_coeff = 0.0;
    double b_coeff = 0.0;
    /// Sum of squared residuals of ln(F / N^2).
    double residual_sum = 0.0;
    double r_squared = 1.0;
    int n_min = 0;
    int n_max = 0;

    [[nodiscard]] double predict(int n) const;
};

/// Least squares of ln(F / N^2) = -a N + b over points with N >= n_min.
/// All points must share r.
[[nodiscard]] FitResult fit_decay(const std::vector<SweepPoint> &points,
                                  int n_min);

/// fit_decay with n_min one past the sampled maximum.
[[nodiscard]] FitResult fit_decay_tail(const std::vector<SweepPoint> &points);

struct SlopeResult {
    double gradient = 0.0;
    double stderr_ = 0.0;
    double intercept = 0.0;
    std::pair<double, double> r_window{0.0, 0.0};
    int fits_used = 0;
};

/// Linear regression of a(r) on r over fits with r_lo <= r <= r_hi.
[[nodiscard]] SlopeResult slope_of_a(const std::vector<FitResult> &fits,
                                     double r_lo, double r_hi);

/// Smallest phase uncertainty 1 / sqrt(M F) after M measurements.
[[nodiscard]] double cramer_rao_bound(double qfi, int num_measurements);

[[nodiscard]] std::string to_string(Encoding encoding);
[[nodiscard]] Encoding parse_encoding(const std::string &text);
[[nodiscard]] std::string to_string(Schedule schedule);
[[nodiscard]] Schedule parse_schedule(const std::string &text);

} // namespace noonqfi

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

#include <algorithm>
#include <cmath>
#include <limits>

#include "noonqfi/errors.hpp"
#include "noonqfi/study.hpp"

namespace noonqfi {

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_sum = 0.0;
    double total_sum = 0.0;
    double slope_stderr = 0.0;
};

// Ordinary least squares y = slope * x + intercept using centred sums.
LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    const auto count = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw InsufficientDataError("abscissae are all equal");
    }
    LineFit out;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (out.slope * x[i] + out.intercept);
        out.residual_sum += e * e;
    }
    out.total_sum = syy;
    out.slope_stderr =
        x.size() > 2 ? std::sqrt(out.residual_sum / (count - 2.0) / sxx) : 0.0;
    return out;
}

} // namespace

double FitResult::predict(int n) const {
    return static_cast<double>(n) * n * std::exp(-a_coeff * n + b_coeff);
}

FitResult fit_decay(const std::vector<SweepPoint> &points, int n_min) {
    std::vector<double> x;
    std::vector<double> y;
    FitResult out;
    out.n_min = std::numeric_limits<int>::max();
    bool have_r = false;
    for (const auto &p : points) {
        if (have_r && p.r != out.r) {
            throw ContractError("fit_decay needs points at a single r");
        }
        out.r = p.r;
        have_r = true;
        if (p.n < n_min || !(p.qfi > 0.0)) {
            continue;
        }
        x.push_back(p.n);
        y.push_back(std::log(p.qfi / (static_cast<double>(p.n) * p.n)));
        out.n_min = std::min(out.n_min, p.n);
        out.n_max = std::max(out.n_max, p.n);
    }
    if (x.size() < 3) {
        throw InsufficientDataError("decay fit needs >= 3 points with N >= " +
                                    std::to_string(n_min) + " and F > 0");
    }
    const LineFit line = fit_line(x, y);
    out.a_coeff = -line.slope;
    out.b_coeff = line.intercept;
    out.residual_sum = line.residual_sum;
    out.r_squared =
        line.total_sum > 0.0 ? 1.0 - line.residual_sum / line.total_sum : 1.0;
    return out;
}

FitResult fit_decay_tail(const std::vector<SweepPoint> &points) {
    int n_star = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto &p : points) {
        if (p.qfi > best || (p.qfi == best && p.n < n_star)) {
            best = p.qfi;
            n_star = p.n;
        }
    }
    return fit_decay(points, n_star + 1);
}

SlopeResult slope_of_a(const std::vector<FitResult> &fits, double r_lo,
                       double r_hi) {
    std::vector<double> x;
    std::vector<double> y;
    for (const auto &f : fits) {
        if (f.r >= r_lo && f.r <= r_hi) {
            x.push_back(f.r);
            y.push_back(f.a_coeff);
        }
    }
    if (x.size() < 3) {
        throw InsufficientDataError("slope of a(r) needs >= 3 fits in [" +
                                    std::to_string(r_lo) + ", " +
                                    std::to_string(r_hi) + "], got " +
                                    std::to_string(x.size()));
    }
    const LineFit line = fit_line(x, y);
    SlopeResult out;
    out.gradient = line.slope;
    out.stderr_ = line.slope_stderr;
    out.intercept = line.intercept;
    out.r_window = {r_lo, r_hi};
    out.fits_used = static_cast<int>(x.size());
    return out;
}

double cramer_rao_bound(double qfi, int num_measurements) {
    if (num_measurements < 1) {
        throw DomainError("number of measurements must be >= 1");
    }
    if (qfi == 0.0) {
        throw UnboundedUncertaintyError(
            "zero Fisher information: phase uncertainty is unbounded");
    }
    if (!(qfi > 0.0) || !std::isfinite(qfi)) {
        throw DomainError("Fisher information must be positive and finite");
    }
    return 1.0 / std::sqrt(static_cast<double>(num_measurements) * qfi);
}

} // namespace noonqfi

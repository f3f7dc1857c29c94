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
 * Text formats: the sweep CSV (also the cache record layout) and the fit
 * CSV. Floating values use 17 significant digits.
 */

#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "noonqfi/study.hpp"

namespace noonqfi {

inline constexpr std::string_view kSweepHeader =
    "encoding,n,r,theta,precision,qfi,dim_used,converged,wall_time_s";
inline constexpr std::string_view kFitHeader =
    "r,a_coeff,b_coeff,residual_sum,n_min,n_max";
inline constexpr std::string_view kSlopeHeader =
    "gradient,stderr,r_lo,r_hi,fits_used";

/// printf("%.17g").
[[nodiscard]] std::string format_double(double x);

[[nodiscard]] std::string format_sweep_row(const SweepPoint &point);
/// Throws ParseError; line is reported to the caller via the exception.
[[nodiscard]] SweepPoint parse_sweep_row(std::string_view line,
                                         std::size_t line_number);
/// Reads a sweep CSV including its header line.
[[nodiscard]] std::vector<SweepPoint> read_sweep_csv(std::istream &in);

[[nodiscard]] std::string format_fit_row(const FitResult &fit);
[[nodiscard]] std::string format_slope_row(const SlopeResult &slope);

/// Splits on commas; no quoting (the formats never need it).
[[nodiscard]] std::vector<std::string_view> split_fields(std::string_view line);

} // namespace noonqfi

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
 * Command-line front end: qfi, sweep, optimal-n, fit and selftest.
 *
 * Settings resolve as flag > environment > config file > default. The
 * environment supplies only the cache path (NOONQFI_CACHE) and the worker
 * count (NOONQFI_WORKERS).
 */

#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "noonqfi/qfi.hpp"

namespace noonqfi::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kNotConverged = 3,
    kPartialSweep = 4,
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
    double precision = 1e-5;
    double theta = 0.4;
    int dim_cap = 0; ///< 0: per-encoding default
    Schedule schedule = Schedule::Accelerated;
    std::string cache_path; ///< empty: no cache
    int workers = 1;
    OutputFormat output = OutputFormat::Csv;
};

/// key=value lines; '#' starts a comment. Throws ParseError.
[[nodiscard]] std::map<std::string, std::string>
read_config_file(const std::string &path);

/**
 * Layers the sources onto the defaults. `flags` holds only values given on
 * the command line; `env` is consulted for "cache" and "workers".
 * Throws DomainError for out-of-range values, ContractError for unknown
 * config keys.
 */
[[nodiscard]] RunConfig
resolve_run_config(const std::map<std::string, std::string> &flags,
                   const std::map<std::string, std::string> &env,
                   const std::map<std::string, std::string> &file);

/// "3", "1..5", "1,2,8" or a mix such as "1..3,5".
[[nodiscard]] std::vector<int> parse_int_list(const std::string &text);

/// "0.5", "0:0.2:1.0" or "0.2,0.5,1". Range points are formed in decimal so
/// "0:0.2:1.0" yields exactly 0.2, 0.4, ... as written.
[[nodiscard]] std::vector<double> parse_real_list(const std::string &text);

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace noonqfi::cli
